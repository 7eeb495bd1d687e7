// Copyright 2026 The dynmatch Authors
// SPDX-License-Identifier: Apache-2.0

#include "harness.hpp"

#include <algorithm>
#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <istream>
#include <memory>
#include <ostream>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace dmh {

namespace {

std::uint64_t ceil_sqrt(std::uint64_t x) {
  std::uint64_t r = 0;
  while (r * r < x) ++r;
  return r;
}

std::uint64_t key(std::uint32_t a, std::uint32_t b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

bool parse_uint(const std::string& token, std::uint64_t& out) {
  if (token.empty() || token.size() > 10) return false;
  out = 0;
  for (char c : token) {
    if (c < '0' || c > '9') return false;
    out = out * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return true;
}

// Edge set with O(1) random removal, used by the generators.
class EdgePool {
 public:
  bool contains(std::uint32_t a, std::uint32_t b) const { return index_.count(key(a, b)) != 0; }
  std::size_t size() const { return edges_.size(); }

  void insert(std::uint32_t a, std::uint32_t b) {
    index_[key(a, b)] = edges_.size();
    edges_.emplace_back(std::min(a, b), std::max(a, b));
  }

  std::pair<std::uint32_t, std::uint32_t> erase_at(std::size_t i) {
    const auto e = edges_[i];
    index_.erase(key(e.first, e.second));
    if (i + 1 != edges_.size()) {
      edges_[i] = edges_.back();
      index_[key(edges_[i].first, edges_[i].second)] = i;
    }
    edges_.pop_back();
    return e;
  }

  void erase(std::uint32_t a, std::uint32_t b) { erase_at(index_.at(key(a, b))); }

 private:
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

class Emitter {
 public:
  Emitter(StreamFile& out, std::size_t length) : out_(out), length_(length) {}

  bool full() const { return out_.updates.size() >= length_; }

  void insert(EdgePool& pool, std::uint32_t a, std::uint32_t b) {
    if (full()) return;
    pool.insert(a, b);
    out_.updates.push_back({true, std::min(a, b), std::max(a, b), 0});
  }

  std::pair<std::uint32_t, std::uint32_t> erase_at(EdgePool& pool, std::size_t i) {
    const auto e = pool.erase_at(i);
    out_.updates.push_back({false, e.first, e.second, 0});
    return e;
  }

  void erase(EdgePool& pool, std::uint32_t a, std::uint32_t b) {
    if (full()) return;
    pool.erase(a, b);
    out_.updates.push_back({false, std::min(a, b), std::max(a, b), 0});
  }

 private:
  StreamFile& out_;
  std::size_t length_;
};

std::size_t max_edges(std::uint32_t n) { return static_cast<std::size_t>(n) * (n - 1) / 2; }

// Uniform absent edge among vertices [lo, hi); the caller guarantees one exists.
std::pair<std::uint32_t, std::uint32_t> absent_edge(Rng& rng, const EdgePool& pool,
                                                    std::uint32_t lo, std::uint32_t hi) {
  for (;;) {
    const auto a = static_cast<std::uint32_t>(lo + rng.below(hi - lo));
    const auto b = static_cast<std::uint32_t>(lo + rng.below(hi - lo));
    if (a != b && !pool.contains(a, b)) return {a, b};
  }
}

void gen_random(const GenerateOptions& o, Rng& rng, StreamFile& out) {
  const std::size_t cap = max_edges(o.n);
  if (cap == 0) return;
  std::size_t target = o.target_m ? o.target_m : o.n * ceil_sqrt(o.n);
  target = std::max<std::size_t>(1, std::min(target, cap));
  EdgePool pool;
  Emitter emit(out, o.length);
  while (!emit.full()) {
    bool insert;
    if (pool.size() == 0)
      insert = true;
    else if (pool.size() == cap)
      insert = false;
    else
      insert = rng.chance(pool.size() < target ? 700 : 300);
    if (insert) {
      const auto [a, b] = absent_edge(rng, pool, 0, o.n);
      emit.insert(pool, a, b);
    } else {
      emit.erase_at(pool, rng.below(pool.size()));
    }
  }
}

void gen_delete_heavy(const GenerateOptions& o, Rng& rng, StreamFile& out) {
  const std::size_t cap = max_edges(o.n);
  if (cap == 0) return;
  const std::size_t peak = std::max<std::size_t>(1, std::min(cap, o.n * ceil_sqrt(o.n)));
  std::size_t floor = peak / 4;
  if (peak > o.n + 1) floor = std::min(floor, peak - o.n - 1);
  EdgePool pool;
  Emitter emit(out, o.length);
  while (!emit.full()) {
    while (!emit.full() && pool.size() < peak) {
      const auto [a, b] = absent_edge(rng, pool, 0, o.n);
      emit.insert(pool, a, b);
    }
    while (!emit.full() && pool.size() > floor) emit.erase_at(pool, rng.below(pool.size()));
  }
}

// Vertex 0 is a hub over an even number of leaves that are paired among
// themselves, so the hub tends to be free with a large degree. A background
// block inflates m and is then deleted, shrinking m under the hub's pinned
// degree.
void gen_star_adversary(const GenerateOptions& o, Rng& rng, StreamFile& out) {
  if (o.n < 6) {
    gen_random(o, rng, out);
    return;
  }
  EdgePool pool;
  Emitter emit(out, o.length);
  const std::uint32_t leaves = ((o.n - 1) / 2) & ~1u;
  const std::uint32_t bg_lo = leaves + 1;
  const std::uint32_t bg = o.n - bg_lo;
  const std::size_t bg_target = std::min<std::size_t>(max_edges(bg), 3 * static_cast<std::size_t>(o.n));
  auto shuffled = [&](std::vector<std::uint32_t> v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
    return v;
  };
  std::vector<std::uint32_t> leaf_ids;
  for (std::uint32_t l = 1; l <= leaves; ++l) leaf_ids.push_back(l);

  while (!emit.full()) {
    for (std::uint32_t l = 1; l + 1 <= leaves; l += 2)
      if (!pool.contains(l, l + 1)) emit.insert(pool, l, l + 1);
    for (std::uint32_t l : shuffled(leaf_ids))
      if (!pool.contains(0, l)) emit.insert(pool, 0, l);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> background;
    while (!emit.full() && background.size() < bg_target) {
      const auto e = absent_edge(rng, pool, bg_lo, o.n);
      emit.insert(pool, e.first, e.second);
      background.push_back(e);
    }
    for (std::size_t i = background.size(); i > 1; --i)
      std::swap(background[i - 1], background[rng.below(i)]);
    for (const auto& e : background)
      if (pool.contains(e.first, e.second)) emit.erase(pool, e.first, e.second);
    // Toggle leaf pairs so their endpoints go looking for new partners.
    for (std::uint32_t l : shuffled(leaf_ids)) {
      const std::uint32_t mate = (l % 2 == 1) ? l + 1 : l - 1;
      if (!pool.contains(l, mate)) continue;
      emit.erase(pool, l, mate);
      emit.insert(pool, l, mate);
    }
    for (std::uint32_t l : shuffled(leaf_ids))
      if (pool.contains(0, l)) emit.erase(pool, 0, l);
  }
}

// A random spanning tree, then alternating deletions and reconnecting
// insertions, so the graph stays a forest throughout.
void gen_forest(const GenerateOptions& o, Rng& rng, StreamFile& out) {
  if (o.n < 2) return;
  EdgePool pool;
  Emitter emit(out, o.length);
  std::vector<std::vector<std::uint32_t>> adj(o.n);
  auto link = [&](std::uint32_t a, std::uint32_t b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  auto unlink = [&](std::uint32_t a, std::uint32_t b) {
    adj[a].erase(std::find(adj[a].begin(), adj[a].end(), b));
    adj[b].erase(std::find(adj[b].begin(), adj[b].end(), a));
  };
  std::vector<std::uint32_t> order(o.n);
  for (std::uint32_t i = 0; i < o.n; ++i) order[i] = i;
  for (std::size_t i = o.n; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
  for (std::uint32_t i = 1; i < o.n && !emit.full(); ++i) {
    const std::uint32_t a = order[i];
    const std::uint32_t b = order[rng.below(i)];
    emit.insert(pool, a, b);
    link(a, b);
  }
  std::vector<std::uint8_t> side(o.n);
  while (!emit.full()) {
    const std::size_t i = rng.below(pool.size());
    const auto [a, b] = emit.erase_at(pool, i);
    unlink(a, b);
    if (emit.full()) break;
    std::fill(side.begin(), side.end(), 0);
    std::vector<std::uint32_t> comp{a}, stack{a};
    side[a] = 1;
    while (!stack.empty()) {
      const std::uint32_t x = stack.back();
      stack.pop_back();
      for (std::uint32_t y : adj[x])
        if (!side[y]) {
          side[y] = 1;
          comp.push_back(y);
          stack.push_back(y);
        }
    }
    std::vector<std::uint32_t> rest;
    for (std::uint32_t x = 0; x < o.n; ++x)
      if (!side[x]) rest.push_back(x);
    const std::uint32_t x = comp[rng.below(comp.size())];
    const std::uint32_t y = rest[rng.below(rest.size())];
    emit.insert(pool, x, y);
    link(x, y);
  }
}

}  // namespace

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below(0)");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do x = engine_(); while (x >= limit);
  return x % bound;
}

std::optional<StreamKind> parse_kind(const std::string& name) {
  if (name == "random") return StreamKind::Random;
  if (name == "star-adversary") return StreamKind::StarAdversary;
  if (name == "forest") return StreamKind::Forest;
  if (name == "delete-heavy") return StreamKind::DeleteHeavy;
  return std::nullopt;
}

const char* kind_name(StreamKind kind) {
  switch (kind) {
    case StreamKind::Random: return "random";
    case StreamKind::StarAdversary: return "star-adversary";
    case StreamKind::Forest: return "forest";
    case StreamKind::DeleteHeavy: return "delete-heavy";
  }
  return "unknown";
}

StreamFile generate(const GenerateOptions& o) {
  if (o.n == 0) throw std::invalid_argument("generate: n must be positive");
  StreamFile out;
  out.n = o.n;
  out.updates.reserve(o.length);
  Rng rng(o.seed);
  switch (o.kind) {
    case StreamKind::Random: gen_random(o, rng, out); break;
    case StreamKind::StarAdversary: gen_star_adversary(o, rng, out); break;
    case StreamKind::Forest: gen_forest(o, rng, out); break;
    case StreamKind::DeleteHeavy: gen_delete_heavy(o, rng, out); break;
  }
  return out;
}

StreamFile parse_stream(std::istream& in) {
  StreamFile out;
  std::string text;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, text)) {
    ++line_no;
    std::istringstream line(text);
    std::vector<std::string> tokens;
    for (std::string t; line >> t;) tokens.push_back(t);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    if (!have_header) {
      std::uint64_t n;
      if (tokens.size() != 2 || tokens[0] != "n" || !parse_uint(tokens[1], n) || n == 0 ||
          n > UINT32_MAX - 1)
        throw ParseError(line_no, "expected header 'n <count>' with a positive count");
      out.n = static_cast<std::uint32_t>(n);
      have_header = true;
      continue;
    }
    std::uint64_t u, v;
    if (tokens.size() != 3 || (tokens[0] != "+" && tokens[0] != "-") ||
        !parse_uint(tokens[1], u) || !parse_uint(tokens[2], v) || u > UINT32_MAX ||
        v > UINT32_MAX)
      throw ParseError(line_no, "expected '+ u v' or '- u v', got '" + text + "'");
    out.updates.push_back(
        {tokens[0] == "+", static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v), line_no});
  }
  if (!have_header) throw ParseError(line_no, "missing header 'n <count>'");
  return out;
}

StreamFile read_stream(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_stream(in);
}

void write_stream(std::ostream& out, const StreamFile& stream) {
  out << "n " << stream.n << '\n';
  for (const auto& u : stream.updates) out << (u.insert ? '+' : '-') << ' ' << u.u << ' ' << u.v << '\n';
}

dm_config default_config() {
  dm_config c;
  dm_config_default(&c);
  return c;
}

std::size_t default_check_every(std::uint32_t n) { return n <= 64 ? 1 : 32; }

namespace {

struct EngineDeleter {
  void operator()(dm_engine* e) const { dm_engine_destroy(e); }
};
using EnginePtr = std::unique_ptr<dm_engine, EngineDeleter>;

std::string where(std::size_t index, const StreamUpdate& u) {
  std::ostringstream os;
  os << "update " << index;
  if (u.line) os << " (line " << u.line << ")";
  return os.str();
}

// One engine under replay: applies updates, records rows, runs checks.
class Runner {
 public:
  Runner(const StreamFile& stream, dm_engine_kind kind, const dm_config& config,
         std::size_t check_every)
      : check_every_(check_every ? check_every : default_check_every(stream.n)), kind_(kind) {
    report_.engine = dm_engine_kind_name(kind);
    report_.n = stream.n;
    dm_engine* raw = nullptr;
    const dm_status st = dm_engine_create(stream.n, kind, &config, &raw);
    if (st != DM_OK) {
      fail(st, dm_last_error());
      return;
    }
    engine_.reset(raw);
  }

  /// A run stops at its first failed check or error.
  bool alive() const { return engine_ && !report_.error && report_.violations.empty(); }
  dm_engine* engine() const { return engine_.get(); }
  RunReport& report() { return report_; }

  dm_status step(std::size_t index, const StreamUpdate& u) {
    dm_report r{};
    const dm_status st = u.insert ? dm_engine_insert(engine_.get(), u.u, u.v, &r)
                                  : dm_engine_delete(engine_.get(), u.u, u.v, &r);
    if (st != DM_OK) {
      fail(st, where(index, u) + ": " + dm_last_error());
      return st;
    }
    report_.rows.push_back({index, u.insert, r.ops, dm_engine_edge_count(engine_.get()),
                            dm_engine_matching_size(engine_.get())});
    report_.total_ops += r.ops;
    report_.max_ops = std::max(report_.max_ops, r.ops);
    return DM_OK;
  }

  bool due(std::size_t index, std::size_t count) const {
    return (index + 1) % check_every_ == 0 || index + 1 == count;
  }

  void check(std::size_t index, const StreamUpdate& u) {
    const std::string at = where(index, u);
    int ok = 1;
    if (dm_engine_check_maximal(engine_.get(), &ok) != DM_OK)
      report_.violations.push_back(at + ": maximality check failed: " + dm_last_error());
    else if (!ok)
      report_.violations.push_back(at + ": matching is not maximal" + unmatched_witness());
    if (kind_ == DM_ENGINE_SQRT) {
      if (dm_engine_check_no_3aug(engine_.get(), &ok) != DM_OK)
        report_.violations.push_back(at + ": augmenting-path check failed: " + dm_last_error());
      else if (!ok)
        report_.violations.push_back(at + ": length-3 augmenting path present");
    }
    std::vector<char> buffer(1 << 14);
    if (dm_engine_audit(engine_.get(), buffer.data(), buffer.size()) != DM_OK) {
      std::istringstream lines(buffer.data());
      for (std::string line; std::getline(lines, line);)
        if (!line.empty()) report_.violations.push_back(at + ": " + line);
    }
  }

 private:
  // An edge with two free endpoints, for the violation message.
  std::string unmatched_witness() const {
    std::vector<dm_edge> edges(dm_engine_edge_count(engine_.get()));
    std::size_t k = 0;
    dm_engine_edges(engine_.get(), edges.data(), edges.size(), &k);
    for (const dm_edge& e : edges)
      if (dm_engine_mate(engine_.get(), e.u) == DM_NO_VERTEX &&
          dm_engine_mate(engine_.get(), e.v) == DM_NO_VERTEX)
        return ": edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} has two free endpoints";
    return "";
  }

  void fail(dm_status st, const std::string& message) {
    report_.error = message;
    report_.error_status = st;
  }

  std::size_t check_every_;
  dm_engine_kind kind_;
  EnginePtr engine_;
  RunReport report_;
};

}  // namespace

RunReport replay(const StreamFile& stream, const ReplayOptions& options) {
  Runner runner(stream, options.engine, options.config, options.check_every);
  const std::size_t count = stream.updates.size();
  for (std::size_t i = 0; i < count && runner.alive(); ++i) {
    const auto& u = stream.updates[i];
    if (runner.step(i, u) != DM_OK) break;
    if (options.inject_fault_after && *options.inject_fault_after == i) {
      std::vector<dm_edge> m(dm_engine_matching_size(runner.engine()));
      std::size_t k = 0;
      dm_engine_matching(runner.engine(), m.data(), m.size(), &k);
      if (k > 0) dm_engine_debug_unmatch(runner.engine(), m[0].u);
      runner.check(i, u);
      continue;
    }
    if (runner.due(i, count)) runner.check(i, u);
  }
  return std::move(runner.report());
}

std::vector<RunReport> replay_lockstep(const StreamFile& stream,
                                       const std::vector<dm_engine_kind>& engines,
                                       const dm_config& config, std::size_t check_every) {
  std::vector<std::unique_ptr<Runner>> runners;
  for (dm_engine_kind k : engines)
    runners.push_back(std::make_unique<Runner>(stream, k, config, check_every));
  const std::size_t count = stream.updates.size();
  for (std::size_t i = 0; i < count; ++i) {
    const auto& u = stream.updates[i];
    std::vector<dm_status> statuses;
    for (auto& r : runners) {
      if (!r->alive()) continue;
      statuses.push_back(r->step(i, u));
      if (statuses.back() == DM_OK && r->due(i, count)) r->check(i, u);
    }
    if (std::adjacent_find(statuses.begin(), statuses.end(), std::not_equal_to<>()) !=
        statuses.end()) {
      for (auto& r : runners)
        r->report().violations.push_back(where(i, u) + ": engines disagree on legality");
    }
    if (std::none_of(runners.begin(), runners.end(), [](auto& r) { return r->alive(); })) break;
  }
  std::vector<RunReport> out;
  for (auto& r : runners) out.push_back(std::move(r->report()));
  return out;
}

void write_report(std::ostream& out, const RunReport& report) {
  char amortized[64];
  std::snprintf(amortized, sizeof amortized, "%.6f", report.amortized_ops());
  out << "engine " << report.engine << '\n'
      << "n " << report.n << '\n'
      << "updates " << report.rows.size() << '\n'
      << "# index op ops m matching\n";
  for (const auto& r : report.rows)
    out << r.index << ' ' << (r.insert ? '+' : '-') << ' ' << r.ops << ' ' << r.m << ' '
        << r.matching << '\n';
  out << "max_ops " << report.max_ops << '\n'
      << "total_ops " << report.total_ops << '\n'
      << "amortized_ops " << amortized << '\n'
      << "violations " << report.violations.size() << '\n';
  for (const auto& v : report.violations) out << "violation " << v << '\n';
  if (report.error) out << "error " << *report.error << '\n';
}

std::vector<BenchRow> bench(const StreamFile& stream, const std::vector<dm_engine_kind>& engines,
                            const dm_config& config, bool parallel) {
  std::vector<BenchRow> rows(engines.size());
  auto run = [&](std::size_t slot) {
    BenchRow& row = rows[slot];
    row.engine = dm_engine_kind_name(engines[slot]);
    row.n = stream.n;
    dm_config cfg = config;
    cfg.keep_log = 0;
    dm_engine* raw = nullptr;
    if (dm_engine_create(stream.n, engines[slot], &cfg, &raw) != DM_OK) {
      row.error = dm_last_error();
      return;
    }
    EnginePtr engine(raw);
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < stream.updates.size(); ++i) {
      const auto& u = stream.updates[i];
      const dm_status st = u.insert ? dm_engine_insert(raw, u.u, u.v, nullptr)
                                    : dm_engine_delete(raw, u.u, u.v, nullptr);
      if (st != DM_OK) {
        row.error = where(i, u) + ": " + dm_last_error();
        break;
      }
    }
    const auto stop = std::chrono::steady_clock::now();
    dm_stats stats{};
    dm_engine_stats(raw, &stats);
    row.updates = stats.updates;
    row.max_ops = stats.max_ops;
    row.amortized_ops =
        stats.updates ? static_cast<double>(stats.total_ops) / static_cast<double>(stats.updates) : 0;
    row.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    row.final_matching = stats.matching_size;
  };
  if (parallel && engines.size() > 1) {
    std::vector<std::thread> workers;
    for (std::size_t i = 0; i < engines.size(); ++i) workers.emplace_back(run, i);
    for (auto& w : workers) w.join();
  } else {
    for (std::size_t i = 0; i < engines.size(); ++i) run(i);
  }
  return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "engine,n,updates,max_ops_per_update,amortized_ops,wall_ms,final_matching_size\n";
  for (const auto& r : rows) {
    char line[256];
    std::snprintf(line, sizeof line, "%s,%u,%zu,%" PRIu64 ",%.3f,%.3f,%zu\n", r.engine.c_str(), r.n,
                  r.updates, r.max_ops, r.amortized_ops, r.wall_ms, r.final_matching);
    out << line;
  }
}

int exit_code_for(const RunReport& report) {
  if (report.error) {
    if (report.error_status == DM_ERR_ILLEGAL_UPDATE) return kExitIllegalUpdate;
    if (report.error_status == DM_ERR_INVARIANT) return kExitViolation;
    if (report.error_status == DM_ERR_INVALID_ARGUMENT) return kExitUsage;
    return kExitInternal;
  }
  return report.violations.empty() ? kExitOk : kExitViolation;
}

}  // namespace dmh
