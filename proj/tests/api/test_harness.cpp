// Copyright 2026 The dynmatch Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "harness/harness.hpp"

namespace {

dmh::StreamFile parse(const std::string& text) {
  std::istringstream in(text);
  return dmh::parse_stream(in);
}

std::size_t parse_error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const dmh::ParseError& e) {
    return e.line();
  }
  return 0;
}

std::string render(const dmh::RunReport& report) {
  std::ostringstream out;
  dmh::write_report(out, report);
  return out.str();
}

dmh::ReplayOptions on(dm_engine_kind kind, std::size_t check_every = 1) {
  dmh::ReplayOptions o;
  o.engine = kind;
  o.check_every = check_every;
  return o;
}

// Union-find acyclicity check for a batch of insertions.
bool is_spanning_tree(std::uint32_t n, const std::vector<dmh::StreamUpdate>& ups) {
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& up : ups) {
    if (!up.insert) return false;
    const auto a = find(up.u), b = find(up.v);
    if (a == b) return false;
    parent[a] = b;
  }
  return ups.size() + 1 == n;
}

constexpr dm_engine_kind kAll[] = {DM_ENGINE_NAIVE, DM_ENGINE_SQRT, DM_ENGINE_ARB,
                                   DM_ENGINE_COMPACT};

}  // namespace

TEST_SUITE("harness") {

TEST_CASE("stream parsing") {
  const auto s = parse("n 4\n# comment\n\n+ 0 1\n- 1 0\n+ 2 3\n");
  CHECK(s.n == 4);
  REQUIRE(s.updates.size() == 3);
  CHECK(s.updates[1].insert == false);
  CHECK(s.updates[1].line == 5);
  CHECK_THROWS_AS(parse(""), dmh::ParseError);
  CHECK(parse_error_line("n 0\n") == 1);
  CHECK(parse_error_line("m 3\n") == 1);
  CHECK(parse_error_line("n 3\n+ 0 1\n* 1 2\n") == 3);
  CHECK(parse_error_line("n 3\n+ 0\n") == 2);
  CHECK(parse_error_line("n 3\n+ 0 x\n") == 2);

  std::ostringstream out;
  dmh::write_stream(out, s);
  CHECK(out.str() == "n 4\n+ 0 1\n- 1 0\n+ 2 3\n");
}

TEST_CASE("a single insert is reported with one matched edge") {
  const auto report = dmh::replay(parse("n 2\n+ 0 1\n"), on(DM_ENGINE_SQRT));
  REQUIRE(report.rows.size() == 1);
  CHECK(report.rows[0].insert);
  CHECK(report.rows[0].m == 1);
  CHECK(report.rows[0].matching == 1);
  CHECK(report.violations.empty());
  CHECK(dmh::exit_code_for(report) == dmh::kExitOk);
}

TEST_CASE("path build ends with two matched edges on every engine") {
  for (dm_engine_kind kind : kAll) {
    CAPTURE(dm_engine_kind_name(kind));
    const auto report = dmh::replay(parse("n 4\n+ 0 1\n+ 2 3\n+ 1 2\n"), on(kind));
    REQUIRE(report.rows.size() == 3);
    CHECK(report.rows.back().matching == 2);
    CHECK(report.violations.empty());
  }
}

TEST_CASE("illegal updates stop the run") {
  const auto dup = dmh::replay(parse("n 3\n+ 0 1\n+ 1 0\n+ 1 2\n"), on(DM_ENGINE_NAIVE));
  REQUIRE(dup.error);
  CHECK(dup.error_status == DM_ERR_ILLEGAL_UPDATE);
  CHECK(dup.rows.size() == 1);
  CHECK(dmh::exit_code_for(dup) == dmh::kExitIllegalUpdate);
  const auto range = dmh::replay(parse("n 3\n+ 0 3\n"), on(DM_ENGINE_SQRT));
  REQUIRE(range.error);
  CHECK(dmh::exit_code_for(range) == dmh::kExitIllegalUpdate);
}

TEST_CASE("generated forests are spanning trees built by insertions") {
  dmh::GenerateOptions o;
  o.kind = dmh::StreamKind::Forest;
  o.n = 10;
  o.length = 9;
  o.seed = 1;
  const auto s = dmh::generate(o);
  CHECK(s.n == 10);
  CHECK(s.updates.size() == 9);
  CHECK(is_spanning_tree(10, s.updates));
}

TEST_CASE("zero-length streams have an empty body") {
  dmh::GenerateOptions o;
  o.n = 5;
  o.length = 0;
  const auto s = dmh::generate(o);
  CHECK(s.n == 5);
  CHECK(s.updates.empty());
  std::ostringstream out;
  dmh::write_stream(out, s);
  CHECK(out.str() == "n 5\n");
}

TEST_CASE("generated streams are legal and reproducible") {
  for (const char* name : {"random", "star-adversary", "forest", "delete-heavy"}) {
    CAPTURE(name);
    dmh::GenerateOptions o;
    o.kind = *dmh::parse_kind(name);
    CHECK(std::string(dmh::kind_name(o.kind)) == name);
    o.n = 40;
    o.length = 600;
    o.seed = 5;
    const auto a = dmh::generate(o);
    const auto b = dmh::generate(o);
    std::ostringstream sa, sb;
    dmh::write_stream(sa, a);
    dmh::write_stream(sb, b);
    CHECK(sa.str() == sb.str());
    CHECK(a.updates.size() == 600);
    std::set<std::pair<std::uint32_t, std::uint32_t>> live;
    for (const auto& up : a.updates) {
      REQUIRE(up.u != up.v);
      REQUIRE(up.u < o.n);
      REQUIRE(up.v < o.n);
      const auto key = std::minmax(up.u, up.v);
      if (up.insert) {
        REQUIRE(live.insert(key).second);
      } else {
        REQUIRE(live.erase(key) == 1);
      }
    }
    o.seed = 6;
    std::ostringstream sc;
    dmh::write_stream(sc, dmh::generate(o));
    CHECK(sc.str() != sa.str());
  }
  CHECK_FALSE(dmh::parse_kind("clique"));
}

TEST_CASE("the star adversary forces corrections without breaking the degree bound") {
  dmh::GenerateOptions o;
  o.kind = dmh::StreamKind::StarAdversary;
  o.n = 50;
  o.length = 500;
  o.seed = 1;
  const auto s = dmh::generate(o);
  dm_engine* raw = nullptr;
  REQUIRE(dm_engine_create(s.n, DM_ENGINE_SQRT, nullptr, &raw) == DM_OK);
  for (const auto& up : s.updates) {
    const auto st = up.insert ? dm_engine_insert(raw, up.u, up.v, nullptr)
                              : dm_engine_delete(raw, up.u, up.v, nullptr);
    REQUIRE(st == DM_OK);
    char message[512];
    REQUIRE_MESSAGE(dm_engine_audit(raw, message, sizeof message) == DM_OK, message);
  }
  dm_stats stats;
  REQUIRE(dm_engine_stats(raw, &stats) == DM_OK);
  CHECK(stats.corrections > 0);
  dm_engine_destroy(raw);
}

TEST_CASE("fault injection is caught with a witness") {
  dmh::GenerateOptions g;
  g.n = 30;
  g.length = 300;
  g.seed = 4;
  auto options = on(DM_ENGINE_SQRT);
  options.inject_fault_after = 150;
  const auto report = dmh::replay(dmh::generate(g), options);
  // One failed check, reported as several findings.
  REQUIRE_FALSE(report.violations.empty());
  CHECK(report.violations[0].find("has two free endpoints") != std::string::npos);
  CHECK(report.rows.size() == 151);
  CHECK(dmh::exit_code_for(report) == dmh::kExitViolation);
}

TEST_CASE("reports are deterministic") {
  dmh::GenerateOptions g;
  g.n = 64;
  g.length = 800;
  g.seed = 9;
  const auto s = dmh::generate(g);
  for (dm_engine_kind kind : kAll) {
    CAPTURE(dm_engine_kind_name(kind));
    const auto a = render(dmh::replay(s, on(kind, 16)));
    const auto b = render(dmh::replay(s, on(kind, 16)));
    CHECK(a == b);
    CHECK(a.find("violations 0") != std::string::npos);
  }
}

TEST_CASE("lockstep replay agrees across engines") {
  dmh::GenerateOptions g;
  g.kind = dmh::StreamKind::DeleteHeavy;
  g.n = 48;
  g.length = 1000;
  g.seed = 3;
  const auto reports = dmh::replay_lockstep(
      dmh::generate(g), {DM_ENGINE_NAIVE, DM_ENGINE_SQRT, DM_ENGINE_COMPACT}, dmh::default_config(), 4);
  REQUIRE(reports.size() == 3);
  for (const auto& r : reports) {
    CHECK(r.rows.size() == 1000);
    CHECK(r.violations.empty());
    CHECK_FALSE(r.error);
    CHECK(r.rows.back().m == reports[0].rows.back().m);
  }
}

TEST_CASE("bench rows line up") {
  dmh::GenerateOptions g;
  g.n = 100;
  g.length = 1000;
  const auto s = dmh::generate(g);
  const auto rows = dmh::bench(s, {DM_ENGINE_NAIVE, DM_ENGINE_SQRT}, dmh::default_config());
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].engine == "naive");
  CHECK(rows[1].engine == "sqrt");
  for (const auto& r : rows) {
    CHECK(r.n == 100);
    CHECK(r.updates == 1000);
    CHECK_FALSE(r.error);
    CHECK(r.max_ops > 0);
  }
  std::ostringstream csv;
  dmh::write_bench_csv(csv, rows);
  std::string line;
  std::size_t lines = 0;
  std::istringstream in(csv.str());
  while (std::getline(in, line)) ++lines;
  CHECK(lines == 3);
}

TEST_CASE("worst-case cost grows faster for the naive engine on the star adversary") {
  auto max_ops = [](std::uint32_t n, dm_engine_kind kind) {
    dmh::GenerateOptions g;
    g.kind = dmh::StreamKind::StarAdversary;
    g.n = n;
    g.length = 10 * n;
    return dmh::bench(dmh::generate(g), {kind}, dmh::default_config(), false)[0].max_ops;
  };
  const double naive = static_cast<double>(max_ops(1024, DM_ENGINE_NAIVE)) /
                       static_cast<double>(max_ops(256, DM_ENGINE_NAIVE));
  const double sqrt = static_cast<double>(max_ops(1024, DM_ENGINE_SQRT)) /
                      static_cast<double>(max_ops(256, DM_ENGINE_SQRT));
  CHECK(naive > sqrt);
}

TEST_CASE("on forests the arboricity engine is cheaper per update than the sqrt engine") {
  for (std::uint32_t n : {256u, 1024u}) {
    CAPTURE(n);
    dmh::GenerateOptions g;
    g.kind = dmh::StreamKind::Forest;
    g.n = n;
    g.length = 10 * n;
    const auto rows =
        dmh::bench(dmh::generate(g), {DM_ENGINE_SQRT, DM_ENGINE_ARB}, dmh::default_config(), false);
    CHECK(rows[1].amortized_ops < rows[0].amortized_ops);
  }
}

}  // TEST_SUITE
