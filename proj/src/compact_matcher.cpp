// Copyright 2026 The dynmatch Authors
// SPDX-License-Identifier: Apache-2.0

#include "dynmatch/compact_matcher.hpp"

#include <algorithm>
#include <sstream>

namespace dynmatch {

namespace {

OrientationParams stage_params(std::uint64_t m) {
  const std::uint64_t c = 2 * ceil_sqrt(std::max<std::uint64_t>(m, 1));
  return OrientationParams::standard(static_cast<std::uint32_t>(c));
}

}  // namespace

CompactEngine::CompactEngine(VertexId n, const EngineConfig& config)
    : Engine(n),
      deg_(n, 0),
      orient_(n, stage_params(0)),
      nlist_(n),
      flist_(n),
      smart_(n),
      ledger_(n),
      is_active_(n, 0),
      f_delete_tokens_(config.f_delete_tokens),
      edge_delete_tokens_(config.edge_delete_tokens) {}

std::vector<Edge> CompactEngine::edges() const {
  std::vector<Edge> out;
  out.reserve(orient_.edge_count());
  for (VertexId u : active_)
    for (VertexId v : orient_.out_neighbors(u)) out.push_back(Edge::of(u, v));
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t CompactEngine::census() const noexcept {
  return kFixedCellsPerVertex * vertex_count() + pool_.live() + orient_.edge_count() +
         match_.size();
}

void CompactEngine::touch(VertexId u) {
  if (is_active_[u]) return;
  is_active_[u] = 1;
  active_.push_back(u);
}

void CompactEngine::push_neighbor(VertexId u, VertexId w) {
  ops().charge();
  pool_.push_front(nlist_[u], w);
}

void CompactEngine::push_free(VertexId u, VertexId w) {
  ops().charge();
  pool_.push_front(flist_[u], w);
  check_free(u);
}

void CompactEngine::postpone_free_delete(VertexId u) {
  ops().charge();
  ledger_.mint(ledger_.f_balance[u], f_delete_tokens_);
}

void CompactEngine::check_neighbors(VertexId u) {
  if (nlist_[u].length >= 2 * floor_deg(u)) authenticate_neighbors(u);
}

void CompactEngine::check_free(VertexId u) {
  if (flist_[u].length >= 3 * floor_deg(u)) prune_free(u);
}

// Keeps one entry per live edge: w stays iff w in D(u) or u in D(w). The
// whole walk is paid from the N(u) balance.
void CompactEngine::authenticate_neighbors(VertexId u) {
  ++stats_.authentications;
  std::uint64_t cost = 0;
  smart_.reset();
  for (VertexId w : orient_.out_neighbors(u)) {
    smart_.set(w, kTagD);
    ++cost;
  }
  auto& list = nlist_[u];
  NodePool::NodeId prev = NodePool::kNil;
  NodePool::NodeId id = list.head;
  while (id != NodePool::kNil) {
    const VertexId w = pool_.value(id);
    ++cost;
    bool keep = false;
    const std::uint8_t tag = smart_.tag(w);
    if (tag == kTagD) {
      keep = true;
    } else if (tag != kTagSeen) {
      cost += orient_.out_degree(w);
      keep = std::find(orient_.out_neighbors(w).begin(), orient_.out_neighbors(w).end(), u) !=
             orient_.out_neighbors(w).end();
    }
    if (keep) {
      smart_.set(w, kTagSeen);
      prev = id;
      id = pool_.next(id);
    } else {
      id = pool_.erase_after(list, prev);
    }
  }
  ops().charge(cost);
  ledger_.spend(ledger_.n_balance[u], cost);
  if (list.length != deg_[u])
    throw_invariant("N(" + std::to_string(u) + ") authentication kept " +
                    std::to_string(list.length) + " entries for degree " +
                    std::to_string(deg_[u]));
}

// Removals found in O(1) spend one token; removals that needed a search of
// D(w) spend that search. Marking D(u) and the final successful search are
// the out-of-pocket part, at most 2*cap + 1.
VertexId CompactEngine::extract_authentic_free(VertexId u) {
  ++stats_.extractions;
  std::uint64_t own = 0;
  smart_.reset();
  for (VertexId w : orient_.out_neighbors(u)) {
    smart_.set(w, kTagD);
    ++own;
  }
  auto& list = flist_[u];
  VertexId found = kNoVertex;
  NodePool::NodeId prev = NodePool::kNil;
  NodePool::NodeId id = list.head;
  while (id != NodePool::kNil) {
    const VertexId w = pool_.value(id);
    const std::uint8_t tag = smart_.tag(w);
    if (!match_.is_free(w) || tag == kTagD || tag == kTagSeen) {
      ops().charge();
      ledger_.spend(ledger_.f_balance[u], 1);
      id = pool_.erase_after(list, prev);
      continue;
    }
    const std::uint64_t probe = 1 + orient_.out_degree(w);
    ops().charge(probe);
    const auto out = orient_.out_neighbors(w);
    if (std::find(out.begin(), out.end(), u) != out.end()) {
      own += probe;
      found = w;
      break;
    }
    ledger_.spend(ledger_.f_balance[u], probe);
    smart_.set(w, kTagSeen);
    id = pool_.erase_after(list, prev);
  }
  ops().charge(own);
  if (own > 2 * static_cast<std::uint64_t>(orient_.cap()) + 1) ++stats_.walk_overruns;
  return found;
}

// Partial authentication against N(u). One-sided: an authentic free
// in-neighbor is always in N(u), so it survives. Each removal spends one
// token; marking N(u) and inspecting kept entries stay under 4 per removal.
void CompactEngine::prune_free(VertexId u) {
  ++stats_.prunes;
  smart_.reset();
  std::uint64_t own = 0;
  for (NodePool::NodeId id = nlist_[u].head; id != NodePool::kNil; id = pool_.next(id)) {
    smart_.set(pool_.value(id), kTagN);
    ++own;
  }
  auto& list = flist_[u];
  std::uint64_t removed = 0;
  NodePool::NodeId prev = NodePool::kNil;
  NodePool::NodeId id = list.head;
  while (id != NodePool::kNil) {
    const VertexId w = pool_.value(id);
    if (!match_.is_free(w) || smart_.tag(w) != kTagN) {
      ++removed;
      ledger_.spend(ledger_.f_balance[u], 1);
      id = pool_.erase_after(list, prev);
      continue;
    }
    ++own;
    smart_.set(w, kTagSeen);
    prev = id;
    id = pool_.next(id);
  }
  ops().charge(own + removed);
  if (own > 4 * removed) ++stats_.walk_overruns;
  if (list.length >= 2 * floor_deg(u))
    throw_invariant("F(" + std::to_string(u) + ") prune left " + std::to_string(list.length) +
                    " entries for degree " + std::to_string(deg_[u]));
}

void CompactEngine::apply_flips(const std::vector<FlipEvent>& events) {
  for (const FlipEvent& e : events) {
    if (e.initial) {
      if (match_.is_free(e.tail)) push_free(e.head, e.tail);
      continue;
    }
    if (match_.is_free(e.head)) postpone_free_delete(e.tail);
    if (match_.is_free(e.tail)) push_free(e.head, e.tail);
  }
}

void CompactEngine::match(VertexId x, VertexId w, bool x_was_free, bool w_was_free) {
  match_.match(x, w);
  ops().charge();
  if (x_was_free)
    for (VertexId y : orient_.out_neighbors(x)) postpone_free_delete(y);
  if (w_was_free)
    for (VertexId y : orient_.out_neighbors(w)) postpone_free_delete(y);
}

void CompactEngine::on_insert(VertexId u, VertexId v) {
  touch(u);
  touch(v);
  ++deg_[u];
  ++deg_[v];
  push_neighbor(u, v);
  push_neighbor(v, u);
  const auto events = orient_.insert(u, v, ops());
  check_neighbors(u);
  check_neighbors(v);
  apply_flips(events);
  if (match_.is_free(u) && match_.is_free(v)) match(u, v, true, true);
  maybe_end_stage();
}

void CompactEngine::rematch(VertexId w) {
  VertexId x = extract_authentic_free(w);
  if (x == kNoVertex) {
    for (VertexId y : orient_.out_neighbors(w)) {
      ops().charge();
      if (match_.is_free(y)) {
        x = y;
        break;
      }
    }
  }
  if (x != kNoVertex) {
    match(x, w, true, false);
    return;
  }
  for (VertexId y : orient_.out_neighbors(w)) push_free(y, w);
}

void CompactEngine::on_delete(VertexId u, VertexId v) {
  --deg_[u];
  --deg_[v];
  const std::uint64_t cap = orient_.cap();
  const std::uint64_t f_share = edge_delete_tokens_ * cap / 10;
  const std::uint64_t n_share = (edge_delete_tokens_ * cap - 2 * f_share) / 2;
  ledger_.mint(ledger_.n_balance[u], n_share);
  ledger_.mint(ledger_.n_balance[v], n_share);
  ledger_.mint(ledger_.f_balance[u], f_share);
  ledger_.mint(ledger_.f_balance[v], f_share);

  const VertexId tail = orient_.erase(u, v, ops());
  const VertexId head = tail == u ? v : u;
  if (match_.is_free(tail)) postpone_free_delete(head);
  check_neighbors(u);
  check_neighbors(v);
  check_free(u);
  check_free(v);
  if (match_.mate(u) == v) {
    match_.unmatch(u, v);
    rematch(u);
    rematch(v);
  }
  maybe_end_stage();
}

void CompactEngine::maybe_end_stage() {
  const std::uint64_t m = orient_.edge_count();
  const std::uint64_t m0 = std::max<std::uint64_t>(m0_, 1);
  if (m >= 2 * m0 || (m0 >= 2 && 2 * m <= m0)) rebuild();
  const std::uint64_t cells = census();
  if (cells > stats_.max_census) stats_.max_census = cells;
}

// Re-orients every edge under the new stage bound and rebuilds N, F
// authentically. Work is proportional to m plus the vertices touched since
// the last rebuild.
void CompactEngine::rebuild() {
  const std::uint64_t before = ops().current();
  ++stats_.resets;
  std::vector<Edge> all = edges();
  m0_ = all.size();
  for (VertexId u : active_) {
    nlist_[u] = {};
    flist_[u] = {};
    ledger_.n_balance[u] = 0;
    ledger_.f_balance[u] = 0;
    ops().charge();
  }
  pool_.reset();
  orient_.clear(active_, stage_params(m0_));
  for (const Edge& e : all) {
    orient_.insert(e.u, e.v, ops());
    push_neighbor(e.u, e.v);
    push_neighbor(e.v, e.u);
  }
  std::vector<VertexId> still;
  for (VertexId u : active_) {
    if (deg_[u] == 0) {
      is_active_[u] = 0;
      continue;
    }
    still.push_back(u);
    if (!match_.is_free(u)) continue;
    for (VertexId h : orient_.out_neighbors(u)) {
      ops().charge();
      pool_.push_front(flist_[h], u);
    }
  }
  active_ = std::move(still);
  stats_.reset_ops += ops().current() - before;
}

std::vector<std::string> CompactEngine::audit() const {
  auto out = Engine::audit();
  auto report = [&](auto&&... parts) {
    std::ostringstream os;
    (os << ... << parts);
    out.push_back(os.str());
  };
  if (auto msg = orient_.audit(); !msg.empty()) out.push_back("orientation: " + msg);

  const VertexId n = vertex_count();
  std::vector<std::uint32_t> deg(n, 0);
  std::vector<std::vector<VertexId>> adj(n);
  std::vector<std::vector<VertexId>> free_in(n);
  for (VertexId t = 0; t < n; ++t) {
    for (VertexId h : orient_.out_neighbors(t)) {
      ++deg[t];
      ++deg[h];
      adj[t].push_back(h);
      adj[h].push_back(t);
      if (match_.is_free(t)) free_in[h].push_back(t);
      if (!is_active_[t] || !is_active_[h]) report("edge endpoint outside the active set");
    }
  }
  for (VertexId u = 0; u < n; ++u) {
    const std::uint32_t floor = deg_[u] == 0 ? 1 : deg_[u];
    if (deg[u] != deg_[u]) report("degree counter of ", u, " is stale");
    const auto nl = pool_.to_vector(nlist_[u]);
    const auto fl = pool_.to_vector(flist_[u]);
    if (nl.size() != nlist_[u].length || fl.size() != flist_[u].length)
      report("list length counter of ", u, " is stale");
    if (nl.size() >= 2ull * floor) report("|N(", u, ")| = ", nl.size(), " >= 2 max(deg,1)");
    if (fl.size() >= 3ull * floor) report("|F(", u, ")| = ", fl.size(), " >= 3 max(deg,1)");
    for (VertexId w : adj[u])
      if (std::find(nl.begin(), nl.end(), w) == nl.end()) report("N(", u, ") misses neighbor ", w);
    for (VertexId w : free_in[u])
      if (std::find(fl.begin(), fl.end(), w) == fl.end())
        report("F(", u, ") misses free in-neighbor ", w);
  }
  if (ledger_.underflows != 0) report("token ledger underflowed ", ledger_.underflows, " times");
  if (stats_.walk_overruns != 0) report(stats_.walk_overruns, " walks exceeded their unfunded bound");
  const std::uint64_t m = orient_.edge_count();
  const std::uint64_t m0 = std::max<std::uint64_t>(m0_, 1);
  if (m >= 2 * m0 || (m0 >= 2 && 2 * m <= m0)) report("m=", m, " outside the stage window of m0=", m0_);
  if (census() > census_bound()) report("census ", census(), " exceeds ", census_bound());
  return out;
}

}  // namespace dynmatch
