// Copyright 2026 The dynmatch Authors
// SPDX-License-Identifier: Apache-2.0

#include "dynmatch/sqrt_matcher.hpp"

#include <sstream>

namespace dynmatch {

SqrtEngine::SqrtEngine(VertexId n)
    : Engine(n), graph_(n), free_(n, FreeNeighborSet(n)), heap_(n), pending_(n, 0) {
  StepCounter setup;
  for (VertexId v = 0; v < n; ++v) heap_.insert(v, 0, setup);
}

void SqrtEngine::on_insert(VertexId u, VertexId v) {
  became_free_.clear();
  last_round_corrections_ = 0;
  graph_.insert(u, v);
  ops().charge(2);
  const bool fu = is_free(u);
  const bool fv = is_free(v);
  if (fu) heap_.update_key(u, graph_.degree(u), ops());
  if (fv) heap_.update_key(v, graph_.degree(v), ops());

  if (fu && fv) {
    // Record the new edge in both free sets so the sweep in add_to_matching
    // finds every entry it removes.
    free_[v].insert(u, ops());
    free_[u].insert(v, ops());
    add_to_matching(u, v);
  } else if (fu) {
    augment_through_new_edge(u, v);
  } else if (fv) {
    augment_through_new_edge(v, u);
  }
  correct_problematic(u, v);
}

void SqrtEngine::on_delete(VertexId u, VertexId v) {
  became_free_.clear();
  last_round_corrections_ = 0;
  const bool matched = match_.mate(u) == v;
  graph_.erase(u, v);
  ops().charge(2);
  if (is_free(u)) heap_.update_key(u, graph_.degree(u), ops());
  if (is_free(v)) heap_.update_key(v, graph_.degree(v), ops());

  if (!matched) {
    if (is_free(u)) free_[v].erase(u, ops());
    if (is_free(v)) free_[u].erase(v, ops());
  } else {
    // Statuses stay "matched" (stale mate pointers) until resolved.
    match_.erase_edge(Edge::of(u, v));
    pending_[u] = pending_[v] = 1;
    resolve(u);
    resolve(v);
  }
  correct_problematic(u, v);
}

void SqrtEngine::add_to_matching(VertexId u, VertexId v) {
  match_.insert_edge(Edge::of(u, v));
  for (VertexId w : {u, v}) {
    if (!is_free(w)) continue;  // stale mate: w was never in any F(x)
    heap_.erase(w, ops());
    for (VertexId x : graph_.neighbors(w)) {
      ops().charge();
      free_[x].erase(w, ops());
    }
  }
  match_.set_mate(u, v);
  match_.set_mate(v, u);
  pending_[u] = pending_[v] = 0;
}

// free_end is free, matched_end is matched to some partner. A length-3
// augmenting path through the new edge exists iff the partner has a free
// neighbor other than free_end.
void SqrtEngine::augment_through_new_edge(VertexId free_end, VertexId matched_end) {
  const VertexId partner = match_.mate(matched_end);
  const bool was_listed = free_[partner].erase_if_present(free_end, ops());
  if (free_[partner].has_free(ops())) {
    const VertexId x = free_[partner].get_free(ops());
    if (was_listed) free_[partner].insert(free_end, ops());
    free_[matched_end].insert(free_end, ops());
    add_to_matching(free_end, matched_end);
    add_to_matching(partner, x);
    match_.erase_edge(Edge::of(matched_end, partner));
  } else {
    // free_end stays free: undo the removal and record the new edge.
    free_[matched_end].insert(free_end, ops());
    if (was_listed) free_[partner].insert(free_end, ops());
  }
}

void SqrtEngine::find_aug_path(VertexId u) {
  for (VertexId w : graph_.neighbors(u)) {
    ops().charge();
    const VertexId partner = match_.mate(w);
    if (partner == kNoVertex || partner == u)
      throw_invariant("aug-path search at " + std::to_string(u) + " met an unmatched neighbor");
    if (free_[partner].has_free(ops())) {
      const VertexId x = free_[partner].get_free(ops());
      add_to_matching(u, w);
      add_to_matching(partner, x);
      match_.erase_edge(Edge::of(w, partner));
      return;
    }
  }
  for (VertexId w : graph_.neighbors(u)) {
    ops().charge();
    free_[w].insert(u, ops());
  }
  heap_.insert(u, graph_.degree(u), ops());
  match_.set_mate(u, kNoVertex);
  pending_[u] = 0;
  became_free_.push_back(u);
}

// u has degree above sqrt(2m) and no free neighbor. Among the first
// ceil(sqrt(2m)) neighbors some mate has degree <= sqrt(2m); otherwise those
// distinct mates alone would carry more than 2m degree.
VertexId SqrtEngine::find_surrogate(VertexId u) {
  const std::uint64_t limit = ceil_sqrt(two_m());
  std::uint64_t scanned = 0;
  for (VertexId w : graph_.neighbors(u)) {
    if (scanned == limit) break;
    ++scanned;
    ops().charge();
    const VertexId partner = match_.mate(w);
    if (partner == kNoVertex || partner == u)
      throw_invariant("surrogate search at " + std::to_string(u) + " met an unmatched neighbor");
    if (!square_exceeds(graph_.degree(partner), two_m())) {
      match_.erase_edge(Edge::of(w, partner));
      add_to_matching(u, w);
      ++surrogates_;
      return partner;  // mate pointer still names w until resolved
    }
  }
  std::ostringstream os;
  os << "no low-degree surrogate among " << scanned << " neighbors of " << u
     << " (deg " << graph_.degree(u) << ", m " << graph_.edge_count() << ")";
  throw_invariant(os.str());
}

void SqrtEngine::resolve(VertexId z) {
  if (free_[z].has_free(ops())) {
    add_to_matching(free_[z].get_free(ops()), z);
    return;
  }
  if (high_degree(z)) {
    const VertexId s = find_surrogate(z);
    pending_[s] = 1;
    resolve_low_degree(s);
    return;
  }
  find_aug_path(z);
}

void SqrtEngine::resolve_low_degree(VertexId z) {
  if (free_[z].has_free(ops())) {
    add_to_matching(free_[z].get_free(ops()), z);
    return;
  }
  if (high_degree(z))
    throw_invariant("surrogate " + std::to_string(z) + " has degree above sqrt(2m)");
  find_aug_path(z);
}

void SqrtEngine::correct_problematic(VertexId u, VertexId v) {
  if (is_free(u) && high_degree(u)) correct(u);
  if (is_free(v) && high_degree(v)) correct(v);
  const VertexId x = heap_.find_max(ops());
  if (x != kNoVertex && high_degree(x)) correct(x);
}

void SqrtEngine::correct(VertexId x) {
  ++corrections_;
  ++last_round_corrections_;
  const VertexId s = find_surrogate(x);
  pending_[s] = 1;
  resolve_low_degree(s);
}

std::vector<std::string> SqrtEngine::audit() const {
  auto out = Engine::audit();
  if (auto msg = graph_.audit(); !msg.empty()) out.push_back(msg);
  const VertexId n = vertex_count();
  const std::uint64_t m = graph_.edge_count();
  auto report = [&](auto&&... parts) {
    std::ostringstream os;
    (os << ... << parts);
    out.push_back(os.str());
  };

  for (VertexId v = 0; v < n; ++v) {
    if (pending_[v]) report("vertex ", v, " still has a deferred status at round end");
    const std::uint64_t d = graph_.degree(v);
    if (is_free(v) && square_exceeds(d, 2 * n + 2 * m))
      report("invariant 1: free vertex ", v, " has degree ", d, " > sqrt(2n+2m), n=", n, " m=", m);
    if (is_free(v) != heap_.contains(v)) report("heap membership of ", v, " disagrees with status");
    if (heap_.contains(v) && heap_.key(v) != d) report("heap key of ", v, " is stale");

    std::uint32_t authentic = 0;
    for (VertexId w : graph_.neighbors(v)) {
      if (!is_free(w)) continue;
      ++authentic;
      if (!free_[v].contains(w)) report("F(", v, ") misses free neighbor ", w);
    }
    if (free_[v].size() != authentic) report("F(", v, ") holds non-authentic entries");
    if (auto msg = free_[v].audit(); !msg.empty()) report("F(", v, "): ", msg);
  }
  if (auto msg = heap_.audit(); !msg.empty()) out.push_back(msg);

  for (VertexId v : became_free_) {
    if (is_free(v) && square_exceeds(graph_.degree(v), 2 * m))
      report("invariant 2: newly free vertex ", v, " has degree ", graph_.degree(v), " > sqrt(2m)");
  }

  try {
    if (auto path = oracle::find_3_augmenting_path(snapshot())) {
      const auto& p = *path;
      report("invariant 3: augmenting path ", p[0], "-", p[1], "-", p[2], "-", p[3]);
    }
  } catch (const Error& e) {
    out.emplace_back(e.what());
  }
  return out;
}

}  // namespace dynmatch
