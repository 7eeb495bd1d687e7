// Copyright 2026 The dynmatch Authors
// SPDX-License-Identifier: Apache-2.0

#include "dynmatch/arb_matcher.hpp"

#include <algorithm>
#include <sstream>

namespace dynmatch {

OrientationParams orientation_params(const EngineConfig& config, VertexId n) {
  OrientationParams p = config.profile == OrientationProfile::LogOverLogLog
                            ? OrientationParams::log_over_loglog(config.arboricity, n)
                            : OrientationParams::standard(config.arboricity);
  if (config.delta != 0) {
    p.cap = config.delta;
    if (p.cap < 2 * p.threshold) p.threshold = p.cap / 2;
  }
  return p;
}

ArbEngine::ArbEngine(VertexId n, const EngineConfig& config)
    : Engine(n),
      deg_(n, 0),
      orient_(n, orientation_params(config, n)),
      lists_(n),
      present_(n, 0) {
  if (n > kMaxVertices)
    throw Error(ErrorCode::InstanceTooLarge, "arb engine supports at most 16384 vertices");
  state_.assign(static_cast<std::size_t>(n) * n, kAbsent);
}

std::vector<Edge> ArbEngine::edges() const {
  std::vector<Edge> out;
  out.reserve(orient_.edge_count());
  for (VertexId u = 0; u < vertex_count(); ++u)
    for (VertexId v : orient_.out_neighbors(u)) out.push_back(Edge::of(u, v));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexId> ArbEngine::free_in_neighbors(VertexId u) const {
  std::vector<VertexId> out;
  for (VertexId w : pool_.to_vector(lists_[u]))
    if (state(u, w) == kPresent) out.push_back(w);
  return out;
}

void ArbEngine::free_insert(VertexId u, VertexId w) {
  ops().charge();
  auto& s = state(u, w);
  if (s == kPresent) throw_invariant("F(" + std::to_string(u) + ") already holds " + std::to_string(w));
  if (s == kStale) {
    --credits_;  // the old node is revived in place
  } else {
    pool_.push_front(lists_[u], w);
  }
  s = kPresent;
  ++present_[u];
}

void ArbEngine::free_erase(VertexId u, VertexId w) {
  ops().charge();
  auto& s = state(u, w);
  if (s != kPresent) throw_invariant("F(" + std::to_string(u) + ") does not hold " + std::to_string(w));
  s = kStale;
  --present_[u];
  ++credits_;
}

// Discards stale nodes from the front until a present one surfaces.
VertexId ArbEngine::free_extract(VertexId u) {
  auto& list = lists_[u];
  while (list.head != NodePool::kNil) {
    ops().charge();
    const VertexId w = pool_.value(list.head);
    auto& s = state(u, w);
    if (s == kPresent) return w;
    if (credits_ == 0) throw_invariant("lazy-deletion credit underflow");
    --credits_;
    ++discards_;
    s = kAbsent;
    pool_.pop_front(list);
  }
  throw_invariant("F(" + std::to_string(u) + ") empty on extraction");
}

void ArbEngine::apply_flips(const std::vector<FlipEvent>& events) {
  for (const FlipEvent& e : events) {
    if (e.initial) {
      if (match_.is_free(e.tail)) free_insert(e.head, e.tail);
      continue;
    }
    // Was head -> tail, now tail -> head.
    if (match_.is_free(e.head)) free_erase(e.tail, e.head);
    if (match_.is_free(e.tail)) free_insert(e.head, e.tail);
  }
}

void ArbEngine::match(VertexId x, VertexId w) {
  match_.match(x, w);
  ops().charge();
  for (VertexId z : {x, w}) {
    for (VertexId y : orient_.out_neighbors(z)) {
      ops().charge();
      if (state(y, z) == kPresent) free_erase(y, z);
    }
  }
}

void ArbEngine::on_insert(VertexId u, VertexId v) {
  ++deg_[u];
  ++deg_[v];
  apply_flips(orient_.insert(u, v, ops()));
  if (match_.is_free(u) && match_.is_free(v)) match(u, v);
}

void ArbEngine::rematch(VertexId w) {
  ops().charge();
  VertexId x = kNoVertex;
  if (present_[w] > 0) {
    x = free_extract(w);
  } else {
    for (VertexId y : orient_.out_neighbors(w)) {
      ops().charge();
      if (match_.is_free(y)) {
        x = y;
        break;
      }
    }
  }
  if (x != kNoVertex) {
    match(x, w);
    return;
  }
  // w stays free, so its out-neighbors must now list it.
  for (VertexId y : orient_.out_neighbors(w)) free_insert(y, w);
}

void ArbEngine::on_delete(VertexId u, VertexId v) {
  --deg_[u];
  --deg_[v];
  const VertexId tail = orient_.erase(u, v, ops());
  const VertexId head = tail == u ? v : u;
  if (match_.is_free(tail)) free_erase(head, tail);
  if (match_.mate(u) == v) {
    match_.unmatch(u, v);
    rematch(u);
    rematch(v);
  }
}

std::vector<std::string> ArbEngine::audit() const {
  auto out = Engine::audit();
  auto report = [&](auto&&... parts) {
    std::ostringstream os;
    (os << ... << parts);
    out.push_back(os.str());
  };
  if (auto msg = orient_.audit(); !msg.empty()) out.push_back("orientation: " + msg);

  const VertexId n = vertex_count();
  std::vector<std::uint32_t> expected(n, 0);
  std::vector<std::uint32_t> deg(n, 0);
  for (VertexId t = 0; t < n; ++t) {
    for (VertexId h : orient_.out_neighbors(t)) {
      ++deg[t];
      ++deg[h];
      if (!match_.is_free(t)) continue;
      ++expected[h];
      if (state(h, t) != kPresent) report("F(", h, ") misses free in-neighbor ", t);
    }
  }
  std::uint64_t stale = 0;
  std::vector<std::uint8_t> seen(n, 0);
  for (VertexId u = 0; u < n; ++u) {
    if (deg[u] != deg_[u]) report("degree counter of ", u, " is stale");
    if (present_[u] != expected[u])
      report("F(", u, ") holds ", present_[u], " entries, expected ", expected[u]);
    std::uint32_t nonzero = 0;
    for (VertexId w = 0; w < n; ++w) nonzero += state(u, w) != kAbsent;
    const auto nodes = pool_.to_vector(lists_[u]);
    if (nodes.size() != lists_[u].length) report("F(", u, ") length counter is stale");
    std::uint32_t present = 0;
    for (VertexId w : nodes) {
      if (seen[w]) report("F(", u, ") lists ", w, " twice");
      seen[w] = 1;
      if (state(u, w) == kAbsent) report("F(", u, ") lists absent ", w);
      present += state(u, w) == kPresent;
      stale += state(u, w) == kStale;
    }
    for (VertexId w : nodes) seen[w] = 0;
    if (nonzero != nodes.size()) report("F(", u, ") state row disagrees with its list");
    if (present != present_[u]) report("F(", u, ") present counter is stale");
  }
  if (stale != credits_) report("credits ", credits_, " but ", stale, " stale nodes");
  return out;
}

}  // namespace dynmatch
