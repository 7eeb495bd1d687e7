// Copyright 2026 The dynmatch Authors
// SPDX-License-Identifier: Apache-2.0

#include "dynmatch/graph.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace dynmatch {

void throw_invariant(const std::string& what) {
  throw Error(ErrorCode::InvariantViolation, what);
}

std::uint64_t ceil_sqrt(std::uint64_t x) noexcept {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(x)));
  while (r * r < x) ++r;
  while (r > 0 && (r - 1) * (r - 1) >= x) --r;
  return r;
}

DynamicGraph::DynamicGraph(VertexId n) : adj_(n), deg_(n, 0) {}

bool DynamicGraph::has_edge(VertexId u, VertexId v) const {
  return adj_[u].count(v) != 0;
}

void DynamicGraph::insert(VertexId u, VertexId v) {
  if (!adj_[u].insert(v).second || !adj_[v].insert(u).second)
    throw_invariant("graph: duplicate edge insert");
  ++deg_[u];
  ++deg_[v];
  ++m_;
}

void DynamicGraph::erase(VertexId u, VertexId v) {
  if (adj_[u].erase(v) == 0 || adj_[v].erase(u) == 0)
    throw_invariant("graph: erase of absent edge");
  --deg_[u];
  --deg_[v];
  --m_;
}

std::vector<Edge> DynamicGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (VertexId u = 0; u < adj_.size(); ++u)
    for (VertexId v : adj_[u])
      if (u < v) out.push_back({u, v});
  return out;
}

std::string DynamicGraph::audit() const {
  std::size_t sum = 0;
  for (VertexId v = 0; v < adj_.size(); ++v) {
    if (deg_[v] != adj_[v].size()) {
      std::ostringstream os;
      os << "deg(" << v << ")=" << deg_[v] << " but |N|=" << adj_[v].size();
      return os.str();
    }
    sum += deg_[v];
  }
  if (sum != 2 * m_) {
    std::ostringstream os;
    os << "m=" << m_ << " but degree sum=" << sum;
    return os.str();
  }
  return {};
}

void MatchState::insert_edge(Edge e) {
  if (!edges_.insert(e).second) throw_invariant("matching: edge already in M");
  auto it = std::find(removed_.begin(), removed_.end(), e);
  if (it != removed_.end())
    removed_.erase(it);
  else
    added_.push_back(e);
}

void MatchState::erase_edge(Edge e) {
  if (edges_.erase(e) == 0) throw_invariant("matching: edge not in M");
  auto it = std::find(added_.begin(), added_.end(), e);
  if (it != added_.end())
    added_.erase(it);
  else
    removed_.push_back(e);
}

void MatchState::match(VertexId u, VertexId v) {
  insert_edge(Edge::of(u, v));
  mate_[u] = v;
  mate_[v] = u;
}

void MatchState::unmatch(VertexId u, VertexId v) {
  erase_edge(Edge::of(u, v));
  mate_[u] = kNoVertex;
  mate_[v] = kNoVertex;
}

std::string MatchState::audit() const {
  std::size_t pointed = 0;
  for (VertexId v = 0; v < mate_.size(); ++v) {
    VertexId w = mate_[v];
    if (w == kNoVertex) continue;
    ++pointed;
    std::ostringstream os;
    if (w >= mate_.size() || mate_[w] != v) {
      os << "mate(" << v << ")=" << w << " is not symmetric";
      return os.str();
    }
    if (!contains(Edge::of(v, w))) {
      os << "mate pair {" << v << "," << w << "} missing from M";
      return os.str();
    }
  }
  if (pointed != 2 * edges_.size()) return "M has edges without mate pointers";
  return {};
}

}  // namespace dynmatch
