// Copyright 2026 The dynmatch Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DYNMATCH_GRAPH_HPP
#define DYNMATCH_GRAPH_HPP

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dynmatch/core.hpp"

namespace dynmatch {

/// Simple undirected graph on a fixed vertex set. Neighbor sets are ordered,
/// so "any r neighbors" always means the r smallest.
class DynamicGraph {
 public:
  explicit DynamicGraph(VertexId n);

  VertexId vertex_count() const noexcept { return static_cast<VertexId>(adj_.size()); }
  std::size_t edge_count() const noexcept { return m_; }

  bool has_edge(VertexId u, VertexId v) const;
  void insert(VertexId u, VertexId v);
  void erase(VertexId u, VertexId v);

  std::uint32_t degree(VertexId v) const noexcept { return deg_[v]; }
  const std::set<VertexId>& neighbors(VertexId v) const noexcept { return adj_[v]; }

  std::vector<Edge> edges() const;

  /// Recount of m and deg from adjacency; empty string when consistent.
  std::string audit() const;

 private:
  std::vector<std::set<VertexId>> adj_;
  std::vector<std::uint32_t> deg_;
  std::size_t m_ = 0;
};

/// The matching M with per-vertex mate pointers. Edge-set and mate updates
/// are separate primitives because the worst-case engine keeps stale mate
/// pointers for a few steps inside one update.
class MatchState {
 public:
  explicit MatchState(VertexId n) : mate_(n, kNoVertex) {}

  VertexId mate(VertexId v) const noexcept { return mate_[v]; }
  bool is_free(VertexId v) const noexcept { return mate_[v] == kNoVertex; }
  std::size_t size() const noexcept { return edges_.size(); }
  bool contains(Edge e) const { return edges_.count(e) != 0; }
  const std::set<Edge>& edges() const noexcept { return edges_; }

  void insert_edge(Edge e);
  void erase_edge(Edge e);
  void set_mate(VertexId v, VertexId mate) noexcept { mate_[v] = mate; }

  /// insert_edge + both mate pointers.
  void match(VertexId u, VertexId v);
  /// erase_edge + clear both mate pointers.
  void unmatch(VertexId u, VertexId v);

  void begin_round() {
    added_.clear();
    removed_.clear();
  }
  const std::vector<Edge>& round_added() const noexcept { return added_; }
  const std::vector<Edge>& round_removed() const noexcept { return removed_; }

  /// mate(u)=v <=> mate(v)=u <=> {u,v} in M; empty string when consistent.
  std::string audit() const;

 private:
  std::vector<VertexId> mate_;
  std::set<Edge> edges_;
  std::vector<Edge> added_;
  std::vector<Edge> removed_;
};

}  // namespace dynmatch

#endif  // DYNMATCH_GRAPH_HPP
