// Copyright 2026 The dynmatch Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DYNMATCH_SQRT_MATCHER_HPP
#define DYNMATCH_SQRT_MATCHER_HPP

#include <vector>

#include "dynmatch/engine.hpp"
#include "dynmatch/free_structure.hpp"

namespace dynmatch {

/// Worst-case O(sqrt(n+m)) engine. Maintains a maximal matching with no
/// augmenting path of length 3 (a 3/2-approximate maximum matching) under
/// three round-end invariants:
///
///   1. every free vertex has deg^2 <= 2n + 2m;
///   2. every vertex that became free this round has deg^2 <= 2m;
///   3. M is maximal and has no length-3 augmenting path.
///
/// Each vertex v keeps F(v), the set of its free neighbors, and a heap holds
/// the free vertices by degree. High-degree vertices are kept matched by
/// handing their partner search to a low-degree "surrogate"; at the end of
/// each round up to three free vertices whose degree exceeds sqrt(2m) are
/// corrected (both endpoints of the updated edge, then the heap maximum).
///
/// During a matched-edge deletion both endpoints keep their old mate pointer
/// (and so still count as matched) until each is resolved. pending_ marks
/// those vertices; it must be clear at every round end.
class SqrtEngine final : public Engine {
 public:
  explicit SqrtEngine(VertexId n);

  EngineKind kind() const noexcept override { return EngineKind::Sqrt; }
  std::size_t edge_count() const noexcept override { return graph_.edge_count(); }
  bool has_edge(VertexId u, VertexId v) const override { return graph_.has_edge(u, v); }
  std::vector<Edge> edges() const override { return graph_.edges(); }
  std::vector<std::string> audit() const override;
  std::unique_ptr<Engine> clone() const override { return std::make_unique<SqrtEngine>(*this); }

  const DynamicGraph& graph() const noexcept { return graph_; }
  const FreeNeighborSet& free_neighbors(VertexId v) const noexcept { return free_[v]; }
  const FreeMaxHeap& free_heap() const noexcept { return heap_; }
  /// Vertices that were declared free during the last update.
  const std::vector<VertexId>& became_free() const noexcept { return became_free_; }

  /// Problematic vertices (free, degree above sqrt(2m)) corrected during the
  /// last update.
  std::uint32_t last_round_corrections() const noexcept { return last_round_corrections_; }
  std::uint64_t surrogates_found() const noexcept { return surrogates_; }
  std::uint64_t corrections() const noexcept { return corrections_; }

 protected:
  void on_insert(VertexId u, VertexId v) override;
  void on_delete(VertexId u, VertexId v) override;

 private:
  bool is_free(VertexId v) const noexcept { return match_.is_free(v); }
  std::uint64_t two_m() const noexcept { return 2 * graph_.edge_count(); }
  bool high_degree(VertexId v) const noexcept {
    return square_exceeds(graph_.degree(v), two_m());
  }

  void add_to_matching(VertexId u, VertexId v);
  void augment_through_new_edge(VertexId free_end, VertexId matched_end);
  void find_aug_path(VertexId u);
  VertexId find_surrogate(VertexId u);
  void resolve(VertexId z);
  void resolve_low_degree(VertexId z);
  void correct_problematic(VertexId u, VertexId v);
  void correct(VertexId x);

  DynamicGraph graph_;
  std::vector<FreeNeighborSet> free_;
  FreeMaxHeap heap_;
  std::vector<std::uint8_t> pending_;
  std::vector<VertexId> became_free_;
  std::uint32_t last_round_corrections_ = 0;
  std::uint64_t surrogates_ = 0;
  std::uint64_t corrections_ = 0;
};

}  // namespace dynmatch

#endif  // DYNMATCH_SQRT_MATCHER_HPP
