// Copyright 2026 The dynmatch Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DYNMATCH_NAIVE_HPP
#define DYNMATCH_NAIVE_HPP

#include "dynmatch/engine.hpp"

namespace dynmatch {

/// Baseline: match a new edge when both ends are free; on deleting a matched
/// edge, scan each endpoint's neighbors for a free one. O(n) per update.
class NaiveEngine final : public Engine {
 public:
  explicit NaiveEngine(VertexId n) : Engine(n), graph_(n) {}

  EngineKind kind() const noexcept override { return EngineKind::Naive; }
  std::size_t edge_count() const noexcept override { return graph_.edge_count(); }
  bool has_edge(VertexId u, VertexId v) const override { return graph_.has_edge(u, v); }
  std::vector<Edge> edges() const override { return graph_.edges(); }
  std::vector<std::string> audit() const override;
  std::unique_ptr<Engine> clone() const override { return std::make_unique<NaiveEngine>(*this); }

  const DynamicGraph& graph() const noexcept { return graph_; }

 protected:
  void on_insert(VertexId u, VertexId v) override;
  void on_delete(VertexId u, VertexId v) override;

 private:
  void rematch(VertexId z);

  DynamicGraph graph_;
};

}  // namespace dynmatch

#endif  // DYNMATCH_NAIVE_HPP
