// Copyright 2026 The dynmatch Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DYNMATCH_ARB_MATCHER_HPP
#define DYNMATCH_ARB_MATCHER_HPP

#include <vector>

#include "dynmatch/engine.hpp"
#include "dynmatch/lazy_list.hpp"
#include "dynmatch/orientation.hpp"

namespace dynmatch {

/// Orientation parameters for an engine config: the profile defaults, with
/// config.delta overriding the cap when nonzero.
OrientationParams orientation_params(const EngineConfig& config, VertexId n);

/// Amortized engine for graphs of arboricity at most c. Every vertex tells
/// only its out-neighbors whether it is free, so F(u) holds exactly the free
/// in-neighbors of u; a freed vertex finds a partner in F(u) or by scanning
/// its at most cap out-neighbors.
///
/// F(u) is a row of n state bytes (the truth) plus a list in insertion
/// order. Deleting from F(u) only marks the byte stale; stale nodes are
/// discarded when an extraction reaches them, each discard paid by one
/// credit left by the earlier delete.
class ArbEngine final : public Engine {
 public:
  /// Largest n accepted; the F rows take n*n bytes.
  static constexpr VertexId kMaxVertices = 1u << 14;

  ArbEngine(VertexId n, const EngineConfig& config);

  EngineKind kind() const noexcept override { return EngineKind::Arboricity; }
  std::size_t edge_count() const noexcept override { return orient_.edge_count(); }
  bool has_edge(VertexId u, VertexId v) const override { return orient_.has_edge(u, v); }
  std::vector<Edge> edges() const override;
  std::vector<std::string> audit() const override;
  std::unique_ptr<Engine> clone() const override { return std::make_unique<ArbEngine>(*this); }

  const Orientation& orientation() const noexcept { return orient_; }
  std::uint32_t degree(VertexId u) const noexcept { return deg_[u]; }

  /// Logical F(u), in list order.
  std::vector<VertexId> free_in_neighbors(VertexId u) const;
  bool in_free_set(VertexId u, VertexId w) const noexcept { return state(u, w) == kPresent; }

  /// Stale list nodes not yet discarded; equals the unspent credits.
  std::uint64_t credits() const noexcept { return credits_; }
  std::uint64_t discards() const noexcept { return discards_; }

 protected:
  void on_insert(VertexId u, VertexId v) override;
  void on_delete(VertexId u, VertexId v) override;

 private:
  static constexpr std::uint8_t kAbsent = 0;
  static constexpr std::uint8_t kPresent = 1;
  static constexpr std::uint8_t kStale = 2;

  std::uint8_t& state(VertexId u, VertexId w) noexcept {
    return state_[static_cast<std::size_t>(u) * vertex_count() + w];
  }
  std::uint8_t state(VertexId u, VertexId w) const noexcept {
    return state_[static_cast<std::size_t>(u) * vertex_count() + w];
  }

  void free_insert(VertexId u, VertexId w);
  void free_erase(VertexId u, VertexId w);
  VertexId free_extract(VertexId u);

  void apply_flips(const std::vector<FlipEvent>& events);
  void match(VertexId x, VertexId w);
  void rematch(VertexId w);

  std::vector<std::uint32_t> deg_;
  Orientation orient_;
  NodePool pool_;
  std::vector<NodePool::List> lists_;
  std::vector<std::uint8_t> state_;
  std::vector<std::uint32_t> present_;
  std::uint64_t credits_ = 0;
  std::uint64_t discards_ = 0;
};

}  // namespace dynmatch

#endif  // DYNMATCH_ARB_MATCHER_HPP
