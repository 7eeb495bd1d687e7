// Copyright 2026 The dynmatch Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DYNMATCH_ORIENTATION_HPP
#define DYNMATCH_ORIENTATION_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dynmatch/core.hpp"

namespace dynmatch {

struct OrientationParams {
  std::uint32_t arboricity = 1;  // c
  std::uint32_t threshold = 2;   // delta; documents the regime cap >= 2*threshold > 2c
  std::uint32_t cap = 5;         // Delta, the out-degree bound

  /// threshold = 2c, cap = 5c.
  static OrientationParams standard(std::uint32_t c);
  /// cap = 6c + ceil(log2 n / log2(log2 n / c)) when log2 n > 2c, else 6c.
  static OrientationParams log_over_loglog(std::uint32_t c, std::uint32_t n);
};

/// The edge is now directed tail -> head. initial marks the first
/// orientation of a newly inserted edge; otherwise it was head -> tail
/// before the flip.
struct FlipEvent {
  VertexId tail;
  VertexId head;
  bool initial;

  friend bool operator==(const FlipEvent&, const FlipEvent&) = default;
};

/// Fully dynamic bounded out-degree orientation. A new edge leaves the
/// endpoint of smaller out-degree (ties: smaller index). Whenever a vertex
/// exceeds the cap, all its out-edges are flipped; overflowing heads are
/// processed in FIFO order. With arboricity <= c and cap >= 2*threshold > 2c
/// the total number of flips is amortized O(cap + log n) per insertion.
/// Deletions never flip.
class Orientation {
 public:
  Orientation(VertexId n, OrientationParams params);

  const OrientationParams& params() const noexcept { return params_; }
  std::uint32_t cap() const noexcept { return params_.cap; }
  VertexId vertex_count() const noexcept { return static_cast<VertexId>(out_.size()); }
  std::size_t edge_count() const noexcept { return m_; }

  /// Throws Error(ContractViolation) when one insertion cascades past
  /// 10 * (n + m) flips, i.e. the caller's arboricity bound is wrong.
  std::vector<FlipEvent> insert(VertexId u, VertexId v, StepCounter& ops);
  /// Returns the tail the edge was directed out of.
  VertexId erase(VertexId u, VertexId v, StepCounter& ops);

  /// Direction lookup in O(cap); kNoVertex when the edge is absent.
  VertexId tail_of(VertexId u, VertexId v) const noexcept;
  bool has_edge(VertexId u, VertexId v) const noexcept { return tail_of(u, v) != kNoVertex; }
  /// Whether target is in D(source), charging one op per entry inspected.
  bool points_to(VertexId source, VertexId target, StepCounter& ops) const;

  std::span<const VertexId> out_neighbors(VertexId u) const noexcept { return out_[u]; }
  std::uint32_t out_degree(VertexId u) const noexcept {
    return static_cast<std::uint32_t>(out_[u].size());
  }
  std::uint32_t max_out_degree() const noexcept;

  std::uint64_t total_flips() const noexcept { return flips_; }
  std::uint64_t last_flips() const noexcept { return last_flips_; }

  /// Drops every edge tailed at the listed vertices and installs new params.
  void clear(std::span<const VertexId> tails, OrientationParams params);

  std::string audit() const;

 private:
  std::vector<std::vector<VertexId>> out_;
  OrientationParams params_;
  std::size_t m_ = 0;
  std::uint64_t flips_ = 0;
  std::uint64_t last_flips_ = 0;
};

}  // namespace dynmatch

#endif  // DYNMATCH_ORIENTATION_HPP
