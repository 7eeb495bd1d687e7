// Copyright 2026 The dynmatch Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DYNMATCH_ORACLE_HPP
#define DYNMATCH_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "dynmatch/core.hpp"

// Brute-force checks over immutable snapshots. Nothing here shares code with
// the engines; these functions are the ground truth the engines are tested
// against.
namespace dynmatch::oracle {

enum class Status : std::uint8_t { Free, Matched };

struct Snapshot {
  VertexId n = 0;
  std::vector<Edge> edges;     // normalized, sorted
  std::vector<Edge> matching;  // normalized, sorted
  std::vector<Status> status;  // per vertex
};

/// Throws Error(InvalidArgument) unless the matching is a vertex-disjoint
/// subset of a simple edge list over [0, n).
void validate(const Snapshot& s);

/// Returns an edge with two free endpoints, if any.
std::optional<Edge> find_unmatched_edge(const Snapshot& s);

inline bool check_maximal(const Snapshot& s) { return !find_unmatched_edge(s); }

/// Returns a length-3 augmenting path f1-a-b-f2 ({a,b} in M), if any.
std::optional<std::vector<VertexId>> find_3_augmenting_path(const Snapshot& s);

inline bool check_no_3_aug_path(const Snapshot& s) {
  return !find_unmatched_edge(s) && !find_3_augmenting_path(s);
}

/// Exact maximum matching size by exhaustive search. Refuses instances with
/// more than kMaxEdges edges unless n <= kMaxVertices.
inline constexpr std::size_t kMaxEdges = 40;
inline constexpr VertexId kMaxVertices = 20;
std::size_t exact_mcm(const Snapshot& s);

struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 1;  // 0 encodes +infinity

  double value() const;
};

/// exact_mcm / |M|.
Ratio approx_ratio(const Snapshot& s);

}  // namespace dynmatch::oracle

#endif  // DYNMATCH_ORACLE_HPP
