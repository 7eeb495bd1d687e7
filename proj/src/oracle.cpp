// Copyright 2026 The dynmatch Authors
// SPDX-License-Identifier: Apache-2.0

#include "dynmatch/oracle.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>

namespace dynmatch::oracle {
namespace {

[[noreturn]] void malformed(const std::string& why) {
  throw Error(ErrorCode::InvalidArgument, "malformed snapshot: " + why);
}

std::vector<char> covered_by(const Snapshot& s) {
  std::vector<char> covered(s.n, 0);
  for (const Edge& e : s.matching) covered[e.u] = covered[e.v] = 1;
  return covered;
}

std::vector<std::vector<VertexId>> adjacency(const Snapshot& s) {
  std::vector<std::vector<VertexId>> adj(s.n);
  for (const Edge& e : s.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

// Maximum matching over a vertex bitmask; vertices indexed 0..k-1.
std::size_t mcm_by_vertex_subsets(const std::vector<std::uint32_t>& nbr_mask, unsigned k) {
  std::vector<std::int8_t> memo(std::size_t{1} << k, -1);
  std::function<int(std::uint32_t)> best = [&](std::uint32_t mask) -> int {
    if (mask == 0) return 0;
    if (memo[mask] >= 0) return memo[mask];
    const unsigned v = static_cast<unsigned>(__builtin_ctz(mask));
    const std::uint32_t rest = mask & ~(std::uint32_t{1} << v);
    int result = best(rest);
    for (std::uint32_t cand = nbr_mask[v] & rest; cand != 0; cand &= cand - 1) {
      const unsigned w = static_cast<unsigned>(__builtin_ctz(cand));
      result = std::max(result, 1 + best(rest & ~(std::uint32_t{1} << w)));
    }
    memo[mask] = static_cast<std::int8_t>(result);
    return result;
  };
  return static_cast<std::size_t>(best((k == 32 ? 0u : (std::uint32_t{1} << k)) - 1));
}

// Include/exclude search over edges with a cardinality bound.
std::size_t mcm_by_edge_branching(const std::vector<Edge>& edges, VertexId n) {
  std::vector<char> used(n, 0);
  std::size_t best = 0;
  std::function<void(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t taken) {
    best = std::max(best, taken);
    if (i == edges.size() || taken + (edges.size() - i) <= best) return;
    const Edge e = edges[i];
    if (!used[e.u] && !used[e.v]) {
      used[e.u] = used[e.v] = 1;
      go(i + 1, taken + 1);
      used[e.u] = used[e.v] = 0;
    }
    go(i + 1, taken);
  };
  go(0, 0);
  return best;
}

}  // namespace

void validate(const Snapshot& s) {
  if (s.status.size() != s.n) malformed("status vector length differs from n");
  std::vector<Edge> sorted = s.edges;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const Edge e = sorted[i];
    if (e.u >= e.v || e.v >= s.n) malformed("edge out of range or not normalized");
    if (i > 0 && sorted[i - 1] == e) malformed("duplicate edge");
  }
  std::vector<char> seen(s.n, 0);
  for (const Edge& e : s.matching) {
    if (e.u >= e.v || e.v >= s.n) malformed("matched edge out of range or not normalized");
    if (!std::binary_search(sorted.begin(), sorted.end(), e)) malformed("matched edge not in graph");
    if (seen[e.u] || seen[e.v]) malformed("matching is not vertex-disjoint");
    seen[e.u] = seen[e.v] = 1;
  }
  for (VertexId v = 0; v < s.n; ++v)
    if ((s.status[v] == Status::Matched) != (seen[v] != 0))
      malformed("status disagrees with matching at vertex " + std::to_string(v));
}

std::optional<Edge> find_unmatched_edge(const Snapshot& s) {
  validate(s);
  const auto covered = covered_by(s);
  for (const Edge& e : s.edges)
    if (!covered[e.u] && !covered[e.v]) return e;
  return std::nullopt;
}

std::optional<std::vector<VertexId>> find_3_augmenting_path(const Snapshot& s) {
  validate(s);
  const auto covered = covered_by(s);
  const auto adj = adjacency(s);
  for (const Edge& m : s.matching) {
    for (VertexId f1 : adj[m.u]) {
      if (covered[f1]) continue;
      for (VertexId f2 : adj[m.v]) {
        if (covered[f2] || f2 == f1) continue;
        return std::vector<VertexId>{f1, m.u, m.v, f2};
      }
    }
  }
  return std::nullopt;
}

std::size_t exact_mcm(const Snapshot& s) {
  validate(s);
  if (s.edges.size() > kMaxEdges && s.n > kMaxVertices) {
    std::ostringstream os;
    os << "exact_mcm refuses n=" << s.n << ", m=" << s.edges.size();
    throw Error(ErrorCode::InstanceTooLarge, os.str());
  }
  // Compress to non-isolated vertices.
  std::vector<VertexId> index(s.n, kNoVertex);
  VertexId k = 0;
  for (const Edge& e : s.edges) {
    if (index[e.u] == kNoVertex) index[e.u] = k++;
    if (index[e.v] == kNoVertex) index[e.v] = k++;
  }
  if (k <= kMaxVertices) {
    std::vector<std::uint32_t> nbr(k, 0);
    for (const Edge& e : s.edges) {
      nbr[index[e.u]] |= std::uint32_t{1} << index[e.v];
      nbr[index[e.v]] |= std::uint32_t{1} << index[e.u];
    }
    return mcm_by_vertex_subsets(nbr, k);
  }
  return mcm_by_edge_branching(s.edges, s.n);
}

double Ratio::value() const {
  if (den == 0) return std::numeric_limits<double>::infinity();
  return static_cast<double>(num) / static_cast<double>(den);
}

Ratio approx_ratio(const Snapshot& s) {
  const std::size_t best = exact_mcm(s);
  const std::size_t have = s.matching.size();
  if (have == 0) return best == 0 ? Ratio{1, 1} : Ratio{1, 0};
  return Ratio{best, have};
}

}  // namespace dynmatch::oracle
