// Copyright 2026 The dynmatch Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DYNMATCH_TESTS_SUPPORT_HPP
#define DYNMATCH_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "dynmatch/core.hpp"

namespace dmtest {

using dynmatch::Edge;
using dynmatch::Update;
using dynmatch::VertexId;

/// Unbiased draw in [0, bound) by rejection, portable across standard
/// libraries.
inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = (~std::uint64_t{0}) - (~std::uint64_t{0}) % bound;
  std::uint64_t x;
  do x = rng(); while (x >= limit);
  return x % bound;
}

/// Random legal stream: inserts while below target_m with probability
/// p_insert, deletes otherwise.
inline std::vector<Update> random_stream(VertexId n, std::size_t length, std::size_t target_m,
                                         std::uint64_t seed, double p_insert = 0.6) {
  std::mt19937_64 rng(seed);
  std::set<Edge> present;
  std::vector<Edge> list;
  std::vector<Update> out;
  const std::size_t max_m = static_cast<std::size_t>(n) * (n - 1) / 2;
  while (out.size() < length) {
    const bool want_insert =
        list.empty() || (list.size() < std::min(target_m, max_m) &&
                         static_cast<double>(draw(rng, 1000)) < p_insert * 1000);
    if (want_insert && list.size() < max_m) {
      Edge e;
      do {
        const auto a = static_cast<VertexId>(draw(rng, n));
        const auto b = static_cast<VertexId>(draw(rng, n));
        e = Edge::of(a, b);
      } while (e.u == e.v || present.count(e));
      present.insert(e);
      list.push_back(e);
      out.push_back(Update::insert(e.u, e.v));
    } else {
      const auto i = draw(rng, list.size());
      const Edge e = list[i];
      list[i] = list.back();
      list.pop_back();
      present.erase(e);
      out.push_back(Update::erase(e.u, e.v));
    }
  }
  return out;
}

/// Random forest stream: inserts join two different trees, deletes remove
/// a random edge.
inline std::vector<Update> forest_stream(VertexId n, std::size_t length, std::uint64_t seed,
                                         double p_insert = 0.7) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> list;
  std::vector<Update> out;
  auto root = [&](std::vector<VertexId>& parent, VertexId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  while (out.size() < length) {
    const bool want_insert = list.empty() ||
                             (list.size() + 1 < n && draw(rng, 1000) < p_insert * 1000);
    if (want_insert) {
      std::vector<VertexId> parent(n);
      for (VertexId i = 0; i < n; ++i) parent[i] = i;
      for (const Edge& e : list) parent[root(parent, e.u)] = root(parent, e.v);
      VertexId a, b;
      do {
        a = static_cast<VertexId>(draw(rng, n));
        b = static_cast<VertexId>(draw(rng, n));
      } while (a == b || root(parent, a) == root(parent, b));
      list.push_back(Edge::of(a, b));
      out.push_back(Update::insert(a, b));
    } else {
      const auto i = draw(rng, list.size());
      const Edge e = list[i];
      list[i] = list.back();
      list.pop_back();
      out.push_back(Update::erase(e.u, e.v));
    }
  }
  return out;
}

inline std::string join(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

}  // namespace dmtest

#endif  // DYNMATCH_TESTS_SUPPORT_HPP
