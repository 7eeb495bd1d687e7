// Copyright 2026 The dynmatch Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DYNMATCH_FREE_STRUCTURE_HPP
#define DYNMATCH_FREE_STRUCTURE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dynmatch/core.hpp"

namespace dynmatch {

/// Set of free neighbors of one vertex: a membership array over [0, n) plus
/// one counter per block of b = ceil(sqrt(n)) consecutive indices. Insert,
/// erase and the emptiness test are O(1); get_free scans at most all block
/// counters and one block, i.e. <= 2b probes, and returns the smallest member.
///
/// Insert and erase are strict: inserting a member or erasing a non-member is
/// a bookkeeping bug and throws.
class FreeNeighborSet {
 public:
  explicit FreeNeighborSet(VertexId n);

  void insert(VertexId w, StepCounter& ops);
  void erase(VertexId w, StepCounter& ops);
  /// The one tolerant variant; returns whether w was a member.
  bool erase_if_present(VertexId w, StepCounter& ops);

  bool has_free(StepCounter& ops) const {
    ops.charge();
    return total_ > 0;
  }
  VertexId get_free(StepCounter& ops) const;

  bool contains(VertexId w) const noexcept { return present_[w] != 0; }
  bool empty() const noexcept { return total_ == 0; }
  std::uint32_t size() const noexcept { return total_; }
  std::uint32_t block_size() const noexcept { return block_; }
  const std::vector<std::uint32_t>& bucket_counts() const noexcept { return buckets_; }

  /// Recount of buckets and total; empty string when consistent.
  std::string audit() const;

  friend bool operator==(const FreeNeighborSet&, const FreeNeighborSet&) = default;

 private:
  std::vector<std::uint8_t> present_;
  std::vector<std::uint32_t> buckets_;
  std::uint32_t block_;
  std::uint32_t total_ = 0;
};

/// Max-heap of free vertices keyed by degree; ties go to the smaller vertex
/// index. Keeps a position index per vertex for update-key and erase.
class FreeMaxHeap {
 public:
  explicit FreeMaxHeap(VertexId n);

  void insert(VertexId v, std::uint32_t key, StepCounter& ops);
  void erase(VertexId v, StepCounter& ops);
  void update_key(VertexId v, std::uint32_t key, StepCounter& ops);
  /// kNoVertex when empty.
  VertexId find_max(StepCounter& ops) const;

  bool contains(VertexId v) const noexcept { return pos_[v] != kNoPos; }
  std::uint32_t key(VertexId v) const noexcept { return key_[v]; }
  std::size_t size() const noexcept { return heap_.size(); }
  std::uint32_t weight() const noexcept { return weight_; }

  std::string audit() const;

 private:
  static constexpr std::uint32_t kNoPos = 0xffffffffu;

  bool above(VertexId a, VertexId b) const noexcept {
    return key_[a] != key_[b] ? key_[a] > key_[b] : a < b;
  }
  void place(std::size_t i, VertexId v) noexcept {
    heap_[i] = v;
    pos_[v] = static_cast<std::uint32_t>(i);
  }
  void sift_up(std::size_t i) noexcept;
  void sift_down(std::size_t i) noexcept;

  std::vector<VertexId> heap_;
  std::vector<std::uint32_t> pos_;
  std::vector<std::uint32_t> key_;
  std::uint32_t weight_;
};

}  // namespace dynmatch

#endif  // DYNMATCH_FREE_STRUCTURE_HPP
