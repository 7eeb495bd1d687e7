// Copyright 2026 The dynmatch Authors
// SPDX-License-Identifier: Apache-2.0

#include "dynmatch/free_structure.hpp"

#include <bit>
#include <sstream>

namespace dynmatch {

FreeNeighborSet::FreeNeighborSet(VertexId n)
    : present_(n, 0), block_(static_cast<std::uint32_t>(ceil_sqrt(n))) {
  if (block_ == 0) block_ = 1;
  buckets_.assign((n + block_ - 1) / block_, 0);
}

void FreeNeighborSet::insert(VertexId w, StepCounter& ops) {
  ops.charge();
  if (present_[w]) throw_invariant("free set: double insert of " + std::to_string(w));
  present_[w] = 1;
  ++buckets_[w / block_];
  ++total_;
}

void FreeNeighborSet::erase(VertexId w, StepCounter& ops) {
  ops.charge();
  if (!present_[w]) throw_invariant("free set: erase of absent " + std::to_string(w));
  present_[w] = 0;
  --buckets_[w / block_];
  --total_;
}

bool FreeNeighborSet::erase_if_present(VertexId w, StepCounter& ops) {
  ops.charge();
  if (!present_[w]) return false;
  present_[w] = 0;
  --buckets_[w / block_];
  --total_;
  return true;
}

VertexId FreeNeighborSet::get_free(StepCounter& ops) const {
  if (total_ == 0) throw_invariant("free set: get_free on empty set");
  for (std::size_t j = 0; j < buckets_.size(); ++j) {
    ops.charge();
    if (buckets_[j] == 0) continue;
    const std::size_t end = std::min<std::size_t>(present_.size(), (j + 1) * block_);
    for (std::size_t w = j * block_; w < end; ++w) {
      ops.charge();
      if (present_[w]) return static_cast<VertexId>(w);
    }
    break;
  }
  throw_invariant("free set: bucket counters disagree with membership");
}

std::string FreeNeighborSet::audit() const {
  std::uint32_t total = 0;
  for (std::size_t j = 0; j < buckets_.size(); ++j) {
    std::uint32_t count = 0;
    const std::size_t end = std::min<std::size_t>(present_.size(), (j + 1) * block_);
    for (std::size_t w = j * block_; w < end; ++w) count += present_[w];
    if (count != buckets_[j]) {
      std::ostringstream os;
      os << "bucket " << j << " holds " << buckets_[j] << ", recount " << count;
      return os.str();
    }
    total += count;
  }
  if (total != total_) return "free set total disagrees with recount";
  return {};
}

FreeMaxHeap::FreeMaxHeap(VertexId n)
    : pos_(n, kNoPos), key_(n, 0), weight_(std::max<std::uint32_t>(1, std::bit_width(n))) {}

void FreeMaxHeap::insert(VertexId v, std::uint32_t key, StepCounter& ops) {
  ops.charge(weight_);
  if (contains(v)) throw_invariant("heap: double insert of " + std::to_string(v));
  key_[v] = key;
  heap_.push_back(v);
  pos_[v] = static_cast<std::uint32_t>(heap_.size() - 1);
  sift_up(heap_.size() - 1);
}

void FreeMaxHeap::erase(VertexId v, StepCounter& ops) {
  ops.charge(weight_);
  if (!contains(v)) throw_invariant("heap: erase of absent " + std::to_string(v));
  const std::size_t i = pos_[v];
  const VertexId last = heap_.back();
  heap_.pop_back();
  pos_[v] = kNoPos;
  if (i < heap_.size()) {
    place(i, last);
    sift_up(i);
    sift_down(pos_[last]);
  }
}

void FreeMaxHeap::update_key(VertexId v, std::uint32_t key, StepCounter& ops) {
  ops.charge(weight_);
  if (!contains(v)) throw_invariant("heap: update_key of absent " + std::to_string(v));
  key_[v] = key;
  sift_up(pos_[v]);
  sift_down(pos_[v]);
}

VertexId FreeMaxHeap::find_max(StepCounter& ops) const {
  ops.charge();
  return heap_.empty() ? kNoVertex : heap_.front();
}

void FreeMaxHeap::sift_up(std::size_t i) noexcept {
  const VertexId v = heap_[i];
  while (i > 0) {
    const std::size_t parent = (i - 1) / 2;
    if (!above(v, heap_[parent])) break;
    place(i, heap_[parent]);
    i = parent;
  }
  place(i, v);
}

void FreeMaxHeap::sift_down(std::size_t i) noexcept {
  const VertexId v = heap_[i];
  const std::size_t n = heap_.size();
  for (;;) {
    std::size_t child = 2 * i + 1;
    if (child >= n) break;
    if (child + 1 < n && above(heap_[child + 1], heap_[child])) ++child;
    if (!above(heap_[child], v)) break;
    place(i, heap_[child]);
    i = child;
  }
  place(i, v);
}

std::string FreeMaxHeap::audit() const {
  for (std::size_t i = 0; i < heap_.size(); ++i) {
    if (pos_[heap_[i]] != i) return "heap position index is stale";
    if (i > 0 && above(heap_[i], heap_[(i - 1) / 2])) return "heap order violated";
  }
  return {};
}

}  // namespace dynmatch
