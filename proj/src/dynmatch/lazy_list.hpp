// Copyright 2026 The dynmatch Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DYNMATCH_LAZY_LIST_HPP
#define DYNMATCH_LAZY_LIST_HPP

#include <cstdint>
#include <vector>

#include "dynmatch/core.hpp"

namespace dynmatch {

/// Singly linked lists of vertex ids sharing one node pool. Removal only
/// happens at the head or just after a known predecessor, which is all the
/// lazy-deletion walks need.
class NodePool {
 public:
  using NodeId = std::uint32_t;
  static constexpr NodeId kNil = 0xffffffffu;

  struct List {
    NodeId head = kNil;
    std::uint32_t length = 0;
  };

  void push_front(List& list, VertexId value) {
    NodeId id;
    if (free_ != kNil) {
      id = free_;
      free_ = next_[id];
      value_[id] = value;
    } else {
      id = static_cast<NodeId>(value_.size());
      value_.push_back(value);
      next_.push_back(kNil);
    }
    next_[id] = list.head;
    list.head = id;
    ++list.length;
    ++live_;
  }

  /// Removes the node after prev, or the head when prev is kNil. Returns the
  /// node that now follows prev.
  NodeId erase_after(List& list, NodeId prev) {
    const NodeId victim = prev == kNil ? list.head : next_[prev];
    const NodeId after = next_[victim];
    if (prev == kNil)
      list.head = after;
    else
      next_[prev] = after;
    next_[victim] = free_;
    free_ = victim;
    --list.length;
    --live_;
    return after;
  }

  void pop_front(List& list) { erase_after(list, kNil); }

  void clear(List& list) {
    while (list.head != kNil) pop_front(list);
  }

  VertexId value(NodeId id) const noexcept { return value_[id]; }
  NodeId next(NodeId id) const noexcept { return next_[id]; }

  std::vector<VertexId> to_vector(const List& list) const {
    std::vector<VertexId> out;
    for (NodeId id = list.head; id != kNil; id = next_[id]) out.push_back(value_[id]);
    return out;
  }

  /// Drops every node; all lists built on this pool must be reset too.
  void reset() {
    std::vector<VertexId>().swap(value_);
    std::vector<NodeId>().swap(next_);
    free_ = kNil;
    live_ = 0;
  }

  std::size_t live() const noexcept { return live_; }
  std::size_t capacity() const noexcept { return value_.size(); }

 private:
  std::vector<VertexId> value_;
  std::vector<NodeId> next_;
  NodeId free_ = kNil;
  std::size_t live_ = 0;
};

}  // namespace dynmatch

#endif  // DYNMATCH_LAZY_LIST_HPP
