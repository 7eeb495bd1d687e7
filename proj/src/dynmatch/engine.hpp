// Copyright 2026 The dynmatch Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DYNMATCH_ENGINE_HPP
#define DYNMATCH_ENGINE_HPP

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "dynmatch/core.hpp"
#include "dynmatch/graph.hpp"
#include "dynmatch/oracle.hpp"

namespace dynmatch {

enum class EngineKind : int { Naive = 0, Sqrt = 1, Arboricity = 2, Compact = 3 };

std::string_view engine_name(EngineKind kind) noexcept;

enum class OrientationProfile : int {
  Standard = 0,     // threshold 2c, cap 5c
  LogOverLogLog = 1 // cap 6c + ceil(log n / log(log n / c))
};

struct EngineConfig {
  std::uint32_t arboricity = 1;     // c, asserted by the caller
  std::uint32_t delta = 0;          // out-degree cap; 0 derives it from the profile
  OrientationProfile profile = OrientationProfile::Standard;
  std::uint32_t f_delete_tokens = 2;  // compact engine: tokens per postponed F-delete
  std::uint32_t edge_delete_tokens = 10;  // compact engine: multiple of cap per edge deletion
  bool keep_log = true;
};

/// Shared engine interface. apply() validates the update against the simple
/// graph discipline before touching any state, so a rejected update leaves
/// the engine unchanged.
class Engine {
 public:
  explicit Engine(VertexId n);
  virtual ~Engine() = default;

  VertexId vertex_count() const noexcept { return n_; }
  virtual EngineKind kind() const noexcept = 0;
  virtual std::size_t edge_count() const noexcept = 0;
  virtual bool has_edge(VertexId u, VertexId v) const = 0;
  virtual std::vector<Edge> edges() const = 0;

  UpdateReport apply(const Update& update);

  const MatchState& matching() const noexcept { return match_; }
  const StepCounter& counter() const noexcept { return counter_; }
  void set_keep_log(bool keep) noexcept { counter_.set_keep_log(keep); }

  oracle::Snapshot snapshot() const;

  /// Engine-specific invariant violations; empty when everything holds.
  virtual std::vector<std::string> audit() const;

  virtual std::unique_ptr<Engine> clone() const = 0;

  /// Fault injection for harness tests: drops the matched edge at u without
  /// any repair.
  void debug_unmatch(VertexId u);

 protected:
  Engine(const Engine&) = default;
  Engine& operator=(const Engine&) = default;

  virtual void on_insert(VertexId u, VertexId v) = 0;
  virtual void on_delete(VertexId u, VertexId v) = 0;

  StepCounter& ops() noexcept { return counter_; }

  MatchState match_;

 private:
  VertexId n_;
  StepCounter counter_;
};

std::unique_ptr<Engine> make_engine(VertexId n, EngineKind kind,
                                    const EngineConfig& config = {});

}  // namespace dynmatch

#endif  // DYNMATCH_ENGINE_HPP
