// Copyright 2026 The dynmatch Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DYNMATCH_CORE_HPP
#define DYNMATCH_CORE_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dynmatch {

using VertexId = std::uint32_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

/// Undirected edge key, always stored as (min, max).
struct Edge {
  VertexId u = kNoVertex;
  VertexId v = kNoVertex;

  static constexpr Edge of(VertexId a, VertexId b) noexcept {
    return a < b ? Edge{a, b} : Edge{b, a};
  }

  constexpr bool touches(VertexId x) const noexcept { return u == x || v == x; }
  constexpr VertexId other(VertexId x) const noexcept { return x == u ? v : u; }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

enum class UpdateKind : std::uint8_t { Insert, Delete };

struct Update {
  UpdateKind kind = UpdateKind::Insert;
  VertexId u = 0;
  VertexId v = 0;

  static constexpr Update insert(VertexId a, VertexId b) noexcept {
    return {UpdateKind::Insert, a, b};
  }
  static constexpr Update erase(VertexId a, VertexId b) noexcept {
    return {UpdateKind::Delete, a, b};
  }
};

/// Net change of the matching over one update, plus the charged work.
struct UpdateReport {
  std::vector<Edge> added;
  std::vector<Edge> removed;
  std::uint64_t ops = 0;
};

enum class ErrorCode : int {
  InvalidArgument = 1,
  IllegalUpdate = 2,
  InvariantViolation = 3,
  InstanceTooLarge = 4,
  ContractViolation = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void throw_invariant(const std::string& what);

/// Charged elementary operations. One unit per neighbor-set probe,
/// free-structure probe and orientation flip; heap operations cost
/// their log-weight.
class StepCounter {
 public:
  struct Row {
    std::uint64_t index;
    std::uint64_t ops;
    std::uint64_t m;
  };

  void begin_update() noexcept { current_ = 0; }
  void charge(std::uint64_t k = 1) noexcept { current_ += k; }

  void end_update(std::uint64_t m) {
    total_ += current_;
    if (current_ > max_) max_ = current_;
    if (keep_log_) log_.push_back({updates_, current_, m});
    ++updates_;
  }

  std::uint64_t current() const noexcept { return current_; }
  std::uint64_t total() const noexcept { return total_; }
  std::uint64_t max() const noexcept { return max_; }
  std::uint64_t updates() const noexcept { return updates_; }
  const std::vector<Row>& log() const noexcept { return log_; }
  void set_keep_log(bool keep) noexcept { keep_log_ = keep; }

 private:
  std::uint64_t current_ = 0;
  std::uint64_t total_ = 0;
  std::uint64_t max_ = 0;
  std::uint64_t updates_ = 0;
  bool keep_log_ = true;
  std::vector<Row> log_;
};

/// Integer-exact comparisons against sqrt thresholds.
constexpr bool square_exceeds(std::uint64_t deg, std::uint64_t bound) noexcept {
  return deg * deg > bound;
}

/// Smallest k with k*k >= x.
std::uint64_t ceil_sqrt(std::uint64_t x) noexcept;

}  // namespace dynmatch

#endif  // DYNMATCH_CORE_HPP
