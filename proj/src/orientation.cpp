// Copyright 2026 The dynmatch Authors
// SPDX-License-Identifier: Apache-2.0

#include "dynmatch/orientation.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>

namespace dynmatch {

OrientationParams OrientationParams::standard(std::uint32_t c) {
  if (c == 0) throw Error(ErrorCode::InvalidArgument, "arboricity bound must be positive");
  return {c, 2 * c, 5 * c};
}

OrientationParams OrientationParams::log_over_loglog(std::uint32_t c, std::uint32_t n) {
  if (c == 0) throw Error(ErrorCode::InvalidArgument, "arboricity bound must be positive");
  const double log_n = std::log2(std::max<double>(n, 2));
  const double ratio = log_n / c;
  std::uint32_t extra = 0;
  if (ratio > 2.0) extra = static_cast<std::uint32_t>(std::ceil(log_n / std::log2(ratio)));
  return {c, 2 * c, 6 * c + extra};
}

Orientation::Orientation(VertexId n, OrientationParams params) : out_(n), params_(params) {
  if (params.cap < 2 * params.threshold || params.threshold <= params.arboricity)
    throw Error(ErrorCode::InvalidArgument, "orientation needs cap >= 2*threshold > 2*arboricity");
}

std::vector<FlipEvent> Orientation::insert(VertexId u, VertexId v, StepCounter& ops) {
  std::vector<FlipEvent> events;
  const bool u_tail = out_[u].size() != out_[v].size() ? out_[u].size() < out_[v].size() : u < v;
  const VertexId tail = u_tail ? u : v;
  const VertexId head = u_tail ? v : u;
  out_[tail].push_back(head);
  ++m_;
  ops.charge();
  events.push_back({tail, head, true});

  last_flips_ = 0;
  const std::uint64_t guard = 10 * (static_cast<std::uint64_t>(out_.size()) + m_);
  std::deque<VertexId> overflow;
  if (out_[tail].size() > params_.cap) overflow.push_back(tail);
  while (!overflow.empty()) {
    const VertexId x = overflow.front();
    overflow.pop_front();
    if (out_[x].size() <= params_.cap) continue;
    std::vector<VertexId> heads;
    heads.swap(out_[x]);
    for (VertexId y : heads) {
      out_[y].push_back(x);
      ops.charge();
      ++last_flips_;
      events.push_back({y, x, false});
      if (out_[y].size() == params_.cap + 1) overflow.push_back(y);
    }
    if (last_flips_ > guard) {
      flips_ += last_flips_;
      throw Error(ErrorCode::ContractViolation,
                  "orientation cascade exceeded 10(n+m) flips; arboricity bound violated");
    }
  }
  flips_ += last_flips_;
  return events;
}

VertexId Orientation::erase(VertexId u, VertexId v, StepCounter& ops) {
  for (auto [tail, head] : {std::pair{u, v}, std::pair{v, u}}) {
    auto& list = out_[tail];
    for (std::size_t i = 0; i < list.size(); ++i) {
      ops.charge();
      if (list[i] != head) continue;
      list[i] = list.back();
      list.pop_back();
      --m_;
      return tail;
    }
  }
  throw Error(ErrorCode::IllegalUpdate, "orientation: erase of absent edge");
}

VertexId Orientation::tail_of(VertexId u, VertexId v) const noexcept {
  if (std::find(out_[u].begin(), out_[u].end(), v) != out_[u].end()) return u;
  if (std::find(out_[v].begin(), out_[v].end(), u) != out_[v].end()) return v;
  return kNoVertex;
}

bool Orientation::points_to(VertexId source, VertexId target, StepCounter& ops) const {
  for (VertexId y : out_[source]) {
    ops.charge();
    if (y == target) return true;
  }
  return false;
}

std::uint32_t Orientation::max_out_degree() const noexcept {
  std::size_t best = 0;
  for (const auto& list : out_) best = std::max(best, list.size());
  return static_cast<std::uint32_t>(best);
}

void Orientation::clear(std::span<const VertexId> tails, OrientationParams params) {
  if (params.cap < 2 * params.threshold || params.threshold <= params.arboricity)
    throw Error(ErrorCode::InvalidArgument, "orientation needs cap >= 2*threshold > 2*arboricity");
  for (VertexId t : tails) {
    m_ -= out_[t].size();
    std::vector<VertexId>().swap(out_[t]);
  }
  params_ = params;
}

std::string Orientation::audit() const {
  std::size_t total = 0;
  for (VertexId u = 0; u < out_.size(); ++u) {
    const auto& list = out_[u];
    total += list.size();
    std::ostringstream os;
    if (list.size() > params_.cap) {
      os << "out-degree of " << u << " is " << list.size() << " > cap " << params_.cap;
      return os.str();
    }
    for (VertexId v : list) {
      if (v == u || std::count(list.begin(), list.end(), v) != 1 ||
          std::find(out_[v].begin(), out_[v].end(), u) != out_[v].end()) {
        os << "edge {" << u << "," << v << "} is not oriented exactly once";
        return os.str();
      }
    }
  }
  if (total != m_) return "orientation edge counter disagrees with out-lists";
  return {};
}

}  // namespace dynmatch
