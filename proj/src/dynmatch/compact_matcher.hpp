// Copyright 2026 The dynmatch Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DYNMATCH_COMPACT_MATCHER_HPP
#define DYNMATCH_COMPACT_MATCHER_HPP

#include <cstdint>
#include <vector>

#include "dynmatch/engine.hpp"
#include "dynmatch/lazy_list.hpp"
#include "dynmatch/orientation.hpp"

namespace dynmatch {

/// Boolean array over [0, n) with O(1) reset, storing a 2-bit tag per
/// member. A cell belongs to the current generation iff its stamp's high
/// bits equal the epoch.
class SmartArray {
 public:
  explicit SmartArray(VertexId n) : stamp_(n, 0) {}

  void reset() noexcept { ++epoch_; }
  void set(VertexId v, std::uint8_t tag) noexcept { stamp_[v] = (epoch_ << 2) | tag; }
  void erase(VertexId v) noexcept { stamp_[v] = 0; }
  /// 0 when v is not a member.
  std::uint8_t tag(VertexId v) const noexcept {
    return (stamp_[v] >> 2) == epoch_ ? static_cast<std::uint8_t>(stamp_[v] & 3) : 0;
  }
  bool contains(VertexId v) const noexcept { return tag(v) != 0; }
  std::uint64_t epoch() const noexcept { return epoch_; }

 private:
  std::vector<std::uint64_t> stamp_;
  std::uint64_t epoch_ = 1;
};

/// Token balances per lazy list. Spending more than a list holds is
/// recorded as an underflow rather than thrown, so a run can finish and
/// report it.
struct TokenLedger {
  std::vector<std::int64_t> n_balance;
  std::vector<std::int64_t> f_balance;
  std::uint64_t minted = 0;
  std::uint64_t spent = 0;
  std::uint64_t underflows = 0;

  explicit TokenLedger(VertexId n) : n_balance(n, 0), f_balance(n, 0) {}

  void mint(std::int64_t& balance, std::uint64_t k) {
    balance += static_cast<std::int64_t>(k);
    minted += k;
  }
  void spend(std::int64_t& balance, std::uint64_t k) {
    balance -= static_cast<std::int64_t>(k);
    spent += k;
    if (balance < 0) ++underflows;
  }
};

struct CompactStats {
  std::uint64_t authentications = 0;
  std::uint64_t prunes = 0;
  std::uint64_t extractions = 0;
  std::uint64_t resets = 0;
  std::uint64_t reset_ops = 0;
  /// Walks whose unfunded cost exceeded their stated bound.
  std::uint64_t walk_overruns = 0;
  std::uint64_t max_census = 0;
};

/// The arboricity engine in O(n + m) space for arbitrary graphs. N(u) and
/// F(u) are lazy lists that may hold stale entries; deletions from them are
/// postponed and paid later by tokens. D(u) comes from the orientation and
/// is always exact. The arboricity bound is re-set to 2*ceil(sqrt(m)) at
/// the start of each stage; a stage ends when m doubles or halves.
class CompactEngine final : public Engine {
 public:
  /// Per-vertex cells: deg, mate, N head and length, F head and length,
  /// smart-array stamp, two token balances, D header, active flag.
  static constexpr std::uint64_t kFixedCellsPerVertex = 11;
  /// Census bound: fixed cells + |N| < 2max(deg,1) + |F| < 3max(deg,1)
  /// + D entries (m) + M entries (<= n/2) <= 17 (n + m).
  static constexpr std::uint64_t kCensusConstant = kFixedCellsPerVertex + 6;

  static constexpr std::uint8_t kTagD = 1;
  static constexpr std::uint8_t kTagN = 2;
  static constexpr std::uint8_t kTagSeen = 3;

  CompactEngine(VertexId n, const EngineConfig& config);

  EngineKind kind() const noexcept override { return EngineKind::Compact; }
  std::size_t edge_count() const noexcept override { return orient_.edge_count(); }
  bool has_edge(VertexId u, VertexId v) const override { return orient_.has_edge(u, v); }
  std::vector<Edge> edges() const override;
  std::vector<std::string> audit() const override;
  std::unique_ptr<Engine> clone() const override { return std::make_unique<CompactEngine>(*this); }

  const Orientation& orientation() const noexcept { return orient_; }
  std::uint32_t degree(VertexId u) const noexcept { return deg_[u]; }
  std::vector<VertexId> neighbor_list(VertexId u) const { return pool_.to_vector(nlist_[u]); }
  std::vector<VertexId> free_list(VertexId u) const { return pool_.to_vector(flist_[u]); }
  std::uint32_t neighbor_list_length(VertexId u) const noexcept { return nlist_[u].length; }
  std::uint32_t free_list_length(VertexId u) const noexcept { return flist_[u].length; }

  std::uint32_t stage_c() const noexcept { return orient_.params().arboricity; }
  std::uint32_t stage_cap() const noexcept { return orient_.cap(); }
  std::uint64_t stage_start_m() const noexcept { return m0_; }

  const TokenLedger& ledger() const noexcept { return ledger_; }
  const CompactStats& stats() const noexcept { return stats_; }
  std::size_t pool_capacity() const noexcept { return pool_.capacity(); }

  /// Live cells: fixed arrays + lazy list entries + D entries + M entries.
  std::uint64_t census() const noexcept;
  std::uint64_t census_bound() const noexcept {
    return kCensusConstant * (vertex_count() + edge_count() + 1);
  }

  /// The lazy-list mechanisms, public so tests can drive them directly.
  void authenticate_neighbors(VertexId u);
  VertexId extract_authentic_free(VertexId u);
  void prune_free(VertexId u);

 protected:
  void on_insert(VertexId u, VertexId v) override;
  void on_delete(VertexId u, VertexId v) override;

 private:
  std::uint32_t floor_deg(VertexId u) const noexcept { return deg_[u] == 0 ? 1 : deg_[u]; }

  void touch(VertexId u);
  void push_neighbor(VertexId u, VertexId w);
  void push_free(VertexId u, VertexId w);
  void postpone_free_delete(VertexId u);
  void check_neighbors(VertexId u);
  void check_free(VertexId u);

  void apply_flips(const std::vector<FlipEvent>& events);
  /// Matches x and w; previously free endpoints leave the F lists they are
  /// listed in (postponed).
  void match(VertexId x, VertexId w, bool x_was_free, bool w_was_free);
  void rematch(VertexId w);
  void maybe_end_stage();
  void rebuild();

  std::vector<std::uint32_t> deg_;
  Orientation orient_;
  NodePool pool_;
  std::vector<NodePool::List> nlist_;
  std::vector<NodePool::List> flist_;
  SmartArray smart_;
  TokenLedger ledger_;
  std::vector<VertexId> active_;
  std::vector<std::uint8_t> is_active_;
  std::uint64_t m0_ = 0;
  std::uint32_t f_delete_tokens_;
  std::uint32_t edge_delete_tokens_;
  CompactStats stats_;
};

}  // namespace dynmatch

#endif  // DYNMATCH_COMPACT_MATCHER_HPP
