// Copyright 2026 The dynmatch Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <memory>
#include <string>
#include <vector>

#include "dynmatch/dynmatch.h"

namespace {

struct Deleter {
  void operator()(dm_engine* e) const { dm_engine_destroy(e); }
};
using Handle = std::unique_ptr<dm_engine, Deleter>;

Handle create(uint32_t n, dm_engine_kind kind, const dm_config* config = nullptr) {
  dm_engine* raw = nullptr;
  REQUIRE(dm_engine_create(n, kind, config, &raw) == DM_OK);
  return Handle(raw);
}

std::vector<dm_edge> matching_of(const dm_engine* e) {
  std::vector<dm_edge> out(dm_engine_matching_size(e));
  size_t k = 0;
  REQUIRE(dm_engine_matching(e, out.data(), out.size(), &k) == DM_OK);
  REQUIRE(k == out.size());
  return out;
}

bool same(const std::vector<dm_edge>& a, const std::vector<dm_edge>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i].u != b[i].u || a[i].v != b[i].v) return false;
  return true;
}

constexpr dm_engine_kind kKinds[] = {DM_ENGINE_NAIVE, DM_ENGINE_SQRT, DM_ENGINE_ARB,
                                     DM_ENGINE_COMPACT};

}  // namespace

TEST_SUITE("capi") {

TEST_CASE("defaults and kind names") {
  dm_config c;
  dm_config_default(&c);
  CHECK(c.arboricity == 1);
  CHECK(c.delta == 0);
  CHECK(c.profile == DM_PROFILE_STANDARD);
  CHECK(c.f_delete_tokens == 2);
  CHECK(c.edge_delete_tokens == 10);
  CHECK(c.keep_log == 1);
  for (dm_engine_kind k : kKinds) {
    dm_engine_kind parsed;
    REQUIRE(dm_engine_kind_parse(dm_engine_kind_name(k), &parsed) == DM_OK);
    CHECK(parsed == k);
  }
  dm_engine_kind parsed;
  CHECK(dm_engine_kind_parse("blossom", &parsed) == DM_ERR_INVALID_ARGUMENT);
  CHECK(std::string(dm_last_error()).find("blossom") != std::string::npos);
}

TEST_CASE("creation errors") {
  dm_engine* raw = nullptr;
  CHECK(dm_engine_create(0, DM_ENGINE_SQRT, nullptr, &raw) == DM_ERR_INVALID_ARGUMENT);
  CHECK(raw == nullptr);
  CHECK(dm_engine_create(4, static_cast<dm_engine_kind>(9), nullptr, &raw) ==
        DM_ERR_INVALID_ARGUMENT);
  CHECK(dm_engine_create(4, DM_ENGINE_SQRT, nullptr, nullptr) == DM_ERR_INVALID_ARGUMENT);
  CHECK(dm_engine_create(20000, DM_ENGINE_ARB, nullptr, &raw) == DM_ERR_TOO_LARGE);
  dm_config bad;
  dm_config_default(&bad);
  bad.arboricity = 0;
  CHECK(dm_engine_create(4, DM_ENGINE_ARB, &bad, &raw) == DM_ERR_INVALID_ARGUMENT);
  dm_config_default(&bad);
  bad.profile = 7;
  CHECK(dm_engine_create(4, DM_ENGINE_ARB, &bad, &raw) == DM_ERR_INVALID_ARGUMENT);
}

TEST_CASE("updates, reports and deltas") {
  for (dm_engine_kind kind : kKinds) {
    CAPTURE(dm_engine_kind_name(kind));
    auto e = create(4, kind);
    CHECK(dm_engine_kind_of(e.get()) == kind);
    CHECK(dm_engine_vertex_count(e.get()) == 4);
    dm_report r{};
    REQUIRE(dm_engine_insert(e.get(), 1, 0, &r) == DM_OK);
    CHECK(r.added == 1);
    CHECK(r.removed == 0);
    CHECK(r.ops > 0);
    CHECK(dm_engine_has_edge(e.get(), 0, 1) == 1);
    CHECK(dm_engine_mate(e.get(), 0) == 1);
    CHECK(dm_engine_mate(e.get(), 2) == DM_NO_VERTEX);
    dm_edge added[1];
    size_t na = 0, nr = 0;
    REQUIRE(dm_engine_last_delta(e.get(), added, 1, &na, nullptr, 0, &nr) == DM_OK);
    CHECK(na == 1);
    CHECK(nr == 0);
    CHECK(added[0].u == 0);
    CHECK(added[0].v == 1);
    CHECK(dm_engine_last_delta(e.get(), nullptr, 0, &na, nullptr, 0, &nr) ==
          DM_ERR_BUFFER_TOO_SMALL);
    CHECK(na == 1);
    REQUIRE(dm_engine_delete(e.get(), 0, 1, nullptr) == DM_OK);
    CHECK(dm_engine_matching_size(e.get()) == 0);
    CHECK(dm_engine_edge_count(e.get()) == 0);
  }
}

TEST_CASE("illegal updates are rejected and leave the engine unchanged") {
  for (dm_engine_kind kind : kKinds) {
    CAPTURE(dm_engine_kind_name(kind));
    auto e = create(5, kind);
    REQUIRE(dm_engine_insert(e.get(), 0, 1, nullptr) == DM_OK);
    REQUIRE(dm_engine_insert(e.get(), 1, 2, nullptr) == DM_OK);
    const auto before = matching_of(e.get());
    CHECK(dm_engine_insert(e.get(), 1, 0, nullptr) == DM_ERR_ILLEGAL_UPDATE);
    CHECK(dm_engine_insert(e.get(), 3, 3, nullptr) == DM_ERR_ILLEGAL_UPDATE);
    CHECK(dm_engine_insert(e.get(), 3, 5, nullptr) == DM_ERR_ILLEGAL_UPDATE);
    CHECK(dm_engine_delete(e.get(), 2, 3, nullptr) == DM_ERR_ILLEGAL_UPDATE);
    CHECK(std::string(dm_last_error()).size() > 0);
    CHECK(same(matching_of(e.get()), before));
    CHECK(dm_engine_edge_count(e.get()) == 2);
    CHECK(dm_engine_audit(e.get(), nullptr, 0) == DM_OK);
  }
}

TEST_CASE("edge and matching listings are sorted") {
  auto e = create(6, DM_ENGINE_SQRT);
  for (auto [a, b] : {std::pair{4u, 5u}, {2u, 0u}, {3u, 1u}, {0u, 5u}})
    REQUIRE(dm_engine_insert(e.get(), a, b, nullptr) == DM_OK);
  dm_edge buf[4];
  size_t k = 0;
  REQUIRE(dm_engine_edges(e.get(), buf, 4, &k) == DM_OK);
  REQUIRE(k == 4);
  for (size_t i = 0; i + 1 < k; ++i)
    CHECK((buf[i].u < buf[i + 1].u || (buf[i].u == buf[i + 1].u && buf[i].v < buf[i + 1].v)));
  CHECK(dm_engine_edges(e.get(), buf, 2, &k) == DM_ERR_BUFFER_TOO_SMALL);
  CHECK(k == 4);
}

TEST_CASE("stats per engine kind") {
  dm_stats s;
  auto arb = create(100, DM_ENGINE_ARB);
  REQUIRE(dm_engine_stats(arb.get(), &s) == DM_OK);
  CHECK(s.out_degree_cap == 5);

  auto compact = create(10, DM_ENGINE_COMPACT);
  for (uint32_t a = 0; a < 4; ++a) REQUIRE(dm_engine_insert(compact.get(), a, a + 5, nullptr) == DM_OK);
  REQUIRE(dm_engine_delete(compact.get(), 0, 5, nullptr) == DM_OK);
  REQUIRE(dm_engine_stats(compact.get(), &s) == DM_OK);
  CHECK(s.updates == 5);
  CHECK(s.edges == 3);
  CHECK(s.matching_size == 3);
  CHECK(s.stage_c >= 2);
  CHECK(s.tokens_minted > 0);
  CHECK(s.census <= s.census_bound);
  CHECK(s.token_underflows == 0);

  auto sqrt = create(4, DM_ENGINE_SQRT);
  REQUIRE(dm_engine_insert(sqrt.get(), 0, 1, nullptr) == DM_OK);
  REQUIRE(dm_engine_stats(sqrt.get(), &s) == DM_OK);
  CHECK(s.total_ops == s.max_ops);
  CHECK(s.out_degree_cap == 0);
}

TEST_CASE("vertex info") {
  auto e = create(5, DM_ENGINE_COMPACT);
  REQUIRE(dm_engine_insert(e.get(), 0, 1, nullptr) == DM_OK);
  REQUIRE(dm_engine_insert(e.get(), 0, 2, nullptr) == DM_OK);
  dm_vertex_info info;
  REQUIRE(dm_engine_vertex_info(e.get(), 0, &info) == DM_OK);
  CHECK(info.degree == 2);
  CHECK(info.mate == 1);
  CHECK(info.neighbor_list == 2);
  CHECK(dm_engine_vertex_info(e.get(), 5, &info) == DM_ERR_INVALID_ARGUMENT);
  auto naive = create(3, DM_ENGINE_NAIVE);
  REQUIRE(dm_engine_insert(naive.get(), 0, 2, nullptr) == DM_OK);
  REQUIRE(dm_engine_vertex_info(naive.get(), 2, &info) == DM_OK);
  CHECK(info.degree == 1);
  CHECK(info.mate == 0);
}

TEST_CASE("ops log follows keep_log") {
  auto e = create(4, DM_ENGINE_SQRT);
  dm_report r1{}, r2{};
  REQUIRE(dm_engine_insert(e.get(), 0, 1, &r1) == DM_OK);
  REQUIRE(dm_engine_insert(e.get(), 1, 2, &r2) == DM_OK);
  uint64_t log[2];
  size_t k = 0;
  REQUIRE(dm_engine_ops_log(e.get(), log, 2, &k) == DM_OK);
  CHECK(k == 2);
  CHECK(log[0] == r1.ops);
  CHECK(log[1] == r2.ops);

  dm_config quiet;
  dm_config_default(&quiet);
  quiet.keep_log = 0;
  auto q = create(4, DM_ENGINE_SQRT, &quiet);
  REQUIRE(dm_engine_insert(q.get(), 0, 1, nullptr) == DM_OK);
  REQUIRE(dm_engine_ops_log(q.get(), nullptr, 0, &k) == DM_OK);
  CHECK(k == 0);
}

TEST_CASE("clones are independent") {
  auto e = create(4, DM_ENGINE_ARB);
  REQUIRE(dm_engine_insert(e.get(), 0, 1, nullptr) == DM_OK);
  dm_engine* raw = nullptr;
  REQUIRE(dm_engine_clone(e.get(), &raw) == DM_OK);
  Handle copy(raw);
  REQUIRE(dm_engine_insert(copy.get(), 2, 3, nullptr) == DM_OK);
  CHECK(dm_engine_edge_count(e.get()) == 1);
  CHECK(dm_engine_edge_count(copy.get()) == 2);
}

TEST_CASE("oracle checks and fault injection") {
  auto e = create(4, DM_ENGINE_SQRT);
  REQUIRE(dm_engine_insert(e.get(), 0, 1, nullptr) == DM_OK);
  REQUIRE(dm_engine_insert(e.get(), 1, 2, nullptr) == DM_OK);
  int ok = 0;
  REQUIRE(dm_engine_check_maximal(e.get(), &ok) == DM_OK);
  CHECK(ok == 1);
  REQUIRE(dm_engine_check_no_3aug(e.get(), &ok) == DM_OK);
  CHECK(ok == 1);
  size_t best = 0;
  REQUIRE(dm_engine_exact_mcm(e.get(), &best) == DM_OK);
  CHECK(best == 1);

  REQUIRE(dm_engine_debug_unmatch(e.get(), 0) == DM_OK);
  REQUIRE(dm_engine_check_maximal(e.get(), &ok) == DM_OK);
  CHECK(ok == 0);
  char message[256];
  CHECK(dm_engine_audit(e.get(), message, sizeof message) == DM_ERR_INVARIANT);
  CHECK(std::string(message).find("not maximal") != std::string::npos);
  char tiny[4];
  CHECK(dm_engine_audit(e.get(), tiny, sizeof tiny) == DM_ERR_INVARIANT);
  CHECK(std::string(tiny).size() == 3);
}

TEST_CASE("stand-alone oracle") {
  std::vector<dm_edge> petersen;
  for (uint32_t i = 0; i < 5; ++i) {
    petersen.push_back({i, (i + 1) % 5});
    petersen.push_back({i, i + 5});
    petersen.push_back({5 + i, 5 + (i + 2) % 5});
  }
  size_t best = 0;
  REQUIRE(dm_oracle_exact_mcm(10, petersen.data(), petersen.size(), &best) == DM_OK);
  CHECK(best == 5);

  const dm_edge path[] = {{0, 1}, {1, 2}, {2, 3}};
  const dm_edge middle[] = {{2, 1}};
  int maximal = -1, no_3aug = -1;
  REQUIRE(dm_oracle_check(4, path, 3, middle, 1, &maximal, &no_3aug) == DM_OK);
  CHECK(maximal == 1);
  CHECK(no_3aug == 0);
  REQUIRE(dm_oracle_check(4, path, 3, nullptr, 0, &maximal, nullptr) == DM_OK);
  CHECK(maximal == 0);
  const dm_edge off_graph[] = {{0, 2}};
  CHECK(dm_oracle_check(4, path, 3, off_graph, 1, &maximal, &no_3aug) == DM_ERR_INVALID_ARGUMENT);
  const dm_edge out_of_range[] = {{0, 9}};
  CHECK(dm_oracle_exact_mcm(4, out_of_range, 1, &best) == DM_ERR_INVALID_ARGUMENT);
}

TEST_CASE("a broken arboricity promise surfaces as a contract error") {
  auto e = create(20, DM_ENGINE_ARB);
  dm_status last = DM_OK;
  for (uint32_t a = 0; a < 20 && last == DM_OK; ++a)
    for (uint32_t b = a + 1; b < 20 && last == DM_OK; ++b)
      last = dm_engine_insert(e.get(), a, b, nullptr);
  CHECK(last == DM_ERR_CONTRACT);
}

TEST_CASE("null handles") {
  CHECK(dm_engine_insert(nullptr, 0, 1, nullptr) == DM_ERR_INVALID_ARGUMENT);
  CHECK(dm_engine_edge_count(nullptr) == 0);
  CHECK(dm_engine_mate(nullptr, 0) == DM_NO_VERTEX);
  dm_stats s;
  CHECK(dm_engine_stats(nullptr, &s) == DM_ERR_INVALID_ARGUMENT);
  dm_engine_destroy(nullptr);
}

}  // TEST_SUITE
