// Copyright 2026 The dynmatch Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "dynmatch/arb_matcher.hpp"
#include "dynmatch/engine.hpp"
#include "dynmatch/graph.hpp"
#include "dynmatch/oracle.hpp"
#include "support.hpp"

using namespace dynmatch;

namespace {

std::set<Edge> edges_of(std::initializer_list<Edge> list) {
  std::set<Edge> out;
  for (const Edge& e : list) out.insert(Edge::of(e.u, e.v));
  return out;
}

constexpr EngineKind kAllKinds[] = {EngineKind::Naive, EngineKind::Sqrt, EngineKind::Arboricity,
                                    EngineKind::Compact};

}  // namespace

TEST_SUITE("graph-core") {

TEST_CASE("fresh engines are empty") {
  auto one = make_engine(1, EngineKind::Naive);
  CHECK(one->edge_count() == 0);
  CHECK(one->matching().size() == 0);
  auto eight = make_engine(8, EngineKind::Sqrt);
  CHECK(eight->matching().edges().empty());
  const auto s = eight->snapshot();
  CHECK(s.edges.empty());
  CHECK(std::all_of(s.status.begin(), s.status.end(),
                    [](oracle::Status x) { return x == oracle::Status::Free; }));
}

TEST_CASE("arboricity engine with c = 1 caps out-degree at 5") {
  auto engine = make_engine(100, EngineKind::Arboricity);
  auto* arb = dynamic_cast<ArbEngine*>(engine.get());
  REQUIRE(arb);
  CHECK(arb->orientation().cap() == 5);
}

TEST_CASE("basic inserts and deletes on every engine") {
  for (EngineKind kind : kAllKinds) {
    CAPTURE(engine_name(kind));
    auto e = make_engine(4, kind);
    e->apply(Update::insert(0, 1));
    CHECK(e->matching().edges() == edges_of({{0, 1}}));
    const auto s = e->snapshot();
    CHECK(s.edges == std::vector<Edge>{{0, 1}});
    CHECK(s.status[0] == oracle::Status::Matched);
    CHECK(s.status[1] == oracle::Status::Matched);
    e->apply(Update::erase(0, 1));
    CHECK(e->matching().size() == 0);
  }
}

TEST_CASE("path 0-1-2-3 built in order (0,1),(2,3),(1,2)") {
  for (EngineKind kind : kAllKinds) {
    CAPTURE(engine_name(kind));
    auto e = make_engine(4, kind);
    e->apply(Update::insert(0, 1));
    e->apply(Update::insert(2, 3));
    const auto before = e->matching().edges();
    const auto report = e->apply(Update::insert(1, 2));
    CHECK(report.added.empty());
    CHECK(report.removed.empty());
    CHECK(e->matching().edges() == before);
    CHECK(e->matching().edges() == edges_of({{0, 1}, {2, 3}}));
    CHECK(oracle::check_no_3_aug_path(e->snapshot()));
  }
}

TEST_CASE("naive engine rematches a star center with the first free leaf") {
  auto e = make_engine(6, EngineKind::Naive);
  for (VertexId k = 1; k <= 5; ++k) e->apply(Update::insert(0, k));
  CHECK(e->matching().edges() == edges_of({{0, 1}}));
  e->apply(Update::erase(0, 1));
  CHECK(e->matching().edges() == edges_of({{0, 2}}));
}

TEST_CASE("inserting next to matched vertices keeps the matching") {
  for (EngineKind kind : kAllKinds) {
    CAPTURE(engine_name(kind));
    auto e = make_engine(5, kind);
    e->apply(Update::insert(0, 1));
    e->apply(Update::insert(2, 3));
    e->apply(Update::insert(1, 2));  // both matched
    e->apply(Update::insert(3, 4));  // 4 free, 3 matched
    CHECK(e->matching().edges() == edges_of({{0, 1}, {2, 3}}));
    CHECK(oracle::check_maximal(e->snapshot()));
  }
}

TEST_CASE("snapshot edge count equals m after 1000 random updates") {
  for (EngineKind kind : kAllKinds) {
    CAPTURE(engine_name(kind));
    EngineConfig config;
    config.arboricity = 20;
    auto e = make_engine(20, kind, config);
    for (const auto& up : dmtest::random_stream(20, 1000, 60, 9)) e->apply(up);
    const auto s = e->snapshot();
    CHECK(s.edges.size() == e->edge_count());
    CHECK(s.edges == e->edges());
  }
}

TEST_CASE("DynamicGraph counters and rejections") {
  DynamicGraph g(5);
  g.insert(0, 1);
  g.insert(3, 1);
  CHECK(g.edge_count() == 2);
  CHECK(g.degree(1) == 2);
  CHECK(g.has_edge(1, 3));
  CHECK(g.neighbors(1) == std::set<VertexId>{0, 3});
  CHECK_THROWS_AS(g.insert(1, 0), Error);
  CHECK_THROWS_AS(g.erase(2, 4), Error);
  g.erase(1, 0);
  CHECK(g.edges() == std::vector<Edge>{{1, 3}});
  CHECK(g.audit().empty());
}

TEST_CASE("MatchState keeps mates symmetric") {
  MatchState m(4);
  m.match(0, 2);
  CHECK(m.mate(0) == 2);
  CHECK(m.mate(2) == 0);
  CHECK(m.contains(Edge{0, 2}));
  CHECK(m.is_free(1));
  m.unmatch(2, 0);
  CHECK(m.is_free(0));
  CHECK(m.size() == 0);
  CHECK(m.audit().empty());
}

TEST_CASE("step counter is reset per update and logged") {
  auto e = make_engine(6, EngineKind::Sqrt);
  e->apply(Update::insert(0, 1));
  const auto first = e->counter().current();
  e->apply(Update::insert(2, 3));
  CHECK(e->counter().updates() == 2);
  REQUIRE(e->counter().log().size() == 2);
  CHECK(e->counter().log()[0].ops == first);
  CHECK(e->counter().total() == first + e->counter().current());
  EngineConfig quiet;
  quiet.keep_log = false;
  auto q = make_engine(6, EngineKind::Sqrt, quiet);
  q->apply(Update::insert(0, 1));
  CHECK(q->counter().log().empty());
  CHECK(q->counter().updates() == 1);
}

}  // TEST_SUITE
