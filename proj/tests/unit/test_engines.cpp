// Copyright 2026 The dynmatch Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "dynmatch/engine.hpp"
#include "support.hpp"

using namespace dynmatch;

namespace {

EngineConfig wide_config(VertexId n) {
  EngineConfig c;
  c.arboricity = n;  // any graph on n vertices fits
  return c;
}

constexpr EngineKind kAllKinds[] = {EngineKind::Naive, EngineKind::Sqrt, EngineKind::Arboricity,
                                    EngineKind::Compact};

}  // namespace

TEST_SUITE("engines") {

TEST_CASE("every engine stays maximal and passes its own audit on random streams") {
  for (EngineKind kind : kAllKinds) {
    for (VertexId n : {2u, 3u, 5u, 8u, 13u, 24u}) {
      for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        CAPTURE(engine_name(kind));
        CAPTURE(n);
        CAPTURE(seed);
        auto engine = make_engine(n, kind, wide_config(n));
        const auto stream = dmtest::random_stream(n, 120, n * 2, seed * 7919 + n);
        for (std::size_t i = 0; i < stream.size(); ++i) {
          CAPTURE(i);
          engine->apply(stream[i]);
          const auto problems = engine->audit();
          REQUIRE_MESSAGE(problems.empty(), dmtest::join(problems));
        }
      }
    }
  }
}

TEST_CASE("delta report matches the change of the matching") {
  for (EngineKind kind : kAllKinds) {
    CAPTURE(engine_name(kind));
    auto engine = make_engine(10, kind, wide_config(10));
    const auto stream = dmtest::random_stream(10, 200, 20, 42);
    for (const auto& up : stream) {
      const std::set<Edge> before = engine->matching().edges();
      const auto report = engine->apply(up);
      std::set<Edge> expect = before;
      for (const Edge& e : report.removed) REQUIRE(expect.erase(e) == 1);
      for (const Edge& e : report.added) REQUIRE(expect.insert(e).second);
      REQUIRE(expect == engine->matching().edges());
      REQUIRE(report.ops == engine->counter().current());
    }
  }
}

TEST_CASE("illegal updates are rejected and leave the engine untouched") {
  for (EngineKind kind : kAllKinds) {
    CAPTURE(engine_name(kind));
    auto engine = make_engine(6, kind, wide_config(6));
    engine->apply(Update::insert(0, 1));
    engine->apply(Update::insert(1, 2));
    const auto edges = engine->edges();
    const auto matching = engine->matching().edges();
    const auto updates = engine->counter().updates();
    for (const Update& bad : {Update::insert(0, 1), Update::insert(1, 0), Update::erase(3, 4),
                              Update::insert(2, 2), Update::insert(0, 6), Update::erase(9, 1)}) {
      try {
        engine->apply(bad);
        FAIL("accepted an illegal update");
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::IllegalUpdate);
      }
      CHECK(engine->edges() == edges);
      CHECK(engine->matching().edges() == matching);
      CHECK(engine->counter().updates() == updates);
      CHECK(engine->audit().empty());
    }
  }
}

TEST_CASE("engines reject an empty vertex set") {
  for (EngineKind kind : kAllKinds) CHECK_THROWS_AS(make_engine(0, kind), Error);
}

TEST_CASE("replaying a stream is deterministic") {
  for (EngineKind kind : kAllKinds) {
    CAPTURE(engine_name(kind));
    const auto stream = dmtest::random_stream(20, 400, 60, 7);
    auto a = make_engine(20, kind, wide_config(20));
    auto b = make_engine(20, kind, wide_config(20));
    for (const auto& up : stream) {
      const auto ra = a->apply(up);
      const auto rb = b->apply(up);
      REQUIRE(ra.added == rb.added);
      REQUIRE(ra.removed == rb.removed);
      REQUIRE(ra.ops == rb.ops);
    }
    CHECK(a->matching().edges() == b->matching().edges());
  }
}

TEST_CASE("clones evolve independently and identically") {
  for (EngineKind kind : kAllKinds) {
    CAPTURE(engine_name(kind));
    const auto stream = dmtest::random_stream(12, 200, 30, 99);
    auto engine = make_engine(12, kind, wide_config(12));
    for (std::size_t i = 0; i < 100; ++i) engine->apply(stream[i]);
    auto copy = engine->clone();
    for (std::size_t i = 100; i < stream.size(); ++i) {
      REQUIRE(engine->apply(stream[i]).added == copy->apply(stream[i]).added);
      REQUIRE(copy->audit().empty());
    }
  }
}

TEST_CASE("a forced unmatch is caught by the audit") {
  for (EngineKind kind : kAllKinds) {
    CAPTURE(engine_name(kind));
    auto engine = make_engine(4, kind, wide_config(4));
    engine->apply(Update::insert(0, 1));
    REQUIRE(engine->audit().empty());
    engine->debug_unmatch(0);
    CHECK_FALSE(engine->audit().empty());
  }
}

TEST_CASE("engine names") {
  CHECK(engine_name(EngineKind::Naive) == "naive");
  CHECK(engine_name(EngineKind::Sqrt) == "sqrt");
  CHECK(engine_name(EngineKind::Arboricity) == "arb");
  CHECK(engine_name(EngineKind::Compact) == "compact");
}

}
