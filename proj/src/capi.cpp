// Copyright 2026 The dynmatch Authors
// SPDX-License-Identifier: Apache-2.0

#include "dynmatch/dynmatch.h"

#include <algorithm>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>

#include "dynmatch/arb_matcher.hpp"
#include "dynmatch/compact_matcher.hpp"
#include "dynmatch/engine.hpp"
#include "dynmatch/sqrt_matcher.hpp"

struct dm_engine {
  std::unique_ptr<dynmatch::Engine> impl;
  dynmatch::UpdateReport last;
};

namespace {

using dynmatch::Edge;
using dynmatch::Error;
using dynmatch::ErrorCode;

thread_local std::string g_last_error;

dm_status fail(dm_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

dm_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return DM_ERR_INVALID_ARGUMENT;
    case ErrorCode::IllegalUpdate: return DM_ERR_ILLEGAL_UPDATE;
    case ErrorCode::InvariantViolation: return DM_ERR_INVARIANT;
    case ErrorCode::InstanceTooLarge: return DM_ERR_TOO_LARGE;
    case ErrorCode::ContractViolation: return DM_ERR_CONTRACT;
  }
  return DM_ERR_INTERNAL;
}

template <typename F>
dm_status guarded(F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(DM_ERR_TOO_LARGE, "out of memory");
  } catch (const std::exception& e) {
    return fail(DM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(DM_ERR_INTERNAL, "unknown exception");
  }
}

dynmatch::EngineConfig to_config(const dm_config* c) {
  dynmatch::EngineConfig out;
  if (!c) return out;
  out.arboricity = c->arboricity;
  out.delta = c->delta;
  if (c->profile != DM_PROFILE_STANDARD && c->profile != DM_PROFILE_LOG_OVER_LOGLOG)
    throw Error(ErrorCode::InvalidArgument, "unknown orientation profile");
  out.profile = static_cast<dynmatch::OrientationProfile>(c->profile);
  out.f_delete_tokens = c->f_delete_tokens;
  out.edge_delete_tokens = c->edge_delete_tokens;
  out.keep_log = c->keep_log != 0;
  return out;
}

dm_status copy_edges(const std::vector<Edge>& edges, dm_edge* buffer, size_t capacity,
                     size_t* count) {
  if (count) *count = edges.size();
  if (edges.size() > capacity || (!buffer && !edges.empty()))
    return fail(DM_ERR_BUFFER_TOO_SMALL, "edge buffer too small");
  for (size_t i = 0; i < edges.size(); ++i) buffer[i] = {edges[i].u, edges[i].v};
  return DM_OK;
}

dynmatch::oracle::Snapshot make_snapshot(uint32_t n, const dm_edge* edges, size_t m,
                                         const dm_edge* matching, size_t k) {
  if ((m && !edges) || (k && !matching)) throw Error(ErrorCode::InvalidArgument, "null edge array");
  dynmatch::oracle::Snapshot s;
  s.n = n;
  for (size_t i = 0; i < m; ++i) s.edges.push_back(Edge::of(edges[i].u, edges[i].v));
  for (size_t i = 0; i < k; ++i) s.matching.push_back(Edge::of(matching[i].u, matching[i].v));
  std::sort(s.edges.begin(), s.edges.end());
  std::sort(s.matching.begin(), s.matching.end());
  s.status.assign(n, dynmatch::oracle::Status::Free);
  for (const Edge& e : s.matching) {
    if (e.u >= n || e.v >= n) throw Error(ErrorCode::InvalidArgument, "matching vertex out of range");
    s.status[e.u] = s.status[e.v] = dynmatch::oracle::Status::Matched;
  }
  dynmatch::oracle::validate(s);
  return s;
}

dm_status apply(dm_engine* engine, dynmatch::Update update, dm_report* report) {
  if (!engine) return fail(DM_ERR_INVALID_ARGUMENT, "null engine");
  return guarded([&] {
    engine->last = engine->impl->apply(update);
    if (report) {
      report->ops = engine->last.ops;
      report->added = static_cast<uint32_t>(engine->last.added.size());
      report->removed = static_cast<uint32_t>(engine->last.removed.size());
    }
    return DM_OK;
  });
}

}  // namespace

extern "C" {

void dm_config_default(dm_config* config) {
  if (!config) return;
  const dynmatch::EngineConfig d;
  config->arboricity = d.arboricity;
  config->delta = d.delta;
  config->profile = static_cast<int32_t>(d.profile);
  config->f_delete_tokens = d.f_delete_tokens;
  config->edge_delete_tokens = d.edge_delete_tokens;
  config->keep_log = d.keep_log ? 1 : 0;
}

const char* dm_engine_kind_name(dm_engine_kind kind) {
  switch (kind) {
    case DM_ENGINE_NAIVE: return "naive";
    case DM_ENGINE_SQRT: return "sqrt";
    case DM_ENGINE_ARB: return "arb";
    case DM_ENGINE_COMPACT: return "compact";
  }
  return "unknown";
}

dm_status dm_engine_kind_parse(const char* name, dm_engine_kind* kind) {
  if (!name || !kind) return fail(DM_ERR_INVALID_ARGUMENT, "null argument");
  for (dm_engine_kind k : {DM_ENGINE_NAIVE, DM_ENGINE_SQRT, DM_ENGINE_ARB, DM_ENGINE_COMPACT}) {
    if (std::strcmp(name, dm_engine_kind_name(k)) == 0) {
      *kind = k;
      return DM_OK;
    }
  }
  return fail(DM_ERR_INVALID_ARGUMENT, std::string("unknown engine '") + name + "'");
}

dm_status dm_engine_create(uint32_t n, dm_engine_kind kind, const dm_config* config,
                           dm_engine** out) {
  if (!out) return fail(DM_ERR_INVALID_ARGUMENT, "null output handle");
  *out = nullptr;
  if (kind < DM_ENGINE_NAIVE || kind > DM_ENGINE_COMPACT)
    return fail(DM_ERR_INVALID_ARGUMENT, "unknown engine kind");
  return guarded([&] {
    const auto cfg = to_config(config);
    auto engine = std::make_unique<dm_engine>();
    engine->impl = dynmatch::make_engine(n, static_cast<dynmatch::EngineKind>(kind), cfg);
    *out = engine.release();
    return DM_OK;
  });
}

void dm_engine_destroy(dm_engine* engine) { delete engine; }

dm_status dm_engine_clone(const dm_engine* engine, dm_engine** out) {
  if (!engine || !out) return fail(DM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto copy = std::make_unique<dm_engine>();
    copy->impl = engine->impl->clone();
    copy->last = engine->last;
    *out = copy.release();
    return DM_OK;
  });
}

dm_status dm_engine_insert(dm_engine* engine, uint32_t u, uint32_t v, dm_report* report) {
  return apply(engine, dynmatch::Update::insert(u, v), report);
}

dm_status dm_engine_delete(dm_engine* engine, uint32_t u, uint32_t v, dm_report* report) {
  return apply(engine, dynmatch::Update::erase(u, v), report);
}

dm_status dm_engine_last_delta(const dm_engine* engine, dm_edge* added, size_t added_cap,
                               size_t* added_count, dm_edge* removed, size_t removed_cap,
                               size_t* removed_count) {
  if (!engine) return fail(DM_ERR_INVALID_ARGUMENT, "null engine");
  const dm_status a = copy_edges(engine->last.added, added, added_cap, added_count);
  const dm_status r = copy_edges(engine->last.removed, removed, removed_cap, removed_count);
  return a != DM_OK ? a : r;
}

uint32_t dm_engine_vertex_count(const dm_engine* engine) {
  return engine ? engine->impl->vertex_count() : 0;
}

dm_engine_kind dm_engine_kind_of(const dm_engine* engine) {
  return engine ? static_cast<dm_engine_kind>(engine->impl->kind()) : DM_ENGINE_NAIVE;
}

size_t dm_engine_edge_count(const dm_engine* engine) {
  return engine ? engine->impl->edge_count() : 0;
}

size_t dm_engine_matching_size(const dm_engine* engine) {
  return engine ? engine->impl->matching().size() : 0;
}

int dm_engine_has_edge(const dm_engine* engine, uint32_t u, uint32_t v) {
  if (!engine) return 0;
  const uint32_t n = engine->impl->vertex_count();
  if (u >= n || v >= n || u == v) return 0;
  return engine->impl->has_edge(u, v) ? 1 : 0;
}

uint32_t dm_engine_mate(const dm_engine* engine, uint32_t v) {
  if (!engine || v >= engine->impl->vertex_count()) return DM_NO_VERTEX;
  return engine->impl->matching().mate(v);
}

dm_status dm_engine_edges(const dm_engine* engine, dm_edge* buffer, size_t capacity,
                          size_t* count) {
  if (!engine) return fail(DM_ERR_INVALID_ARGUMENT, "null engine");
  return guarded([&] {
    auto edges = engine->impl->edges();
    std::sort(edges.begin(), edges.end());
    return copy_edges(edges, buffer, capacity, count);
  });
}

dm_status dm_engine_matching(const dm_engine* engine, dm_edge* buffer, size_t capacity,
                             size_t* count) {
  if (!engine) return fail(DM_ERR_INVALID_ARGUMENT, "null engine");
  return guarded([&] {
    const auto& set = engine->impl->matching().edges();
    return copy_edges(std::vector<Edge>(set.begin(), set.end()), buffer, capacity, count);
  });
}

dm_status dm_engine_stats(const dm_engine* engine, dm_stats* stats) {
  if (!engine || !stats) return fail(DM_ERR_INVALID_ARGUMENT, "null argument");
  *stats = dm_stats{};
  const auto& e = *engine->impl;
  stats->updates = e.counter().updates();
  stats->total_ops = e.counter().total();
  stats->max_ops = e.counter().max();
  stats->edges = e.edge_count();
  stats->matching_size = e.matching().size();
  if (const auto* s = dynamic_cast<const dynmatch::SqrtEngine*>(&e)) {
    stats->surrogates = s->surrogates_found();
    stats->corrections = s->corrections();
  }
  if (const auto* a = dynamic_cast<const dynmatch::ArbEngine*>(&e)) {
    stats->out_degree_cap = a->orientation().cap();
    stats->max_out_degree = a->orientation().max_out_degree();
    stats->flips = a->orientation().total_flips();
  }
  if (const auto* c = dynamic_cast<const dynmatch::CompactEngine*>(&e)) {
    stats->out_degree_cap = c->orientation().cap();
    stats->max_out_degree = c->orientation().max_out_degree();
    stats->flips = c->orientation().total_flips();
    stats->tokens_minted = c->ledger().minted;
    stats->tokens_spent = c->ledger().spent;
    stats->token_underflows = c->ledger().underflows;
    stats->walk_overruns = c->stats().walk_overruns;
    stats->census = c->census();
    stats->census_bound = c->census_bound();
    stats->max_census = c->stats().max_census;
    stats->stage_resets = c->stats().resets;
    stats->stage_c = c->stage_c();
  }
  return DM_OK;
}

dm_status dm_engine_vertex_info(const dm_engine* engine, uint32_t v, dm_vertex_info* info) {
  if (!engine || !info) return fail(DM_ERR_INVALID_ARGUMENT, "null argument");
  const auto& e = *engine->impl;
  if (v >= e.vertex_count()) return fail(DM_ERR_INVALID_ARGUMENT, "vertex out of range");
  *info = dm_vertex_info{};
  info->mate = e.matching().mate(v);
  if (const auto* s = dynamic_cast<const dynmatch::SqrtEngine*>(&e)) {
    info->degree = s->graph().degree(v);
  } else if (const auto* a = dynamic_cast<const dynmatch::ArbEngine*>(&e)) {
    info->degree = a->degree(v);
    info->out_degree = a->orientation().out_degree(v);
  } else if (const auto* c = dynamic_cast<const dynmatch::CompactEngine*>(&e)) {
    info->degree = c->degree(v);
    info->out_degree = c->orientation().out_degree(v);
    info->neighbor_list = c->neighbor_list_length(v);
    info->free_list = c->free_list_length(v);
  } else {
    for (const Edge& edge : e.edges()) info->degree += edge.touches(v) ? 1 : 0;
  }
  return DM_OK;
}

dm_status dm_engine_ops_log(const dm_engine* engine, uint64_t* buffer, size_t capacity,
                            size_t* count) {
  if (!engine) return fail(DM_ERR_INVALID_ARGUMENT, "null engine");
  const auto& log = engine->impl->counter().log();
  if (count) *count = log.size();
  if (log.size() > capacity || (!buffer && !log.empty()))
    return fail(DM_ERR_BUFFER_TOO_SMALL, "ops buffer too small");
  for (size_t i = 0; i < log.size(); ++i) buffer[i] = log[i].ops;
  return DM_OK;
}

dm_status dm_engine_audit(const dm_engine* engine, char* message, size_t capacity) {
  if (!engine) return fail(DM_ERR_INVALID_ARGUMENT, "null engine");
  return guarded([&] {
    const auto problems = engine->impl->audit();
    std::string text;
    for (const auto& p : problems) text += p + "\n";
    if (message && capacity > 0) {
      const size_t k = std::min(capacity - 1, text.size());
      std::memcpy(message, text.data(), k);
      message[k] = '\0';
    }
    if (problems.empty()) return DM_OK;
    return fail(DM_ERR_INVARIANT, problems.front());
  });
}

dm_status dm_engine_check_maximal(const dm_engine* engine, int* ok) {
  if (!engine || !ok) return fail(DM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *ok = dynmatch::oracle::check_maximal(engine->impl->snapshot()) ? 1 : 0;
    return DM_OK;
  });
}

dm_status dm_engine_check_no_3aug(const dm_engine* engine, int* ok) {
  if (!engine || !ok) return fail(DM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *ok = dynmatch::oracle::check_no_3_aug_path(engine->impl->snapshot()) ? 1 : 0;
    return DM_OK;
  });
}

dm_status dm_engine_exact_mcm(const dm_engine* engine, size_t* size) {
  if (!engine || !size) return fail(DM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *size = dynmatch::oracle::exact_mcm(engine->impl->snapshot());
    return DM_OK;
  });
}

dm_status dm_engine_debug_unmatch(dm_engine* engine, uint32_t u) {
  if (!engine) return fail(DM_ERR_INVALID_ARGUMENT, "null engine");
  return guarded([&] {
    engine->impl->debug_unmatch(u);
    return DM_OK;
  });
}

dm_status dm_oracle_exact_mcm(uint32_t n, const dm_edge* edges, size_t m, size_t* size) {
  if (!size) return fail(DM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *size = dynmatch::oracle::exact_mcm(make_snapshot(n, edges, m, nullptr, 0));
    return DM_OK;
  });
}

dm_status dm_oracle_check(uint32_t n, const dm_edge* edges, size_t m, const dm_edge* matching,
                          size_t k, int* maximal, int* no_3aug) {
  return guarded([&] {
    const auto s = make_snapshot(n, edges, m, matching, k);
    if (maximal) *maximal = dynmatch::oracle::check_maximal(s) ? 1 : 0;
    if (no_3aug) *no_3aug = dynmatch::oracle::check_no_3_aug_path(s) ? 1 : 0;
    return DM_OK;
  });
}

const char* dm_last_error(void) { return g_last_error.c_str(); }

}  // extern "C"
