/* Copyright 2026 The dynmatch Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the dynmatch engines. Engines are opaque handles; every
 * fallible call returns a dm_status and leaves a message for dm_last_error()
 * on the calling thread.
 */

#ifndef DYNMATCH_DYNMATCH_H
#define DYNMATCH_DYNMATCH_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(DYNMATCH_BUILDING)
#    define DM_API __declspec(dllexport)
#  else
#    define DM_API __declspec(dllimport)
#  endif
#else
#  define DM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

#define DM_NO_VERTEX UINT32_MAX

typedef enum dm_status {
  DM_OK = 0,
  DM_ERR_INVALID_ARGUMENT = 1,
  DM_ERR_ILLEGAL_UPDATE = 2,
  DM_ERR_INVARIANT = 3,
  DM_ERR_TOO_LARGE = 4,
  DM_ERR_CONTRACT = 5,
  DM_ERR_BUFFER_TOO_SMALL = 6,
  DM_ERR_INTERNAL = 7
} dm_status;

typedef enum dm_engine_kind {
  DM_ENGINE_NAIVE = 0,
  DM_ENGINE_SQRT = 1,
  DM_ENGINE_ARB = 2,
  DM_ENGINE_COMPACT = 3
} dm_engine_kind;

typedef enum dm_profile {
  DM_PROFILE_STANDARD = 0,      /* cap 5c */
  DM_PROFILE_LOG_OVER_LOGLOG = 1 /* cap 6c + ceil(log n / log(log n / c)) */
} dm_profile;

typedef struct dm_config {
  uint32_t arboricity;         /* arb engine: asserted arboricity bound c */
  uint32_t delta;              /* arb engine: out-degree cap, 0 = from profile */
  int32_t profile;             /* dm_profile */
  uint32_t f_delete_tokens;    /* compact engine: tokens per postponed F delete */
  uint32_t edge_delete_tokens; /* compact engine: tokens per edge deletion, times cap */
  int32_t keep_log;            /* keep the per-update ops log */
} dm_config;

typedef struct dm_edge {
  uint32_t u;
  uint32_t v;
} dm_edge;

typedef struct dm_report {
  uint64_t ops;     /* charged operations of this update */
  uint32_t added;   /* matching edges added */
  uint32_t removed; /* matching edges removed */
} dm_report;

typedef struct dm_stats {
  uint64_t updates;
  uint64_t total_ops;
  uint64_t max_ops;
  uint64_t edges;
  uint64_t matching_size;
  /* arb and compact engines; zero otherwise */
  uint32_t out_degree_cap;
  uint32_t max_out_degree;
  uint64_t flips;
  /* sqrt engine */
  uint64_t surrogates;
  uint64_t corrections;
  /* compact engine */
  uint64_t tokens_minted;
  uint64_t tokens_spent;
  uint64_t token_underflows;
  uint64_t walk_overruns;
  uint64_t census;
  uint64_t census_bound;
  uint64_t max_census;
  uint64_t stage_resets;
  uint32_t stage_c;
} dm_stats;

typedef struct dm_vertex_info {
  uint32_t degree;
  uint32_t mate; /* DM_NO_VERTEX when free */
  uint32_t out_degree;       /* arb and compact engines */
  uint32_t neighbor_list;    /* compact engine: physical |N(v)| */
  uint32_t free_list;        /* compact engine: physical |F(v)| */
} dm_vertex_info;

typedef struct dm_engine dm_engine;

DM_API void dm_config_default(dm_config* config);

DM_API const char* dm_engine_kind_name(dm_engine_kind kind);
/* Parses "naive", "sqrt", "arb" or "compact". */
DM_API dm_status dm_engine_kind_parse(const char* name, dm_engine_kind* kind);

/* config may be NULL for defaults. */
DM_API dm_status dm_engine_create(uint32_t n, dm_engine_kind kind, const dm_config* config,
                                  dm_engine** out);
DM_API void dm_engine_destroy(dm_engine* engine);
DM_API dm_status dm_engine_clone(const dm_engine* engine, dm_engine** out);

/* A rejected update leaves the engine unchanged. report may be NULL. */
DM_API dm_status dm_engine_insert(dm_engine* engine, uint32_t u, uint32_t v, dm_report* report);
DM_API dm_status dm_engine_delete(dm_engine* engine, uint32_t u, uint32_t v, dm_report* report);

/* Matching edges added and removed by the last successful update. Counts
 * are always written; DM_ERR_BUFFER_TOO_SMALL if a buffer is short. */
DM_API dm_status dm_engine_last_delta(const dm_engine* engine, dm_edge* added, size_t added_cap,
                                      size_t* added_count, dm_edge* removed, size_t removed_cap,
                                      size_t* removed_count);

DM_API uint32_t dm_engine_vertex_count(const dm_engine* engine);
DM_API dm_engine_kind dm_engine_kind_of(const dm_engine* engine);
DM_API size_t dm_engine_edge_count(const dm_engine* engine);
DM_API size_t dm_engine_matching_size(const dm_engine* engine);
DM_API int dm_engine_has_edge(const dm_engine* engine, uint32_t u, uint32_t v);
/* DM_NO_VERTEX when v is free or out of range. */
DM_API uint32_t dm_engine_mate(const dm_engine* engine, uint32_t v);

/* Sorted edge lists; *count receives the full size. */
DM_API dm_status dm_engine_edges(const dm_engine* engine, dm_edge* buffer, size_t capacity,
                                 size_t* count);
DM_API dm_status dm_engine_matching(const dm_engine* engine, dm_edge* buffer, size_t capacity,
                                    size_t* count);

DM_API dm_status dm_engine_stats(const dm_engine* engine, dm_stats* stats);
DM_API dm_status dm_engine_vertex_info(const dm_engine* engine, uint32_t v, dm_vertex_info* info);

/* Per-update charged ops, oldest first (empty unless keep_log). */
DM_API dm_status dm_engine_ops_log(const dm_engine* engine, uint64_t* buffer, size_t capacity,
                                   size_t* count);

/* Runs the engine's internal audit. Returns DM_OK when clean, otherwise
 * DM_ERR_INVARIANT with the findings, one per line, in message (truncated
 * to capacity, always NUL-terminated when capacity > 0). */
DM_API dm_status dm_engine_audit(const dm_engine* engine, char* message, size_t capacity);

/* Oracle checks on the engine's current graph and matching. */
DM_API dm_status dm_engine_check_maximal(const dm_engine* engine, int* ok);
DM_API dm_status dm_engine_check_no_3aug(const dm_engine* engine, int* ok);
DM_API dm_status dm_engine_exact_mcm(const dm_engine* engine, size_t* size);

/* Fault injection: drops the matched edge at u without repair. */
DM_API dm_status dm_engine_debug_unmatch(dm_engine* engine, uint32_t u);

/* Stand-alone oracle on an explicit graph. */
DM_API dm_status dm_oracle_exact_mcm(uint32_t n, const dm_edge* edges, size_t m, size_t* size);
DM_API dm_status dm_oracle_check(uint32_t n, const dm_edge* edges, size_t m,
                                 const dm_edge* matching, size_t k, int* maximal, int* no_3aug);

/* Message for the last failing call on this thread. */
DM_API const char* dm_last_error(void);

#ifdef __cplusplus
}
#endif

#endif /* DYNMATCH_DYNMATCH_H */
