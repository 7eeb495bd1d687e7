// Copyright 2026 The dynmatch Authors
// SPDX-License-Identifier: Apache-2.0

#include "dynmatch/engine.hpp"

#include <algorithm>
#include <sstream>

#include "dynmatch/arb_matcher.hpp"
#include "dynmatch/compact_matcher.hpp"
#include "dynmatch/naive.hpp"
#include "dynmatch/sqrt_matcher.hpp"

namespace dynmatch {

std::string_view engine_name(EngineKind kind) noexcept {
  switch (kind) {
    case EngineKind::Naive: return "naive";
    case EngineKind::Sqrt: return "sqrt";
    case EngineKind::Arboricity: return "arb";
    case EngineKind::Compact: return "compact";
  }
  return "unknown";
}

Engine::Engine(VertexId n) : match_(n), n_(n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "engine needs at least one vertex");
}

UpdateReport Engine::apply(const Update& update) {
  const VertexId u = update.u;
  const VertexId v = update.v;
  std::ostringstream why;
  if (u >= n_ || v >= n_) {
    why << "vertex out of range in {" << u << "," << v << "} (n=" << n_ << ")";
  } else if (u == v) {
    why << "self-loop at " << u;
  } else if (update.kind == UpdateKind::Insert && has_edge(u, v)) {
    why << "insert of present edge {" << u << "," << v << "}";
  } else if (update.kind == UpdateKind::Delete && !has_edge(u, v)) {
    why << "delete of absent edge {" << u << "," << v << "}";
  }
  if (!why.str().empty()) throw Error(ErrorCode::IllegalUpdate, why.str());

  counter_.begin_update();
  match_.begin_round();
  if (update.kind == UpdateKind::Insert)
    on_insert(u, v);
  else
    on_delete(u, v);
  counter_.end_update(edge_count());

  UpdateReport report;
  report.added = match_.round_added();
  report.removed = match_.round_removed();
  std::sort(report.added.begin(), report.added.end());
  std::sort(report.removed.begin(), report.removed.end());
  report.ops = counter_.current();
  return report;
}

oracle::Snapshot Engine::snapshot() const {
  oracle::Snapshot s;
  s.n = n_;
  s.edges = edges();
  std::sort(s.edges.begin(), s.edges.end());
  s.matching.assign(match_.edges().begin(), match_.edges().end());
  s.status.resize(n_);
  for (VertexId v = 0; v < n_; ++v)
    s.status[v] = match_.is_free(v) ? oracle::Status::Free : oracle::Status::Matched;
  return s;
}

std::vector<std::string> Engine::audit() const {
  std::vector<std::string> out;
  if (auto msg = match_.audit(); !msg.empty()) {
    out.push_back(msg);
    return out;
  }
  oracle::Snapshot s;
  try {
    s = snapshot();
    oracle::validate(s);
  } catch (const Error& e) {
    out.emplace_back(e.what());
    return out;
  }
  if (s.edges.size() != edge_count()) {
    std::ostringstream os;
    os << "edge counter " << edge_count() << " but " << s.edges.size() << " edges listed";
    out.push_back(os.str());
  }
  if (auto e = oracle::find_unmatched_edge(s)) {
    std::ostringstream os;
    os << "matching not maximal: edge {" << e->u << "," << e->v << "} has two free endpoints";
    out.push_back(os.str());
  }
  return out;
}

void Engine::debug_unmatch(VertexId u) {
  if (u >= n_ || match_.is_free(u)) return;
  match_.unmatch(u, match_.mate(u));
}

std::unique_ptr<Engine> make_engine(VertexId n, EngineKind kind, const EngineConfig& config) {
  std::unique_ptr<Engine> engine;
  switch (kind) {
    case EngineKind::Naive: engine = std::make_unique<NaiveEngine>(n); break;
    case EngineKind::Sqrt: engine = std::make_unique<SqrtEngine>(n); break;
    case EngineKind::Arboricity: engine = std::make_unique<ArbEngine>(n, config); break;
    case EngineKind::Compact: engine = std::make_unique<CompactEngine>(n, config); break;
    default: throw Error(ErrorCode::InvalidArgument, "unknown engine kind");
  }
  engine->set_keep_log(config.keep_log);
  return engine;
}

}  // namespace dynmatch
