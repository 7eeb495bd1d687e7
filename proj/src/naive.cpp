// Copyright 2026 The dynmatch Authors
// SPDX-License-Identifier: Apache-2.0

#include "dynmatch/naive.hpp"

namespace dynmatch {

void NaiveEngine::on_insert(VertexId u, VertexId v) {
  graph_.insert(u, v);
  ops().charge(2);
  if (match_.is_free(u) && match_.is_free(v)) match_.match(u, v);
}

void NaiveEngine::on_delete(VertexId u, VertexId v) {
  const bool matched = match_.mate(u) == v;
  graph_.erase(u, v);
  ops().charge(2);
  if (!matched) return;
  match_.unmatch(u, v);
  rematch(u);
  rematch(v);
}

void NaiveEngine::rematch(VertexId z) {
  for (VertexId w : graph_.neighbors(z)) {
    ops().charge();
    if (match_.is_free(w)) {
      match_.match(z, w);
      return;
    }
  }
}

std::vector<std::string> NaiveEngine::audit() const {
  auto out = Engine::audit();
  if (auto msg = graph_.audit(); !msg.empty()) out.push_back(msg);
  return out;
}

}  // namespace dynmatch
