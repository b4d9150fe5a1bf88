// Copyright 2026 The netident Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "netident/allocation.hpp"

#include <algorithm>

#include "netident/merge.hpp"

namespace netident {

namespace {

bool passes(const ExtendedGraph& eg, const VertexSet& excited, const VertexSet& targets) {
  VertexSet stimulated = eg.noise_stimulated;
  stimulated.insert(excited.begin(), excited.end());
  VertexSet internal_targets;
  for (VertexId v : targets) {
    if (eg.internal.contains(v)) internal_targets.insert(v);
  }
  return check_vertices(eg, stimulated, internal_targets).identifiable;
}

}  // namespace

NoiseFilter noise_rooted_filter(const Covering& c, const ExtendedGraph& eg) {
  NoiseFilter f;
  f.v_e = eg.noise_stimulated;
  for (std::size_t k = 0; k < c.size(); ++k) {
    const VertexSet& roots = c.trees[k].roots();
    const bool noisy = std::any_of(roots.begin(), roots.end(),
                                   [&](VertexId r) { return f.v_e.contains(r); });
    if (!noisy) f.pi_s.push_back(k);
  }
  return f;
}

std::vector<VertexId> select_roots(const Covering& c, const std::vector<std::size_t>& trees) {
  std::vector<VertexId> roots;
  roots.reserve(trees.size());
  for (std::size_t k : trees) roots.push_back(c.trees.at(k).lowest_root());
  return roots;
}

PruneOutcome prune(const ExtendedGraph& eg, const Covering& c,
                   const std::vector<std::size_t>& pi_s, const std::vector<VertexId>& r0) {
  if (pi_s.size() != r0.size()) throw PreconditionError("one root per tree expected");
  PruneOutcome out;
  out.excited.insert(r0.begin(), r0.end());

  for (std::size_t idx = 0; idx < pi_s.size(); ++idx) {
    const VertexId tau = r0[idx];
    VertexSet trial = out.excited;
    trial.erase(tau);
    if (passes(eg, trial, c.trees.at(pi_s[idx]).vertices())) {
      out.excited = std::move(trial);
      out.pruned.push_back(tau);
    }
  }

  while (!passes(eg, out.excited, eg.internal) && !out.pruned.empty()) {
    out.excited.insert(out.pruned.back());
    out.restored.push_back(out.pruned.back());
    out.pruned.pop_back();
  }
  out.verified = passes(eg, out.excited, eg.internal);
  return out;
}

AllocationResult allocate(const ExtendedGraph& eg) {
  AllocationResult result;
  result.satisfiable = check_with_excitations(eg, eg.internal).identifiable;
  if (eg.parameterized_edges.empty()) {
    result.verified = true;
    result.bounds = excitation_bounds(eg, 0);
    return result;
  }

  MergeResult merged = algorithm1_merge(eg);
  result.covering_used = std::move(merged.covering);
  result.trace = std::move(merged.trace);
  result.bounds = excitation_bounds(eg, result.covering_used.size());

  const NoiseFilter filter = noise_rooted_filter(result.covering_used, eg);
  result.pi_s = filter.pi_s;
  result.initial_roots = select_roots(result.covering_used, filter.pi_s);

  PruneOutcome pruned = prune(eg, result.covering_used, filter.pi_s, result.initial_roots);
  result.excited = std::move(pruned.excited);
  result.pruned = std::move(pruned.pruned);
  result.restored = std::move(pruned.restored);
  result.verified = pruned.verified;

  if (!result.verified && result.satisfiable) {
    result.excited = eg.internal;
    result.fallback = true;
    result.verified = true;
  }
  return result;
}

AllocationResult allocate(const ModelSet& m) { return allocate(build_extended_graph(m)); }

}  // namespace netident
