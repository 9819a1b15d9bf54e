// Copyright 2026 The bcfd Authors
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

#include "bcfd/hypergraph.hpp"

#include <sstream>

#include "bcfd/error.hpp"

namespace bcfd {

Hypergraph::Hypergraph(AttributeUniverse vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  by_tail_.resize(vertices_.size());
  by_head_.resize(vertices_.size());
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    const Edge& edge = edges_[e];
    if (edge.tails.universe_size() != vertices_.size() ||
        edge.heads.universe_size() != vertices_.size())
      throw PreconditionError("edge " + std::to_string(e) + " is not over the vertex set");
    for (std::size_t v : edge.tails.members()) by_tail_[v].push_back(e);
    for (std::size_t v : edge.heads.members()) by_head_[v].push_back(e);
  }
}

std::string Hypergraph::edge_name(EdgeId e) const {
  const Edge& edge = edges_.at(e);
  return edge.label.empty() ? "e" + std::to_string(e) : edge.label;
}

Budget weight(const Hypergraph& h, const EdgeSet& f) {
  Budget total;
  for (EdgeId e : f.members()) total += h.edge(e).weight;
  return total;
}

AttrSet closure(const Hypergraph& h, const AttrSet& a, const EdgeSet& f) {
  AttrSet reached = a;
  std::vector<std::size_t> missing(h.edge_count(), 0);
  std::vector<std::size_t> worklist = a.members();

  auto fire = [&](EdgeId e) {
    for (std::size_t v : h.edge(e).heads.members()) {
      if (!reached.contains(v)) {
        reached.insert(v);
        worklist.push_back(v);
      }
    }
  };

  for (EdgeId e : f.members()) {
    missing[e] = h.edge(e).tails.count();
  }
  // Tails already in `a` are accounted for when their vertex is popped.
  for (EdgeId e : f.members()) {
    if (missing[e] == 0) fire(e);
  }
  while (!worklist.empty()) {
    std::size_t v = worklist.back();
    worklist.pop_back();
    for (EdgeId e : h.edges_with_tail(v)) {
      if (!f.contains(e)) continue;
      if (--missing[e] == 0) fire(e);
    }
  }
  return reached;
}

ClosureTrace closure_trace(const Hypergraph& h, const AttrSet& a, const EdgeSet& f) {
  ClosureTrace trace;
  trace.sets.push_back(a);
  while (true) {
    const AttrSet round_start = trace.sets.back();
    bool fired = false;
    for (EdgeId e : f.members()) {
      const Edge& edge = h.edge(e);
      if (!edge.tails.is_subset_of(round_start) || edge.heads.is_subset_of(round_start)) continue;
      trace.edges.push_back(e);
      trace.sets.push_back(trace.sets.back() | edge.heads);
      fired = true;
    }
    if (!fired) break;
  }
  return trace;
}

std::optional<std::string> check_trace(const Hypergraph& h, const AttrSet& a, const EdgeSet& f,
                                       const ClosureTrace& trace, const AttrSet& expected_final) {
  if (trace.sets.empty()) return "trace has no sets";
  if (trace.edges.size() + 1 != trace.sets.size()) return "trace sets and edges do not alternate";
  if (trace.sets.front() != a) return "trace does not start at the source set";
  EdgeSet seen = h.no_edges();
  for (std::size_t i = 0; i < trace.edges.size(); ++i) {
    EdgeId e = trace.edges[i];
    std::ostringstream where;
    where << "step " << i + 1 << ": ";
    if (e >= h.edge_count() || !f.contains(e)) return where.str() + "edge not in the purchase set";
    if (seen.contains(e)) return where.str() + "edge repeated";
    seen.insert(e);
    if (!h.edge(e).tails.is_subset_of(trace.sets[i])) return where.str() + "edge not enabled";
    if ((trace.sets[i] | h.edge(e).heads) != trace.sets[i + 1])
      return where.str() + "next set is not the union with the heads";
  }
  if (trace.final_set() != expected_final) return "trace does not end at the expected set";
  return std::nullopt;
}

Cut Cut::make(AttrSet left, AttrSet right) {
  if (left.universe_size() != right.universe_size() || left.intersects(right) ||
      (left | right) != AttrSet::full(left.universe_size()))
    throw PreconditionError("cut sides do not partition the vertex set");
  return Cut{std::move(left), std::move(right)};
}

EdgeSet crossing_edges(const Hypergraph& h, const Cut& c) {
  EdgeSet out = h.no_edges();
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    const Edge& edge = h.edge(e);
    if (edge.tails.is_subset_of(c.left) && edge.heads.intersects(c.right)) out.insert(e);
  }
  return out;
}

Cut reachability_cut(const Hypergraph& h, const AttrSet& a, const EdgeSet& f) {
  return Cut::with_left(closure(h, a, f));
}

bool is_acyclic(const Hypergraph& h) {
  // Kahn-style peeling over the vertex successor relation.
  const std::size_t n = h.vertex_count();
  std::vector<std::vector<std::size_t>> succ(n);
  std::vector<std::size_t> indegree(n, 0);
  for (const Edge& edge : h.edges()) {
    for (std::size_t t : edge.tails.members()) {
      for (std::size_t v : edge.heads.members()) {
        succ[t].push_back(v);
        ++indegree[v];
      }
    }
  }
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (indegree[v] == 0) ready.push_back(v);
  std::size_t removed = 0;
  while (!ready.empty()) {
    std::size_t v = ready.back();
    ready.pop_back();
    ++removed;
    for (std::size_t s : succ[v])
      if (--indegree[s] == 0) ready.push_back(s);
  }
  return removed == n;
}

}  // namespace bcfd
