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

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bcfd/attributes.hpp"
#include "bcfd/budget.hpp"

namespace bcfd {

using EdgeId = std::size_t;

/// A weighted directed hyperedge: firing it requires every tail and yields
/// every head.
struct Edge {
  AttrSet tails;
  AttrSet heads;
  Budget weight;
  /// Optional display name; empty means "e<id>".
  std::string label;
};

/// Finite vertex universe plus a list of edges. Parallel edges are allowed.
class Hypergraph {
 public:
  Hypergraph() = default;
  /// Throws PreconditionError when an edge's sets are over a different
  /// universe than `vertices`.
  Hypergraph(AttributeUniverse vertices, std::vector<Edge> edges);

  const AttributeUniverse& vertices() const { return vertices_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::string edge_name(EdgeId e) const;

  /// Edges having `v` as a tail, ascending.
  const std::vector<EdgeId>& edges_with_tail(std::size_t v) const { return by_tail_.at(v); }
  /// Edges having `v` as a head, ascending.
  const std::vector<EdgeId>& edges_with_head(std::size_t v) const { return by_head_.at(v); }

  AttrSet no_vertices() const { return AttrSet(vertex_count()); }
  AttrSet all_vertices() const { return AttrSet::full(vertex_count()); }
  EdgeSet no_edges() const { return EdgeSet(edge_count()); }
  EdgeSet all_edges() const { return EdgeSet::full(edge_count()); }

 private:
  AttributeUniverse vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> by_tail_;
  std::vector<std::vector<EdgeId>> by_head_;
};

/// Sum of edge weights.
Budget weight(const Hypergraph& h, const EdgeSet& f);

/// Everything reachable from `a` by firing edges of `f` whose tails are all
/// reached. Edges with no tails fire unconditionally. Linear in the total
/// size of the edges in `f`.
AttrSet closure(const Hypergraph& h, const AttrSet& a, const EdgeSet& f);

/// A = A_1, f_1, A_2, ..., f_{n-1}, A_n with in(f_i) in A_i and
/// A_{i+1} = A_i + out(f_i).
struct ClosureTrace {
  std::vector<AttrSet> sets;
  std::vector<EdgeId> edges;

  const AttrSet& final_set() const { return sets.back(); }
};

/// Builds the trace round by round; edges enabled in the same round are
/// appended in ascending id order. Each edge appears at most once and only
/// if it adds a vertex not present at the start of its round.
ClosureTrace closure_trace(const Hypergraph& h, const AttrSet& a, const EdgeSet& f);

/// Mechanical check of the trace conditions against `a`, `f` and the
/// expected final set. Returns a description of the first violated
/// condition, or nullopt.
std::optional<std::string> check_trace(const Hypergraph& h, const AttrSet& a, const EdgeSet& f,
                                       const ClosureTrace& trace, const AttrSet& expected_final);

/// Ordered partition (left, right) of the vertex set.
struct Cut {
  AttrSet left;
  AttrSet right;

  /// Throws PreconditionError unless `left` and `right` partition the
  /// universe.
  static Cut make(AttrSet left, AttrSet right);
  static Cut with_left(const AttrSet& left) { return Cut{left, left.complement()}; }

  friend bool operator==(const Cut&, const Cut&) = default;
};

/// Edges with every tail on the left and some head on the right.
EdgeSet crossing_edges(const Hypergraph& h, const Cut& c);

/// (closure(a, f), rest). No edge of `f` crosses it.
Cut reachability_cut(const Hypergraph& h, const AttrSet& a, const EdgeSet& f);

/// True when no vertex can reach itself through tail-to-head steps.
bool is_acyclic(const Hypergraph& h);

}  // namespace bcfd
