#pragma once

#include <functional>
#include <span>
#include <vector>

#include "sepmatch/graph.hpp"

namespace sepmatch {

// A set of pairwise vertex-disjoint edges, kept sorted.
struct Matching {
  EdgeList edges;

  Matching() = default;
  explicit Matching(EdgeList e);

  int size() const { return static_cast<int>(edges.size()); }
  bool empty() const { return edges.empty(); }
  bool contains(const Edge& e) const;
  // mate[v] or -1, for a host of order n.
  std::vector<Vertex> mates(int n) const;

  friend bool operator==(const Matching&, const Matching&) = default;
};

bool is_matching_of(const Graph& g, std::span<const Edge> edges);
// Throws PreconditionError("not_a_matching") when edges are not a matching of g.
void require_matching(const Graph& g, std::span<const Edge> edges);
bool is_perfect_matching(const Graph& g, const Matching& m);

// Maximum-cardinality matching (Edmonds' blossom algorithm). Vertices with
// blocked[v] != 0 are treated as absent; an empty span blocks nothing.
Matching maximum_matching(const Graph& g, std::span<const char> blocked = {});
int matching_number(const Graph& g, std::span<const char> blocked = {});

// Visitor returns false to stop the stream early.
using MatchingVisitor = std::function<bool(const Matching&)>;

// Every matching once, the empty one first; edges explored in index order.
void enumerate_matchings(const Graph& g, const MatchingVisitor& visit);

// Every perfect matching once: the lowest unmatched vertex is paired with
// each free neighbour in ascending order. Throws on odd order.
void enumerate_perfect_matchings(const Graph& g, const MatchingVisitor& visit);
long long count_perfect_matchings(const Graph& g);

}  // namespace sepmatch
