#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sepmatch {

using Vertex = int;

// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool touches(Vertex w) const { return u == w || v == w; }
  Vertex other(Vertex w) const { return w == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

using EdgeList = std::vector<Edge>;

// Simple undirected graph on vertices 0..n-1. Immutable once built; edges are
// kept sorted so that edge indices are deterministic.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  // Throws PreconditionError on loops, duplicates or out-of-range endpoints.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<std::pair<int, int>> edges);

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const EdgeList& edges() const { return edges_; }
  const Edge& edge(int index) const { return edges_[index]; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const;
  int min_degree() const;

  bool has_edge(Vertex a, Vertex b) const;
  // Index into edges(), or -1.
  int edge_index(Vertex a, Vertex b) const;
  int edge_index(const Edge& e) const { return edge_index(e.u, e.v); }

  // Neighborhood as a bit mask; valid only when order() <= 64.
  std::uint64_t neighbor_mask(Vertex v) const { return masks_[v]; }

  Graph without_edges(std::span<const Edge> removed) const;
  Graph with_edges(std::span<const Edge> added) const;
  // Vertex i of this graph becomes vertex perm[i] of the result.
  Graph relabeled(std::span<const int> perm) const;
  // Subgraph induced by `keep` (in the given order); vertex keep[i] -> i.
  Graph induced(std::span<const Vertex> keep) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void build();

  int n_ = 0;
  EdgeList edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint64_t> masks_;
};

// Disjoint union; vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

std::string to_string(const Edge& e);

}  // namespace sepmatch
