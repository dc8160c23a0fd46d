#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sepmatch/graph.hpp"

namespace sepmatch {

// One edge of a multigraph; u == v is a loop. Stored with u <= v.
struct MultiEdge {
  Vertex u = 0;
  Vertex v = 0;

  MultiEdge() = default;
  MultiEdge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}
  bool is_loop() const { return u == v; }

  friend auto operator<=>(const MultiEdge&, const MultiEdge&) = default;
  friend bool operator==(const MultiEdge&, const MultiEdge&) = default;
};

// Undirected multigraph with parallel edges and loops. Each entry of edges()
// is one edge; parallel edges repeat. A loop adds 2 to its vertex's degree.
class Multigraph {
 public:
  Multigraph() = default;
  Multigraph(int n, std::vector<MultiEdge> edges);

  static Multigraph from_graph(const Graph& g);

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<MultiEdge>& edges() const { return edges_; }
  int degree(Vertex v) const { return degree_[v]; }
  // Indices of edges incident to v (a loop appears once).
  const std::vector<int>& incident(Vertex v) const { return incident_[v]; }
  int multiplicity(Vertex a, Vertex b) const;

  bool has_loops() const;
  bool has_parallel_edges() const;
  bool is_cubic() const;
  // Component count after deleting the given edge indices.
  int components_without(std::span<const int> removed_edges) const;
  int components() const { return components_without({}); }
  bool is_two_edge_connected() const;
  // Simple graph view; throws PreconditionError if loops or parallels exist.
  Graph to_simple() const;

 private:
  int n_ = 0;
  std::vector<MultiEdge> edges_;
  std::vector<int> degree_;
  std::vector<std::vector<int>> incident_;
};

// The two-vertex theta multigraph: three parallel edges.
Multigraph theta_multigraph();

// Text form: "multigraph n=N" then one "u v ×m" line per edge class, classes
// in ascending (u, v) order. The parser also accepts ASCII 'x' for the
// multiplicity marker.
std::string emit_multigraph(const Multigraph& h);
Multigraph parse_multigraph(std::string_view text);

}  // namespace sepmatch
