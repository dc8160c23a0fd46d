#pragma once

#include <array>
#include <optional>
#include <vector>

#include "sepmatch/graph.hpp"

namespace sepmatch {

// Connected components as vertex blocks; blocks are sorted and ordered by
// their smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);
int component_count(const Graph& g);
// component_of[v] = block index, consistent with connected_components().
std::vector<int> component_labels(const Graph& g);
bool is_connected(const Graph& g);

// Edges whose removal increases the component count, in edge order.
EdgeList bridges(const Graph& g);
bool is_two_edge_connected(const Graph& g);

// side[v] in {0, 1} if g is bipartite.
std::optional<std::vector<int>> bipartition(const Graph& g);

struct DegreeClass {
  bool is_subcubic = false;
  bool is_cubic = false;
  bool is_bipartite = false;
  bool is_bicubic = false;
  int max_degree = 0;
  int min_degree = 0;
  // Present iff is_bipartite; side[v] in {0, 1}, side[0] == 0.
  std::optional<std::vector<int>> bipartition;
};

DegreeClass classify_degrees(const Graph& g);

struct Claw {
  Vertex center = 0;
  std::array<Vertex, 3> leaves{};
  friend bool operator==(const Claw&, const Claw&) = default;
};

// Every induced K_{1,3}; leaves sorted, claws ordered by (center, leaves).
std::vector<Claw> find_claws(const Graph& g);
bool is_claw_free(const Graph& g);

}  // namespace sepmatch
