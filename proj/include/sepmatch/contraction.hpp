#pragma once

#include <vector>

#include "sepmatch/graph.hpp"
#include "sepmatch/multigraph.hpp"

namespace sepmatch {

// Where a contracted edge came from: a single original edge (path of two
// vertices) or a subdivided path, listed end to end. The ends of `path` have
// degree 3 in the original graph and every internal vertex degree 2.
struct EdgeOrigin {
  std::vector<Vertex> path;

  bool is_original_edge() const { return path.size() == 2; }
  int internal_vertices() const { return static_cast<int>(path.size()) - 2; }
  EdgeList original_edges() const;
};

struct ContractionMap {
  Multigraph contracted;
  // edge_origin[i] explains contracted.edges()[i].
  std::vector<EdgeOrigin> edge_origin;
  // Original vertex of each contracted vertex (the degree-3 vertices of g).
  std::vector<Vertex> branch_vertex;
};

// Replace every subdivided path by a single edge. Requires g connected,
// subcubic, min degree 2 and at least one vertex of degree 3; throws
// PreconditionError otherwise.
ContractionMap contract_subdivided_paths(const Graph& g);

}  // namespace sepmatch
