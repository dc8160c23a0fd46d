#include "sepmatch/contraction.hpp"

#include <algorithm>
#include <numeric>

#include "sepmatch/errors.hpp"
#include "sepmatch/structure.hpp"

namespace sepmatch {

EdgeList EdgeOrigin::original_edges() const {
  EdgeList out;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) out.emplace_back(path[i], path[i + 1]);
  return out;
}

ContractionMap contract_subdivided_paths(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("disconnected", "graph is disconnected");
  if (g.max_degree() > 3) throw PreconditionError("not_subcubic", "graph has a vertex of degree > 3");
  if (g.min_degree() < 2) {
    throw PreconditionError("low_degree", "contraction needs minimum degree 2");
  }
  if (g.max_degree() < 3) throw PreconditionError("cycle", "graph is a cycle");

  std::vector<int> index(g.order(), -1);
  ContractionMap cm;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 3) {
      index[v] = static_cast<int>(cm.branch_vertex.size());
      cm.branch_vertex.push_back(v);
    }
  }

  std::vector<char> used(g.size(), 0);
  std::vector<std::pair<MultiEdge, EdgeOrigin>> found;
  for (Vertex start : cm.branch_vertex) {
    for (Vertex first : g.neighbors(start)) {
      int e = g.edge_index(start, first);
      if (used[e]) continue;
      used[e] = 1;
      EdgeOrigin origin;
      origin.path = {start, first};
      Vertex prev = start;
      Vertex at = first;
      while (g.degree(at) == 2) {
        auto nbrs = g.neighbors(at);
        Vertex next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
        used[g.edge_index(at, next)] = 1;
        origin.path.push_back(next);
        prev = at;
        at = next;
      }
      found.emplace_back(MultiEdge(index[start], index[at]), std::move(origin));
    }
  }

  // Multigraph sorts its edges; keep origins aligned with that order.
  std::vector<int> order(found.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return found[a].first < found[b].first; });
  std::vector<MultiEdge> edges;
  for (int i : order) {
    edges.push_back(found[i].first);
    cm.edge_origin.push_back(found[i].second);
  }
  cm.contracted = Multigraph(static_cast<int>(cm.branch_vertex.size()), std::move(edges));
  return cm;
}

}  // namespace sepmatch
