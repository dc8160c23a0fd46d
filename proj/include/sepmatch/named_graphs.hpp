#pragma once

#include <span>

#include "sepmatch/graph.hpp"

namespace sepmatch::named {

Graph complete(int n);
Graph complete_bipartite(int a, int b);  // sides {0..a-1}, {a..a+b-1}
Graph cycle(int n);
Graph path(int n);
Graph star(int leaves);
Graph k4_minus_edge();
Graph prism();      // triangles {0,1,2}, {3,4,5}, rungs i -- i+3
Graph cube();       // Q3
Graph petersen();
Graph heawood();    // 14-cycle plus chords i -- i+5 for even i
// Bridged cubic graph on 10 vertices: two copies of K4 with one edge
// subdivided, the subdivision vertices joined by the bridge.
Graph two_k4_bridge();

// Subdivide each listed edge once; new vertices are appended in list order.
Graph subdivide(const Graph& g, std::span<const Edge> edges);

}  // namespace sepmatch::named
