#include "sepmatch/named_graphs.hpp"

#include <algorithm>

namespace sepmatch::named {

Graph complete(int n) {
  EdgeList edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph(n, edges);
}

Graph complete_bipartite(int a, int b) {
  EdgeList edges;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  }
  return Graph(a + b, edges);
}

Graph cycle(int n) {
  EdgeList edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph path(int n) {
  EdgeList edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph star(int leaves) {
  EdgeList edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph(leaves + 1, edges);
}

Graph k4_minus_edge() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

Graph prism() {
  return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

Graph cube() {
  EdgeList edges;
  for (int v = 0; v < 8; ++v) {
    for (int bit = 1; bit < 8; bit <<= 1) {
      if ((v & bit) == 0) edges.emplace_back(v, v | bit);
    }
  }
  return Graph(8, edges);
}

Graph petersen() {
  EdgeList edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, edges);
}

Graph heawood() {
  EdgeList edges;
  for (int i = 0; i < 14; ++i) {
    edges.emplace_back(i, (i + 1) % 14);
    if (i % 2 == 0) edges.emplace_back(i, (i + 5) % 14);
  }
  return Graph(14, edges);
}

Graph two_k4_bridge() {
  EdgeList edges;
  for (int side = 0; side < 2; ++side) {
    const int o = 5 * side;
    // K4 on o..o+3 with edge (o, o+1) replaced by o -- o+4 -- o+1.
    edges.emplace_back(o, o + 2);
    edges.emplace_back(o, o + 3);
    edges.emplace_back(o + 1, o + 2);
    edges.emplace_back(o + 1, o + 3);
    edges.emplace_back(o + 2, o + 3);
    edges.emplace_back(o, o + 4);
    edges.emplace_back(o + 4, o + 1);
  }
  edges.emplace_back(4, 9);
  return Graph(10, edges);
}

Graph subdivide(const Graph& g, std::span<const Edge> edges) {
  EdgeList kept;
  for (const Edge& e : g.edges()) {
    if (std::find(edges.begin(), edges.end(), e) == edges.end()) kept.push_back(e);
  }
  int next = g.order();
  for (const Edge& e : edges) {
    kept.emplace_back(e.u, next);
    kept.emplace_back(next, e.v);
    ++next;
  }
  return Graph(next, kept);
}

}  // namespace sepmatch::named
