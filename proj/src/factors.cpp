#include "sepmatch/factors.hpp"

#include <algorithm>

#include "sepmatch/errors.hpp"
#include "sepmatch/structure.hpp"

namespace sepmatch {

EdgeList EdgeColoring::color_class(const Graph& g, int c) const {
  EdgeList out;
  for (int i = 0; i < g.size(); ++i) {
    if (color[i] == c) out.push_back(g.edge(i));
  }
  return out;
}

bool is_proper_3_edge_coloring(const Graph& g, const EdgeColoring& coloring) {
  if (static_cast<int>(coloring.color.size()) != g.size()) return false;
  std::vector<int> seen(g.order(), 0);  // bit c set when color c is present
  for (int i = 0; i < g.size(); ++i) {
    const int c = coloring.color[i];
    if (c < 1 || c > 3) return false;
    const Edge& e = g.edge(i);
    const int bit = 1 << c;
    if ((seen[e.u] & bit) || (seen[e.v] & bit)) return false;
    seen[e.u] |= bit;
    seen[e.v] |= bit;
  }
  return true;
}

EdgeColoring proper_3_edge_coloring(const Graph& g) {
  if (!classify_degrees(g).is_bicubic) {
    throw PreconditionError("not_bicubic", "3-edge-coloring needs a bipartite cubic graph");
  }
  Matching pm = maximum_matching(g);
  if (!is_perfect_matching(g, pm)) {
    throw InternalError("regular bipartite graph without a perfect matching");
  }
  EdgeColoring coloring;
  coloring.color.assign(g.size(), 0);
  for (const Edge& e : pm.edges) coloring.color[g.edge_index(e)] = 1;

  // The rest is 2-regular and bipartite: alternate along each cycle.
  for (int start = 0; start < g.size(); ++start) {
    if (coloring.color[start] != 0) continue;
    int current = start;
    Vertex at = g.edge(start).v;
    int c = 2;
    while (coloring.color[current] == 0) {
      coloring.color[current] = c;
      c = 5 - c;
      int next = -1;
      for (Vertex w : g.neighbors(at)) {
        int idx = g.edge_index(at, w);
        if (idx != current && coloring.color[idx] != 1) {
          next = idx;
          break;
        }
      }
      current = next;
      at = g.edge(next).other(at);
    }
  }
  if (!is_proper_3_edge_coloring(g, coloring)) {
    throw InternalError("3-edge-coloring construction produced a conflict");
  }
  return coloring;
}

SpanningSubgraphCertificate make_spanning_certificate(const Graph& g, EdgeList edges) {
  std::sort(edges.begin(), edges.end());
  std::vector<int> degree(g.order(), 0);
  for (const Edge& e : edges) {
    ++degree[e.u];
    ++degree[e.v];
  }
  int top = 0;
  for (int d : degree) top = std::max(top, d);
  SpanningSubgraphCertificate s;
  s.degree_census.assign(std::max(top, 3) + 1, 0);
  for (int d : degree) ++s.degree_census[d];
  s.edges = std::move(edges);
  return s;
}

SpanningSubgraphCertificate complement_certificate(const Graph& g, const Matching& m) {
  EdgeList rest;
  for (const Edge& e : g.edges()) {
    if (!m.contains(e)) rest.push_back(e);
  }
  return make_spanning_certificate(g, std::move(rest));
}

TwoFactorHamiltonicity is_two_factor_hamiltonian(const Graph& g) {
  DegreeClass c = classify_degrees(g);
  if (!c.is_cubic) throw PreconditionError("not_cubic", "2-factor test needs a cubic graph");
  if (!is_connected(g)) throw PreconditionError("disconnected", "graph is disconnected");
  TwoFactorHamiltonicity result;
  result.value = true;
  enumerate_perfect_matchings(g, [&](const Matching& m) {
    if (is_connected(g.without_edges(m.edges))) return true;
    result.value = false;
    result.witness_matching = m;
    result.witness_two_factor = complement_certificate(g, m);
    return false;
  });
  return result;
}

Validation validate_almost_two_factor(const Graph& g, const SpanningSubgraphCertificate& s) {
  std::vector<int> degree(g.order(), 0);
  EdgeList sorted = s.edges;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return {false, "repeated edge"};
  }
  for (const Edge& e : sorted) {
    if (!g.has_edge(e.u, e.v)) return {false, "edge " + to_string(e) + " not in host"};
    ++degree[e.u];
    ++degree[e.v];
  }
  std::vector<int> census(std::max<std::size_t>(s.degree_census.size(), 4), 0);
  int threes = 0;
  for (int d : degree) {
    if (d >= static_cast<int>(census.size())) census.resize(d + 1, 0);
    ++census[d];
    if (d == 3) {
      ++threes;
    } else if (d != 2) {
      return {false, "vertex of degree " + std::to_string(d)};
    }
  }
  if (!s.degree_census.empty()) {
    std::vector<int> given = s.degree_census;
    given.resize(census.size(), 0);
    if (given != census) return {false, "degree census mismatch"};
  }
  if (threes != 2) {
    return {false, std::to_string(threes) + " vertices of degree 3 (need exactly 2)"};
  }
  if (is_connected(Graph(g.order(), sorted))) return {false, "subgraph is connected"};
  return {true, ""};
}

}  // namespace sepmatch
