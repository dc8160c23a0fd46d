#include "sepmatch/clawfree.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

#include "sepmatch/errors.hpp"
#include "sepmatch/generator.hpp"
#include "sepmatch/graph6.hpp"
#include "sepmatch/separation.hpp"
#include "sepmatch/structure.hpp"

namespace sepmatch {

std::string to_string(ClawFreeKind k) {
  switch (k) {
    case ClawFreeKind::kK4:
      return "K4";
    case ClawFreeKind::kRingOfDiamonds:
      return "ring_of_diamonds";
    case ClawFreeKind::kTriangleStringStructure:
      return "triangle_string_structure";
  }
  return "unknown";
}

namespace {

void require_cubic_clawfree(const Graph& g) {
  if (!classify_degrees(g).is_cubic) throw PreconditionError("not_cubic", "graph is not cubic");
  if (!is_connected(g)) throw PreconditionError("disconnected", "graph is disconnected");
  auto claws = find_claws(g);
  if (!claws.empty()) {
    const Claw& c = claws.front();
    throw PreconditionError("has_claw", "center " + std::to_string(c.center) + " leaves " +
                                            std::to_string(c.leaves[0]) + "," +
                                            std::to_string(c.leaves[1]) + "," +
                                            std::to_string(c.leaves[2]));
  }
}

bool is_k4(const Graph& g) { return g.order() == 4 && g.size() == 6; }

}  // namespace

DiamondDecomposition diamond_decomposition(const Graph& g) {
  require_cubic_clawfree(g);
  EdgeList br = bridges(g);
  if (!br.empty()) throw PreconditionError("has_bridge", "bridge " + to_string(br.front()));

  DiamondDecomposition d;
  if (is_k4(g)) {
    d.kind = ClawFreeKind::kK4;
    return d;
  }

  const int n = g.order();
  std::vector<int> owner(n, -1);  // diamond index, or -2 for triangle vertices
  for (const Edge& e : g.edges()) {
    std::vector<Vertex> common;
    for (Vertex w : g.neighbors(e.u)) {
      if (w != e.v && g.has_edge(w, e.v)) common.push_back(w);
    }
    if (common.size() != 2) continue;
    Diamond dm{{common[0], common[1]}, {e.u, e.v}};
    // Bridgeless claw-free cubic graphs other than K4 have disjoint diamonds.
    if (g.has_edge(common[0], common[1])) throw InternalError("K4 subgraph in a larger cubic graph");
    const int idx = static_cast<int>(d.diamonds.size());
    for (Vertex x : {dm.ends[0], dm.ends[1], dm.centre[0], dm.centre[1]}) {
      if (owner[x] != -1) throw InternalError("overlapping diamonds");
      owner[x] = idx;
    }
    d.diamonds.push_back(dm);
  }

  for (Vertex x = 0; x < n; ++x) {
    if (owner[x] != -1) continue;
    auto nb = g.neighbors(x);
    std::optional<std::array<Vertex, 3>> tri;
    for (int i = 0; i < 3 && !tri; ++i) {
      for (int j = i + 1; j < 3 && !tri; ++j) {
        if (g.has_edge(nb[i], nb[j])) {
          std::array<Vertex, 3> t{x, nb[i], nb[j]};
          std::sort(t.begin(), t.end());
          tri = t;
        }
      }
    }
    if (!tri) throw InternalError("vertex outside every diamond lies in no triangle");
    for (Vertex y : *tri) {
      if (owner[y] != -1) throw InternalError("triangle overlaps another structure");
      owner[y] = -2;
    }
    d.triangles.push_back(*tri);
  }

  std::set<Edge> internal;
  for (const Diamond& dm : d.diamonds) {
    for (Vertex a : dm.ends) {
      for (Vertex c : dm.centre) internal.emplace(a, c);
    }
    internal.insert(dm.central_edge());
  }
  for (const auto& t : d.triangles) {
    internal.emplace(t[0], t[1]);
    internal.emplace(t[0], t[2]);
    internal.emplace(t[1], t[2]);
  }
  std::vector<Vertex> external(n, -1);  // the connector partner of an end or corner
  for (const Edge& e : g.edges()) {
    if (internal.count(e)) continue;
    d.connectors.push_back(e);
    external[e.u] = e.v;
    external[e.v] = e.u;
  }

  auto other_end = [&](int idx, Vertex end) {
    const Diamond& dm = d.diamonds[idx];
    return dm.ends[0] == end ? dm.ends[1] : dm.ends[0];
  };

  if (d.triangles.empty()) {
    d.kind = ClawFreeKind::kRingOfDiamonds;
    std::vector<int> ring;
    Vertex at = d.diamonds[0].ends[0];
    do {
      const int idx = owner[at];
      ring.push_back(idx);
      at = external[other_end(idx, at)];
    } while (owner[at] != 0);
    if (ring.size() != d.diamonds.size()) throw InternalError("diamonds do not form one ring");
    d.strings.push_back(std::move(ring));
    return d;
  }

  d.kind = ClawFreeKind::kTriangleStringStructure;
  for (const auto& t : d.triangles) {
    for (Vertex corner : t) {
      std::vector<int> chain;
      Vertex at = external[corner];
      while (owner[at] >= 0) {
        chain.push_back(owner[at]);
        at = external[other_end(owner[at], at)];
      }
      // Each string is walked from both corners; keep the walk from the smaller.
      if (corner < at) d.strings.push_back(std::move(chain));
    }
  }
  return d;
}

Graph reassemble(int n, const DiamondDecomposition& d) {
  EdgeList edges = d.connectors;
  for (const Diamond& dm : d.diamonds) {
    for (Vertex a : dm.ends) {
      for (Vertex c : dm.centre) edges.emplace_back(a, c);
    }
    edges.push_back(dm.central_edge());
  }
  for (const auto& t : d.triangles) {
    edges.emplace_back(t[0], t[1]);
    edges.emplace_back(t[0], t[2]);
    edges.emplace_back(t[1], t[2]);
  }
  return Graph(n, edges);
}

Matching disconnecting_pm_clawfree(const Graph& g) {
  require_cubic_clawfree(g);
  if (is_k4(g)) throw PreconditionError("is_k4", "K4 has no disconnecting perfect matching");
  Matching m;
  if (!bridges(g).empty()) {
    m = bridge_disconnecting_pm(g);
  } else {
    DiamondDecomposition d = diamond_decomposition(g);
    m.edges = d.connectors;
    for (const Diamond& dm : d.diamonds) m.edges.push_back(dm.central_edge());
    std::sort(m.edges.begin(), m.edges.end());
  }
  if (!is_perfect_matching(g, m) || !is_separating(g, m)) {
    throw InternalError("claw-free construction is not a disconnecting perfect matching");
  }
  return m;
}

std::string clawfree_structure(const Graph& g) {
  require_cubic_clawfree(g);
  if (!bridges(g).empty()) return "bridge";
  return to_string(diamond_decomposition(g).kind);
}

VerificationReport verify_clawfree_theorem(int max_n) {
  if (max_n > kMaxClawFreeScanOrder) {
    throw PreconditionError("bound_exceeded", "claw-free scan is capped at n = " +
                                                  std::to_string(kMaxClawFreeScanOrder));
  }
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.theorem_id = "thm6";
  report.class_scanned = {"clawfree_cubic", 4, max_n, true};
  report.artifact_version = artifact_version();
  std::map<std::string, int> per_kind;
  int skipped = 0;
  for (const Graph& g : enumerate_range(GraphClass::kClawFreeCubic, 4, max_n)) {
    if (is_k4(g)) {
      ++skipped;
      continue;
    }
    ++report.graphs_checked;
    const std::string g6 = emit_graph6(g);
    try {
      Matching m = disconnecting_pm_clawfree(g);
      ++per_kind[clawfree_structure(g)];
      const int value = mms_exact(g).value;
      if (value != g.order() / 2) {
        report.failures.push_back({g6, "mms = " + std::to_string(g.order() / 2),
                                   "mms = " + std::to_string(value)});
      }
    } catch (const std::exception& e) {
      report.failures.push_back({g6, "disconnecting perfect matching", e.what()});
    }
  }
  report.details["per_kind"] = per_kind;
  report.details["skipped_k4"] = skipped;
  report.runtime_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace sepmatch
