#include "sepmatch/separation.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>

#include "sepmatch/canonical.hpp"
#include "sepmatch/errors.hpp"
#include "sepmatch/named_graphs.hpp"
#include "sepmatch/structure.hpp"

namespace sepmatch {
namespace {

using Mask = std::uint64_t;

Mask bit(Vertex v) { return Mask{1} << v; }

std::vector<Vertex> to_vertices(Mask m) {
  std::vector<Vertex> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

void require_connected(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("disconnected", "graph is disconnected");
}

void require_mask_size(const Graph& g) {
  if (g.order() > 64) throw PreconditionError("bound_exceeded", "at most 64 vertices supported");
}

// Connected sets S with a matching boundary, grown from their minimum vertex.
class CutSideSearch {
 public:
  CutSideSearch(const Graph& g, const std::function<bool(Mask)>& visit)
      : n_(g.order()), adj_(n_), visit_(visit) {
    for (Vertex v = 0; v < n_; ++v) adj_[v] = g.neighbor_mask(v);
    full_ = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
  }

  void run() {
    for (Vertex r = 0; r < n_; ++r) {
      if (!grow(bit(r), bit(r) - 1)) return;
    }
  }

 private:
  Mask neighborhood(Mask s) const {
    Mask out = 0;
    for (Mask m = s; m; m &= m - 1) out |= adj_[std::countr_zero(m)];
    return out & ~s;
  }

  // Returns false when the visitor asked to stop.
  bool grow(Mask s, Mask x) {
    while (true) {
      Mask forced = 0;
      for (Mask m = neighborhood(s) & x; m; m &= m - 1) {
        if (std::popcount(adj_[std::countr_zero(m)] & s) >= 2) return true;
      }
      for (Mask m = s; m; m &= m - 1) {
        const Vertex v = std::countr_zero(m);
        const Mask out = adj_[v] & x;
        if (std::popcount(out) >= 2) return true;
        if (out) forced |= adj_[v] & ~s & ~x;
      }
      for (Mask m = neighborhood(s) & ~x; m; m &= m - 1) {
        const Vertex w = std::countr_zero(m);
        if (std::popcount(adj_[w] & s) >= 2) forced |= bit(w);
      }
      if (!forced) break;
      s |= forced;
    }
    const Mask frontier = neighborhood(s) & ~x;
    if (!frontier) return s == full_ ? true : visit_(s);
    const Mask w = frontier & (~frontier + 1);
    if (!grow(s | w, x)) return false;
    return grow(s, x | w);
  }

  int n_;
  std::vector<Mask> adj_;
  Mask full_ = 0;
  const std::function<bool(Mask)>& visit_;
};

void for_each_side_mask(const Graph& g, const std::function<bool(Mask)>& visit) {
  require_mask_size(g);
  require_connected(g);
  CutSideSearch(g, visit).run();
}

EdgeList boundary_of_mask(const Graph& g, Mask s) {
  EdgeList out;
  for (const Edge& e : g.edges()) {
    if (((s >> e.u) & 1) != ((s >> e.v) & 1)) out.push_back(e);
  }
  return out;
}

}  // namespace

bool is_separating(const Graph& g, const Matching& m) {
  require_matching(g, m.edges);
  return component_count(g.without_edges(m.edges)) > component_count(g);
}

EdgeList edge_boundary(const Graph& g, std::span<const Vertex> side) {
  std::vector<char> in(g.order(), 0);
  for (Vertex v : side) in[v] = 1;
  EdgeList out;
  for (const Edge& e : g.edges()) {
    if (in[e.u] != in[e.v]) out.push_back(e);
  }
  return out;
}

Validation validate_certificate(const Graph& g, const SeparationCertificate& cert) {
  if (!is_matching_of(g, cert.matching.edges)) return {false, "not a matching of the host"};
  if (!is_separating(g, cert.matching)) return {false, "matching is not separating"};
  const auto& side = cert.witness_side;
  if (side.empty() || static_cast<int>(side.size()) >= g.order()) {
    return {false, "witness side must be a nonempty proper subset"};
  }
  for (const Edge& e : edge_boundary(g, side)) {
    if (!cert.matching.contains(e)) {
      return {false, "boundary edge " + to_string(e) + " missing from matching"};
    }
  }
  return {true, ""};
}

void for_each_matching_cut_side(const Graph& g,
                                const std::function<bool(std::span<const Vertex>)>& visit) {
  for_each_side_mask(g, [&](Mask s) {
    auto side = to_vertices(s);
    return visit(side);
  });
}

std::vector<MatchingCut> enumerate_matching_cuts(const Graph& g) {
  std::unordered_map<Mask, std::vector<Vertex>> by_key;
  const Mask full = g.order() == 64 ? ~Mask{0} : (Mask{1} << g.order()) - 1;
  for_each_side_mask(g, [&](Mask s) {
    const Mask key = (s & 1) ? s : (full & ~s);
    auto side = to_vertices(s);
    auto [it, inserted] = by_key.try_emplace(key, side);
    if (!inserted && side < it->second) it->second = side;
    return true;
  });
  std::vector<MatchingCut> cuts;
  cuts.reserve(by_key.size());
  for (auto& [key, side] : by_key) {
    Mask s = 0;
    for (Vertex v : side) s |= bit(v);
    cuts.push_back({side, boundary_of_mask(g, s)});
  }
  std::sort(cuts.begin(), cuts.end(),
            [](const MatchingCut& a, const MatchingCut& b) { return a.side < b.side; });
  return cuts;
}

Decomposability is_decomposable(const Graph& g) {
  Decomposability result;
  for_each_side_mask(g, [&](Mask s) {
    result.decomposable = true;
    result.certificate = SeparationCertificate{Matching(boundary_of_mask(g, s)), to_vertices(s)};
    return false;
  });
  return result;
}

MmsResult mms_exact(const Graph& g) {
  MmsResult best;
  std::vector<char> blocked(g.order(), 0);
  for_each_side_mask(g, [&](Mask s) {
    EdgeList cut = boundary_of_mask(g, s);
    std::fill(blocked.begin(), blocked.end(), 0);
    for (const Edge& e : cut) blocked[e.u] = blocked[e.v] = 1;
    Matching rest = maximum_matching(g, blocked);
    const int value = static_cast<int>(cut.size()) + rest.size();
    auto side = to_vertices(s);
    if (!best.certificate || value > best.value ||
        (value == best.value && side < best.certificate->witness_side)) {
      cut.insert(cut.end(), rest.edges.begin(), rest.edges.end());
      best.value = value;
      best.certificate = SeparationCertificate{Matching(std::move(cut)), std::move(side)};
    }
    return true;
  });
  if (best.certificate && !validate_certificate(g, *best.certificate)) {
    throw InternalError("mms solver produced an invalid certificate");
  }
  return best;
}

int mms_oracle(const Graph& g) {
  require_connected(g);
  if (g.size() > kOracleMaxEdges) {
    throw PreconditionError("bound_exceeded", "oracle limited to " +
                                             std::to_string(kOracleMaxEdges) + " edges");
  }
  int best = 0;
  enumerate_matchings(g, [&](const Matching& m) {
    if (m.size() > best && is_separating(g, m)) best = m.size();
    return true;
  });
  return best;
}

SeparationCertificate bridge_separating_matching(const Graph& g, const Edge& bridge) {
  require_connected(g);
  if (!classify_degrees(g).is_cubic) throw PreconditionError("not_cubic", "graph is not cubic");
  EdgeList all_bridges = bridges(g);
  if (std::find(all_bridges.begin(), all_bridges.end(), bridge) == all_bridges.end()) {
    throw PreconditionError("not_a_bridge", "edge " + to_string(bridge) + " is not a bridge");
  }
  Matching m = maximum_matching(g);
  if (!m.contains(bridge)) {
    EdgeList swapped;
    for (const Edge& e : m.edges) {
      if (!e.touches(bridge.u) && !e.touches(bridge.v)) swapped.push_back(e);
    }
    swapped.push_back(bridge);
    m = Matching(std::move(swapped));
  }
  std::vector<int> label = component_labels(g.without_edges(m.edges));
  SeparationCertificate cert{m, {}};
  for (Vertex v = 0; v < g.order(); ++v) {
    if (label[v] == label[bridge.u]) cert.witness_side.push_back(v);
  }
  if (!validate_certificate(g, cert)) throw InternalError("bridge swap is not separating");
  return cert;
}

Matching bridge_disconnecting_pm(const Graph& g) {
  if (!classify_degrees(g).is_cubic) throw PreconditionError("not_cubic", "graph is not cubic");
  EdgeList all_bridges = bridges(g);
  if (all_bridges.empty()) throw PreconditionError("no_bridge", "graph has no bridge");
  Matching m = maximum_matching(g);
  if (!is_perfect_matching(g, m)) {
    throw PreconditionError("no_perfect_matching", "graph has no perfect matching");
  }
  for (const Edge& b : all_bridges) {
    if (m.contains(b)) return m;
  }
  // A bridge uv outside a perfect matching would leave u's side with one
  // vertex of degree 2 and the rest of degree 3, hence odd order.
  throw InternalError("perfect matching avoids every bridge of a cubic graph");
}

Matching lift_cut_from_contraction(const Graph& g, const ContractionMap& cm,
                                   std::span<const int> cut_edges) {
  if (!is_separating(cm.contracted, cut_edges)) {
    throw PreconditionError("not_separating",
                            "cut is not a separating matching of the contraction");
  }
  EdgeList lifted;
  for (int i : cut_edges) {
    const auto& path = cm.edge_origin.at(i).path;
    lifted.emplace_back(path[0], path[1]);
  }
  Matching m(std::move(lifted));
  if (!is_separating(g, m)) throw InternalError("lifted cut does not separate the graph");
  return m;
}

bool is_separating(const Multigraph& h, std::span<const int> edges) {
  std::vector<char> used(h.order(), 0);
  std::vector<int> sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (int i : sorted) {
    if (i < 0 || i >= h.size()) return false;
    const MultiEdge& e = h.edges()[i];
    if (e.is_loop() || used[e.u] || used[e.v]) return false;
    used[e.u] = used[e.v] = 1;
  }
  return h.components_without(sorted) > h.components();
}

MultigraphDecomposability mms_multigraph_decomposable(const Multigraph& h) {
  if (!h.is_cubic()) throw PreconditionError("not_cubic", "multigraph is not cubic");
  if (!h.is_two_edge_connected()) {
    throw PreconditionError("not_2_edge_connected", "multigraph is not 2-edge-connected");
  }
  MultigraphDecomposability result;
  if (h.order() == 2) return result;  // the theta multigraph

  const auto& edges = h.edges();
  auto parallel = std::adjacent_find(edges.begin(), edges.end());
  if (parallel != edges.end()) {
    // The edges leaving a doubled pair {u, v} form a matching cut.
    const Vertex u = parallel->u;
    const Vertex v = parallel->v;
    for (Vertex end : {u, v}) {
      for (int i : h.incident(end)) {
        const MultiEdge& e = edges[i];
        if (!(e.u == u && e.v == v)) result.cut_edges.push_back(i);
      }
    }
    std::sort(result.cut_edges.begin(), result.cut_edges.end());
    result.witness_side = {u, v};
    result.decomposable = true;
    if (!is_separating(h, result.cut_edges)) {
      throw InternalError("parallel-pair cut is not a matching separator");
    }
    return result;
  }

  Graph simple = h.to_simple();
  Decomposability d = is_decomposable(simple);
  if (!d.decomposable) {
    if (!are_isomorphic(simple, named::complete(4)) &&
        !are_isomorphic(simple, named::complete_bipartite(3, 3))) {
      throw InternalError("nondecomposable cubic graph other than K4 and K3,3");
    }
    return result;
  }
  result.decomposable = true;
  result.witness_side = d.certificate->witness_side;
  for (const Edge& e : d.certificate->matching.edges) {
    auto it = std::lower_bound(edges.begin(), edges.end(), MultiEdge(e.u, e.v));
    result.cut_edges.push_back(static_cast<int>(it - edges.begin()));
  }
  return result;
}

}  // namespace sepmatch
