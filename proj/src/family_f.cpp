#include "sepmatch/family_f.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <mutex>

#include "sepmatch/canonical.hpp"
#include "sepmatch/errors.hpp"
#include "sepmatch/generator.hpp"
#include "sepmatch/graph6.hpp"
#include "sepmatch/named_graphs.hpp"
#include "sepmatch/separation.hpp"
#include "sepmatch/structure.hpp"

namespace sepmatch {

StarProduct star_product_detail(const StarProductSpec& spec) {
  const Graph& g1 = spec.g1;
  const Graph& g2 = spec.g2;
  if (!classify_degrees(g1).is_cubic || !classify_degrees(g2).is_cubic) {
    throw PreconditionError("not_cubic", "star product factors must be cubic");
  }
  if (spec.u < 0 || spec.u >= g1.order() || spec.v < 0 || spec.v >= g2.order()) {
    throw PreconditionError("bad_vertex", "star product vertex out of range");
  }
  auto sorted = spec.pairing;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 3>{0, 1, 2}) {
    throw PreconditionError("bad_pairing", "pairing must be a permutation of 0,1,2");
  }

  StarProduct out;
  out.left.assign(g1.order(), -1);
  out.right.assign(g2.order(), -1);
  int next = 0;
  for (Vertex x = 0; x < g1.order(); ++x) {
    if (x != spec.u) out.left[x] = next++;
  }
  for (Vertex x = 0; x < g2.order(); ++x) {
    if (x != spec.v) out.right[x] = next++;
  }
  EdgeList edges;
  for (const Edge& e : g1.edges()) {
    if (!e.touches(spec.u)) edges.emplace_back(out.left[e.u], out.left[e.v]);
  }
  for (const Edge& e : g2.edges()) {
    if (!e.touches(spec.v)) edges.emplace_back(out.right[e.u], out.right[e.v]);
  }
  auto nu = g1.neighbors(spec.u);
  auto nv = g2.neighbors(spec.v);
  for (int i = 0; i < 3; ++i) {
    out.cut[i] = Edge(out.left[nu[i]], out.right[nv[spec.pairing[i]]]);
    edges.push_back(out.cut[i]);
  }
  // The two sides are vertex-disjoint, so the join can never duplicate an edge.
  out.graph = Graph(next, edges);
  return out;
}

Graph star_product(const StarProductSpec& spec) { return star_product_detail(spec).graph; }

std::string to_string(FamilyBase b) { return b == FamilyBase::kK33 ? "K33" : "H0"; }

const Graph& family_base_graph(FamilyBase b) {
  static const Graph k33 = named::complete_bipartite(3, 3);
  static const Graph h0 = named::heawood();
  return b == FamilyBase::kK33 ? k33 : h0;
}

Graph replay_trace(FamilyBase base, const std::vector<StarStep>& steps) {
  Graph g = family_base_graph(base);
  for (const StarStep& s : steps) {
    g = star_product({g, s.u, family_base_graph(s.factor), s.v, s.pairing});
  }
  return g;
}

namespace {

constexpr std::array<std::array<int, 3>, 6> kPairings = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

using MemberKey = std::pair<int, std::string>;

std::vector<FamilyFMember> build_family(int max_n) {
  std::map<MemberKey, FamilyFMember> found;
  for (FamilyBase b : {FamilyBase::kK33, FamilyBase::kHeawood}) {
    const Graph& g = family_base_graph(b);
    if (g.order() > max_n) continue;
    std::string form = canonical_form(g);
    found.emplace(MemberKey{g.order(), form}, FamilyFMember{g, b, {}, form});
  }
  // Products only grow, so walking keys in (order, form) order visits every
  // member after all its parents.
  for (auto it = found.begin(); it != found.end(); ++it) {
    const FamilyFMember parent = it->second;
    for (FamilyBase factor : {FamilyBase::kK33, FamilyBase::kHeawood}) {
      const Graph& x = family_base_graph(factor);
      const int n = parent.graph.order() + x.order() - 2;
      if (n > max_n) continue;
      for (Vertex u = 0; u < parent.graph.order(); ++u) {
        for (Vertex v = 0; v < x.order(); ++v) {
          for (const auto& pairing : kPairings) {
            StarStep step{u, factor, v, pairing};
            Graph product = star_product({parent.graph, u, x, v, pairing});
            std::string form = canonical_form(product);
            MemberKey key{n, form};
            if (found.count(key)) continue;
            FamilyFMember child{std::move(product), parent.base, parent.steps, form};
            child.steps.push_back(step);
            found.emplace(std::move(key), std::move(child));
          }
        }
      }
    }
  }
  std::vector<FamilyFMember> out;
  for (auto& [key, m] : found) out.push_back(std::move(m));
  return out;
}

struct FamilyCache {
  std::mutex mutex;
  int computed_for = -1;
  std::vector<FamilyFMember> members;
  std::map<int, std::vector<FamilyFMember>> views;
};

FamilyCache& family_cache() {
  static FamilyCache c;
  return c;
}

}  // namespace

const std::vector<FamilyFMember>& generate_family_f(int max_n) {
  if (max_n > kMaxFamilyOrder) {
    throw PreconditionError("bound_exceeded",
                            "family generation is capped at n = " + std::to_string(kMaxFamilyOrder));
  }
  FamilyCache& c = family_cache();
  std::lock_guard lock(c.mutex);
  if (auto it = c.views.find(max_n); it != c.views.end()) return it->second;
  if (c.computed_for < max_n) {
    c.members = build_family(max_n);
    c.computed_for = max_n;
  }
  std::vector<FamilyFMember> view;
  for (const auto& m : c.members) {
    if (m.graph.order() <= max_n) view.push_back(m);
  }
  return c.views.emplace(max_n, std::move(view)).first->second;
}

std::optional<FamilyFMember> is_in_family_f(const Graph& g) {
  if (!classify_degrees(g).is_bicubic) {
    throw PreconditionError("not_bicubic", "membership is defined for bicubic graphs");
  }
  if (!is_connected(g)) throw PreconditionError("disconnected", "graph is disconnected");
  const int n = g.order();
  if (n > kMaxFamilyOrder) {
    throw PreconditionError("bound_exceeded",
                            "membership is decided up to n = " + std::to_string(kMaxFamilyOrder));
  }
  // Members have 6 + 4k or 14 + 4k vertices.
  if (n % 4 != 2) return std::nullopt;
  const std::string form = canonical_form(g);
  for (const auto& m : generate_family_f(n)) {
    if (m.graph.order() == n && m.canonical == form) return m;
  }
  return std::nullopt;
}

namespace {

std::vector<ExceptionalF> build_exceptional_f() {
  const Graph& k33 = family_base_graph(FamilyBase::kK33);
  std::vector<Graph> graphs;
  graphs.push_back(k33);
  graphs.push_back(star_product({k33, 0, k33, 0, {0, 1, 2}}));
  // Vertex 0 of the first product is a degree-3 vertex of a K2,3 block.
  StarProduct second = star_product_detail({graphs[1], 0, k33, 0, {0, 1, 2}});
  graphs.push_back(second.graph);
  // The surviving hub of the broken block is adjacent to all three leaves.
  const Vertex hub = second.left[1];
  graphs.push_back(star_product({graphs[2], hub, k33, 0, {0, 1, 2}}));
  std::vector<ExceptionalF> out;
  for (int i = 0; i < 4; ++i) out.push_back({i, graphs[i], canonical_form(graphs[i])});
  return out;
}

}  // namespace

const std::vector<ExceptionalF>& exceptional_f_graphs() {
  static const std::vector<ExceptionalF> set = build_exceptional_f();
  return set;
}

std::optional<int> recognize_exceptional_f(const Graph& g) {
  if (g.order() > 18) return std::nullopt;
  const std::string form = canonical_form(g);
  for (const auto& ex : exceptional_f_graphs()) {
    if (ex.canonical == form) return ex.index;
  }
  return std::nullopt;
}

namespace {

// Almost 2-factor from a separating matching of size n/2 - 1, if one exists.
std::optional<EdgeList> solver_certificate(const Graph& g) {
  MmsResult r = mms_exact(g);
  if (!r.certificate || r.value != g.order() / 2 - 1) return std::nullopt;
  return complement_certificate(g, r.certificate->matching).edges;
}

const EdgeList& heawood_certificate() {
  static const EdgeList cert = [] {
    auto c = solver_certificate(family_base_graph(FamilyBase::kHeawood));
    if (!c) throw InternalError("Heawood graph has no separating matching of size 6");
    return *c;
  }();
  return cert;
}

// Carries an almost 2-factor `f1` of the factor on one side of `p` (centre
// vertex `c` of that factor, removed by the product) over to the product.
EdgeList transfer_certificate(const StarProduct& p, bool certified_left, Vertex c,
                              const EdgeList& f1) {
  const Graph& g = p.graph;
  const std::vector<Vertex>& map = certified_left ? p.left : p.right;
  std::vector<char> certified(g.order(), 0);
  for (Vertex x : map) {
    if (x >= 0) certified[x] = 1;
  }

  EdgeList out;
  std::vector<Vertex> f1_neighbors;  // product labels of c's F1-neighbours
  for (const Edge& e : f1) {
    if (e.touches(c)) {
      f1_neighbors.push_back(map[e.other(c)]);
    } else {
      out.emplace_back(map[e.u], map[e.v]);
    }
  }

  const EdgeColoring coloring = proper_3_edge_coloring(g);
  std::array<int, 3> cut_color{};
  for (int i = 0; i < 3; ++i) cut_color[i] = coloring.color[g.edge_index(p.cut[i])];
  if (cut_color[0] == cut_color[1] || cut_color[0] == cut_color[2] ||
      cut_color[1] == cut_color[2]) {
    throw InternalError("star product cut edges are not tricolored");
  }

  std::vector<int> kept;  // indices into p.cut
  if (f1_neighbors.size() == 3) {
    kept = {0, 1, 2};
  } else if (f1_neighbors.size() == 2) {
    for (int i = 0; i < 3; ++i) {
      const Vertex a = certified[p.cut[i].u] ? p.cut[i].u : p.cut[i].v;
      if (std::find(f1_neighbors.begin(), f1_neighbors.end(), a) != f1_neighbors.end()) {
        kept.push_back(i);
      }
    }
  } else {
    throw InternalError("certificate degree at the product vertex is not 2 or 3");
  }
  const int c1 = cut_color[kept[0]];
  const int c2 = cut_color[kept[1]];
  for (int i : kept) out.push_back(p.cut[i]);
  for (int i = 0; i < g.size(); ++i) {
    const Edge& e = g.edge(i);
    if (certified[e.u] || certified[e.v]) continue;
    if (coloring.color[i] == c1 || coloring.color[i] == c2) out.push_back(e);
  }
  return out;
}

}  // namespace

AlmostTwoFactorResult almost_two_factor(const FamilyFMember& member) {
  Graph g = family_base_graph(member.base);
  std::optional<EdgeList> cert;
  std::string method;
  if (member.base == FamilyBase::kHeawood) {
    cert = heawood_certificate();
    method = "solver";
  }
  for (const StarStep& s : member.steps) {
    const Graph& x = family_base_graph(s.factor);
    StarProduct p = star_product_detail({g, s.u, x, s.v, s.pairing});
    if (cert) {
      cert = transfer_certificate(p, true, s.u, *cert);
      method = "star_transfer";
    } else if (s.factor == FamilyBase::kHeawood) {
      cert = transfer_certificate(p, false, s.v, heawood_certificate());
      method = "star_transfer";
    } else {
      cert = solver_certificate(p.graph);
      method = "solver";
    }
    if (cert) {
      Validation ok = validate_almost_two_factor(p.graph, make_spanning_certificate(p.graph, *cert));
      if (!ok) throw InternalError("constructed almost 2-factor is invalid: " + ok.reason);
    }
    g = std::move(p.graph);
  }

  AlmostTwoFactorResult result;
  if (cert) {
    result.certificate = make_spanning_certificate(g, std::move(*cert));
    result.method = method;
    return result;
  }
  result.exceptional_index = recognize_exceptional_f(g);
  if (!result.exceptional_index) {
    throw InternalError("family member without an almost 2-factor is not exceptional");
  }
  result.method = "exceptional";
  return result;
}

std::vector<ExceptionalFValue> exceptional_f_values() {
  std::vector<ExceptionalFValue> out;
  for (const auto& ex : exceptional_f_graphs()) {
    ExceptionalFValue row;
    row.index = ex.index;
    row.order = ex.graph.order();
    row.mms = mms_exact(ex.graph).value;
    row.upper_bound = ex.index == 0 ? 0 : row.order / 2 - 2;
    row.within_bound = row.mms <= row.upper_bound;
    out.push_back(row);
  }
  return out;
}

VerificationReport funk_scan(int max_n) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.theorem_id = "conj-funk";
  report.class_scanned = {"bicubic", 6, max_n, true};
  report.artifact_version = artifact_version();
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const Graph& g : enumerate_range(GraphClass::kBicubic, 6, max_n)) {
    const bool tfh = is_two_factor_hamiltonian(g).value;
    const bool member = is_in_family_f(g).has_value();
    const std::string g6 = emit_graph6(g);
    rows.push_back({{"graph6", g6},
                    {"n", g.order()},
                    {"two_factor_hamiltonian", tfh},
                    {"in_family", member}});
    ++report.graphs_checked;
    if (tfh != member) {
      report.failures.push_back({g6, "2FH == member",
                                 std::string("2FH=") + (tfh ? "true" : "false") +
                                     " member=" + (member ? "true" : "false")});
    }
  }
  report.details["graphs"] = std::move(rows);
  report.runtime_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start).count();
  return report;
}

bool gorsky_check(const StarProductSpec& spec) {
  if (!classify_degrees(spec.g1).is_bicubic || !classify_degrees(spec.g2).is_bicubic) {
    throw PreconditionError("not_bicubic", "both factors must be bicubic");
  }
  const Graph product = star_product(spec);
  const bool lhs = is_two_factor_hamiltonian(product).value;
  const bool rhs = is_two_factor_hamiltonian(spec.g1).value &&
                   is_two_factor_hamiltonian(spec.g2).value;
  return lhs == rhs;
}

}  // namespace sepmatch
