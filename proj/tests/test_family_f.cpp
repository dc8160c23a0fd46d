#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "sepmatch/canonical.hpp"
#include "sepmatch/errors.hpp"
#include "sepmatch/factors.hpp"
#include "sepmatch/family_f.hpp"
#include "sepmatch/generator.hpp"
#include "sepmatch/graph6.hpp"
#include "sepmatch/named_graphs.hpp"
#include "sepmatch/separation.hpp"
#include "sepmatch/structure.hpp"

using namespace sepmatch;

namespace {

const Graph& k33() {
  static const Graph g = named::complete_bipartite(3, 3);
  return g;
}

std::string reason_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const PreconditionError& e) {
    return e.reason();
  }
  return "";
}

// Two copies of K2,3 whose degree-2 vertices are joined by a perfect matching.
Graph two_k23_joined() {
  EdgeList e;
  for (int base : {0, 5}) {
    for (int hub = 0; hub < 2; ++hub) {
      for (int leaf = 2; leaf < 5; ++leaf) e.emplace_back(base + hub, base + leaf);
    }
  }
  for (int leaf = 2; leaf < 5; ++leaf) e.emplace_back(leaf, leaf + 5);
  return Graph(10, e);
}

// 2FH by exhaustive perfect matchings and independent connectivity.
bool brute_2fh(const Graph& g) {
  bool ok = true;
  enumerate_perfect_matchings(g, [&](const Matching& m) {
    ok = oracle::components(g.order(), oracle::minus(g.edges(), m.edges)) == 1;
    return ok;
  });
  return ok;
}

const std::array<std::array<int, 3>, 6> kPairings = {
    {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

// Distinct products (g, u) * (K3,3, 0) over every u and pairing.
std::size_t products_with_k33(const Graph& g) {
  std::set<std::string> forms;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (const auto& p : kPairings) forms.insert(canonical_form(star_product({g, u, k33(), 0, p})));
  }
  return forms.size();
}

}  // namespace

TEST_CASE("star product of two K3,3") {
  StarProduct p = star_product_detail({k33(), 0, k33(), 0, {0, 1, 2}});
  CHECK(p.graph.order() == 10);
  CHECK(oracle::isomorphic(p.graph, two_k23_joined()));
  CHECK(p.left[0] == -1);
  CHECK(p.right[0] == -1);
  for (Vertex x = 1; x < 6; ++x) {
    CHECK(p.left[x] == x - 1);
    CHECK(p.right[x] == x + 4);
  }
  EdgeList cut(p.cut.begin(), p.cut.end());
  std::sort(cut.begin(), cut.end());
  CHECK(oracle::is_matching(cut));
  std::vector<Vertex> side = {0, 1, 2, 3, 4};
  CHECK(edge_boundary(p.graph, side) == cut);
}

TEST_CASE("star product of Heawood and K3,3") {
  Graph g = star_product({named::heawood(), 0, k33(), 0, {0, 1, 2}});
  CHECK(g.order() == 18);
  CHECK(classify_degrees(g).is_bicubic);
  CHECK(oracle::is_bipartite(g));
}

TEST_CASE("star product preconditions") {
  CHECK(reason_of([] { star_product({named::path(3), 0, k33(), 0, {0, 1, 2}}); }) == "not_cubic");
  CHECK(reason_of([] { star_product({k33(), 6, k33(), 0, {0, 1, 2}}); }) == "bad_vertex");
  CHECK(reason_of([] { star_product({k33(), 0, k33(), 0, {0, 0, 2}}); }) == "bad_pairing");
  CHECK(reason_of([] { star_product({k33(), 0, k33(), 0, {0, 1, 3}}); }) == "bad_pairing");
}

TEST_CASE("every star product of small cubic graphs is cubic with a 3-edge matching cut") {
  std::vector<Graph> factors = enumerate_range(GraphClass::kCubic, 4, 8);
  for (const Graph& a : factors) {
    for (const Graph& b : factors) {
      for (Vertex u = 0; u < a.order(); u += 3) {
        for (const auto& p : kPairings) {
          StarProduct sp = star_product_detail({a, u, b, 1, p});
          REQUIRE(sp.graph.order() == a.order() + b.order() - 2);
          REQUIRE(classify_degrees(sp.graph).is_cubic);
          std::vector<Vertex> side;
          for (Vertex x = 0; x < a.order(); ++x) {
            if (sp.left[x] >= 0) side.push_back(sp.left[x]);
          }
          EdgeList cut(sp.cut.begin(), sp.cut.end());
          std::sort(cut.begin(), cut.end());
          REQUIRE(edge_boundary(sp.graph, side) == cut);
          REQUIRE(oracle::is_matching(cut));
          REQUIRE(oracle::separates(sp.graph, cut));
          const bool both_bip = oracle::is_bipartite(a) && oracle::is_bipartite(b);
          if (both_bip) REQUIRE(oracle::is_bipartite(sp.graph));
        }
      }
    }
  }
}

TEST_CASE("generation at small bounds") {
  const auto& six = generate_family_f(6);
  REQUIRE(six.size() == 1);
  CHECK(oracle::isomorphic(six[0].graph, k33()));

  const auto& ten = generate_family_f(10);
  REQUIRE(ten.size() == 2);
  CHECK(oracle::isomorphic(ten[1].graph, two_k23_joined()));

  const auto& fourteen = generate_family_f(14);
  REQUIRE(fourteen.size() == 5);
  int heawood = 0, k33_chain = 0;
  for (const FamilyFMember& m : fourteen) {
    if (m.graph.order() != 14) continue;
    if (are_isomorphic(m.graph, named::heawood())) {
      ++heawood;
    } else {
      ++k33_chain;
      CHECK(m.base == FamilyBase::kK33);
    }
  }
  CHECK(heawood == 1);
  CHECK(k33_chain == 2);
  CHECK(recognize_exceptional_f(fourteen[2].graph).has_value() !=
        recognize_exceptional_f(fourteen[3].graph).has_value());
}

TEST_CASE("members are sorted, distinct, bicubic and replayable") {
  const auto& members = generate_family_f(22);
  std::set<std::string> forms;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const FamilyFMember& m = members[i];
    REQUIRE(forms.insert(canonical_form(m.graph)).second);
    REQUIRE(m.canonical == canonical_form(m.graph));
    REQUIRE(m.graph.order() % 4 == 2);
    REQUIRE(classify_degrees(m.graph).is_bicubic);
    REQUIRE(replay_trace(m.base, m.steps) == m.graph);
    int order = family_base_graph(m.base).order();
    for (const StarStep& s : m.steps) order += family_base_graph(s.factor).order() - 2;
    REQUIRE(m.graph.order() == order);
    if (i > 0) {
      const FamilyFMember& prev = members[i - 1];
      REQUIRE(std::make_pair(prev.graph.order(), prev.canonical) <
              std::make_pair(m.graph.order(), m.canonical));
    }
  }
}

TEST_CASE("membership") {
  auto k = is_in_family_f(k33());
  REQUIRE(k);
  CHECK(k->base == FamilyBase::kK33);
  CHECK(k->steps.empty());
  auto h = is_in_family_f(named::heawood().relabeled(std::vector<int>{13, 0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}));
  REQUIRE(h);
  CHECK(h->base == FamilyBase::kHeawood);
  CHECK_FALSE(is_in_family_f(named::cube()));
  CHECK(reason_of([] { is_in_family_f(named::complete(4)); }) == "not_bicubic");
  CHECK(reason_of([] { is_in_family_f(disjoint_union(k33(), k33())); }) == "disconnected");
  for (const Graph& g : enumerate_graphs({14, GraphClass::kBicubic})) {
    auto m = is_in_family_f(g);
    if (m) REQUIRE(are_isomorphic(m->graph, g));
  }
}

TEST_CASE("every member up to 22 vertices is 2-factor Hamiltonian") {
  for (const FamilyFMember& m : generate_family_f(22)) {
    REQUIRE(brute_2fh(m.graph));
    REQUIRE(is_two_factor_hamiltonian(m.graph).value);
  }
}

TEST_CASE("exceptional graphs") {
  const auto& ex = exceptional_f_graphs();
  REQUIRE(ex.size() == 4);
  const std::vector<int> orders = {6, 10, 14, 18};
  for (int i = 0; i < 4; ++i) {
    CHECK(ex[i].index == i);
    CHECK(ex[i].graph.order() == orders[i]);
    CHECK(is_in_family_f(ex[i].graph).has_value());
    CHECK(recognize_exceptional_f(ex[i].graph) == i);
    for (int j = 0; j < i; ++j) CHECK_FALSE(are_isomorphic(ex[i].graph, ex[j].graph));
  }
  CHECK(oracle::isomorphic(ex[0].graph, k33()));
  CHECK(oracle::isomorphic(ex[1].graph, two_k23_joined()));
  CHECK_FALSE(recognize_exceptional_f(named::heawood()));
}

TEST_CASE("exceptional values") {
  auto values = exceptional_f_values();
  REQUIRE(values.size() == 4);
  CHECK(values[0].mms == 0);
  CHECK(values[1].mms == 3);
  CHECK(values[2].mms == 5);
  CHECK(values[2].mms <= 5);
  CHECK(values[3].mms <= 7);
  for (const auto& v : values) {
    CHECK(v.within_bound);
    CHECK(v.mms == mms_exact(exceptional_f_graphs()[v.index].graph).value);
  }
  // The 10-vertex value by brute force over all matchings.
  CHECK(oracle::mms(exceptional_f_graphs()[1].graph) == 3);
}

TEST_CASE("almost 2-factor for Heawood") {
  auto h = is_in_family_f(named::heawood());
  REQUIRE(h);
  AlmostTwoFactorResult r = almost_two_factor(*h);
  REQUIRE(r.certificate);
  CHECK_FALSE(r.exceptional_index);
  CHECK(validate_almost_two_factor(h->graph, *r.certificate));
  EdgeList m = oracle::minus(h->graph.edges(), r.certificate->edges);
  CHECK(m.size() == 6);
  CHECK(oracle::is_matching(m));
  CHECK(oracle::separates(h->graph, m));
}

TEST_CASE("almost 2-factor tags the exceptional graphs") {
  for (const ExceptionalF& e : exceptional_f_graphs()) {
    auto m = is_in_family_f(e.graph);
    REQUIRE(m);
    AlmostTwoFactorResult r = almost_two_factor(*m);
    CHECK_FALSE(r.certificate);
    CHECK(r.exceptional_index == e.index);
  }
}

TEST_CASE("almost 2-factor certificates for every member up to 22 vertices") {
  int transferred = 0;
  for (const FamilyFMember& m : generate_family_f(22)) {
    AlmostTwoFactorResult r = almost_two_factor(m);
    const auto ex = recognize_exceptional_f(m.graph);
    REQUIRE(r.exceptional_index == ex);
    if (ex) continue;
    REQUIRE(r.certificate);
    REQUIRE(validate_almost_two_factor(m.graph, *r.certificate));
    EdgeList sep = oracle::minus(m.graph.edges(), r.certificate->edges);
    REQUIRE(static_cast<int>(sep.size()) == m.graph.order() / 2 - 1);
    REQUIRE(oracle::separates(m.graph, sep));
    transferred += r.method == "star_transfer";
    // Members built through a Heawood factor get a transferred certificate.
    bool uses_heawood = m.base == FamilyBase::kHeawood;
    for (const StarStep& s : m.steps) uses_heawood = uses_heawood || s.factor == FamilyBase::kHeawood;
    if (uses_heawood && m.graph.order() > 14) REQUIRE(r.method == "star_transfer");
  }
  CHECK(transferred > 0);
}

TEST_CASE("products of the exceptional graphs with K3,3") {
  const auto& ex = exceptional_f_graphs();
  CHECK(products_with_k33(ex[0].graph) == 1);
  CHECK(products_with_k33(ex[1].graph) == 2);
  CHECK(products_with_k33(ex[2].graph) == 4);
  CHECK(products_with_k33(ex[3].graph) == 3);
}

TEST_CASE("2-factor Hamiltonicity is preserved exactly by star products") {
  CHECK(gorsky_check({k33(), 0, k33(), 0, {0, 1, 2}}));
  CHECK(is_two_factor_hamiltonian(star_product({k33(), 0, k33(), 0, {0, 1, 2}})).value);
  CHECK(reason_of([] { gorsky_check({named::prism(), 0, k33(), 0, {0, 1, 2}}); }) == "not_bicubic");

  Graph q3k33 = star_product({named::cube(), 0, k33(), 0, {0, 1, 2}});
  CHECK_FALSE(brute_2fh(q3k33));
  CHECK(gorsky_check({named::cube(), 0, k33(), 0, {0, 1, 2}}));

  for (const Graph& a : enumerate_range(GraphClass::kBicubic, 6, 10)) {
    for (const Graph& b : enumerate_range(GraphClass::kBicubic, 6, 10)) {
      for (const auto& p : kPairings) {
        REQUIRE(gorsky_check({a, 0, b, 0, p}));
        REQUIRE(brute_2fh(star_product({a, 0, b, 0, p})) == (brute_2fh(a) && brute_2fh(b)));
      }
    }
  }
}

TEST_CASE("2FH versus membership scan at small orders") {
  VerificationReport r = funk_scan(10);
  CHECK(r.theorem_id == "conj-funk");
  CHECK(r.verified());
  CHECK(r.graphs_checked == 1 + 1 + 2);
  const auto& rows = r.details["graphs"];
  REQUIRE(rows.size() == 4);
  int in_family = 0;
  for (const auto& row : rows) {
    const Graph g = parse_graph6(row["graph6"].get<std::string>());
    const bool fh = row["two_factor_hamiltonian"].get<bool>();
    CHECK(fh == brute_2fh(g));
    CHECK(fh == row["in_family"].get<bool>());
    in_family += fh;
    if (g.order() == 8) CHECK_FALSE(fh);
    if (g.order() == 6) CHECK(fh);
  }
  CHECK(in_family == 2);
}
