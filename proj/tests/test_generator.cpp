#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "sepmatch/canonical.hpp"
#include "sepmatch/errors.hpp"
#include "sepmatch/generator.hpp"
#include "sepmatch/graph6.hpp"
#include "sepmatch/named_graphs.hpp"
#include "sepmatch/structure.hpp"

using namespace sepmatch;

namespace {

// Sum of n!/|Aut(G)| over a list of pairwise non-isomorphic graphs: the
// number of labeled graphs they represent.
long long labeled_total(const std::vector<Graph>& graphs) {
  long long total = 0;
  for (const Graph& g : graphs) {
    const long long aut = oracle::automorphisms(g);
    REQUIRE(oracle::factorial(g.order()) % aut == 0);
    total += oracle::factorial(g.order()) / aut;
  }
  return total;
}

std::string reason_of(const EnumerationSpec& spec) {
  try {
    validate_spec(spec);
  } catch (const PreconditionError& e) {
    return e.reason();
  }
  return "";
}

}  // namespace

TEST_CASE("cubic examples") {
  const auto& four = enumerate_graphs({4, GraphClass::kCubic});
  REQUIRE(four.size() == 1);
  CHECK(are_isomorphic(four[0], named::complete(4)));
  const auto& six = enumerate_graphs({6, GraphClass::kCubic});
  REQUIRE(six.size() == 2);
  const bool k33_prism = (are_isomorphic(six[0], named::complete_bipartite(3, 3)) &&
                          are_isomorphic(six[1], named::prism())) ||
                         (are_isomorphic(six[1], named::complete_bipartite(3, 3)) &&
                          are_isomorphic(six[0], named::prism()));
  CHECK(k33_prism);
  CHECK(enumerate_graphs({8, GraphClass::kCubic}).size() == 5);
}

TEST_CASE("connected cubic counts match standard tables") {
  const std::vector<std::size_t> expected = {1, 2, 5, 19, 85, 509};
  for (int n = 4; n <= 14; n += 2) {
    CHECK(enumerate_graphs({n, GraphClass::kCubic}).size() == expected[(n - 4) / 2]);
  }
}

TEST_CASE("connected cubic counts agree with labeled brute force n <= 8") {
  for (int n = 4; n <= 8; n += 2) {
    const long long labeled = oracle::count_labeled_cubic(n, [](const Graph&) { return true; });
    CHECK(labeled_total(enumerate_graphs({n, GraphClass::kCubic})) == labeled);
  }
}

TEST_CASE("connected subcubic counts agree with labeled brute force n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    CHECK(labeled_total(enumerate_graphs({n, GraphClass::kSubcubic})) == oracle::count_labeled_subcubic(n));
  }
}

TEST_CASE("connected subcubic counts match standard tables") {
  const std::vector<std::size_t> expected = {1, 1, 2, 6, 10, 29, 64, 194, 531, 1733};
  for (int n = 1; n <= 10; ++n) {
    CHECK(enumerate_graphs({n, GraphClass::kSubcubic}).size() == expected[n - 1]);
  }
}

TEST_CASE("bicubic and claw-free filters agree with labeled brute force n <= 8") {
  auto bip = [](const Graph& g) { return oracle::is_bipartite(g); };
  auto clawfree = [](const Graph& g) { return oracle::count_claws(g) == 0; };
  for (int n = 4; n <= 8; n += 2) {
    CHECK(labeled_total(enumerate_graphs({n, GraphClass::kBicubic})) == oracle::count_labeled_cubic(n, bip));
    CHECK(labeled_total(enumerate_graphs({n, GraphClass::kClawFreeCubic})) ==
          oracle::count_labeled_cubic(n, clawfree));
  }
}

TEST_CASE("connected bicubic counts match standard tables") {
  const std::vector<std::size_t> expected = {1, 1, 2, 5, 13};
  for (int n = 6; n <= 14; n += 2) {
    CHECK(enumerate_graphs({n, GraphClass::kBicubic}).size() == expected[(n - 6) / 2]);
  }
}

TEST_CASE("filtered classes are exactly the matching cubic graphs") {
  for (int n = 4; n <= 14; n += 2) {
    std::size_t bip = 0, cf = 0;
    for (const Graph& g : enumerate_graphs({n, GraphClass::kCubic})) {
      bip += oracle::is_bipartite(g);
      cf += oracle::count_claws(g) == 0;
    }
    CHECK(enumerate_graphs({n, GraphClass::kBicubic}).size() == bip);
    CHECK(enumerate_graphs({n, GraphClass::kClawFreeCubic}).size() == cf);
  }
}

TEST_CASE("streams are duplicate-free and class-sound") {
  for (GraphClass c : {GraphClass::kCubic, GraphClass::kSubcubic, GraphClass::kBicubic,
                       GraphClass::kClawFreeCubic}) {
    const int hi = c == GraphClass::kSubcubic ? 9 : 14;
    for (int n = 1; n <= hi; ++n) {
      for (bool connected : {true, false}) {
        if (c != GraphClass::kSubcubic && n % 2) continue;
        if (c != GraphClass::kSubcubic && n < 4) continue;
        if (!connected && n > 12) continue;
        const auto& graphs = enumerate_graphs({n, c, connected});
        std::set<std::string> forms;
        for (const Graph& g : graphs) {
          REQUIRE(forms.insert(canonical_form(g)).second);
          REQUIRE(g.order() == n);
          const DegreeClass d = classify_degrees(g);
          REQUIRE(d.is_subcubic);
          if (c != GraphClass::kSubcubic) REQUIRE(d.is_cubic);
          if (c == GraphClass::kBicubic) REQUIRE(oracle::is_bipartite(g));
          if (c == GraphClass::kClawFreeCubic) REQUIRE(oracle::count_claws(g) == 0);
          if (connected) REQUIRE(oracle::components(g) == 1);
        }
      }
    }
  }
}

TEST_CASE("disconnected streams are multisets of connected components") {
  // Cubic n = 8 adds K4 + K4; n = 12 adds K4 + each of the 5 on 8, both on 6
  // paired with each other (3), and three K4 copies.
  CHECK(enumerate_graphs({8, GraphClass::kCubic, false}).size() == 6);
  CHECK(enumerate_graphs({12, GraphClass::kCubic, false}).size() == 85 + 5 + 3 + 1);
  // Subcubic n = 3: P3, K3, K2 + K1, three isolated vertices.
  CHECK(enumerate_graphs({3, GraphClass::kSubcubic, false}).size() == 4);
}

TEST_CASE("enumerate_range skips impossible orders") {
  std::vector<Graph> all = enumerate_range(GraphClass::kCubic, 3, 8);
  CHECK(all.size() == 1 + 2 + 5);
  CHECK(enumerate_range(GraphClass::kBicubic, 4, 10).size() == 1 + 1 + 2);
}

TEST_CASE("spec validation") {
  CHECK(reason_of({7, GraphClass::kCubic}) == "odd_order");
  CHECK(reason_of({9, GraphClass::kBicubic}) == "odd_order");
  CHECK(reason_of({16, GraphClass::kCubic}) == "bound_exceeded");
  CHECK(reason_of({11, GraphClass::kSubcubic}) == "bound_exceeded");
  CHECK(reason_of({-1, GraphClass::kSubcubic}) == "bad_order");
  CHECK(reason_of({14, GraphClass::kClawFreeCubic}) == "");
  CHECK_THROWS_AS(enumerate_graphs({16, GraphClass::kBicubic}), PreconditionError);
}

TEST_CASE("class names") {
  CHECK(parse_graph_class("cubic") == GraphClass::kCubic);
  CHECK(parse_graph_class("subcubic") == GraphClass::kSubcubic);
  CHECK(parse_graph_class("bicubic") == GraphClass::kBicubic);
  CHECK(parse_graph_class("clawfree_cubic") == GraphClass::kClawFreeCubic);
  CHECK_FALSE(parse_graph_class("quartic"));
  for (GraphClass c : {GraphClass::kCubic, GraphClass::kSubcubic, GraphClass::kBicubic,
                       GraphClass::kClawFreeCubic}) {
    CHECK(parse_graph_class(to_string(c)) == c);
  }
}

TEST_CASE("random cubic graphs") {
  CHECK(are_isomorphic(random_cubic(4, 1), named::complete(4)));
  CHECK(are_isomorphic(random_cubic(4, 99), named::complete(4)));
  CHECK(random_cubic(20, 5) == random_cubic(20, 5));
  CHECK(emit_graph6(random_cubic(30, 77)) == emit_graph6(random_cubic(30, 77)));
  std::set<std::string> distinct;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    Graph g = random_cubic(12, seed);
    REQUIRE(g.order() == 12);
    REQUIRE(classify_degrees(g).is_cubic);
    REQUIRE(oracle::components(g) == 1);
    distinct.insert(canonical_form(g));
  }
  // 85 classes exist; a thousand draws should see most of them.
  CHECK(distinct.size() > 40);
  CHECK_THROWS_AS(random_cubic(7, 1), PreconditionError);
  CHECK_THROWS_AS(random_cubic(2, 1), PreconditionError);
}

TEST_CASE("ring of diamonds and random claw-free cubic graphs") {
  for (int k = 2; k <= 5; ++k) {
    Graph g = ring_of_diamonds(k);
    CHECK(g.order() == 4 * k);
    CHECK(classify_degrees(g).is_cubic);
    CHECK(oracle::count_claws(g) == 0);
    CHECK(oracle::components(g) == 1);
  }
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Graph g = random_clawfree_cubic(4 + 2 * static_cast<int>(seed % 3), seed);
    REQUIRE(classify_degrees(g).is_cubic);
    REQUIRE(oracle::count_claws(g) == 0);
    REQUIRE(oracle::components(g) == 1);
    REQUIRE(random_clawfree_cubic(4 + 2 * static_cast<int>(seed % 3), seed) == g);
  }
}
