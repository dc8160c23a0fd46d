#include "sepmatch/exceptional.hpp"

#include "sepmatch/canonical.hpp"
#include "sepmatch/errors.hpp"
#include "sepmatch/named_graphs.hpp"

namespace sepmatch {
namespace {

std::vector<ExceptionalSubcubic> build_reference_set() {
  using namespace named;
  const Graph k4 = complete(4);
  const Graph k33 = complete_bipartite(3, 3);
  const Edge k4_edge(0, 1);
  const Edge k4_matching[] = {Edge(0, 1), Edge(2, 3)};
  const Edge k33_edge(0, 3);

  std::vector<std::pair<std::string, Graph>> graphs = {
      {"K3", cycle(3)},
      {"K4-e", k4_minus_edge()},
      {"K2,3", complete_bipartite(2, 3)},
      {"K4", k4},
      {"K3,3", k33},
      {"K4 one edge subdivided", subdivide(k4, std::span(&k4_edge, 1))},
      {"K4 two disjoint edges subdivided", subdivide(k4, k4_matching)},
      {"K3,3 one edge subdivided", subdivide(k33, std::span(&k33_edge, 1))},
  };
  std::vector<ExceptionalSubcubic> out;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    out.push_back({static_cast<int>(i), graphs[i].first, graphs[i].second,
                   canonical_form(graphs[i].second)});
  }
  return out;
}

}  // namespace

const std::vector<ExceptionalSubcubic>& exceptional_subcubic_graphs() {
  static const std::vector<ExceptionalSubcubic> set = build_reference_set();
  return set;
}

std::optional<int> recognize_exceptional_subcubic(const Graph& g) {
  if (g.max_degree() > 3) {
    throw PreconditionError("not_subcubic", "graph has a vertex of degree > 3");
  }
  if (g.order() < 3 || g.order() > 7) return std::nullopt;
  const std::string form = canonical_form(g);
  for (const auto& ex : exceptional_subcubic_graphs()) {
    if (ex.canonical == form) return ex.index;
  }
  return std::nullopt;
}

}  // namespace sepmatch
