#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sepmatch/graph.hpp"

namespace sepmatch {

// The eight connected subcubic graphs without a matching cut. Index order:
//   0 K3, 1 K4-e, 2 K2,3, 3 K4, 4 K3,3, 5 K4 with one edge subdivided,
//   6 K4 with two disjoint edges subdivided, 7 K3,3 with one edge subdivided.
struct ExceptionalSubcubic {
  int index = 0;
  std::string name;
  Graph graph;
  std::string canonical;
};

const std::vector<ExceptionalSubcubic>& exceptional_subcubic_graphs();

// Index of the exceptional graph isomorphic to g, if any. Throws
// PreconditionError("not_subcubic") when g has a vertex of degree > 3.
std::optional<int> recognize_exceptional_subcubic(const Graph& g);

}  // namespace sepmatch
