#pragma once

#include <string>
#include <vector>

#include "sepmatch/graph.hpp"

namespace sepmatch {

inline constexpr int kMaxCanonicalOrder = 32;

// Canonical relabeling: perm[v] is the canonical position of vertex v.
// Exact search over equitable-partition refinements with automorphism
// pruning. Throws PreconditionError above kMaxCanonicalOrder vertices.
std::vector<int> canonical_labeling(const Graph& g);

// graph6 string of the canonically relabeled graph. Equal iff isomorphic.
std::string canonical_form(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace sepmatch
