#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "sepmatch/contraction.hpp"
#include "sepmatch/factors.hpp"
#include "sepmatch/graph.hpp"
#include "sepmatch/matching.hpp"
#include "sepmatch/multigraph.hpp"

namespace sepmatch {

// A separating matching together with a vertex set S whose edge boundary
// lies inside the matching.
struct SeparationCertificate {
  Matching matching;
  std::vector<Vertex> witness_side;  // sorted
};

// components(g - m) > components(g). Throws PreconditionError when m is not a
// matching of g.
bool is_separating(const Graph& g, const Matching& m);

Validation validate_certificate(const Graph& g, const SeparationCertificate& cert);

// Edge boundary of `side` in g.
EdgeList edge_boundary(const Graph& g, std::span<const Vertex> side);

struct MatchingCut {
  std::vector<Vertex> side;  // connected, sorted; lexicographically least such side
  EdgeList cut;              // delta(side), a matching
};

// Visits every connected proper nonempty S whose boundary is a matching; a
// cut with two connected sides is visited once per side. Return false from
// the visitor to stop. Requires g connected with at most 64 vertices.
void for_each_matching_cut_side(const Graph& g,
                                const std::function<bool(std::span<const Vertex>)>& visit);

// Every matching cut with a connected side, once per edge set, ordered by side.
std::vector<MatchingCut> enumerate_matching_cuts(const Graph& g);

struct Decomposability {
  bool decomposable = false;
  std::optional<SeparationCertificate> certificate;
};

Decomposability is_decomposable(const Graph& g);

struct MmsResult {
  int value = 0;
  std::optional<SeparationCertificate> certificate;
};

// Maximum separating matching size: max over matching cuts delta(S) of
// |delta(S)| + nu(g - endpoints). Ties go to the lexicographically least S.
MmsResult mms_exact(const Graph& g);

// Brute force over all matchings; requires g connected and |E| <= 24.
int mms_oracle(const Graph& g);
inline constexpr int kOracleMaxEdges = 24;

// Bridge swap on a maximum matching: a separating matching of size at least
// nu(g) - 1 that contains `bridge`.
SeparationCertificate bridge_separating_matching(const Graph& g, const Edge& bridge);

// A perfect matching containing a bridge of the cubic graph g.
Matching bridge_disconnecting_pm(const Graph& g);

// Lift a matching separator of the contraction (given as edge indices of
// cm.contracted) to g: original edges are kept, a subdivided path
// contributes its first edge.
Matching lift_cut_from_contraction(const Graph& g, const ContractionMap& cm,
                                   std::span<const int> cut_edges);

// True iff removing the given multigraph edges is a matching that increases
// the component count (loops never qualify).
bool is_separating(const Multigraph& h, std::span<const int> edges);

struct MultigraphDecomposability {
  bool decomposable = false;
  std::vector<int> cut_edges;      // indices into h.edges()
  std::vector<Vertex> witness_side;
};

// For a 2-edge-connected cubic multigraph: not decomposable exactly for the
// theta multigraph, K4 and K3,3. Throws PreconditionError outside that class.
MultigraphDecomposability mms_multigraph_decomposable(const Multigraph& h);

}  // namespace sepmatch
