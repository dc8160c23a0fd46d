#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sepmatch/graph.hpp"
#include "sepmatch/matching.hpp"

namespace sepmatch {

// color[i] in {1, 2, 3} for edge index i of the host.
struct EdgeColoring {
  std::vector<int> color;

  EdgeList color_class(const Graph& g, int c) const;
};

bool is_proper_3_edge_coloring(const Graph& g, const EdgeColoring& coloring);

// Constructive König for bicubic graphs: a perfect matching becomes color 1,
// the remaining even cycles alternate colors 2 and 3.
// Throws PreconditionError("not_bicubic").
EdgeColoring proper_3_edge_coloring(const Graph& g);

// Spanning edge subset with its degree census: census[d] = number of vertices
// of degree d in the subgraph.
struct SpanningSubgraphCertificate {
  EdgeList edges;
  std::vector<int> degree_census;
};

SpanningSubgraphCertificate make_spanning_certificate(const Graph& g, EdgeList edges);
// The complement E(g) \ m as a spanning certificate.
SpanningSubgraphCertificate complement_certificate(const Graph& g, const Matching& m);

struct TwoFactorHamiltonicity {
  bool value = false;
  // Set when value is false: a perfect matching whose complement is a
  // disconnected 2-factor, and that 2-factor.
  std::optional<Matching> witness_matching;
  std::optional<SpanningSubgraphCertificate> witness_two_factor;
};

// True iff g - M is connected for every perfect matching M. Stops at the
// first disconnected complement. Throws PreconditionError on non-cubic or
// disconnected input.
TwoFactorHamiltonicity is_two_factor_hamiltonian(const Graph& g);

struct Validation {
  bool ok = false;
  std::string reason;
  explicit operator bool() const { return ok; }
};

// Disconnected, spanning, exactly two vertices of degree 3, all others of
// degree 2, edges drawn from g, census consistent.
Validation validate_almost_two_factor(const Graph& g, const SpanningSubgraphCertificate& s);

}  // namespace sepmatch
