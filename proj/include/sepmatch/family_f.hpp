#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sepmatch/factors.hpp"
#include "sepmatch/graph.hpp"
#include "sepmatch/report.hpp"

namespace sepmatch {

// (g1, u) * (g2, v): delete u and v, then join neighbors(u)[i] to
// neighbors(v)[pairing[i]] (neighbor lists sorted ascending).
struct StarProductSpec {
  Graph g1;
  Vertex u = 0;
  Graph g2;
  Vertex v = 0;
  std::array<int, 3> pairing = {0, 1, 2};
};

// Product vertex numbering: vertices of g1 other than u keep their relative
// order and come first, then those of g2 other than v.
struct StarProduct {
  Graph graph;
  std::vector<Vertex> left;   // g1 vertex -> product vertex, -1 for u
  std::vector<Vertex> right;  // g2 vertex -> product vertex, -1 for v
  // cut[i] joins left[neighbors(u)[i]] and right[neighbors(v)[pairing[i]]].
  std::array<Edge, 3> cut;
};

// Throws PreconditionError: "not_cubic", "bad_vertex", "bad_pairing".
StarProduct star_product_detail(const StarProductSpec& spec);
Graph star_product(const StarProductSpec& spec);

enum class FamilyBase { kK33, kHeawood };

std::string to_string(FamilyBase b);
const Graph& family_base_graph(FamilyBase b);

struct StarStep {
  Vertex u = 0;          // vertex of the graph built so far
  FamilyBase factor = FamilyBase::kK33;
  Vertex v = 0;          // vertex of the factor
  std::array<int, 3> pairing = {0, 1, 2};
};

struct FamilyFMember {
  Graph graph;  // exactly replay(base, steps)
  FamilyBase base = FamilyBase::kK33;
  std::vector<StarStep> steps;
  std::string canonical;
};

Graph replay_trace(FamilyBase base, const std::vector<StarStep>& steps);

inline constexpr int kMaxFamilyOrder = 30;

// Every member with at most max_n vertices, once per isomorphism class,
// sorted by (order, canonical form). Closure over all vertex choices and all
// six pairings. Throws PreconditionError("bound_exceeded") above 30.
const std::vector<FamilyFMember>& generate_family_f(int max_n);

// Throws PreconditionError("not_bicubic") / ("disconnected") /
// ("bound_exceeded").
std::optional<FamilyFMember> is_in_family_f(const Graph& g);

// The four members without an almost 2-factor, indices 0..3:
// K3,3; K3,3 * K3,3; that product starred at a K2,3 hub; and the result
// starred at the vertex joined to all three K2,3 blocks.
struct ExceptionalF {
  int index = 0;
  Graph graph;
  std::string canonical;
};

const std::vector<ExceptionalF>& exceptional_f_graphs();
std::optional<int> recognize_exceptional_f(const Graph& g);

struct AlmostTwoFactorResult {
  std::optional<SpanningSubgraphCertificate> certificate;
  std::optional<int> exceptional_index;  // set exactly when certificate is not
  // How the certificate was obtained: "solver" or "star_transfer".
  std::string method;
};

// Walks the build trace, carrying a certificate through every star product
// via a proper 3-edge-coloring of the product. Graphs built from K3,3 alone
// fall back to the exact solver until a certificate exists. Throws
// InternalError if a product's cut edges are not tricolored or a non-
// exceptional member ends without a certificate.
AlmostTwoFactorResult almost_two_factor(const FamilyFMember& member);

struct ExceptionalFValue {
  int index = 0;
  int order = 0;
  int mms = 0;
  int upper_bound = 0;  // n/2 - 2, except K3,3 whose value is 0
  bool within_bound = false;
};

std::vector<ExceptionalFValue> exceptional_f_values();

// Every connected bicubic graph up to max_n classified by 2-factor
// Hamiltonicity and membership; a graph where the two disagree is a failure
// row.
VerificationReport funk_scan(int max_n);

// 2FH(product) == 2FH(g1) && 2FH(g2). Throws PreconditionError("not_bicubic")
// when a factor is not bicubic.
bool gorsky_check(const StarProductSpec& spec);

}  // namespace sepmatch
