#pragma once

#include <array>
#include <string>
#include <vector>

#include "sepmatch/graph.hpp"
#include "sepmatch/matching.hpp"
#include "sepmatch/report.hpp"

namespace sepmatch {

enum class ClawFreeKind { kK4, kRingOfDiamonds, kTriangleStringStructure };

std::string to_string(ClawFreeKind k);

// An induced K4 - e. ends are the two non-adjacent (degree 2 inside) vertices,
// centre the two adjacent degree-3 ones.
struct Diamond {
  std::array<Vertex, 2> ends{};
  std::array<Vertex, 2> centre{};
  Edge central_edge() const { return Edge(centre[0], centre[1]); }
};

struct DiamondDecomposition {
  ClawFreeKind kind = ClawFreeKind::kK4;
  std::vector<Diamond> diamonds;
  std::vector<std::array<Vertex, 3>> triangles;  // sorted corners
  EdgeList connectors;  // edges inside no diamond and no triangle
  // Diamond indices along each string, from one triangle corner to another;
  // a string may be empty (a direct corner-to-corner connector). In the ring
  // case there is a single entry listing the ring in order.
  std::vector<std::vector<int>> strings;
};

// Requires g connected, cubic, claw-free and bridgeless. Throws
// PreconditionError with reason "not_cubic", "disconnected", "has_claw" or
// "has_bridge" (the detail names a witness).
DiamondDecomposition diamond_decomposition(const Graph& g);

// Edges of all diamonds, triangles and connectors reassembled into a graph.
Graph reassemble(int n, const DiamondDecomposition& d);

// A perfect matching whose removal disconnects g. Graphs with a bridge go
// through the bridge construction; otherwise connectors plus diamond central
// edges. Throws PreconditionError ("is_k4" and the reasons above except
// has_bridge), InternalError if the result fails validation.
Matching disconnecting_pm_clawfree(const Graph& g);

// "bridge" or the decomposition kind.
std::string clawfree_structure(const Graph& g);

inline constexpr int kMaxClawFreeScanOrder = 14;

// Every connected claw-free cubic graph other than K4 with n <= max_n gets a
// validated disconnecting perfect matching and mms_exact == n/2.
VerificationReport verify_clawfree_theorem(int max_n);

}  // namespace sepmatch
