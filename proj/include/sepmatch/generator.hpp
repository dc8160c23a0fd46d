#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sepmatch/graph.hpp"

namespace sepmatch {

enum class GraphClass { kCubic, kSubcubic, kBicubic, kClawFreeCubic };

std::string to_string(GraphClass c);
std::optional<GraphClass> parse_graph_class(std::string_view name);

struct EnumerationSpec {
  int n = 0;
  GraphClass graph_class = GraphClass::kCubic;
  bool connected_only = true;
};

inline constexpr int kMaxCubicOrder = 14;
inline constexpr int kMaxSubcubicOrder = 10;

// Throws PreconditionError if the spec is outside the supported bounds.
void validate_spec(const EnumerationSpec& spec);

// Every graph of the class on exactly spec.n vertices, once up to
// isomorphism, canonically labeled, sorted by canonical graph6.
// Connected cubic graphs grow from K4 by edge insertion and vertex-to-triangle
// expansion; connected subcubic graphs grow by adding a vertex. Results are
// cached per (class, n); safe to call from several threads.
const std::vector<Graph>& enumerate_graphs(const EnumerationSpec& spec);

// All graphs of the class with lo <= n <= hi (skipping orders the class
// cannot have).
std::vector<Graph> enumerate_range(GraphClass c, int lo, int hi, bool connected_only = true);

// Connected simple cubic graph from the configuration model, retried until
// simple and connected. Deterministic in (n, seed). Requires even n >= 4.
Graph random_cubic(int n, std::uint64_t seed);

// k diamonds (K4 - e) closed into a ring; k >= 2.
Graph ring_of_diamonds(int k);

// Claw-free cubic graph: a random connected cubic base graph on base_n
// vertices with every vertex replaced by a triangle and every edge replaced
// by a string of 0..max_diamonds diamonds.
Graph random_clawfree_cubic(int base_n, std::uint64_t seed, int max_diamonds = 2);

}  // namespace sepmatch
