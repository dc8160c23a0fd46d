#include "sepmatch/generator.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <random>
#include <set>

#include "sepmatch/canonical.hpp"
#include "sepmatch/errors.hpp"
#include "sepmatch/named_graphs.hpp"
#include "sepmatch/structure.hpp"

namespace sepmatch {

std::string to_string(GraphClass c) {
  switch (c) {
    case GraphClass::kCubic:
      return "cubic";
    case GraphClass::kSubcubic:
      return "subcubic";
    case GraphClass::kBicubic:
      return "bicubic";
    case GraphClass::kClawFreeCubic:
      return "clawfree_cubic";
  }
  return "unknown";
}

std::optional<GraphClass> parse_graph_class(std::string_view name) {
  if (name == "cubic") return GraphClass::kCubic;
  if (name == "subcubic") return GraphClass::kSubcubic;
  if (name == "bicubic") return GraphClass::kBicubic;
  if (name == "clawfree_cubic" || name == "clawfree-cubic" || name == "clawfree") {
    return GraphClass::kClawFreeCubic;
  }
  return std::nullopt;
}

void validate_spec(const EnumerationSpec& spec) {
  if (spec.n < 0) throw PreconditionError("bad_order", "negative vertex count");
  if (spec.graph_class == GraphClass::kSubcubic) {
    if (spec.n > kMaxSubcubicOrder) {
      throw PreconditionError("bound_exceeded", "subcubic enumeration is capped at n = " +
                                                    std::to_string(kMaxSubcubicOrder));
    }
    return;
  }
  if (spec.n % 2 != 0) {
    throw PreconditionError("odd_order", "cubic classes need an even vertex count");
  }
  if (spec.n > kMaxCubicOrder) {
    throw PreconditionError("bound_exceeded", "cubic enumeration is capped at n = " +
                                                  std::to_string(kMaxCubicOrder));
  }
}

namespace {

using Level = std::vector<Graph>;

Level finish(std::map<std::string, Graph>& found) {
  Level out;
  out.reserve(found.size());
  for (auto& [form, g] : found) out.push_back(g);
  return out;
}

void insert_canonical(std::map<std::string, Graph>& found, const Graph& g) {
  std::vector<int> perm = canonical_labeling(g);
  Graph c = g.relabeled(perm);
  std::string form = canonical_form(c);
  found.try_emplace(std::move(form), std::move(c));
}

// Subdivide edges i and j of g and join the two new vertices.
Graph insert_edge(const Graph& g, int i, int j) {
  const int m = g.order();
  const Edge a = g.edge(i);
  const Edge b = g.edge(j);
  EdgeList edges;
  for (int k = 0; k < g.size(); ++k) {
    if (k != i && k != j) edges.push_back(g.edge(k));
  }
  edges.emplace_back(a.u, m);
  edges.emplace_back(m, a.v);
  edges.emplace_back(b.u, m + 1);
  edges.emplace_back(m + 1, b.v);
  edges.emplace_back(m, m + 1);
  return Graph(m + 2, edges);
}

Graph expand_vertex(const Graph& g, Vertex v) {
  const int m = g.order();
  auto nbrs = g.neighbors(v);
  EdgeList edges;
  for (const Edge& e : g.edges()) {
    if (!e.touches(v)) edges.push_back(e);
  }
  edges.emplace_back(v, nbrs[0]);
  edges.emplace_back(m, nbrs[1]);
  edges.emplace_back(m + 1, nbrs[2]);
  edges.emplace_back(v, m);
  edges.emplace_back(v, m + 1);
  edges.emplace_back(m, m + 1);
  return Graph(m + 2, edges);
}

// Replace edge i = xy by x - diamond - y.
Graph insert_diamond(const Graph& g, int i) {
  const int m = g.order();
  const Edge e = g.edge(i);
  EdgeList edges;
  for (int k = 0; k < g.size(); ++k) {
    if (k != i) edges.push_back(g.edge(k));
  }
  edges.emplace_back(e.u, m);
  edges.emplace_back(m + 1, e.v);
  edges.emplace_back(m, m + 2);
  edges.emplace_back(m, m + 3);
  edges.emplace_back(m + 1, m + 2);
  edges.emplace_back(m + 1, m + 3);
  edges.emplace_back(m + 2, m + 3);
  return Graph(m + 4, edges);
}

const Level& cached(GraphClass c, int n, bool connected);

// Every connected cubic graph on n >= 6 vertices arises from a smaller cubic
// graph by one of: edge insertion into a connected graph, edge insertion
// joining the two components of a disconnected graph, vertex-to-triangle
// expansion, or diamond insertion. Completeness is cross-checked in tests.
Level connected_cubic(int n) {
  std::map<std::string, Graph> found;
  for (const Graph& g : cached(GraphClass::kCubic, n - 2, true)) {
    for (int i = 0; i < g.size(); ++i) {
      for (int j = i + 1; j < g.size(); ++j) insert_canonical(found, insert_edge(g, i, j));
    }
    for (Vertex v = 0; v < g.order(); ++v) insert_canonical(found, expand_vertex(g, v));
  }
  for (const Graph& g : cached(GraphClass::kCubic, n - 2, false)) {
    if (component_count(g) != 2) continue;
    const auto label = component_labels(g);
    for (int i = 0; i < g.size(); ++i) {
      for (int j = i + 1; j < g.size(); ++j) {
        if (label[g.edge(i).u] != label[g.edge(j).u]) insert_canonical(found, insert_edge(g, i, j));
      }
    }
  }
  if (n >= 8) {
    for (const Graph& g : cached(GraphClass::kCubic, n - 4, true)) {
      for (int i = 0; i < g.size(); ++i) insert_canonical(found, insert_diamond(g, i));
    }
  }
  return finish(found);
}

Level connected_subcubic_from(const Level& parents, int n) {
  std::map<std::string, Graph> found;
  for (const Graph& g : parents) {
    const int m = g.order();
    std::vector<Vertex> open;
    for (Vertex v = 0; v < m; ++v) {
      if (g.degree(v) < 3) open.push_back(v);
    }
    const int k = static_cast<int>(open.size());
    for (int mask = 1; mask < (1 << k); ++mask) {
      if (__builtin_popcount(mask) > 3) continue;
      EdgeList edges = g.edges();
      for (int i = 0; i < k; ++i) {
        if (mask & (1 << i)) edges.emplace_back(open[i], m);
      }
      insert_canonical(found, Graph(n, edges));
    }
  }
  return finish(found);
}

struct Cache {
  std::mutex mutex;
  std::map<std::tuple<int, int, bool>, Level> levels;
};

Cache& cache() {
  static Cache c;
  return c;
}

Level compute_connected_cubic(int n) {
  if (n < 4) return {};
  if (n == 4) return {named::complete(4)};
  return connected_cubic(n);
}

Level compute_connected_subcubic(int n) {
  if (n == 0) return {};
  if (n == 1) return {Graph(1)};
  return connected_subcubic_from(cached(GraphClass::kSubcubic, n - 1, true), n);
}

// Multisets of connected pieces whose orders sum to n.
Level compose_components(GraphClass c, int n) {
  std::map<std::string, Graph> found;
  const int step = c == GraphClass::kSubcubic ? 1 : 2;
  const int smallest = c == GraphClass::kSubcubic ? 1 : 4;
  // pieces are chosen with non-increasing (order, index) to avoid repeats
  std::function<void(int, int, int, const Graph&)> extend =
      [&](int remaining, int max_order, int max_index, const Graph& acc) {
        if (remaining == 0) {
          insert_canonical(found, acc);
          return;
        }
        for (int size = std::min(remaining, max_order); size >= smallest; size -= step) {
          if ((remaining - size) % step != 0) continue;
          const Level& pieces = cached(c, size, true);
          const int count = static_cast<int>(pieces.size());
          const int top = size == max_order ? std::min(max_index, count - 1) : count - 1;
          for (int i = top; i >= 0; --i) {
            extend(remaining - size, size, i, disjoint_union(acc, pieces[i]));
          }
        }
      };
  extend(n, n, std::numeric_limits<int>::max() / 2, Graph(0));
  return finish(found);
}

Level compute(GraphClass c, int n, bool connected) {
  if (!connected) {
    if (n == 0) return {Graph(0)};
    return compose_components(c, n);
  }
  switch (c) {
    case GraphClass::kCubic:
      return compute_connected_cubic(n);
    case GraphClass::kSubcubic:
      return compute_connected_subcubic(n);
    case GraphClass::kBicubic:
    case GraphClass::kClawFreeCubic: {
      Level out;
      for (const Graph& g : cached(GraphClass::kCubic, n, true)) {
        bool keep = c == GraphClass::kBicubic ? bipartition(g).has_value() : is_claw_free(g);
        if (keep) out.push_back(g);
      }
      return out;
    }
  }
  return {};
}

const Level& cached(GraphClass c, int n, bool connected) {
  auto key = std::make_tuple(static_cast<int>(c), n, connected);
  {
    std::lock_guard lock(cache().mutex);
    auto it = cache().levels.find(key);
    if (it != cache().levels.end()) return it->second;
  }
  Level level = compute(c, n, connected);
  std::lock_guard lock(cache().mutex);
  // std::map never invalidates references to existing nodes.
  return cache().levels.try_emplace(key, std::move(level)).first->second;
}

}  // namespace

const std::vector<Graph>& enumerate_graphs(const EnumerationSpec& spec) {
  validate_spec(spec);
  return cached(spec.graph_class, spec.n, spec.connected_only);
}

std::vector<Graph> enumerate_range(GraphClass c, int lo, int hi, bool connected_only) {
  std::vector<Graph> out;
  for (int n = lo; n <= hi; ++n) {
    if (c != GraphClass::kSubcubic && n % 2 != 0) continue;
    const auto& level = enumerate_graphs({n, c, connected_only});
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

namespace {

// Unbiased draw in [0, bound) by rejection; fixed across standard libraries.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace

Graph random_cubic(int n, std::uint64_t seed) {
  if (n < 4 || n % 2 != 0) {
    throw PreconditionError("bad_order", "random cubic graphs need even n >= 4");
  }
  std::mt19937_64 rng(seed);
  std::vector<int> points(3 * n);
  while (true) {
    for (int i = 0; i < 3 * n; ++i) points[i] = i / 3;
    for (int i = 3 * n - 1; i > 0; --i) {
      std::swap(points[i], points[draw(rng, i + 1)]);
    }
    std::set<Edge> edges;
    bool simple = true;
    for (int i = 0; i < 3 * n && simple; i += 2) {
      const int a = points[i];
      const int b = points[i + 1];
      if (a == b || !edges.emplace(a, b).second) simple = false;
    }
    if (!simple) continue;
    Graph g(n, EdgeList(edges.begin(), edges.end()));
    if (is_connected(g)) return g;
  }
}

namespace {

// Appends a diamond; returns its two degree-2 (end) vertices.
std::pair<Vertex, Vertex> add_diamond(EdgeList& edges, int& next) {
  const Vertex a = next++, b = next++, c = next++, d = next++;
  edges.emplace_back(a, c);
  edges.emplace_back(a, d);
  edges.emplace_back(b, c);
  edges.emplace_back(b, d);
  edges.emplace_back(c, d);
  return {a, b};
}

}  // namespace

Graph ring_of_diamonds(int k) {
  if (k < 2) throw PreconditionError("bad_order", "a ring needs at least two diamonds");
  EdgeList edges;
  int next = 0;
  std::vector<std::pair<Vertex, Vertex>> ends;
  for (int i = 0; i < k; ++i) ends.push_back(add_diamond(edges, next));
  for (int i = 0; i < k; ++i) edges.emplace_back(ends[i].second, ends[(i + 1) % k].first);
  return Graph(next, edges);
}

Graph random_clawfree_cubic(int base_n, std::uint64_t seed, int max_diamonds) {
  Graph base = random_cubic(base_n, seed);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  EdgeList edges;
  int next = 3 * base_n;
  // Vertex v becomes triangle {3v, 3v+1, 3v+2}; its k-th edge uses corner 3v+k.
  std::vector<int> used(base_n, 0);
  for (Vertex v = 0; v < base_n; ++v) {
    edges.emplace_back(3 * v, 3 * v + 1);
    edges.emplace_back(3 * v + 1, 3 * v + 2);
    edges.emplace_back(3 * v, 3 * v + 2);
  }
  for (const Edge& e : base.edges()) {
    Vertex from = 3 * e.u + used[e.u]++;
    const Vertex to = 3 * e.v + used[e.v]++;
    const int diamonds = static_cast<int>(draw(rng, max_diamonds + 1));
    for (int i = 0; i < diamonds; ++i) {
      auto [first, last] = add_diamond(edges, next);
      edges.emplace_back(from, first);
      from = last;
    }
    edges.emplace_back(from, to);
  }
  return Graph(next, edges);
}

}  // namespace sepmatch
