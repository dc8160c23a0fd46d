#include "sepmatch/graph.hpp"

#include <algorithm>

#include "sepmatch/errors.hpp"

namespace sepmatch {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw PreconditionError("bad_order", "negative vertex count");
  build();
}

Graph::Graph(int n, std::span<const Edge> edges)
    : n_(n), edges_(edges.begin(), edges.end()) {
  if (n < 0) throw PreconditionError("bad_order", "negative vertex count");
  build();
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges) : n_(n) {
  if (n < 0) throw PreconditionError("bad_order", "negative vertex count");
  edges_.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a == b) {
      throw PreconditionError("loop", "self-loop at vertex " + std::to_string(a));
    }
    edges_.emplace_back(a, b);
  }
  build();
}

void Graph::build() {
  for (const Edge& e : edges_) {
    if (e.u == e.v) {
      throw PreconditionError("loop", "self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u < 0 || e.v >= n_) {
      throw PreconditionError("bad_vertex", "edge " + to_string(e) +
                                                " out of range for n=" +
                                                std::to_string(n_));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end());
      dup != edges_.end()) {
    throw PreconditionError("duplicate_edge", "edge " + to_string(*dup));
  }
  adj_.assign(n_, {});
  for (const Edge& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
  masks_.assign(n_, 0);
  if (n_ <= 64) {
    for (const Edge& e : edges_) {
      masks_[e.u] |= std::uint64_t{1} << e.v;
      masks_[e.v] |= std::uint64_t{1} << e.u;
    }
  }
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& list : adj_) best = std::max(best, static_cast<int>(list.size()));
  return best;
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int best = n_;
  for (const auto& list : adj_) best = std::min(best, static_cast<int>(list.size()));
  return best;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_ || a == b) return false;
  return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
}

int Graph::edge_index(Vertex a, Vertex b) const {
  if (!has_edge(a, b)) return -1;
  Edge key(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  return static_cast<int>(it - edges_.begin());
}

Graph Graph::without_edges(std::span<const Edge> removed) const {
  EdgeList sorted(removed.begin(), removed.end());
  std::sort(sorted.begin(), sorted.end());
  EdgeList kept;
  kept.reserve(edges_.size());
  std::set_difference(edges_.begin(), edges_.end(), sorted.begin(), sorted.end(),
                      std::back_inserter(kept));
  return Graph(n_, kept);
}

Graph Graph::with_edges(std::span<const Edge> added) const {
  EdgeList all = edges_;
  all.insert(all.end(), added.begin(), added.end());
  return Graph(n_, all);
}

Graph Graph::relabeled(std::span<const int> perm) const {
  EdgeList mapped;
  mapped.reserve(edges_.size());
  for (const Edge& e : edges_) mapped.emplace_back(perm[e.u], perm[e.v]);
  return Graph(n_, mapped);
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  std::vector<int> index(n_, -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<int>(i);
  EdgeList sub;
  for (const Edge& e : edges_) {
    if (index[e.u] >= 0 && index[e.v] >= 0) sub.emplace_back(index[e.u], index[e.v]);
  }
  return Graph(static_cast<int>(keep.size()), sub);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  EdgeList all = a.edges();
  for (const Edge& e : b.edges()) all.emplace_back(e.u + a.order(), e.v + a.order());
  return Graph(a.order() + b.order(), all);
}

std::string to_string(const Edge& e) {
  return "[" + std::to_string(e.u) + "," + std::to_string(e.v) + "]";
}

}  // namespace sepmatch
