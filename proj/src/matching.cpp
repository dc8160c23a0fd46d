#include "sepmatch/matching.hpp"

#include <algorithm>
#include <numeric>

#include "sepmatch/errors.hpp"

namespace sepmatch {

Matching::Matching(EdgeList e) : edges(std::move(e)) {
  std::sort(edges.begin(), edges.end());
}

bool Matching::contains(const Edge& e) const {
  return std::binary_search(edges.begin(), edges.end(), e);
}

std::vector<Vertex> Matching::mates(int n) const {
  std::vector<Vertex> mate(n, -1);
  for (const Edge& e : edges) {
    mate[e.u] = e.v;
    mate[e.v] = e.u;
  }
  return mate;
}

bool is_matching_of(const Graph& g, std::span<const Edge> edges) {
  std::vector<char> used(g.order(), 0);
  for (const Edge& e : edges) {
    if (!g.has_edge(e.u, e.v)) return false;
    if (used[e.u] || used[e.v]) return false;
    used[e.u] = used[e.v] = 1;
  }
  return true;
}

void require_matching(const Graph& g, std::span<const Edge> edges) {
  if (!is_matching_of(g, edges)) {
    throw PreconditionError("not_a_matching",
                            "edge set is not a matching of the host graph");
  }
}

bool is_perfect_matching(const Graph& g, const Matching& m) {
  return is_matching_of(g, m.edges) && 2 * m.size() == g.order();
}

namespace {

// Edmonds' blossom algorithm with BFS from each free vertex.
class Blossom {
 public:
  Blossom(const Graph& g, std::span<const char> blocked)
      : g_(g), n_(g.order()), blocked_(n_, 0), match_(n_, -1), parent_(n_),
        base_(n_), used_(n_), in_blossom_(n_) {
    for (std::size_t i = 0; i < blocked.size(); ++i) blocked_[i] = blocked[i];
  }

  Matching solve() {
    for (Vertex v = 0; v < n_; ++v) {
      if (blocked_[v] || match_[v] >= 0) continue;
      for (Vertex w : g_.neighbors(v)) {
        if (!blocked_[w] && match_[w] < 0) {
          match_[v] = w;
          match_[w] = v;
          break;
        }
      }
    }
    for (Vertex v = 0; v < n_; ++v) {
      if (blocked_[v] || match_[v] >= 0) continue;
      Vertex t = find_path(v);
      while (t >= 0) {
        Vertex pv = parent_[t];
        Vertex ppv = match_[pv];
        match_[t] = pv;
        match_[pv] = t;
        t = ppv;
      }
    }
    EdgeList edges;
    for (Vertex v = 0; v < n_; ++v) {
      if (match_[v] > v) edges.emplace_back(v, match_[v]);
    }
    return Matching(std::move(edges));
  }

 private:
  Vertex lca(Vertex a, Vertex b) {
    std::vector<char> seen(n_, 0);
    while (true) {
      a = base_[a];
      seen[a] = 1;
      if (match_[a] < 0) break;
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  Vertex find_path(Vertex root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    std::iota(base_.begin(), base_.end(), 0);
    used_[root] = 1;
    std::vector<Vertex> queue = {root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex v = queue[head];
      for (Vertex to : g_.neighbors(v)) {
        if (blocked_[to] || base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] >= 0 && parent_[match_[to]] >= 0)) {
          Vertex cur = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (Vertex i = 0; i < n_; ++i) {
            if (!blocked_[i] && in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = 1;
                queue.push_back(i);
              }
            }
          }
        } else if (parent_[to] < 0) {
          parent_[to] = v;
          if (match_[to] < 0) return to;
          used_[match_[to]] = 1;
          queue.push_back(match_[to]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  std::vector<char> blocked_;
  std::vector<Vertex> match_, parent_, base_;
  std::vector<char> used_, in_blossom_;
};

}  // namespace

Matching maximum_matching(const Graph& g, std::span<const char> blocked) {
  return Blossom(g, blocked).solve();
}

int matching_number(const Graph& g, std::span<const char> blocked) {
  return maximum_matching(g, blocked).size();
}

namespace {

bool extend_matchings(const Graph& g, int first, std::vector<char>& used,
                      EdgeList& current, const MatchingVisitor& visit) {
  if (!visit(Matching(current))) return false;
  for (int i = first; i < g.size(); ++i) {
    const Edge& e = g.edge(i);
    if (used[e.u] || used[e.v]) continue;
    used[e.u] = used[e.v] = 1;
    current.push_back(e);
    bool go_on = extend_matchings(g, i + 1, used, current, visit);
    current.pop_back();
    used[e.u] = used[e.v] = 0;
    if (!go_on) return false;
  }
  return true;
}

bool extend_perfect(const Graph& g, std::vector<char>& used, EdgeList& current,
                    const MatchingVisitor& visit) {
  Vertex v = 0;
  while (v < g.order() && used[v]) ++v;
  if (v == g.order()) return visit(Matching(current));
  used[v] = 1;
  for (Vertex w : g.neighbors(v)) {
    if (used[w]) continue;
    used[w] = 1;
    current.emplace_back(v, w);
    bool go_on = extend_perfect(g, used, current, visit);
    current.pop_back();
    used[w] = 0;
    if (!go_on) {
      used[v] = 0;
      return false;
    }
  }
  used[v] = 0;
  return true;
}

}  // namespace

void enumerate_matchings(const Graph& g, const MatchingVisitor& visit) {
  std::vector<char> used(g.order(), 0);
  EdgeList current;
  extend_matchings(g, 0, used, current, visit);
}

void enumerate_perfect_matchings(const Graph& g, const MatchingVisitor& visit) {
  if (g.order() % 2 != 0) {
    throw PreconditionError("odd_order", "perfect matchings need an even vertex count");
  }
  std::vector<char> used(g.order(), 0);
  EdgeList current;
  extend_perfect(g, used, current, visit);
}

long long count_perfect_matchings(const Graph& g) {
  long long count = 0;
  enumerate_perfect_matchings(g, [&](const Matching&) {
    ++count;
    return true;
  });
  return count;
}

}  // namespace sepmatch
