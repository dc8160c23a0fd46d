#include "sepmatch/structure.hpp"

#include <algorithm>
#include <functional>

namespace sepmatch {

std::vector<int> component_labels(const Graph& g) {
  const int n = g.order();
  std::vector<int> label(n, -1);
  std::vector<Vertex> stack;
  int next = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (label[w] < 0) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<int> label = component_labels(g);
  int count = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
  std::vector<std::vector<Vertex>> blocks(count);
  for (Vertex v = 0; v < g.order(); ++v) blocks[label[v]].push_back(v);
  return blocks;
}

int component_count(const Graph& g) {
  std::vector<int> label = component_labels(g);
  return label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
}

bool is_connected(const Graph& g) { return component_count(g) == 1; }

EdgeList bridges(const Graph& g) {
  // Tarjan low-link, iterative to keep the stack shallow.
  const int n = g.order();
  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  std::vector<char> is_bridge(g.size(), 0);
  int timer = 0;
  struct Frame {
    Vertex v;
    int parent_edge;
    std::size_t next;
  };
  std::vector<Frame> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    disc[root] = low[root] = timer++;
    stack.push_back({root, -1, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto nbrs = g.neighbors(f.v);
      if (f.next < nbrs.size()) {
        Vertex w = nbrs[f.next++];
        int e = g.edge_index(f.v, w);
        if (e == f.parent_edge) continue;
        if (disc[w] < 0) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, e, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          Vertex p = stack.back().v;
          low[p] = std::min(low[p], low[done.v]);
          if (low[done.v] > disc[p]) is_bridge[done.parent_edge] = 1;
        }
      }
    }
  }
  EdgeList out;
  for (int i = 0; i < g.size(); ++i) {
    if (is_bridge[i]) out.push_back(g.edge(i));
  }
  return out;
}

bool is_two_edge_connected(const Graph& g) {
  return g.order() > 0 && is_connected(g) && bridges(g).empty();
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
  const int n = g.order();
  std::vector<int> side(n, -1);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex v = queue[head];
      for (Vertex w : g.neighbors(v)) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          queue.push_back(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

DegreeClass classify_degrees(const Graph& g) {
  DegreeClass c;
  c.max_degree = g.max_degree();
  c.min_degree = g.min_degree();
  c.is_subcubic = c.max_degree <= 3;
  c.is_cubic = g.order() > 0 && c.max_degree == 3 && c.min_degree == 3;
  c.bipartition = bipartition(g);
  c.is_bipartite = c.bipartition.has_value();
  c.is_bicubic = c.is_cubic && c.is_bipartite;
  return c;
}

std::vector<Claw> find_claws(const Graph& g) {
  std::vector<Claw> claws;
  for (Vertex c = 0; c < g.order(); ++c) {
    auto nbrs = g.neighbors(c);
    const std::size_t d = nbrs.size();
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = i + 1; j < d; ++j) {
        if (g.has_edge(nbrs[i], nbrs[j])) continue;
        for (std::size_t k = j + 1; k < d; ++k) {
          if (g.has_edge(nbrs[i], nbrs[k]) || g.has_edge(nbrs[j], nbrs[k])) continue;
          claws.push_back({c, {nbrs[i], nbrs[j], nbrs[k]}});
        }
      }
    }
  }
  return claws;
}

bool is_claw_free(const Graph& g) { return find_claws(g).empty(); }

}  // namespace sepmatch
