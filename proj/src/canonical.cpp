#include "sepmatch/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "sepmatch/errors.hpp"
#include "sepmatch/graph6.hpp"
#include "sepmatch/structure.hpp"

namespace sepmatch {
namespace {

using Mask = std::uint64_t;

// Ordered partition of positions 0..n-1. A cell is the half-open position
// range [start, end[start]).
struct Partition {
  std::vector<int> lab;       // position -> vertex
  std::vector<int> cell_end;  // valid at cell starts
  std::vector<int> cell_of;   // vertex -> start of its cell

  explicit Partition(int n) : lab(n), cell_end(n, n), cell_of(n, 0) {
    std::iota(lab.begin(), lab.end(), 0);
  }
};

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : n_(g.order()), adj_(n_) {
    for (Vertex v = 0; v < n_; ++v) adj_[v] = g.neighbor_mask(v);
  }

  std::vector<int> run() {
    Partition root(n_);
    std::vector<int> trace;
    std::vector<int> queue = {0};
    refine(root, queue, trace);
    std::vector<Vertex> prefix;
    search(root, trace, prefix);
    std::vector<int> perm(n_);
    for (int i = 0; i < n_; ++i) perm[best_lab_[i]] = i;
    return perm;
  }

 private:
  void refine(Partition& p, std::vector<int> queue, std::vector<int>& trace) const {
    std::vector<char> queued(n_, 0);
    for (int s : queue) queued[s] = 1;
    std::vector<int> count(n_, 0);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int w = queue[head];
      queued[w] = 0;
      Mask splitter = 0;
      for (int i = w; i < p.cell_end[w]; ++i) splitter |= Mask{1} << p.lab[i];
      for (int x = 0; x < n_;) {
        const int end = p.cell_end[x];
        if (end - x == 1) {
          x = end;
          continue;
        }
        bool uniform = true;
        for (int i = x; i < end; ++i) {
          const Vertex v = p.lab[i];
          count[v] = std::popcount(adj_[v] & splitter);
          if (count[v] != count[p.lab[x]]) uniform = false;
        }
        if (uniform) {
          x = end;
          continue;
        }
        std::stable_sort(p.lab.begin() + x, p.lab.begin() + end,
                         [&](int a, int b) { return count[a] < count[b]; });
        trace.push_back(x);
        int frag = x;
        for (int i = x; i <= end; ++i) {
          if (i == end || count[p.lab[i]] != count[p.lab[frag]]) {
            p.cell_end[frag] = i;
            for (int k = frag; k < i; ++k) p.cell_of[p.lab[k]] = frag;
            trace.push_back(count[p.lab[frag]]);
            trace.push_back(i - frag);
            if (!queued[frag]) {
              queued[frag] = 1;
              queue.push_back(frag);
            }
            frag = i;
          }
        }
        x = end;
      }
    }
    trace.push_back(-1);
  }

  // Lexicographic comparison restricted to the common prefix; a longer
  // sequence that agrees on the prefix compares greater.
  static int compare_traces(const std::vector<int>& a, const std::vector<int>& b) {
    const std::size_t m = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < m; ++i) {
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return a.size() > b.size() ? 1 : 0;
  }

  bool same_orbit(Vertex w, const std::vector<Vertex>& tried,
                  const std::vector<Vertex>& prefix) const {
    if (tried.empty() || automorphisms_.empty()) return false;
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& gamma : automorphisms_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(),
                               [&](Vertex v) { return gamma[v] == v; });
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) parent[find(v)] = find(gamma[v]);
    }
    const int root = find(w);
    return std::any_of(tried.begin(), tried.end(),
                       [&](Vertex t) { return find(t) == root; });
  }

  std::vector<Mask> certificate(const Partition& p) const {
    std::vector<int> pos(n_);
    for (int i = 0; i < n_; ++i) pos[p.lab[i]] = i;
    std::vector<Mask> rows(n_, 0);
    for (int i = 0; i < n_; ++i) {
      Mask m = adj_[p.lab[i]];
      while (m) {
        const int v = std::countr_zero(m);
        m &= m - 1;
        rows[i] |= Mask{1} << pos[v];
      }
    }
    return rows;
  }

  void record_automorphism(const std::vector<int>& from, const std::vector<int>& to) {
    std::vector<int> gamma(n_);
    for (int i = 0; i < n_; ++i) gamma[from[i]] = to[i];
    automorphisms_.push_back(std::move(gamma));
  }

  void leaf(const Partition& p, const std::vector<int>& trace) {
    std::vector<Mask> cert = certificate(p);
    if (!have_best_) {
      have_best_ = true;
      best_trace_ = first_trace_ = trace;
      best_cert_ = first_cert_ = cert;
      best_lab_ = first_lab_ = p.lab;
      return;
    }
    if (trace == first_trace_ && cert == first_cert_) {
      record_automorphism(first_lab_, p.lab);
      return;
    }
    const int by_trace = compare_traces(trace, best_trace_);
    if (by_trace < 0 || (by_trace == 0 && cert < best_cert_)) {
      best_trace_ = trace;
      best_cert_ = std::move(cert);
      best_lab_ = p.lab;
    } else if (by_trace == 0 && cert == best_cert_) {
      record_automorphism(best_lab_, p.lab);
    }
  }

  void search(const Partition& p, const std::vector<int>& trace,
              std::vector<Vertex>& prefix) {
    if (have_best_ && compare_traces(trace, best_trace_) > 0) return;
    int target = -1;
    for (int x = 0; x < n_; x = p.cell_end[x]) {
      if (p.cell_end[x] - x > 1) {
        target = x;
        break;
      }
    }
    if (target < 0) {
      leaf(p, trace);
      return;
    }
    std::vector<Vertex> cell(p.lab.begin() + target, p.lab.begin() + p.cell_end[target]);
    std::sort(cell.begin(), cell.end());
    std::vector<Vertex> tried;
    for (Vertex w : cell) {
      if (same_orbit(w, tried, prefix)) continue;
      tried.push_back(w);
      Partition child = p;
      auto at = std::find(child.lab.begin() + target,
                          child.lab.begin() + child.cell_end[target], w);
      std::iter_swap(child.lab.begin() + target, at);
      child.cell_end[target + 1] = child.cell_end[target];
      child.cell_end[target] = target + 1;
      for (int k = target + 1; k < child.cell_end[target + 1]; ++k) {
        child.cell_of[child.lab[k]] = target + 1;
      }
      std::vector<int> child_trace = trace;
      child_trace.push_back(-2);
      refine(child, {target, target + 1}, child_trace);
      prefix.push_back(w);
      search(child, child_trace, prefix);
      prefix.pop_back();
    }
  }

  int n_;
  std::vector<Mask> adj_;
  bool have_best_ = false;
  std::vector<int> best_trace_, first_trace_;
  std::vector<Mask> best_cert_, first_cert_;
  std::vector<int> best_lab_, first_lab_;
  std::vector<std::vector<int>> automorphisms_;
};

std::vector<int> connected_labeling(const Graph& g) {
  if (g.order() <= 1) return std::vector<int>(g.order(), 0);
  return CanonicalSearch(g).run();
}

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw PreconditionError("bound_exceeded", "canonical labeling supports at most " +
                                             std::to_string(kMaxCanonicalOrder) +
                                             " vertices");
  }
  auto blocks = connected_components(g);
  if (blocks.size() <= 1) return connected_labeling(g);

  struct Piece {
    std::vector<Vertex> vertices;  // canonical order within the component
    std::string form;
  };
  std::vector<Piece> pieces;
  for (const auto& block : blocks) {
    Graph sub = g.induced(block);
    std::vector<int> local = connected_labeling(sub);
    Piece piece;
    piece.vertices.resize(block.size());
    for (std::size_t i = 0; i < block.size(); ++i) piece.vertices[local[i]] = block[i];
    piece.form = emit_graph6(sub.relabeled(local));
    pieces.push_back(std::move(piece));
  }
  std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) {
    if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
    return a.form < b.form;
  });
  std::vector<int> perm(g.order());
  int next = 0;
  for (const Piece& piece : pieces) {
    for (Vertex v : piece.vertices) perm[v] = next++;
  }
  return perm;
}

std::string canonical_form(const Graph& g) {
  return emit_graph6(g.relabeled(canonical_labeling(g)));
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<int> da, db;
  for (Vertex v = 0; v < a.order(); ++v) da.push_back(a.degree(v));
  for (Vertex v = 0; v < b.order(); ++v) db.push_back(b.degree(v));
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace sepmatch
