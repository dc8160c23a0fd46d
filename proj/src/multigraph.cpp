#include "sepmatch/multigraph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "sepmatch/errors.hpp"

namespace sepmatch {

Multigraph::Multigraph(int n, std::vector<MultiEdge> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw PreconditionError("bad_order", "negative vertex count");
  std::sort(edges_.begin(), edges_.end());
  degree_.assign(n_, 0);
  incident_.assign(n_, {});
  for (int i = 0; i < size(); ++i) {
    const MultiEdge& e = edges_[i];
    if (e.u < 0 || e.v >= n_) {
      throw PreconditionError("bad_vertex", "multigraph edge out of range");
    }
    degree_[e.u] += 1;
    degree_[e.v] += 1;
    incident_[e.u].push_back(i);
    if (!e.is_loop()) incident_[e.v].push_back(i);
  }
}

Multigraph Multigraph::from_graph(const Graph& g) {
  std::vector<MultiEdge> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(e.u, e.v);
  return Multigraph(g.order(), std::move(edges));
}

int Multigraph::multiplicity(Vertex a, Vertex b) const {
  MultiEdge key(a, b);
  auto [lo, hi] = std::equal_range(edges_.begin(), edges_.end(), key);
  return static_cast<int>(hi - lo);
}

bool Multigraph::has_loops() const {
  return std::any_of(edges_.begin(), edges_.end(),
                     [](const MultiEdge& e) { return e.is_loop(); });
}

bool Multigraph::has_parallel_edges() const {
  return std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end();
}

bool Multigraph::is_cubic() const {
  return std::all_of(degree_.begin(), degree_.end(), [](int d) { return d == 3; });
}

int Multigraph::components_without(std::span<const int> removed_edges) const {
  std::vector<int> parent(n_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<char> removed(edges_.size(), 0);
  for (int i : removed_edges) removed.at(i) = 1;
  int count = n_;
  for (int i = 0; i < size(); ++i) {
    if (removed[i]) continue;
    int a = find(edges_[i].u);
    int b = find(edges_[i].v);
    if (a != b) {
      parent[a] = b;
      --count;
    }
  }
  return count;
}

bool Multigraph::is_two_edge_connected() const {
  if (n_ == 0 || components() != 1) return false;
  for (int i = 0; i < size(); ++i) {
    const int removed[] = {i};
    if (components_without(removed) != 1) return false;
  }
  return true;
}

Graph Multigraph::to_simple() const {
  if (has_loops() || has_parallel_edges()) {
    throw PreconditionError("not_simple", "multigraph has loops or parallel edges");
  }
  EdgeList edges;
  for (const MultiEdge& e : edges_) edges.emplace_back(e.u, e.v);
  return Graph(n_, edges);
}

Multigraph theta_multigraph() { return Multigraph(2, {{0, 1}, {0, 1}, {0, 1}}); }

std::string emit_multigraph(const Multigraph& h) {
  std::string out = "multigraph n=" + std::to_string(h.order()) + "\n";
  const auto& edges = h.edges();
  for (std::size_t i = 0; i < edges.size();) {
    std::size_t j = i;
    while (j < edges.size() && edges[j] == edges[i]) ++j;
    out += std::to_string(edges[i].u) + " " + std::to_string(edges[i].v) +
           " ×" + std::to_string(j - i) + "\n";
    i = j;
  }
  return out;
}

namespace {

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  void skip_spaces() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  bool at_line_end() const {
    return pos_ >= text_.size() || text_[pos_] == '\n' || text_[pos_] == '\r';
  }

  void next_line() {
    while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
    if (pos_ < text_.size()) ++pos_;
  }

  bool done() const { return pos_ >= text_.size(); }

  void expect(std::string_view token) {
    if (text_.substr(pos_, token.size()) != token) {
      throw ParseError("expected '" + std::string(token) + "'", pos_);
    }
    pos_ += token.size();
  }

  bool accept(std::string_view token) {
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  int number() {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc() || value < 0) throw ParseError("expected a non-negative integer", pos_);
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Multigraph parse_multigraph(std::string_view text) {
  LineReader in(text);
  in.skip_spaces();
  in.expect("multigraph");
  in.skip_spaces();
  in.expect("n=");
  const int n = in.number();
  in.skip_spaces();
  if (!in.at_line_end()) throw ParseError("unexpected text after header", in.pos());
  in.next_line();

  std::vector<MultiEdge> edges;
  while (!in.done()) {
    in.skip_spaces();
    if (in.at_line_end()) {
      in.next_line();
      continue;
    }
    const std::size_t line_start = in.pos();
    const int u = in.number();
    in.skip_spaces();
    const int v = in.number();
    in.skip_spaces();
    if (!in.accept("×") && !in.accept("x")) {
      throw ParseError("expected multiplicity marker", in.pos());
    }
    const int mult = in.number();
    in.skip_spaces();
    if (!in.at_line_end()) throw ParseError("unexpected text after edge", in.pos());
    if (u >= n || v >= n) throw ParseError("edge endpoint out of range", line_start);
    if (mult < 1) throw ParseError("multiplicity must be at least 1", line_start);
    for (int k = 0; k < mult; ++k) edges.emplace_back(u, v);
    in.next_line();
  }
  return Multigraph(n, std::move(edges));
}

}  // namespace sepmatch
