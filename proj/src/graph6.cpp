#include "sepmatch/graph6.hpp"

#include "sepmatch/errors.hpp"

namespace sepmatch {
namespace {

constexpr int kBias = 63;
constexpr int kMaxShortOrder = 62;
constexpr int kMaxLongOrder = 258047;

int decode_char(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) throw ParseError("truncated graph6 input", pos);
  int c = static_cast<unsigned char>(text[pos]);
  if (c < kBias || c > 126) {
    throw ParseError("byte outside the graph6 range 63..126", pos);
  }
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.starts_with(kHeader)) pos = kHeader.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' ||
                           text.back() == ' ' || text.back() == '\t')) {
    text.remove_suffix(1);
  }
  if (pos >= text.size()) throw ParseError("empty graph6 input", pos);

  int n = 0;
  if (text[pos] == '~') {
    if (pos + 1 < text.size() && text[pos + 1] == '~') {
      throw ParseError("eight-byte graph6 size form is not supported", pos);
    }
    ++pos;
    for (int k = 0; k < 3; ++k) n = (n << 6) | decode_char(text, pos++);
    if (n <= kMaxShortOrder) {
      throw ParseError("long size form used for a small graph", pos - 4);
    }
  } else {
    n = decode_char(text, pos++);
  }

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos < bytes) {
    throw ParseError("truncated graph6 bit vector", text.size());
  }
  if (text.size() - pos > bytes) {
    throw ParseError("trailing bytes after graph6 bit vector", pos + bytes);
  }

  EdgeList edges;
  std::size_t bit = 0;
  int i = 0;
  int j = 1;
  for (std::size_t b = 0; b < bytes; ++b) {
    const std::size_t at = pos + b;
    const int value = decode_char(text, at);
    for (int k = 5; k >= 0; --k, ++bit) {
      const bool set = (value >> k) & 1;
      if (bit >= bits) {
        if (set) throw ParseError("nonzero graph6 padding bits", at);
        continue;
      }
      if (set) edges.emplace_back(i, j);
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return Graph(n, edges);
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxLongOrder) {
    throw PreconditionError("bound_exceeded", "graph6 supports at most 258047 vertices");
  }
  std::string out;
  if (n <= kMaxShortOrder) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

}  // namespace sepmatch
