#include "subcubic/graph6.hpp"

#include <bit>

namespace subcubic {
namespace {

[[noreturn]] void bad(const std::string& why) { throw GraphError(GraphErrc::BadGraph6, "graph6: " + why); }

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int chunk = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
  return out;
}

Graph from_graph6(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) bad("empty string");
  for (char c : text) {
    if (c < 63 || c > 126) bad("byte outside 63..126");
  }
  int n = 0;
  std::size_t pos = 0;
  if (text[0] != '~') {
    n = text[0] - 63;
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == '~') bad("unsupported size prefix");
    for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | (text[k] - 63);
    pos = 4;
  }
  if (n < 1 || n > kMaxVertices) bad("order " + std::to_string(n) + " unsupported");
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) bad("expected " + std::to_string(bytes) + " data bytes");

  std::vector<VertexSet> rows(static_cast<std::size_t>(n), 0);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = text[pos + k / 6] - 63;
      if ((byte >> (5 - static_cast<int>(k % 6))) & 1) {
        rows[static_cast<std::size_t>(i)] |= VertexSet{1} << j;
        rows[static_cast<std::size_t>(j)] |= VertexSet{1} << i;
      }
    }
  }
  if (bits % 6 != 0) {
    int last = text.back() - 63;
    if (last & ((1 << (6 - bits % 6)) - 1)) bad("nonzero padding bits");
  }
  return Graph::from_rows(n, rows);
}

}  // namespace subcubic
