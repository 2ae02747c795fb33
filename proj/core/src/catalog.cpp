#include "subcubic/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace subcubic {
namespace {

std::string lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

int parse_count(std::string_view digits, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size() || value < 1) {
    throw std::invalid_argument("unknown graph name '" + std::string(whole) + "'");
  }
  return value;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

NamedGraph parse_graph_name(std::string_view text) {
  using K = NamedGraph::Kind;
  const std::string s = lower(text);
  if (s == "s1") return {K::S1};
  if (s == "s2") return {K::S2};
  if (s == "s3") return {K::S3};
  if (s == "s4") return {K::S4};
  if (s == "w") return {K::W};
  if (s == "q") return {K::Q};
  if (s == "k22") return {K::K22};
  if (s == "k23") return {K::K23};
  if (s == "k33") return {K::K33};
  std::string_view v = s;
  if (v.starts_with("star")) return {K::Star, parse_count(v.substr(4), text)};
  if (v.starts_with("kb")) {
    auto x = v.find('x');
    require(x != std::string_view::npos, "unknown graph name '" + std::string(text) + "'");
    return {K::CompleteBipartite, parse_count(v.substr(2, x - 2), text), parse_count(v.substr(x + 1), text)};
  }
  if (v.starts_with("p")) return {K::Path, parse_count(v.substr(1), text)};
  if (v.starts_with("c")) return {K::Cycle, parse_count(v.substr(1), text)};
  throw std::invalid_argument("unknown graph name '" + std::string(text) + "'");
}

std::string to_string(const NamedGraph& name) {
  using K = NamedGraph::Kind;
  switch (name.kind) {
    case K::S1: return "S1";
    case K::S2: return "S2";
    case K::S3: return "S3";
    case K::S4: return "S4";
    case K::W: return "W";
    case K::Q: return "Q";
    case K::K22: return "K22";
    case K::K23: return "K23";
    case K::K33: return "K33";
    case K::Path: return "P" + std::to_string(name.a);
    case K::Cycle: return "C" + std::to_string(name.a);
    case K::Star: return "Star" + std::to_string(name.a);
    case K::CompleteBipartite: return "K" + std::to_string(name.a) + "x" + std::to_string(name.b);
  }
  return "?";
}

Graph path_graph(int k) {
  require(k >= 1, "path order must be >= 1");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
  return Graph::build(k, e);
}

Graph cycle_graph(int k) {
  require(k >= 3, "cycle order must be >= 3");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(0, k - 1);
  return Graph::build(k, e);
}

Graph star_graph(int k) {
  require(k >= 1, "star order must be >= 1");
  std::vector<Edge> e;
  for (int i = 1; i < k; ++i) e.emplace_back(0, i);
  return Graph::build(k, e);
}

Graph complete_bipartite(int a, int b) {
  require(a >= 1 && b >= 1, "complete bipartite sides must be >= 1");
  std::vector<Edge> e;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  }
  return Graph::build(a + b, e);
}

Graph named(const NamedGraph& name) {
  using K = NamedGraph::Kind;
  switch (name.kind) {
    case K::S1: return star_graph(1);
    case K::S2: return star_graph(2);
    case K::S3: return star_graph(3);
    case K::S4: return star_graph(4);
    case K::Q: return Graph::build(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
    case K::W: return Graph::build(7, {{0, 6}, {6, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
    case K::K22: return complete_bipartite(2, 2);
    case K::K23: return complete_bipartite(2, 3);
    case K::K33: return complete_bipartite(3, 3);
    case K::Path: return path_graph(name.a);
    case K::Cycle: return cycle_graph(name.a);
    case K::Star: return star_graph(name.a);
    case K::CompleteBipartite: return complete_bipartite(name.a, name.b);
  }
  throw std::invalid_argument("unknown graph name");
}

Graph named(std::string_view text) { return named(parse_graph_name(text)); }

std::vector<NamedGraph> equality_graphs() {
  using K = NamedGraph::Kind;
  return {{K::S2}, {K::K22}, {K::Q}, {K::K33}};
}

std::vector<NamedGraph> hypoenergetic_graphs() {
  using K = NamedGraph::Kind;
  return {{K::S1}, {K::S3}, {K::S4}, {K::W}, {K::K23}};
}

}  // namespace subcubic
