#include "subcubic/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cctype>
#include <charconv>
#include <map>
#include <mutex>
#include <set>
#include <thread>
#include <utility>

#include "subcubic/canonical.hpp"
#include "subcubic/spectral.hpp"
#include "tree_generator.hpp"

namespace subcubic {
namespace {

constexpr int kAugmentationCeiling = 24;
constexpr int kSeenSetCeiling = 9;

std::string lower(std::string_view text) {
  std::string out(text);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

struct EdgeRange {
  int lo;
  int hi;
};

int max_edges(const EnumSpec& spec) {
  const long n = spec.n;
  return static_cast<int>(std::min(n * spec.max_degree / 2, n * (n - 1) / 2));
}

EdgeRange edge_range(const EnumSpec& spec) {
  const int n = spec.n;
  EdgeRange r{n - 1, max_edges(spec)};
  switch (spec.graph_class) {
    case GraphClass::Tree: r.lo = r.hi = n - 1; break;
    case GraphClass::Unicyclic: r.lo = r.hi = n; break;
    case GraphClass::Bicyclic: r.lo = r.hi = n + 1; break;
    case GraphClass::Cyclomatic: r.lo = r.hi = n - 1 + spec.cyclomatic; break;
    case GraphClass::Cyclic: r.lo = n; break;
    case GraphClass::Any:
    case GraphClass::QuadrangleFree: break;
  }
  if (spec.edges) {
    r.lo = std::max(r.lo, *spec.edges);
    r.hi = std::min(r.hi, *spec.edges);
  }
  r.hi = std::min(r.hi, max_edges(spec));
  return r;
}

bool is_tree_spec(const EnumSpec& spec) {
  return spec.graph_class == GraphClass::Tree ||
         (spec.graph_class == GraphClass::Cyclomatic && spec.cyclomatic == 0);
}

// Orderly generation state shared by one unit.
class Augmenter {
 public:
  explicit Augmenter(const EnumSpec& spec) : spec_(spec), range_(edge_range(spec)) {}

  // Accepted children of `parent`, sorted by canonical form.
  std::vector<std::pair<CanonicalForm, Graph>> children(const Graph& parent) const {
    const int k = parent.order();
    std::vector<std::pair<CanonicalForm, Graph>> out;
    if (k >= spec_.n) return out;
    VertexSet open = 0;
    for (int v = 0; v < k; ++v)
      if (parent.degree(v) < spec_.max_degree) open |= VertexSet{1} << v;

    std::set<CanonicalForm> seen;
    // Nonempty subsets of `open` of size <= max_degree, in increasing mask order.
    const std::vector<int> slots = bits(open);
    const int limit = std::min<int>(spec_.max_degree, static_cast<int>(slots.size()));
    auto visit = [&](VertexSet mask) {
      Graph child = parent.with_new_vertex(mask);
      if (!viable(child)) return;
      CanonicalLabeling lab = canonical_labeling(child);
      if (!accepted(child, lab)) return;
      if (!seen.insert(lab.form).second) return;
      out.emplace_back(std::move(lab.form), std::move(lab.canonical_graph));
    };
    std::function<void(std::size_t, VertexSet)> subsets = [&](std::size_t from, VertexSet mask) {
      if (mask != 0) visit(mask);
      if (static_cast<int>(std::popcount(mask)) == limit) return;
      for (std::size_t i = from; i < slots.size(); ++i) subsets(i + 1, mask | (VertexSet{1} << slots[i]));
    };
    subsets(0, 0);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }

  bool viable(const Graph& g) const {
    const int k = g.order();
    const int m = g.size();
    const int remaining = spec_.n - k;
    // Cyclomatic number never decreases along the generation tree.
    if (m - k + 1 > range_.hi - spec_.n + 1) return false;
    if (m + remaining > range_.hi) return false;
    long free_slots = 0;
    for (int v = 0; v < k; ++v) free_slots += spec_.max_degree - g.degree(v);
    const long reachable = m + std::min<long>(static_cast<long>(remaining) * spec_.max_degree,
                                              (free_slots + static_cast<long>(remaining) * spec_.max_degree) / 2);
    if (reachable < range_.lo) return false;
    if (spec_.graph_class == GraphClass::QuadrangleFree && !is_quadrangle_free(g)) return false;
    if (k == spec_.n) return matches(spec_, g);
    return true;
  }

  // The new vertex (k - 1) must share an orbit with the non-cut vertex of
  // largest canonical label.
  static bool accepted(const Graph& child, const CanonicalLabeling& lab) {
    const int k = child.order();
    if (k == 1) return true;
    const VertexSet cuts = cut_vertices(child);
    int best = -1;
    for (int v = 0; v < k; ++v) {
      if (cuts >> v & 1) continue;
      if (best < 0 || lab.labels[static_cast<std::size_t>(v)] > lab.labels[static_cast<std::size_t>(best)]) best = v;
    }
    return lab.orbits[static_cast<std::size_t>(best)] == lab.orbits[static_cast<std::size_t>(k - 1)];
  }

  // Depth-first from `g`, collecting order-n graphs.
  void descend(const Graph& g, std::vector<std::pair<CanonicalForm, Graph>>& sink) const {
    if (g.order() == spec_.n) {
      sink.emplace_back(canonical_form(g), g);
      return;
    }
    for (auto& [form, child] : children(g)) descend(child, sink);
  }

  // All viable graphs of order `depth`, sorted by canonical form.
  std::vector<Graph> level(int depth) const {
    std::vector<Graph> frontier{root()};
    for (int k = 1; k < depth; ++k) {
      std::vector<std::pair<CanonicalForm, Graph>> next;
      for (const Graph& g : frontier)
        for (auto& c : children(g)) next.push_back(std::move(c));
      std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      frontier.clear();
      for (auto& [form, g] : next) frontier.push_back(std::move(g));
    }
    return frontier;
  }

  Graph root() const { return Graph::build(1, {}); }

 private:
  static std::vector<int> bits(VertexSet s) {
    std::vector<int> out;
    for (; s; s &= s - 1) out.push_back(std::countr_zero(s));
    return out;
  }

  EnumSpec spec_;
  EdgeRange range_;
};

std::size_t run_tree_unit(const WorkUnit& unit, const Consumer& consume) {
  const EnumSpec& spec = unit.spec;
  std::size_t count = 0;
  detail::TreeGenerator gen(spec.n, spec.max_degree);
  const auto parts = static_cast<std::size_t>(unit.parts);
  const auto index = static_cast<std::size_t>(unit.index);
  gen.generate([&](std::size_t i, const Graph& t) {
    if (i % parts == index) {
      consume(t);
      ++count;
    }
    return true;
  });
  return count;
}

}  // namespace

void parse_graph_class(std::string_view text, EnumSpec& spec) {
  const std::string s = lower(text);
  static const std::pair<const char*, GraphClass> plain[] = {
      {"any", GraphClass::Any},           {"tree", GraphClass::Tree},
      {"unicyclic", GraphClass::Unicyclic}, {"bicyclic", GraphClass::Bicyclic},
      {"cyclic", GraphClass::Cyclic},     {"quadrangle_free", GraphClass::QuadrangleFree},
      {"quadrangle-free", GraphClass::QuadrangleFree}};
  for (const auto& [name, cls] : plain) {
    if (s == name) {
      spec.graph_class = cls;
      spec.cyclomatic = 0;
      return;
    }
  }
  std::string_view rest;
  if (s.starts_with("cyclomatic(") && s.ends_with(")")) {
    rest = std::string_view(s).substr(11, s.size() - 12);
  } else if (s.starts_with("cyclomatic:")) {
    rest = std::string_view(s).substr(11);
  } else {
    throw EnumError("unknown graph class '" + std::string(text) + "'");
  }
  int k = 0;
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), k);
  if (ec != std::errc{} || ptr != rest.data() + rest.size() || k < 0 || rest.empty())
    throw EnumError("bad cyclomatic number in '" + std::string(text) + "'");
  spec.graph_class = GraphClass::Cyclomatic;
  spec.cyclomatic = k;
}

std::string class_name(const EnumSpec& spec) {
  switch (spec.graph_class) {
    case GraphClass::Any: return "any";
    case GraphClass::Tree: return "tree";
    case GraphClass::Unicyclic: return "unicyclic";
    case GraphClass::Bicyclic: return "bicyclic";
    case GraphClass::Cyclomatic: return "cyclomatic(" + std::to_string(spec.cyclomatic) + ")";
    case GraphClass::Cyclic: return "cyclic";
    case GraphClass::QuadrangleFree: return "quadrangle_free";
  }
  return "any";
}

void validate(const EnumSpec& spec, bool tree_generator) {
  if (!spec.connected) throw EnumError("only connected enumeration is supported");
  if (spec.n < 1) throw EnumError("order must be at least 1");
  if (spec.max_degree < 0) throw EnumError("max degree must be non-negative");
  if (spec.graph_class == GraphClass::Cyclomatic && spec.cyclomatic < 0)
    throw EnumError("cyclomatic number must be non-negative");
  const int ceiling = tree_generator ? kMaxVertices : kAugmentationCeiling;
  if (spec.n > ceiling)
    throw EnumError("order " + std::to_string(spec.n) + " exceeds the supported ceiling " + std::to_string(ceiling));
  if (tree_generator && !is_tree_spec(spec)) throw EnumError("the tree generator only produces trees");
  if (spec.n > 1 && spec.max_degree == 0) throw EnumError("no connected graph of order > 1 has max degree 0");
  if (spec.n > 2 && spec.max_degree == 1) throw EnumError("no connected graph of order > 2 has max degree 1");
  if (spec.graph_class == GraphClass::Cyclic && spec.n < 3) throw EnumError("a cycle needs at least 3 vertices");
  const EdgeRange r = edge_range(spec);
  if (r.lo > r.hi) {
    std::string msg = "infeasible spec: class " + class_name(spec) + " with n=" + std::to_string(spec.n) +
                      " and max degree " + std::to_string(spec.max_degree);
    if (spec.edges) msg += " and m=" + std::to_string(*spec.edges);
    throw EnumError(msg + " admits no connected graph");
  }
}

bool matches(const EnumSpec& spec, const Graph& g) {
  if (g.order() != spec.n || !is_connected(g) || max_degree(g) > spec.max_degree) return false;
  const int m = g.size();
  const EdgeRange r = edge_range(spec);
  if (m < r.lo || m > r.hi) return false;
  if (spec.graph_class == GraphClass::QuadrangleFree) return is_quadrangle_free(g);
  return true;
}

nlohmann::json to_json(const EnumSpec& spec) {
  nlohmann::json j{{"n", spec.n},
                   {"max_degree", spec.max_degree},
                   {"class", class_name(spec)},
                   {"connected", spec.connected}};
  if (spec.edges) j["edges"] = *spec.edges;
  return j;
}

EnumSpec enum_spec_from_json(const nlohmann::json& j) {
  EnumSpec spec;
  spec.n = j.at("n").get<int>();
  spec.max_degree = j.at("max_degree").get<int>();
  parse_graph_class(j.at("class").get<std::string>(), spec);
  spec.connected = j.value("connected", true);
  if (j.contains("edges")) spec.edges = j.at("edges").get<int>();
  return spec;
}

Generator default_generator(const EnumSpec& spec) {
  return is_tree_spec(spec) ? Generator::Tree : Generator::Augmentation;
}

std::string WorkUnit::id() const {
  std::string s = "n" + std::to_string(spec.n) + "-d" + std::to_string(spec.max_degree) + "-" + class_name(spec);
  if (spec.edges) s += "-m" + std::to_string(*spec.edges);
  s += generator == Generator::Tree ? "-tree" : "-aug";
  return s + "-" + std::to_string(index) + "of" + std::to_string(parts);
}

nlohmann::json to_json(const WorkUnit& unit) {
  return nlohmann::json{{"spec", to_json(unit.spec)},
                        {"generator", unit.generator == Generator::Tree ? "tree" : "augmentation"},
                        {"parts", unit.parts},
                        {"index", unit.index},
                        {"prefix_depth", unit.prefix_depth}};
}

WorkUnit work_unit_from_json(const nlohmann::json& j) {
  WorkUnit u;
  u.spec = enum_spec_from_json(j.at("spec"));
  const std::string gen = j.at("generator").get<std::string>();
  if (gen == "tree") {
    u.generator = Generator::Tree;
  } else if (gen == "augmentation") {
    u.generator = Generator::Augmentation;
  } else {
    throw EnumError("unknown generator '" + gen + "'");
  }
  u.parts = j.at("parts").get<int>();
  u.index = j.at("index").get<int>();
  u.prefix_depth = j.at("prefix_depth").get<int>();
  if (u.parts < 1 || u.index < 0 || u.index >= u.parts) throw EnumError("bad work unit index");
  if (u.prefix_depth < 1 || u.prefix_depth > u.spec.n) throw EnumError("bad work unit prefix depth");
  return u;
}

int prefix_depth_for(const EnumSpec& spec) {
  return std::min({spec.n, std::max(1, spec.n - 4), 7});
}

std::vector<WorkUnit> split_work(const EnumSpec& spec, int parts) {
  return split_work(spec, parts, default_generator(spec));
}

std::vector<WorkUnit> split_work(const EnumSpec& spec, int parts, Generator generator) {
  if (parts < 1) throw EnumError("parts must be at least 1");
  validate(spec, generator == Generator::Tree);
  std::vector<WorkUnit> units;
  units.reserve(static_cast<std::size_t>(parts));
  for (int i = 0; i < parts; ++i) units.push_back(WorkUnit{spec, generator, parts, i, prefix_depth_for(spec)});
  return units;
}

std::size_t run_unit(const WorkUnit& unit, const Consumer& consume) {
  validate(unit.spec, unit.generator == Generator::Tree);
  if (unit.generator == Generator::Tree) return run_tree_unit(unit, consume);

  const Augmenter aug(unit.spec);
  const std::vector<Graph> prefixes = aug.level(unit.prefix_depth);
  std::vector<std::pair<CanonicalForm, Graph>> found;
  for (std::size_t i = static_cast<std::size_t>(unit.index); i < prefixes.size();
       i += static_cast<std::size_t>(unit.parts))
    aug.descend(prefixes[i], found);
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [form, g] : found) consume(g);
  return found.size();
}

std::size_t enum_connected(const EnumSpec& spec, const Consumer& consume) {
  return run_unit(WorkUnit{spec, Generator::Augmentation, 1, 0, prefix_depth_for(spec)}, consume);
}

std::size_t enum_trees(int n, int max_degree, const Consumer& consume) {
  EnumSpec spec;
  spec.n = n;
  spec.max_degree = max_degree;
  spec.graph_class = GraphClass::Tree;
  if (n < 1) throw EnumError("order must be at least 1");
  if (n > kMaxVertices) throw EnumError("order exceeds 64");
  // Degree caps that admit no tree simply yield nothing.
  if ((n > 1 && max_degree == 0) || (n > 2 && max_degree == 1) || max_degree < 0) return 0;
  return run_tree_unit(WorkUnit{spec, Generator::Tree, 1, 0, 1}, consume);
}

std::size_t enumerate_parallel(const EnumSpec& spec, const Consumer& consume, int threads, int parts,
                               Generator generator) {
  const std::vector<WorkUnit> units = split_work(spec, parts, generator);
  threads = std::clamp(threads, 1, static_cast<int>(units.size()));
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> total{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < units.size(); i = next++) {
      try {
        total += run_unit(units[i], consume);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = units.size();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return total;
}

std::vector<Graph> enumerate_by_seen_set(const EnumSpec& spec) {
  validate(spec);
  if (spec.n > kSeenSetCeiling) throw EnumError("seen-set generator is limited to n <= 9");
  // Every connected graph has a connected induced subgraph on one fewer
  // vertex, so growing connected graphs one vertex at a time reaches all.
  std::vector<Graph> frontier{Graph::build(1, {})};
  for (int k = 1; k < spec.n; ++k) {
    std::map<CanonicalForm, Graph> next;
    for (const Graph& g : frontier) {
      for (VertexSet mask = 1; mask < (VertexSet{1} << k); ++mask) {
        const Graph child = g.with_new_vertex(mask);
        if (max_degree(child) > spec.max_degree) continue;
        CanonicalLabeling lab = canonical_labeling(child);
        next.emplace(std::move(lab.form), std::move(lab.canonical_graph));
      }
    }
    frontier.clear();
    for (auto& [form, g] : next) frontier.push_back(std::move(g));
  }
  std::vector<Graph> out;
  for (Graph& g : frontier)
    if (matches(spec, g)) out.push_back(std::move(g));
  return out;
}

}  // namespace subcubic
