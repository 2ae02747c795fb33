#include "subcubic/certificate.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <unordered_set>

#include "subcubic/canonical.hpp"
#include "subcubic/catalog.hpp"
#include "subcubic/graph6.hpp"

namespace subcubic {
namespace {

constexpr int kFormatVersion = 1;

std::set<CanonicalForm> forms_of(const std::vector<NamedGraph>& names) {
  std::set<CanonicalForm> out;
  for (const NamedGraph& name : names) out.insert(canonical_form(named(name)));
  return out;
}

const std::set<CanonicalForm>& equality_forms() {
  static const std::set<CanonicalForm> forms = forms_of(equality_graphs());
  return forms;
}

const std::set<CanonicalForm>& hypo_forms() {
  static const std::set<CanonicalForm> forms = forms_of(hypoenergetic_graphs());
  return forms;
}

mpq_class refinement_floor() {
  mpq_class floor = 1;
  floor /= mpz_class(mpz_class(1) << kTolerances.exact_refinement_bits);
  return floor;
}

// Exact enclosure with lo > n, if refinement reaches one.
std::optional<EnergyBound> greater_bound(const Graph& g) {
  const mpq_class target(g.order());
  const mpq_class floor = refinement_floor();
  RootRefiner refiner(char_poly(g));
  for (;;) {
    const EnergyBound b = refiner.energy();
    if (b.lo > target) return b;
    if (b.hi < target || b.width() <= floor || !refiner.refine_once()) return std::nullopt;
  }
}

// G - F has exactly two components and every edge of F joins them.
std::optional<Decomposition> two_part_split(const Graph& g, const std::vector<Edge>& cut) {
  const Graph rest = delete_edges(g, cut);
  const std::vector<Component> parts = components(rest);
  if (parts.size() != 2) return std::nullopt;
  VertexSet side = 0;
  for (int v : parts[0].to_host) side |= VertexSet{1} << v;
  for (auto [u, v] : cut)
    if (((side >> u) & 1) == ((side >> v) & 1)) return std::nullopt;
  return decompose_by_cut(g, EdgeCut{cut, side});
}

std::vector<Edge> normalized(std::vector<Edge> cut) {
  for (auto& [u, v] : cut)
    if (u > v) std::swap(u, v);
  std::sort(cut.begin(), cut.end());
  return cut;
}

// Calls visit on every k-subset of `pool` in lexicographic order until it
// returns true.
bool for_each_subset(const std::vector<Edge>& pool, int k, const std::function<bool(const std::vector<Edge>&)>& visit) {
  std::vector<Edge> pick;
  std::function<bool(std::size_t)> rec = [&](std::size_t from) {
    if (static_cast<int>(pick.size()) == k) return visit(pick);
    for (std::size_t i = from; i + (static_cast<std::size_t>(k) - pick.size()) <= pool.size(); ++i) {
      pick.push_back(pool[i]);
      if (rec(i + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return rec(0);
}

class Builder {
 public:
  explicit Builder(const CertificateOptions& options) : options_(options) {}

  std::optional<CertNode> prove(const Graph& g) {
    const CanonicalForm form = canonical_form(g);
    if (equality_forms().count(form)) return equality_leaf(g);
    if (hypo_forms().count(form) || failed_.count(form)) return std::nullopt;

    std::optional<CertNode> found;
    std::set<std::vector<Edge>> tried;
    auto attempt = [&](const std::vector<Edge>& cut) {
      std::vector<Edge> key = normalized(cut);
      if (!tried.insert(key).second) return false;
      found = try_cut(g, key);
      return found.has_value();
    };

    if (bridges(g, attempt) || guided(g, attempt) || exhaustive(g, attempt)) return found;

    if (g.order() <= options_.base_fact_max_n) {
      if (auto b = greater_bound(g)) {
        CertNode leaf;
        leaf.graph = g;
        leaf.claim = Comparison::Greater;
        leaf.bound = *b;
        return leaf;
      }
    }
    failed_.insert(form);
    return std::nullopt;
  }

 private:
  using Attempt = std::function<bool(const std::vector<Edge>&)>;

  static CertNode equality_leaf(const Graph& g) {
    CertNode leaf;
    leaf.graph = g;
    leaf.claim = Comparison::Equal;
    if (auto f = factor_quadratic_shape(char_poly(g))) leaf.factorization = f->to_string();
    return leaf;
  }

  std::optional<CertNode> try_cut(const Graph& g, const std::vector<Edge>& cut) {
    const auto split = two_part_split(g, cut);
    if (!split) return std::nullopt;
    auto left = prove(split->g1);
    if (!left) return std::nullopt;
    auto right = prove(split->g2);
    if (!right) return std::nullopt;
    CertNode node;
    node.graph = g;
    node.cut = cut;
    if (is_star_cut(g, cut)) {
      node.kind = CertNode::Kind::StarCutStep;
    } else if (left->strict() || right->strict()) {
      node.kind = CertNode::Kind::StrictPartStep;
    } else {
      return std::nullopt;
    }
    node.children.push_back(std::move(*left));
    node.children.push_back(std::move(*right));
    return node;
  }

  static bool bridges(const Graph& g, const Attempt& attempt) {
    for (const Edge& e : g.edges()) {
      const Edge one[] = {e};
      if (!is_connected(delete_edges(g, one)) && attempt({e})) return true;
    }
    return false;
  }

  // Cuts read off the 2-core: the edges joining a core vertex that carries
  // pendant trees to the rest of the core, then the minimum edge cuts of the
  // core itself.
  static bool guided(const Graph& g, const Attempt& attempt) {
    if (g.size() < g.order()) return false;
    std::vector<int> to_host;
    const Graph core = pruned_core(g, &to_host);
    if (core.order() < 2) return false;
    VertexSet in_core = 0;
    for (int h : to_host) in_core |= VertexSet{1} << h;

    for (int x : to_host) {
      if ((g.row(x) & ~in_core) == 0) continue;
      std::vector<Edge> cut;
      for (VertexSet w = g.row(x) & in_core; w; w &= w - 1) cut.emplace_back(x, std::countr_zero(w));
      if (attempt(cut)) return true;
    }

    const int kappa = edge_connectivity(core);
    std::vector<Edge> pool;
    for (auto [u, v] : core.edges()) pool.emplace_back(to_host[static_cast<std::size_t>(u)], to_host[static_cast<std::size_t>(v)]);
    return for_each_subset(pool, kappa, [&](const std::vector<Edge>& pick) {
      std::vector<Edge> local;
      for (auto [u, v] : pick) {
        const auto pu = std::find(to_host.begin(), to_host.end(), u) - to_host.begin();
        const auto pv = std::find(to_host.begin(), to_host.end(), v) - to_host.begin();
        local.emplace_back(static_cast<int>(pu), static_cast<int>(pv));
      }
      if (!is_edge_cut(core, local)) return false;
      return attempt(pick);
    });
  }

  bool exhaustive(const Graph& g, const Attempt& attempt) const {
    const std::vector<Edge> pool = g.edges();
    for (int k = 2; k <= options_.max_cut_size; ++k)
      if (for_each_subset(pool, k, attempt)) return true;
    return false;
  }

  CertificateOptions options_;
  std::unordered_set<CanonicalForm, CanonicalFormHash> failed_;
};

const char* claim_tag(Comparison c) { return c == Comparison::Equal ? "equal" : "greater"; }

nlohmann::json node_json(const CertNode& node) {
  nlohmann::json j{{"type", to_string(node.kind)}, {"graph6", to_graph6(node.graph)}, {"n", node.graph.order()}};
  if (node.kind == CertNode::Kind::BaseFact) {
    j["claim"] = claim_tag(node.claim);
    if (node.bound) j["bound"] = {{"lo", to_decimal_string(node.bound->lo)}, {"hi", to_decimal_string(node.bound->hi)}};
    if (node.factorization) j["factorization"] = *node.factorization;
    return j;
  }
  nlohmann::json cut = nlohmann::json::array();
  for (auto [u, v] : node.cut) cut.push_back({u, v});
  j["cut"] = cut;
  j["children"] = nlohmann::json::array();
  for (const CertNode& c : node.children) j["children"].push_back(node_json(c));
  return j;
}

template <typename T>
T field(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw CertificateFormatError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw CertificateFormatError(std::string("field '") + key + "' has the wrong type");
  }
}

CertNode node_from_json(const nlohmann::json& j) {
  CertNode node;
  const auto type = field<std::string>(j, "type");
  if (type == "base_fact") {
    node.kind = CertNode::Kind::BaseFact;
  } else if (type == "star_cut") {
    node.kind = CertNode::Kind::StarCutStep;
  } else if (type == "strict_part") {
    node.kind = CertNode::Kind::StrictPartStep;
  } else {
    throw CertificateFormatError("unknown node type '" + type + "'");
  }
  try {
    node.graph = from_graph6(field<std::string>(j, "graph6"));
  } catch (const GraphError& e) {
    throw CertificateFormatError(std::string("bad graph6: ") + e.what());
  }
  if (node.kind == CertNode::Kind::BaseFact) {
    const auto claim = field<std::string>(j, "claim");
    if (claim == "greater") {
      node.claim = Comparison::Greater;
    } else if (claim == "equal") {
      node.claim = Comparison::Equal;
    } else {
      throw CertificateFormatError("unknown claim '" + claim + "'");
    }
    if (j.contains("bound")) {
      try {
        node.bound = EnergyBound{parse_rational(field<std::string>(j["bound"], "lo")),
                                 parse_rational(field<std::string>(j["bound"], "hi"))};
      } catch (const std::invalid_argument& e) {
        throw CertificateFormatError(std::string("bad bound: ") + e.what());
      }
    }
    if (j.contains("factorization")) node.factorization = field<std::string>(j, "factorization");
    if (j.contains("cut") || j.contains("children")) throw CertificateFormatError("base fact with a cut");
    return node;
  }
  for (const auto& e : field<nlohmann::json>(j, "cut")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw CertificateFormatError("cut edges must be pairs of integers");
    node.cut.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  const auto children = field<nlohmann::json>(j, "children");
  if (!children.is_array()) throw CertificateFormatError("children must be an array");
  for (const auto& c : children) node.children.push_back(node_from_json(c));
  return node;
}

// Returns whether the node's claim holds; throws on structural defects.
bool check_node(const CertNode& node) {
  const Graph& g = node.graph;
  const int n = g.order();
  if (node.kind == CertNode::Kind::BaseFact) {
    if (!node.cut.empty() || !node.children.empty()) throw CertificateFormatError("base fact with a cut");
    if (node.claim == Comparison::Equal) {
      if (!equality_forms().count(canonical_form(g))) return false;
      const auto f = factor_quadratic_shape(char_poly(g));
      if (!f || f->integer_energy() != mpz_class(n)) return false;
      return !node.factorization || *node.factorization == f->to_string();
    }
    if (node.claim != Comparison::Greater) throw CertificateFormatError("unknown claim");
    if (!node.bound) throw CertificateFormatError("greater claim without a bound");
    const EnergyBound& claimed = *node.bound;
    if (claimed.lo > claimed.hi) throw CertificateFormatError("bound with lo > hi");
    if (!(claimed.lo > n)) return false;
    const mpq_class floor = refinement_floor();
    RootRefiner refiner(char_poly(g));
    for (;;) {
      const EnergyBound own = refiner.energy();
      if (own.lo >= claimed.lo && own.hi <= claimed.hi) return true;
      if (own.hi < claimed.lo || own.lo > claimed.hi) return false;
      if (own.width() <= floor || !refiner.refine_once()) return false;
    }
  }

  if (node.children.size() != 2) throw CertificateFormatError("a cut step needs exactly two children");
  if (node.cut.empty()) throw CertificateFormatError("a cut step needs a nonempty cut");
  for (auto [u, v] : node.cut) {
    if (u < 0 || v < 0 || u >= n || v >= n || !g.has_edge(u, v))
      throw CertificateFormatError("cut edge " + std::to_string(u) + "-" + std::to_string(v) + " is not an edge");
  }
  const std::vector<Edge> cut = normalized(node.cut);
  if (std::adjacent_find(cut.begin(), cut.end()) != cut.end()) throw CertificateFormatError("repeated cut edge");
  const auto split = two_part_split(g, cut);
  if (!split) throw CertificateFormatError("cut does not split " + to_graph6(g) + " into exactly two parts");
  if (!(node.children[0].graph == split->g1) || !(node.children[1].graph == split->g2))
    throw CertificateFormatError("child graphs do not match the cut of " + to_graph6(g));
  if (node.kind == CertNode::Kind::StarCutStep && !is_star_cut(g, cut))
    throw CertificateFormatError("cut of " + to_graph6(g) + " is not a star");

  const bool left = check_node(node.children[0]);
  const bool right = check_node(node.children[1]);
  if (!left || !right) return false;
  if (node.kind == CertNode::Kind::StarCutStep) return true;
  return node.children[0].strict() || node.children[1].strict();
}

}  // namespace

const char* to_string(CertNode::Kind kind) {
  switch (kind) {
    case CertNode::Kind::BaseFact: return "base_fact";
    case CertNode::Kind::StarCutStep: return "star_cut";
    case CertNode::Kind::StrictPartStep: return "strict_part";
  }
  return "unknown";
}

std::size_t Certificate::node_count() const {
  std::function<std::size_t(const CertNode&)> count = [&](const CertNode& n) {
    std::size_t c = 1;
    for (const CertNode& k : n.children) c += count(k);
    return c;
  };
  return count(root);
}

int Certificate::depth() const {
  std::function<int(const CertNode&)> d = [&](const CertNode& n) {
    int best = 0;
    for (const CertNode& k : n.children) best = std::max(best, d(k));
    return best + 1;
  };
  return d(root);
}

nlohmann::json to_json(const Certificate& cert) {
  return nlohmann::json{{"format", "subcubic-certificate"},
                        {"version", kFormatVersion},
                        {"graph6", to_graph6(cert.root.graph)},
                        {"root", node_json(cert.root)}};
}

Certificate certificate_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw CertificateFormatError("certificate must be a JSON object");
  if (field<std::string>(j, "format") != "subcubic-certificate") throw CertificateFormatError("not a certificate");
  if (field<int>(j, "version") != kFormatVersion) throw CertificateFormatError("unsupported certificate version");
  return Certificate{node_from_json(field<nlohmann::json>(j, "root"))};
}

bool is_equality_graph(const Graph& g) { return equality_forms().count(canonical_form(g)) > 0; }

bool is_hypoenergetic_exception(const Graph& g) { return hypo_forms().count(canonical_form(g)) > 0; }

Certificate build_certificate(const Graph& g, const CertificateOptions& options) {
  if (!is_connected(g)) throw GraphError(GraphErrc::NotConnected, "build_certificate needs a connected graph");
  if (max_degree(g) > 3) throw std::invalid_argument("build_certificate needs max degree <= 3");
  if (is_equality_graph(g)) throw NotApplicableError(to_graph6(g) + " has energy equal to its order");
  if (is_hypoenergetic_exception(g)) throw NotApplicableError(to_graph6(g) + " is hypoenergetic");
  Builder builder(options);
  auto root = builder.prove(g);
  if (!root) throw CertificateNotFound("no certificate found for " + to_graph6(g));
  return Certificate{std::move(*root)};
}

bool check_certificate(const Graph& g, const Certificate& cert) {
  if (!(cert.root.graph == g)) throw CertificateFormatError("certificate is for a different graph");
  const bool ok = check_node(cert.root);
  return ok && cert.root.strict();
}

bool check_certificate(const Graph& g, const nlohmann::json& cert) {
  return check_certificate(g, certificate_from_json(cert));
}

}  // namespace subcubic
