#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "subcubic/exact.hpp"
#include "subcubic/graph.hpp"

namespace subcubic {

/// One step of a proof that E(G) >= n, strict unless the node is an
/// equality base fact.
///
///  - BaseFact/Greater: an exact enclosure with lo > n.
///  - BaseFact/Equal: G is one of the four graphs with E = n.
///  - StarCutStep: F is a star cut, so E(G) > E(G - F) = E(G1) + E(G2),
///    and both children prove E >= order.
///  - StrictPartStep: E(G) >= E(G - F) for any cut, and at least one child
///    proves a strict inequality.
struct CertNode {
  enum class Kind { BaseFact, StarCutStep, StrictPartStep };

  Kind kind = Kind::BaseFact;
  Graph graph = Graph::build(1, {});
  Comparison claim = Comparison::Greater;  // BaseFact only: Greater or Equal
  std::optional<EnergyBound> bound;         // BaseFact/Greater
  std::optional<std::string> factorization;  // BaseFact/Equal
  std::vector<Edge> cut;
  std::vector<CertNode> children;

  bool strict() const { return !(kind == Kind::BaseFact && claim == Comparison::Equal); }
};

struct Certificate {
  CertNode root;

  std::size_t node_count() const;
  int depth() const;
};

const char* to_string(CertNode::Kind kind);

nlohmann::json to_json(const Certificate& cert);

/// Malformed certificate: unknown tags, missing fields, cuts that are not
/// two-part edge cuts of their node, false star claims, or child graphs that
/// do not match the cut.
class CertificateFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// g is one of the nine graphs with E <= n.
class NotApplicableError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class CertificateNotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses the JSON document; only syntax is checked here.
Certificate certificate_from_json(const nlohmann::json& j);

struct CertificateOptions {
  int base_fact_max_n = 12;
  int max_cut_size = 4;
};

/// Searches bridges, then cuts guided by the edge connectivity of the
/// 2-core, then every two-part cut with at most max_cut_size edges, and
/// finally a direct exact bound when n <= base_fact_max_n.
Certificate build_certificate(const Graph& g, const CertificateOptions& options = {});

/// Re-derives every claim with the exact module. Returns false when the
/// structure is sound but some claim does not hold; throws
/// CertificateFormatError when the structure itself is broken.
bool check_certificate(const Graph& g, const Certificate& cert);
bool check_certificate(const Graph& g, const nlohmann::json& cert);

/// Canonical-form membership in the four equality graphs / the five
/// hypoenergetic graphs.
bool is_equality_graph(const Graph& g);
bool is_hypoenergetic_exception(const Graph& g);

}  // namespace subcubic
