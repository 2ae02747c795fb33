#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "subcubic/enumerate.hpp"
#include "subcubic/exact.hpp"
#include "subcubic/graph.hpp"
#include "subcubic/tolerances.hpp"

namespace subcubic {

enum class Verdict { Hypoenergetic, EqualsOrder, Superenergetic };
enum class Basis { FloatFilter, ExactInterval, ExactFactorization };

const char* to_string(Verdict v);
const char* to_string(Basis b);

/// E(G) against n. Hypoenergetic and Superenergetic verdicts always rest on
/// an exact interval that excludes n; EqualsOrder only on a factorization.
struct EnergyClass {
  Verdict verdict = Verdict::Superenergetic;
  Basis basis = Basis::FloatFilter;
  double energy_float = 0.0;
  int n = 0;
};

/// Raised when exact arithmetic cannot settle E versus n.
class UnresolvedError : public std::runtime_error {
 public:
  UnresolvedError(const std::string& graph6, const std::string& what)
      : std::runtime_error(what), graph6_(graph6) {}
  const std::string& graph6() const noexcept { return graph6_; }

 private:
  std::string graph6_;
};

EnergyClass classify(const Graph& g, const Tolerances& tol = kTolerances);

/// Tagged exact verdict: "less:n", "equal:n", "greater:n" or "unresolved".
std::string exact_tag(const EnergyClass& c);

struct ScanReport {
  nlohmann::json spec;
  std::size_t total = 0;
  std::map<std::string, std::size_t> by_verdict;  // verdict name -> count
  std::map<std::string, std::size_t> by_basis;
  std::vector<std::string> hypoenergetic;  // canonical graph6, sorted
  std::vector<std::string> equals_order;
  std::vector<std::string> unresolved;

  /// Associative and commutative; `spec` is left untouched.
  void merge(const ScanReport& other);

  nlohmann::json to_json(const Tolerances& tol = kTolerances) const;
  static ScanReport from_json(const nlohmann::json& j);
};

struct ScanOptions {
  int threads = 1;
  int parts = 1;
  bool allow_unresolved = false;
  Tolerances tolerances = kTolerances;
  /// Optional per-graph hook (stream mode). Serialised by the scanner.
  std::function<void(const Graph&, const EnergyClass&)> on_record;
};

ScanReport scan_unit(const WorkUnit& unit, const ScanOptions& options);
ScanReport scan(const EnumSpec& spec, const ScanOptions& options = {});

/// Merged scan over orders n_min..n_max of the same class and degree cap.
ScanReport scan_orders(EnumSpec spec, int n_min, int n_max, const ScanOptions& options = {});

/// Canonical graph6 of g (the form used in every report list).
std::string canonical_graph6(const Graph& g);

struct ConjectureReport {
  ScanReport scan;
  bool passed = false;
  std::vector<std::string> missing_equal;
  std::vector<std::string> extra_equal;
  std::vector<std::string> missing_hypo;
  std::vector<std::string> extra_hypo;

  nlohmann::json to_json(const Tolerances& tol = kTolerances) const;
};

/// Scans every connected graph with max degree <= 3 and n <= n_max and
/// compares the hits against the four equality graphs and the five
/// hypoenergetic ones (restricted to order <= n_max).
ConjectureReport verify_conjecture(int n_max, const ScanOptions& options = {});

/// The comparison step of verify_conjecture applied to an existing scan.
ConjectureReport judge_conjecture(ScanReport scan, int n_max);

struct CutViolation {
  std::string graph6;
  std::vector<Edge> cut;
  double energy_before = 0.0;
  double energy_after = 0.0;
  std::string detail;
};

nlohmann::json to_json(const CutViolation& v);

/// Exact comparison of E(a) with E(b) by refining both enclosures to
/// 2^-bits; Equal only when the characteristic polynomials coincide.
Comparison compare_energies(const Graph& a, const Graph& b, int bits = 128);

/// Random connected graphs (no degree cap) with random cuts; reports any
/// pair with E(G - F) > E(G) + slack that exact arithmetic confirms.
std::vector<CutViolation> check_cut_monotonicity(int trials, std::uint64_t seed, int n_max,
                                                 const Tolerances& tol = kTolerances);

/// Random star cuts with max degree <= 3; drops below the strict gap are
/// settled exactly before anything is reported.
std::vector<CutViolation> check_star_cut_strict(int trials, std::uint64_t seed, int n_max,
                                                const Tolerances& tol = kTolerances);

struct OddIntegerCandidate {
  std::string graph6;
  double energy = 0.0;
  long odd = 0;
  Comparison resolution = Comparison::Unresolved;
};

nlohmann::json to_json(const OddIntegerCandidate& c);

/// Raised when an enumerated graph has an odd integer energy.
class OddIntegerEnergyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Every enumerated graph whose energy lies within the odd-integer band of
/// an odd integer, with the exact verdict. Throws OddIntegerEnergyError on
/// an Equal verdict.
std::vector<OddIntegerCandidate> check_odd_integer_exclusion(const EnumSpec& spec,
                                                             const Tolerances& tol = kTolerances);

}  // namespace subcubic
