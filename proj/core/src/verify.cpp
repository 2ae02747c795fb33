#include "subcubic/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

#include "subcubic/canonical.hpp"
#include "subcubic/catalog.hpp"
#include "subcubic/graph6.hpp"
#include "subcubic/random_graph.hpp"
#include "subcubic/spectral.hpp"

namespace subcubic {
namespace {

std::mutex record_mutex;

mpq_class confirm_width(const Tolerances& tol) {
  // 1e-12 is not dyadic; the nearest power of two below keeps endpoints exact.
  mpq_class w = 1;
  while (w > tol.interval_confirm_width) w /= 2;
  return w;
}

void sort_list(std::vector<std::string>& v) { std::sort(v.begin(), v.end()); }

void append_sorted(std::vector<std::string>& into, const std::vector<std::string>& from) {
  into.insert(into.end(), from.begin(), from.end());
  sort_list(into);
}

template <typename Fn>
void run_parallel(std::size_t count, int threads, Fn&& fn) {
  threads = std::clamp<int>(threads, 1, static_cast<int>(std::max<std::size_t>(count, 1)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

std::vector<std::string> expected_hits(const std::vector<NamedGraph>& names, int n_max) {
  std::vector<std::string> out;
  for (const NamedGraph& name : names) {
    const Graph g = named(name);
    if (g.order() <= n_max) out.push_back(canonical_graph6(g));
  }
  sort_list(out);
  return out;
}

std::vector<std::string> difference(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

nlohmann::json edges_json(const std::vector<Edge>& edges) {
  nlohmann::json out = nlohmann::json::array();
  for (auto [u, v] : edges) out.push_back({u, v});
  return out;
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Hypoenergetic: return "hypoenergetic";
    case Verdict::EqualsOrder: return "equals_order";
    case Verdict::Superenergetic: return "superenergetic";
  }
  return "unknown";
}

const char* to_string(Basis b) {
  switch (b) {
    case Basis::FloatFilter: return "float_filter";
    case Basis::ExactInterval: return "exact_interval";
    case Basis::ExactFactorization: return "exact_factorization";
  }
  return "unknown";
}

EnergyClass classify(const Graph& g, const Tolerances& tol) {
  EnergyClass out;
  out.n = g.order();
  out.energy_float = energy(g);
  const CharPoly p = char_poly(g);
  const mpq_class target(out.n);

  if (std::abs(out.energy_float - out.n) > tol.filter_band) {
    const bool float_says_above = out.energy_float > out.n;
    const mpq_class floor = confirm_width(tol);
    RootRefiner refiner(p);
    for (;;) {
      const EnergyBound b = refiner.energy();
      if (b.lo > target || b.hi < target) {
        const bool above = b.lo > target;
        out.verdict = above ? Verdict::Superenergetic : Verdict::Hypoenergetic;
        out.basis = above == float_says_above ? Basis::FloatFilter : Basis::ExactInterval;
        return out;
      }
      if (b.width() <= floor || !refiner.refine_once()) break;
    }
  }

  const EnergyDecision d = decide_energy(p, out.n, tol);
  switch (d.verdict) {
    case Comparison::Less:
    case Comparison::Greater:
      out.verdict = d.verdict == Comparison::Less ? Verdict::Hypoenergetic : Verdict::Superenergetic;
      out.basis = d.factorization ? Basis::ExactFactorization : Basis::ExactInterval;
      return out;
    case Comparison::Equal:
      out.verdict = Verdict::EqualsOrder;
      out.basis = Basis::ExactFactorization;
      return out;
    case Comparison::Unresolved: break;
  }
  const std::string g6 = to_graph6(g);
  throw UnresolvedError(g6, "energy of " + g6 + " could not be separated from " + std::to_string(out.n));
}

std::string exact_tag(const EnergyClass& c) {
  const std::string n = std::to_string(c.n);
  switch (c.verdict) {
    case Verdict::Hypoenergetic: return "less:" + n;
    case Verdict::EqualsOrder: return "equal:" + n;
    case Verdict::Superenergetic: return "greater:" + n;
  }
  return "unresolved";
}

std::string canonical_graph6(const Graph& g) { return to_graph6(canonical_labeling(g).canonical_graph); }

void ScanReport::merge(const ScanReport& other) {
  total += other.total;
  for (const auto& [k, v] : other.by_verdict) by_verdict[k] += v;
  for (const auto& [k, v] : other.by_basis) by_basis[k] += v;
  append_sorted(hypoenergetic, other.hypoenergetic);
  append_sorted(equals_order, other.equals_order);
  append_sorted(unresolved, other.unresolved);
}

nlohmann::json ScanReport::to_json(const Tolerances& tol) const {
  return nlohmann::json{{"spec", spec},
                        {"total", total},
                        {"verdicts", by_verdict},
                        {"basis", by_basis},
                        {"hypoenergetic", hypoenergetic},
                        {"equals_order", equals_order},
                        {"unresolved", unresolved},
                        {"tolerances",
                         {{"trace", tol.trace},
                          {"frobenius", tol.frobenius},
                          {"energy", tol.energy},
                          {"filter_band", tol.filter_band},
                          {"jacobi_offdiag", tol.jacobi_offdiag},
                          {"monotonicity_slack", tol.monotonicity_slack},
                          {"strict_gap", tol.strict_gap},
                          {"odd_integer_band", tol.odd_integer_band},
                          {"interval_confirm_width", tol.interval_confirm_width},
                          {"exact_refinement_bits", tol.exact_refinement_bits}}}};
}

ScanReport ScanReport::from_json(const nlohmann::json& j) {
  ScanReport r;
  r.spec = j.at("spec");
  r.total = j.at("total").get<std::size_t>();
  r.by_verdict = j.at("verdicts").get<std::map<std::string, std::size_t>>();
  r.by_basis = j.at("basis").get<std::map<std::string, std::size_t>>();
  r.hypoenergetic = j.at("hypoenergetic").get<std::vector<std::string>>();
  r.equals_order = j.at("equals_order").get<std::vector<std::string>>();
  r.unresolved = j.at("unresolved").get<std::vector<std::string>>();
  return r;
}

ScanReport scan_unit(const WorkUnit& unit, const ScanOptions& options) {
  ScanReport report;
  report.spec = to_json(unit.spec);
  run_unit(unit, [&](const Graph& g) {
    ++report.total;
    EnergyClass c;
    try {
      c = classify(g, options.tolerances);
    } catch (const UnresolvedError&) {
      if (!options.allow_unresolved) throw;
      ++report.by_verdict["unresolved"];
      report.unresolved.push_back(canonical_graph6(g));
      return;
    }
    ++report.by_verdict[to_string(c.verdict)];
    ++report.by_basis[to_string(c.basis)];
    if (c.verdict == Verdict::Hypoenergetic) report.hypoenergetic.push_back(canonical_graph6(g));
    if (c.verdict == Verdict::EqualsOrder) report.equals_order.push_back(canonical_graph6(g));
    if (options.on_record) {
      std::lock_guard lock(record_mutex);
      options.on_record(g, c);
    }
  });
  sort_list(report.hypoenergetic);
  sort_list(report.equals_order);
  sort_list(report.unresolved);
  return report;
}

ScanReport scan(const EnumSpec& spec, const ScanOptions& options) {
  const std::vector<WorkUnit> units = split_work(spec, std::max(1, options.parts), default_generator(spec));
  std::vector<ScanReport> parts(units.size());
  run_parallel(units.size(), options.threads, [&](std::size_t i) { parts[i] = scan_unit(units[i], options); });
  ScanReport out;
  out.spec = to_json(spec);
  for (const ScanReport& r : parts) out.merge(r);
  return out;
}

ScanReport scan_orders(EnumSpec spec, int n_min, int n_max, const ScanOptions& options) {
  if (n_min < 1 || n_max < n_min) throw EnumError("bad order range");
  spec.n = n_max;
  validate(spec, default_generator(spec) == Generator::Tree);
  ScanReport out;
  for (int n = n_min; n <= n_max; ++n) {
    spec.n = n;
    try {
      validate(spec, default_generator(spec) == Generator::Tree);
    } catch (const EnumError&) {
      continue;  // no graph of this order fits the class
    }
    out.merge(scan(spec, options));
  }
  spec.n = n_max;
  out.spec = to_json(spec);
  out.spec.erase("n");
  out.spec["n_min"] = n_min;
  out.spec["n_max"] = n_max;
  return out;
}

nlohmann::json ConjectureReport::to_json(const Tolerances& tol) const {
  nlohmann::json j = scan.to_json(tol);
  j["passed"] = passed;
  j["missing_equal"] = missing_equal;
  j["extra_equal"] = extra_equal;
  j["missing_hypoenergetic"] = missing_hypo;
  j["extra_hypoenergetic"] = extra_hypo;
  return j;
}

ConjectureReport verify_conjecture(int n_max, const ScanOptions& options) {
  EnumSpec spec;
  spec.max_degree = 3;
  return judge_conjecture(scan_orders(spec, 1, n_max, options), n_max);
}

ConjectureReport judge_conjecture(ScanReport scan, int n_max) {
  ConjectureReport out;
  out.scan = std::move(scan);
  const auto equal = expected_hits(equality_graphs(), n_max);
  const auto hypo = expected_hits(hypoenergetic_graphs(), n_max);
  out.missing_equal = difference(equal, out.scan.equals_order);
  out.extra_equal = difference(out.scan.equals_order, equal);
  out.missing_hypo = difference(hypo, out.scan.hypoenergetic);
  out.extra_hypo = difference(out.scan.hypoenergetic, hypo);
  out.passed = out.missing_equal.empty() && out.extra_equal.empty() && out.missing_hypo.empty() &&
               out.extra_hypo.empty() && out.scan.unresolved.empty();
  return out;
}

nlohmann::json to_json(const CutViolation& v) {
  return nlohmann::json{{"graph6", v.graph6},
                        {"cut", edges_json(v.cut)},
                        {"energy_before", v.energy_before},
                        {"energy_after", v.energy_after},
                        {"detail", v.detail}};
}

Comparison compare_energies(const Graph& a, const Graph& b, int bits) {
  const CharPoly pa = char_poly(a);
  const CharPoly pb = char_poly(b);
  if (pa.coefficients == pb.coefficients) return Comparison::Equal;
  mpq_class floor = 1;
  floor /= mpz_class(mpz_class(1) << bits);
  RootRefiner ra(pa);
  RootRefiner rb(pb);
  for (;;) {
    const EnergyBound ea = ra.energy();
    const EnergyBound eb = rb.energy();
    if (ea.lo > eb.hi) return Comparison::Greater;
    if (ea.hi < eb.lo) return Comparison::Less;
    const bool a_done = ea.width() <= floor;
    const bool b_done = eb.width() <= floor;
    if (a_done && b_done) return Comparison::Unresolved;
    bool progressed = false;
    if (!a_done && (b_done || ea.width() >= eb.width())) progressed = ra.refine_once();
    if (!progressed && !b_done) progressed = rb.refine_once();
    if (!progressed && !a_done) progressed = ra.refine_once();
    if (!progressed) return Comparison::Unresolved;
  }
}

std::vector<CutViolation> check_cut_monotonicity(int trials, std::uint64_t seed, int n_max, const Tolerances& tol) {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (n_max < 2 || n_max > kMaxVertices) throw std::invalid_argument("n_max must lie in 2..64");
  Rng rng(seed);
  std::vector<CutViolation> out;
  for (int t = 0; t < trials; ++t) {
    const int n = std::uniform_int_distribution<int>(2, n_max)(rng);
    const int extra = std::uniform_int_distribution<int>(0, n)(rng);
    const Graph g = random_connected_graph(rng, n, n - 1, extra);
    const EdgeCut cut = random_edge_cut(rng, g);
    const Graph rest = delete_edges(g, cut.edges);
    const double before = energy(g);
    const double after = energy(rest);
    if (after <= before + tol.monotonicity_slack) continue;
    const Comparison c = compare_energies(rest, g);
    if (c == Comparison::Less || c == Comparison::Equal) continue;
    out.push_back({to_graph6(g), cut.edges, before, after,
                   c == Comparison::Greater ? "exact: E(G-F) > E(G)" : "exact comparison unresolved"});
  }
  return out;
}

std::vector<CutViolation> check_star_cut_strict(int trials, std::uint64_t seed, int n_max, const Tolerances& tol) {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (n_max < 2 || n_max > kMaxVertices) throw std::invalid_argument("n_max must lie in 2..64");
  Rng rng(seed);
  std::vector<CutViolation> out;
  for (int t = 0; t < trials; ++t) {
    const int a = std::uniform_int_distribution<int>(1, n_max - 1)(rng);
    const int b = std::uniform_int_distribution<int>(1, n_max - a)(rng);
    const StarCutSample s = random_star_cut(rng, a, b, 3);
    const Graph rest = delete_edges(s.graph, s.cut.edges);
    const double before = energy(s.graph);
    const double after = energy(rest);
    if (before - after > tol.strict_gap) continue;
    const Comparison c = compare_energies(s.graph, rest);
    if (c == Comparison::Greater) continue;
    out.push_back({to_graph6(s.graph), s.cut.edges, before, after, std::string("exact: ") + to_string(c)});
  }
  return out;
}

nlohmann::json to_json(const OddIntegerCandidate& c) {
  return nlohmann::json{
      {"graph6", c.graph6}, {"energy", c.energy}, {"odd", c.odd}, {"resolution", to_string(c.resolution)}};
}

std::vector<OddIntegerCandidate> check_odd_integer_exclusion(const EnumSpec& spec, const Tolerances& tol) {
  std::vector<OddIntegerCandidate> out;
  const WorkUnit unit{spec, default_generator(spec), 1, 0, prefix_depth_for(spec)};
  run_unit(unit, [&](const Graph& g) {
    const double e = energy(g);
    const long odd = 2 * std::lround((e - 1.0) / 2.0) + 1;
    if (odd < 1 || std::abs(e - static_cast<double>(odd)) > tol.odd_integer_band) return;
    OddIntegerCandidate c{canonical_graph6(g), e, odd, decide_energy(char_poly(g), odd, tol).verdict};
    if (c.resolution == Comparison::Equal)
      throw OddIntegerEnergyError("graph " + c.graph6 + " has energy exactly " + std::to_string(odd));
    out.push_back(std::move(c));
  });
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.graph6 < y.graph6; });
  return out;
}

}  // namespace subcubic
