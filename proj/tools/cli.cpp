#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "checkpoint.hpp"
#include "subcubic/catalog.hpp"
#include "subcubic/certificate.hpp"
#include "subcubic/enumerate.hpp"
#include "subcubic/exact.hpp"
#include "subcubic/graph6.hpp"
#include "subcubic/spectral.hpp"
#include "subcubic/verify.hpp"

namespace subcubic::cli {
namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string format_energy(double e) {
  if (std::abs(e) < 5e-16) e = 0.0;  // no "-0.000..."
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15f", e);
  return buf;
}

Graph parse_graph_arg(const std::string& text) {
  try {
    return named(text);
  } catch (const std::invalid_argument&) {
  }
  try {
    return from_graph6(text);
  } catch (const GraphError& e) {
    throw UsageError("'" + text + "' is neither a catalog name nor graph6 (" + e.what() + ")");
  }
}

int resolve_threads(int flag) {
  if (const char* env = std::getenv("SUBCUBIC_THREADS")) {
    try {
      const int t = std::stoi(env);
      if (t > 0) return t;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("SUBCUBIC_THREADS must be a positive integer, got '") + env + "'");
  }
  if (flag > 0) return flag;
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

json record(const Graph& g, const std::optional<EnergyClass>& c, double e) {
  json j{{"n", g.order()}, {"m", g.size()}, {"energy", format_energy(e)}, {"graph6", to_graph6(g)}};
  j["exact"] = c ? exact_tag(*c) : "unresolved";
  j["class"] = c ? to_string(c->verdict) : "unresolved";
  return j;
}

std::optional<EnergyClass> try_classify(const Graph& g) {
  try {
    return classify(g);
  } catch (const UnresolvedError&) {
    return std::nullopt;
  }
}

const char* kCsvHeader = "n,m,energy,exact,class,graph6";

std::string csv_row(const json& r) {
  std::ostringstream s;
  s << r["n"].get<int>() << ',' << r["m"].get<int>() << ',' << r["energy"].get<std::string>() << ','
    << r["exact"].get<std::string>() << ',' << r["class"].get<std::string>() << ',' << r["graph6"].get<std::string>();
  return s.str();
}

void emit_records(const std::vector<json>& rows, const std::string& format, std::ostream& out) {
  if (format == "csv") {
    out << kCsvHeader;
    if (!rows.empty() && rows.front().contains("name")) out << ",name";
    out << '\n';
    for (const json& r : rows) {
      out << csv_row(r);
      if (r.contains("name")) out << ',' << r["name"].get<std::string>();
      out << '\n';
    }
    return;
  }
  for (const json& r : rows) out << r.dump() << '\n';
}

EnumSpec make_spec(int n, int max_degree, const std::string& cls, const std::optional<int>& edges) {
  EnumSpec spec;
  spec.n = n;
  spec.max_degree = max_degree;
  spec.edges = edges;
  parse_graph_class(cls, spec);
  return spec;
}

// ---- scans with checkpointing ------------------------------------------

struct ScanJob {
  std::string command;
  EnumSpec base;
  int n_min = 1;
  int n_max = 1;
  int parts = 8;

  json to_json() const {
    json j{{"command", command}, {"class", class_name(base)}, {"max_degree", base.max_degree},
           {"n_min", n_min},     {"n_max", n_max},            {"parts", parts}};
    if (base.edges) j["edges"] = *base.edges;
    return j;
  }
};

struct ScanRun {
  int threads = 1;
  bool allow_unresolved = false;
  std::optional<std::string> checkpoint;
  std::optional<int> stop_after;
  std::function<void(const Graph&, const EnergyClass&)> on_record;
};

struct ScanOutcome {
  std::optional<ScanReport> report;  // empty when stopped early
  std::size_t units_done = 0;
  std::size_t units_total = 0;
};

ScanOutcome run_scan_job(const ScanJob& job, const ScanRun& run) {
  if (job.n_min < 1 || job.n_max < job.n_min) throw UsageError("need 1 <= min-n <= max-n");
  if (job.parts < 1) throw UsageError("--parts must be at least 1");
  EnumSpec top = job.base;
  top.n = job.n_max;
  validate(top, default_generator(top) == Generator::Tree);

  std::vector<WorkUnit> units;
  for (int n = job.n_min; n <= job.n_max; ++n) {
    EnumSpec spec = job.base;
    spec.n = n;
    try {
      validate(spec, default_generator(spec) == Generator::Tree);
    } catch (const EnumError&) {
      continue;
    }
    for (WorkUnit& u : split_work(spec, job.parts)) units.push_back(std::move(u));
  }

  Checkpoint state = run.checkpoint ? resume(*run.checkpoint, job.to_json()) : Checkpoint{kCheckpointVersion, job.to_json(), {}};
  std::vector<const WorkUnit*> pending;
  for (const WorkUnit& u : units)
    if (!state.completed.count(u.id())) pending.push_back(&u);

  ScanOptions options;
  options.allow_unresolved = run.allow_unresolved;
  options.on_record = run.on_record;

  std::mutex writer;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::size_t finished_now = 0;
  std::exception_ptr failure;
  auto worker = [&] {
    for (std::size_t i = next++; i < pending.size() && !stop; i = next++) {
      try {
        ScanReport r = scan_unit(*pending[i], options);
        std::lock_guard lock(writer);
        state.completed[pending[i]->id()] = std::move(r);
        if (run.checkpoint) write_checkpoint(*run.checkpoint, state);
        ++finished_now;
        if (run.stop_after && static_cast<int>(finished_now) >= *run.stop_after) stop = true;
      } catch (...) {
        std::lock_guard lock(writer);
        if (!failure) failure = std::current_exception();
        stop = true;
      }
    }
  };
  const int threads = std::clamp<int>(run.threads, 1, static_cast<int>(std::max<std::size_t>(pending.size(), 1)));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  if (run.checkpoint && pending.empty()) write_checkpoint(*run.checkpoint, state);

  ScanOutcome outcome;
  outcome.units_total = units.size();
  for (const WorkUnit& u : units) outcome.units_done += state.completed.count(u.id());
  if (outcome.units_done < outcome.units_total) return outcome;

  ScanReport report;
  for (const WorkUnit& u : units) report.merge(state.completed.at(u.id()));
  report.spec = to_json(top);
  report.spec.erase("n");
  report.spec["n_min"] = job.n_min;
  report.spec["n_max"] = job.n_max;
  outcome.report = std::move(report);
  return outcome;
}

json interrupted(const ScanOutcome& o) {
  return json{{"status", "interrupted"}, {"completed_units", o.units_done}, {"total_units", o.units_total}};
}

struct ScanFlags {
  int threads = 0;
  int parts = 8;
  std::string checkpoint;
  bool allow_unresolved = false;
  bool timing = false;
  int stop_after = 0;

  void attach(CLI::App* app) {
    app->add_option("--threads", threads, "Worker threads (SUBCUBIC_THREADS overrides; default all cores)");
    app->add_option("--parts", parts, "Work units per order")->check(CLI::PositiveNumber);
    app->add_option("--checkpoint", checkpoint, "Checkpoint file; resumes when it exists");
    app->add_flag("--allow-unresolved", allow_unresolved, "List unresolved graphs instead of aborting");
    app->add_flag("--timing", timing, "Add runtime_seconds to the report");
    app->add_option("--stop-after", stop_after, "Stop after this many units")->group("");
  }

  ScanRun run() const {
    ScanRun r;
    r.threads = resolve_threads(threads);
    r.allow_unresolved = allow_unresolved;
    if (!checkpoint.empty()) r.checkpoint = checkpoint;
    if (stop_after > 0) r.stop_after = stop_after;
    return r;
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// ---- subcommands -------------------------------------------------------

struct EnergyCmd {
  std::vector<std::string> graphs;
  bool exact = false;
  bool spectrum = false;
  std::string format = "json";

  int run(std::ostream& out) const {
    std::vector<json> rows;
    for (const std::string& text : graphs) {
      const Graph g = parse_graph_arg(text);
      const Spectrum s = eigenvalues(g);
      json r = record(g, try_classify(g), s.energy);
      if (exact) {
        const CharPoly p = char_poly(g);
        r["charpoly"] = p.to_string();
        mpq_class width = 1;
        width /= mpz_class(mpz_class(1) << 50);
        const EnergyBound b = energy_bound(p, width);
        r["bound"] = {{"lo", to_decimal_string(b.lo)}, {"hi", to_decimal_string(b.hi)}};
        if (auto f = factor_quadratic_shape(p)) r["factorization"] = f->to_string();
      }
      if (spectrum) r["eigenvalues"] = s.eigenvalues;
      rows.push_back(std::move(r));
    }
    emit_records(rows, format, out);
    return kExitOk;
  }
};

struct EnumerateCmd {
  int n = 0;
  int max_degree = 3;
  std::string cls = "any";
  std::optional<int> edges;
  int parts = 1;
  std::optional<int> unit;
  std::string emit = "graph6";
  std::string generator = "auto";
  int threads = 0;

  int run(std::ostream& out) const {
    const EnumSpec spec = make_spec(n, max_degree, cls, edges);
    Generator gen = default_generator(spec);
    if (generator == "augmentation") gen = Generator::Augmentation;
    if (generator == "tree") gen = Generator::Tree;
    const std::vector<WorkUnit> units = split_work(spec, parts, gen);
    std::vector<std::size_t> chosen;
    if (unit) {
      if (*unit < 0 || *unit >= parts) throw UsageError("--unit must lie in 0..parts-1");
      chosen.push_back(static_cast<std::size_t>(*unit));
    } else {
      for (std::size_t i = 0; i < units.size(); ++i) chosen.push_back(i);
    }
    const bool count_only = emit == "count";
    std::vector<std::vector<std::string>> lines(chosen.size());
    std::vector<std::size_t> counts(chosen.size(), 0);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < chosen.size(); i = next++) {
        counts[i] = run_unit(units[chosen[i]], [&](const Graph& g) {
          if (!count_only) lines[i].push_back(to_graph6(g));
        });
      }
    };
    const int t = std::clamp<int>(resolve_threads(threads), 1, static_cast<int>(chosen.size()));
    std::vector<std::thread> pool;
    for (int k = 1; k < t; ++k) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    if (count_only) {
      std::size_t total = 0;
      for (std::size_t c : counts) total += c;
      out << total << '\n';
    } else {
      for (const auto& unit_lines : lines)
        for (const std::string& l : unit_lines) out << l << '\n';
    }
    return kExitOk;
  }
};

struct ReportCmd {
  std::string cls = "any";
  int max_degree = 3;
  int n = 0;
  int min_n = 0;
  int max_n = 0;
  std::optional<int> edges;
  bool stream = false;
  std::string format = "json";
  ScanFlags flags;

  int run(std::ostream& out, std::ostream& err) const {
    ScanJob job;
    job.command = "report";
    job.base = make_spec(1, max_degree, cls, edges);
    if (n > 0) {
      job.n_min = job.n_max = n;
    } else {
      if (max_n < 1) throw UsageError("give --n or --max-n");
      job.n_min = min_n > 0 ? min_n : 1;
      job.n_max = max_n;
    }
    job.parts = flags.parts;
    ScanRun run = flags.run();
    bool header = false;
    if (stream) {
      run.on_record = [&](const Graph& g, const EnergyClass& c) {
        json r = record(g, c, c.energy_float);
        if (format == "csv") {
          if (!header) out << kCsvHeader << '\n';
          header = true;
          out << csv_row(r) << '\n';
        } else {
          out << r.dump() << '\n';
        }
      };
    }
    const auto t0 = Clock::now();
    const ScanOutcome o = run_scan_job(job, run);
    if (!o.report) {
      out << interrupted(o).dump() << '\n';
      return kExitOk;
    }
    json j = o.report->to_json();
    if (flags.timing) j["runtime_seconds"] = seconds_since(t0);
    if (stream) {
      out << json{{"report", j}}.dump() << '\n';
    } else if (format == "csv") {
      out << "verdict,graph6\n";
      for (const auto& g6 : o.report->hypoenergetic) out << "hypoenergetic," << g6 << '\n';
      for (const auto& g6 : o.report->equals_order) out << "equals_order," << g6 << '\n';
      for (const auto& g6 : o.report->unresolved) out << "unresolved," << g6 << '\n';
    } else {
      out << j.dump(2) << '\n';
    }
    if (!o.report->unresolved.empty()) {
      err << o.report->unresolved.size() << " graph(s) left unresolved\n";
      return kExitFailed;
    }
    return kExitOk;
  }
};

struct ConjectureCmd {
  int max_n = 0;
  ScanFlags flags;

  int run(std::ostream& out, std::ostream& err) const {
    ScanJob job;
    job.command = "verify-conjecture";
    job.base = make_spec(1, 3, "any", std::nullopt);
    job.n_min = 1;
    job.n_max = max_n;
    job.parts = flags.parts;
    const auto t0 = Clock::now();
    const ScanOutcome o = run_scan_job(job, flags.run());
    if (!o.report) {
      out << interrupted(o).dump() << '\n';
      return kExitOk;
    }
    const ConjectureReport r = judge_conjecture(*o.report, max_n);
    json j = r.to_json();
    if (flags.timing) j["runtime_seconds"] = seconds_since(t0);
    out << j.dump(2) << '\n';
    if (r.passed) return kExitOk;
    auto list = [&](const char* what, const std::vector<std::string>& v) {
      for (const auto& g6 : v) err << what << ": " << g6 << '\n';
    };
    list("missing equality graph", r.missing_equal);
    list("unexpected equality graph", r.extra_equal);
    list("missing hypoenergetic graph", r.missing_hypo);
    list("unexpected hypoenergetic graph", r.extra_hypo);
    list("unresolved", r.scan.unresolved);
    return kExitFailed;
  }
};

struct LemmaCmd {
  std::string which;
  int trials = 10000;
  std::uint64_t seed = 0;
  int max_n = 0;

  int run(std::ostream& out, std::ostream& err) const {
    static const std::map<std::string, std::string> aliases = {
        {"cut-monotonicity", "cut-monotonicity"}, {"2.1", "cut-monotonicity"},
        {"star-cut", "star-cut"},                 {"2.2", "star-cut"},
        {"odd-integer", "odd-integer"},           {"2.3", "odd-integer"}};
    const auto it = aliases.find(which);
    if (it == aliases.end()) throw UsageError("unknown property '" + which + "'");
    const std::string& name = it->second;
    json j{{"property", name}};
    bool passed = true;
    if (name == "odd-integer") {
      const int top = max_n > 0 ? max_n : 10;
      j["n_max"] = top;
      json candidates = json::array();
      try {
        for (int n = 1; n <= top; ++n) {
          EnumSpec spec;
          spec.n = n;
          for (const auto& c : check_odd_integer_exclusion(spec)) candidates.push_back(to_json(c));
        }
      } catch (const OddIntegerEnergyError& e) {
        err << e.what() << '\n';
        passed = false;
      }
      j["candidates"] = candidates;
    } else {
      const int top = max_n > 0 ? max_n : 12;
      j["n_max"] = top;
      j["trials"] = trials;
      j["seed"] = seed;
      const auto violations = name == "cut-monotonicity" ? check_cut_monotonicity(trials, seed, top)
                                                         : check_star_cut_strict(trials, seed, top);
      j["violations"] = json::array();
      for (const auto& v : violations) j["violations"].push_back(to_json(v));
      passed = violations.empty();
      for (const auto& v : violations) err << "violation: " << v.graph6 << " (" << v.detail << ")\n";
    }
    j["passed"] = passed;
    out << j.dump(2) << '\n';
    return passed ? kExitOk : kExitFailed;
  }
};

struct CertifyCmd {
  std::string graph;
  std::string output;
  int max_cut = 4;
  int base_max_n = 12;

  int run(std::ostream& out, std::ostream& err) const {
    const Graph g = parse_graph_arg(graph);
    if (!is_connected(g)) throw UsageError("certify needs a connected graph");
    if (max_degree(g) > 3) throw UsageError("certify needs max degree <= 3");
    Certificate cert;
    try {
      cert = build_certificate(g, CertificateOptions{base_max_n, max_cut});
    } catch (const NotApplicableError& e) {
      err << "not applicable: " << e.what() << '\n';
      return kExitFailed;
    } catch (const CertificateNotFound& e) {
      err << e.what() << '\n';
      return kExitFailed;
    }
    const json doc = to_json(cert);
    if (output.empty()) {
      out << doc.dump(2) << '\n';
    } else {
      std::ofstream f(output);
      if (!f) throw UsageError("cannot write " + output);
      f << doc.dump(2) << '\n';
      out << json{{"graph6", to_graph6(g)}, {"nodes", cert.node_count()}, {"depth", cert.depth()}, {"output", output}}
                 .dump()
          << '\n';
    }
    return kExitOk;
  }
};

struct CheckCertCmd {
  std::string file;
  std::string graph;

  int run(std::ostream& out, std::ostream& err) const {
    std::ifstream in(file);
    if (!in) throw UsageError("cannot read " + file);
    json result;
    int code = kExitFailed;
    try {
      json doc;
      try {
        doc = json::parse(in);
      } catch (const json::parse_error& e) {
        throw CertificateFormatError(std::string("not JSON: ") + e.what());
      }
      const Certificate cert = certificate_from_json(doc);
      const Graph g = graph.empty() ? cert.root.graph : parse_graph_arg(graph);
      const bool ok = check_certificate(g, cert);
      result = {{"graph6", to_graph6(g)}, {"status", ok ? "valid" : "false-claim"}, {"valid", ok}};
      code = ok ? kExitOk : kExitFailed;
    } catch (const CertificateFormatError& e) {
      result = {{"status", "malformed"}, {"valid", false}, {"error", e.what()}};
      err << "malformed certificate: " << e.what() << '\n';
    }
    out << result.dump() << '\n';
    return code;
  }
};

struct CatalogCmd {
  std::vector<std::string> names;
  std::string format = "json";

  int run(std::ostream& out) const {
    std::vector<std::string> list = names;
    if (list.empty()) list = {"s1", "s2", "s3", "s4", "w", "q", "k22", "k23", "k33"};
    std::vector<json> rows;
    for (const std::string& name : list) {
      NamedGraph id;
      try {
        id = parse_graph_name(name);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      const Graph g = named(id);
      json r = record(g, try_classify(g), energy(g));
      r["name"] = to_string(id);
      rows.push_back(std::move(r));
    }
    emit_records(rows, format, out);
    return kExitOk;
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph energy of connected graphs with maximum degree at most 3", "subcubic"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  const std::vector<std::string> formats{"json", "csv"};

  EnergyCmd energy_cmd;
  auto* energy = app.add_subcommand("energy", "Energy of catalog graphs or graph6 strings");
  energy->add_option("graph", energy_cmd.graphs, "Catalog name (s1..k33, p<k>, c<k>, star<k>, kb<a>x<b>) or graph6")
      ->required();
  energy->add_flag("--exact", energy_cmd.exact, "Add the characteristic polynomial and an exact enclosure");
  energy->add_flag("--spectrum", energy_cmd.spectrum, "Add the eigenvalues");
  energy->add_option("--format", energy_cmd.format)->check(CLI::IsMember(formats));

  EnumerateCmd enum_cmd;
  auto* enumerate = app.add_subcommand("enumerate", "Connected graphs up to isomorphism");
  enumerate->add_option("--n", enum_cmd.n, "Order")->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--max-degree", enum_cmd.max_degree, "Degree cap")->capture_default_str();
  enumerate->add_option("--class", enum_cmd.cls, "any|tree|unicyclic|bicyclic|cyclic|quadrangle_free|cyclomatic(k)")
      ->capture_default_str();
  enumerate->add_option("--edges", enum_cmd.edges, "Exact edge count");
  enumerate->add_option("--parts", enum_cmd.parts, "Number of work units")->check(CLI::PositiveNumber);
  enumerate->add_option("--unit", enum_cmd.unit, "Run only this unit (0-based)");
  enumerate->add_option("--emit", enum_cmd.emit, "graph6 or count")->check(CLI::IsMember({"graph6", "count"}));
  enumerate->add_option("--generator", enum_cmd.generator)->check(CLI::IsMember({"auto", "augmentation", "tree"}));
  enumerate->add_option("--threads", enum_cmd.threads);

  ReportCmd report_cmd;
  auto* report = app.add_subcommand("report", "Classify every graph of a class and summarise");
  report->add_option("--class", report_cmd.cls)->capture_default_str();
  report->add_option("--max-degree", report_cmd.max_degree)->capture_default_str();
  report->add_option("--n", report_cmd.n, "Single order");
  report->add_option("--min-n", report_cmd.min_n);
  report->add_option("--max-n", report_cmd.max_n);
  report->add_option("--edges", report_cmd.edges);
  report->add_flag("--stream", report_cmd.stream, "One record per graph, then the report");
  report->add_option("--format", report_cmd.format)->check(CLI::IsMember(formats));
  report_cmd.flags.attach(report);

  auto* verify = app.add_subcommand("verify", "Check the classification claims");
  verify->require_subcommand(1);
  ConjectureCmd conj_cmd;
  auto* conjecture = verify->add_subcommand("conjecture", "Exactly four graphs with E = n, five with E < n");
  conjecture->add_option("--max-n", conj_cmd.max_n)->required()->check(CLI::Range(1, 24));
  conj_cmd.flags.attach(conjecture);
  LemmaCmd lemma_cmd;
  auto* lemma = verify->add_subcommand("lemma", "Randomised and exhaustive property checks");
  lemma->add_option("--which", lemma_cmd.which, "cut-monotonicity|star-cut|odd-integer")->required();
  lemma->add_option("--trials", lemma_cmd.trials)->check(CLI::PositiveNumber);
  lemma->add_option("--seed", lemma_cmd.seed);
  lemma->add_option("--max-n", lemma_cmd.max_n);

  CertifyCmd cert_cmd;
  auto* certify = app.add_subcommand("certify", "Build a certificate that E(G) > n");
  certify->add_option("graph", cert_cmd.graph)->required();
  certify->add_option("--output,-o", cert_cmd.output, "Write the certificate here");
  certify->add_option("--max-cut", cert_cmd.max_cut)->check(CLI::Range(1, 8));
  certify->add_option("--base-max-n", cert_cmd.base_max_n);

  CheckCertCmd check_cmd;
  auto* check = app.add_subcommand("check-cert", "Re-verify a certificate file");
  check->add_option("file", check_cmd.file)->required();
  check->add_option("--graph", check_cmd.graph, "Graph the certificate must be for");

  CatalogCmd catalog_cmd;
  auto* catalog = app.add_subcommand("catalog", "Named graphs with their energies");
  catalog->add_option("names", catalog_cmd.names);
  catalog->add_option("--format", catalog_cmd.format)->check(CLI::IsMember(formats));

  std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*energy) return energy_cmd.run(out);
    if (*enumerate) return enum_cmd.run(out);
    if (*report) return report_cmd.run(out, err);
    if (*conjecture) return conj_cmd.run(out, err);
    if (*lemma) return lemma_cmd.run(out, err);
    if (*certify) return cert_cmd.run(out, err);
    if (*check) return check_cmd.run(out, err);
    if (*catalog) return catalog_cmd.run(out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const EnumError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CheckpointError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnresolvedError& e) {
    err << "unresolved: " << e.graph6() << ": " << e.what() << '\n';
    return kExitFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}

}  // namespace subcubic::cli
