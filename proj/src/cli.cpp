#include "paley/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "paley/arith.hpp"
#include "paley/classify.hpp"
#include "paley/error.hpp"
#include "paley/report.hpp"

namespace paley::cli {
namespace {

struct Outcome {
  std::string text;
  int code = kSuccess;
};

std::uint64_t default_budget() {
  if (const char* env = std::getenv("PALEY_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
    }
  }
  return kDefaultNodeBudget;
}

FieldTables field_for(std::uint32_t q) {
  const auto pp = factor_prime_power(q);
  if (!pp || pp->p == 2) throw Error(ErrorKind::BadInput, std::to_string(q) + " is not an odd prime power");
  return build_field(pp->p, pp->n);
}

Outcome run_field(const RunConfig& cfg) {
  const FieldTables field = build_field(cfg.p, cfg.n);
  Json j = to_json(field.spec());
  std::uint32_t kernel = 0;
  for (std::uint32_t t : field.trace_table()) kernel += t == 0 ? 1 : 0;
  j["trace_kernel_size"] = kernel;
  return {j.dump(2) + "\n"};
}

Outcome run_graph(const RunConfig& cfg) {
  const FieldTables field = field_for(cfg.q);
  const Graph g = build_paley(field, cfg.m);
  switch (cfg.emit) {
    case Emit::Csv: return {graph_to_csv(g)};
    case Emit::Dot: return {graph_to_dot(g, "paley_" + std::to_string(cfg.q) + "_" + std::to_string(cfg.m))};
    case Emit::Json: break;
  }
  return {graph_to_json(g, field.spec(), cfg.m).dump(2) + "\n"};
}

Outcome run_invariants(const RunConfig& cfg) {
  const FieldTables field = field_for(cfg.q);
  const Graph g = build_paley(field, cfg.m);
  const OrbitalFamily family = orbital_family(field, cfg.m);
  ClassifyOptions options;
  options.budget = cfg.budget;
  options.exact_chromatic = true;
  options.use_spectral_filter = false;
  const SubsetOutcome outcome = evaluate_orbital_union(family, 1, cfg.budget, options);
  const InvariantCertificate& cert = outcome.certificate;
  const SpectralReport<double> spectral = theta_pair<double>(field, cfg.m);

  Json j;
  j["field"] = to_json(field.spec());
  j["q"] = cfg.q;
  j["m"] = cfg.m;
  j["degree"] = spectral.degree;
  j["certificate"] = to_json(cert);
  j["theta"] = round_significant(spectral.theta);
  j["theta_complement"] = round_significant(spectral.theta_complement);
  int code = cert.exact() ? kSuccess : kBudgetExhausted;
  if (!verify_certificate(g, cert)) code = kOracleMismatch;
  if (cfg.oracle) {
    Json o;
    if (g.n_vertices() <= kBruteForceMaxVertices) {
      const InvariantCertificate ref = brute_force_invariants(g);
      const bool match = ref.omega == cert.omega && ref.alpha == cert.alpha && ref.chi == cert.chi;
      o["brute_force"] = {{"omega", ref.omega}, {"alpha", ref.alpha}, {"chi", ref.chi}, {"match", match}};
      if (!match) code = kOracleMismatch;
    } else {
      o["brute_force"] = nullptr;
    }
    j["oracle"] = o;
  }
  return {j.dump(2) + "\n", code};
}

Outcome run_spectrum(const RunConfig& cfg) {
  const FieldTables field = field_for(cfg.q);
  const SpectralReport<double> report = theta_pair<double>(field, cfg.m);
  Json j = to_json(report, field.spec());
  int code = kSuccess;
  if (cfg.oracle) {
    if (cfg.q <= kEigenOracleMaxVertices) {
      const Vector<double> oracle = eigen_oracle<double>(build_paley(field, cfg.m));
      const double err = (oracle - expanded_spectrum(report)).cwiseAbs().maxCoeff();
      j["oracle_max_error"] = round_significant(err);
      if (err > 1e-8) code = kOracleMismatch;
    } else {
      j["oracle_max_error"] = nullptr;
    }
  }
  return {j.dump(2) + "\n", code};
}

Outcome run_classify(const RunConfig& cfg) {
  ClassifyOptions options;
  options.budget = cfg.budget;
  const Classification c = classify(cfg.q, cfg.m, options);
  Json j = to_json(c);
  int code = c.verdict == Verdict::Unknown ? kBudgetExhausted : kSuccess;
  if (cfg.oracle) {
    ClassifyOptions exhaustive = options;
    exhaustive.max_exhaustive_orbitals = 8;
    const FieldTables field = field_for(cfg.q);
    const Classification check = exhaustive_decision(field, cfg.m, exhaustive);
    j["oracle_verdict"] = std::string(to_string(check.verdict));
    if (check.verdict != Verdict::Unknown && c.verdict != Verdict::Unknown && check.verdict != c.verdict) {
      code = kOracleMismatch;
    }
  }
  return {j.dump(2) + "\n", code};
}

// Post-hoc invariant checks on one scan row.
std::string self_check(const Classification& c) {
  const PaleyParams& pr = c.params;
  if (std::uint64_t{pr.r} * pr.m != c.q - 1 || std::uint64_t{pr.r_bar} * pr.m_bar != c.q - 1 || pr.r_bar % 2 != 0) {
    return "parameter normalisation";
  }
  if (!c.primitive && c.verdict != Verdict::NonSynchronizing) return "imprimitive group not non-synchronizing";
  if (c.spectral) {
    const auto& s = *c.spectral;
    if (std::abs(s.theta * s.theta_complement - double(c.q)) > 1e-9 * c.q) return "theta product";
    if (!(s.lambda_min < 0)) return "lambda_min sign";
    if (std::abs(trace_residual(s)) > 1e-8 * c.q) return "trace identity";
    for (const SubsetOutcome& o : c.subsets) {
      if (o.mask != 1 || o.spectrally_excluded) continue;
      const InvariantCertificate& cert = o.certificate;
      if (cert.omega_bounds.exact() && double(cert.omega) > s.theta_complement + 1e-6) return "clique bound";
      if (cert.chi_bounds.exact() && double(cert.chi) < s.theta_complement - 1e-6) return "chromatic bound";
    }
  }
  if (c.witness) {
    const auto& cert = c.witness->certificate;
    if (cert.omega != cert.chi) return "witness omega != chi";
    const auto pp = factor_prime_power(c.q);
    const FieldTables field = build_field(pp->p, pp->n);
    const OrbitalFamily family = orbital_family(field, c.m);
    if (!verify_certificate(union_graph(family, std::span<const std::uint32_t>(c.witness->subset)), cert)) {
      return "witness certificate";
    }
  }
  return {};
}

Outcome run_scan(const RunConfig& cfg, std::ostream& err) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint32_t q = 3; q <= cfg.q_max; q += 2) {
    const auto pp = factor_prime_power(q);
    if (!pp) continue;
    for (std::uint64_t m : divisors(q - 1)) {
      if (!cfg.m_set.empty() && std::find(cfg.m_set.begin(), cfg.m_set.end(), m) == cfg.m_set.end()) continue;
      pairs.emplace_back(q, static_cast<std::uint32_t>(m));
    }
  }
  ClassifyOptions options;
  options.budget = cfg.budget;
  options.max_exhaustive_orbitals = 8;

  std::vector<std::string> rows(pairs.size());
  std::vector<std::string> problems(pairs.size());
  std::vector<bool> unknown(pairs.size(), false);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < pairs.size(); i = next++) {
      const Classification c = classify(pairs[i].first, pairs[i].second, options);
      rows[i] = scan_row(c);
      problems[i] = self_check(c);
      unknown[i] = c.status == ClassifyStatus::BudgetExhausted;
    }
  };
  const std::uint32_t jobs = std::max<std::uint32_t>(1, cfg.jobs);
  std::vector<std::thread> threads;
  for (std::uint32_t t = 1; t < jobs; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();

  std::ostringstream os;
  os << kScanHeader << '\n';
  int code = kSuccess;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    os << rows[i] << '\n';
    if (!problems[i].empty()) {
      err << "self-check failed for q=" << pairs[i].first << " m=" << pairs[i].second << ": " << problems[i] << '\n';
      code = kOracleMismatch;
    }
    if (unknown[i] && code == kSuccess) code = kBudgetExhausted;
  }
  return {os.str(), code};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  cfg.budget = default_budget();
  std::string emit = "json";

  CLI::App app{"Generalised Paley graphs and synchronization of 1-dimensional affine groups", "paley"};
  app.require_subcommand(1);
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--budget", cfg.budget, "Search node budget (env PALEY_BUDGET)");
    sub->add_option("--out", cfg.out, "Output path; standard output when omitted");
    sub->add_flag("--oracle", cfg.oracle, "Cross-check against brute-force and eigensolver oracles");
  };
  auto* field = app.add_subcommand("field", "Describe GF(p^n)");
  field->add_option("p", cfg.p)->required();
  field->add_option("n", cfg.n)->required();
  add_common(field);

  auto qm = [&](CLI::App* sub) {
    sub->add_option("q", cfg.q)->required();
    sub->add_option("m", cfg.m)->required();
    add_common(sub);
  };
  auto* graph = app.add_subcommand("graph", "Export Gamma_{q,m}");
  qm(graph);
  graph->add_option("--emit", emit, "dot|csv|json")->check(CLI::IsMember({"dot", "csv", "json"}));
  auto* invariants = app.add_subcommand("invariants", "Exact omega, alpha, chi of Gamma_{q,m}");
  qm(invariants);
  auto* spectrum = app.add_subcommand("spectrum", "Gauss periods and Lovasz theta of Gamma_{q,m}");
  qm(spectrum);
  auto* classify_cmd = app.add_subcommand("classify", "Decide whether G_{q,m} is synchronizing");
  qm(classify_cmd);
  auto* scan = app.add_subcommand("scan", "Classify every (q, m) with q <= Q as CSV");
  scan->add_option("--q-max", cfg.q_max, "Largest q")->required();
  scan->add_option("--m-set", cfg.m_set, "Restrict to these m")->delimiter(',');
  scan->add_option("--jobs", cfg.jobs, "Worker threads");
  add_common(scan);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kBadArguments;
  }
  cfg.emit = emit == "csv" ? Emit::Csv : emit == "dot" ? Emit::Dot : Emit::Json;

  Outcome outcome;
  try {
    if (*field) {
      outcome = run_field(cfg);
    } else if (*graph) {
      outcome = run_graph(cfg);
    } else if (*invariants) {
      outcome = run_invariants(cfg);
    } else if (*spectrum) {
      outcome = run_spectrum(cfg);
    } else if (*classify_cmd) {
      outcome = run_classify(cfg);
    } else {
      outcome = run_scan(cfg, err);
    }
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kBadArguments;
  }

  if (cfg.out.empty()) {
    out << outcome.text;
  } else {
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) {
      err << "cannot open " << cfg.out << '\n';
      return kBadArguments;
    }
    file << outcome.text;
  }
  if (outcome.code == kOracleMismatch) err << "oracle mismatch\n";
  return outcome.code;
}

}  // namespace paley::cli
