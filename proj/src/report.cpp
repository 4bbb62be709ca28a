#include "paley/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace paley {
namespace {

const char* status_name(SearchStatus s) { return s == SearchStatus::Exact ? "exact" : "timeout"; }

Json bounds_json(const Bounds& b) { return Json::array({b.lo, b.hi}); }

// omega and chi of Gamma_{q, m_bar} when the classification evaluated it.
const InvariantCertificate* orbital_certificate(const Classification& c) {
  for (const SubsetOutcome& s : c.subsets) {
    if (s.mask == 1 && !s.spectrally_excluded) return &s.certificate;
  }
  return nullptr;
}

}  // namespace

double round_significant(double x, int digits) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  double out = std::strtod(buf, nullptr);
  return out == 0.0 ? 0.0 : out;  // no negative zero
}

std::string format_float(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", round_significant(x));
  return buf;
}

Json to_json(const FieldSpec& field) {
  Json j;
  j["p"] = field.p;
  j["n"] = field.n;
  j["q"] = field.q;
  j["modulus"] = field.modulus;
  j["gamma"] = field.gamma;
  return j;
}

Json to_json(const InvariantCertificate& cert) {
  Json j;
  j["omega"] = cert.omega;
  j["alpha"] = cert.alpha;
  j["chi"] = cert.chi;
  j["clique"] = cert.clique;
  j["independent_set"] = cert.independent_set;
  j["coloring"] = cert.coloring;
  j["status"] = status_name(cert.status);
  Json b;
  b["omega"] = bounds_json(cert.omega_bounds);
  b["alpha"] = bounds_json(cert.alpha_bounds);
  b["chi"] = bounds_json(cert.chi_bounds);
  j["bounds"] = b;
  return j;
}

Json to_json(const SpectralReport<double>& report, const FieldSpec& field) {
  Json j;
  j["field"] = to_json(field);
  j["q"] = report.q;
  j["m"] = report.m;
  j["degree"] = report.degree;
  j["multiplicity"] = report.multiplicity;
  Json periods = Json::array();
  for (double eta : report.periods) periods.push_back(round_significant(eta));
  j["periods"] = periods;
  j["lambda_min"] = round_significant(report.lambda_min);
  j["theta"] = round_significant(report.theta);
  j["theta_complement"] = round_significant(report.theta_complement);
  j["tolerance"] = round_significant(report.tolerance);
  return j;
}

Json to_json(const Classification& c) {
  Json j;
  j["q"] = c.q;
  j["p"] = c.p;
  j["n"] = c.n;
  j["m"] = c.m;
  j["field"] = c.field ? to_json(*c.field) : Json(nullptr);
  j["verdict"] = std::string(to_string(c.verdict));
  j["rule"] = c.rule;
  Json reasons = Json::array();
  for (const Reason& r : c.reasons) {
    Json item;
    item["rule"] = r.rule;
    item["detail"] = r.detail;
    reasons.push_back(item);
  }
  j["reasons"] = reasons;
  if (c.witness) {
    Json w;
    w["subset"] = c.witness->subset;
    w["certificate"] = to_json(c.witness->certificate);
    if (c.witness->spectral && c.field) {
      w["spectral"] = to_json(*c.witness->spectral, *c.field);
    } else {
      w["spectral"] = nullptr;
    }
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  j["status"] = std::string(to_string(c.status));
  return j;
}

Json graph_to_json(const Graph& g, const FieldSpec& field, std::uint32_t m) {
  Json j;
  j["field"] = to_json(field);
  j["q"] = field.q;
  j["m"] = m;
  j["n_vertices"] = g.n_vertices();
  j["degree"] = g.regular_degree();
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
  j["edges"] = edges;
  return j;
}

std::string graph_to_csv(const Graph& g) {
  std::ostringstream os;
  for (const auto& [u, v] : g.edges()) os << u << ',' << v << '\n';
  return os.str();
}

std::string graph_to_dot(const Graph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.n_vertices(); ++v) os << "  " << v << " [label=\"" << v << "\"];\n";
  for (const auto& [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

std::string scan_row(const Classification& c) {
  std::ostringstream os;
  os << c.q << ',' << c.p << ',' << c.n << ',' << c.m << ',' << c.params.r << ',' << c.params.m_bar << ','
     << (c.primitive ? "true" : "false") << ',' << to_string(c.verdict) << ',' << c.rule << ',';
  if (const InvariantCertificate* cert = orbital_certificate(c)) {
    if (cert->omega_bounds.exact()) os << cert->omega;
    os << ',';
    if (cert->chi_bounds.exact()) os << cert->chi;
    os << ',';
  } else {
    os << ",,";
  }
  if (c.spectral) {
    os << format_float(c.spectral->theta) << ',' << format_float(c.spectral->lambda_min);
  } else {
    os << ',';
  }
  os << ',' << to_string(c.status);
  return os.str();
}

}  // namespace paley
