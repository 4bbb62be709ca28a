#pragma once

#include <json.hpp>
#include <string>

#include "paley/classify.hpp"
#include "paley/gf.hpp"
#include "paley/graph.hpp"
#include "paley/invariants.hpp"
#include "paley/spectral.hpp"

namespace paley {

/// Key order is part of the output format.
using Json = nlohmann::ordered_json;

/// Rounds to 12 significant digits so serialised floats are stable.
double round_significant(double x, int digits = 12);
/// "%.12g" rendering used by CSV output.
std::string format_float(double x);

Json to_json(const FieldSpec& field);
Json to_json(const InvariantCertificate& cert);
Json to_json(const SpectralReport<double>& report, const FieldSpec& field);
Json to_json(const Classification& c);
Json graph_to_json(const Graph& g, const FieldSpec& field, std::uint32_t m);

/// One "u,v" line per edge with u < v, lexicographic order, no header.
std::string graph_to_csv(const Graph& g);
std::string graph_to_dot(const Graph& g, const std::string& name);

inline constexpr const char* kScanHeader =
    "q,p,n,m,r,m_bar,primitive,verdict,rule,omega,chi,theta,lambda_min,status";

/// A scan row; absent values are left empty.
std::string scan_row(const Classification& c);

}  // namespace paley
