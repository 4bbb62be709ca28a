#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "paley/arith.hpp"
#include "paley/error.hpp"
#include "paley/gf.hpp"
#include "paley/graph.hpp"
#include "paley/paley.hpp"

namespace paley {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

inline constexpr std::uint32_t kEigenOracleMaxVertices = 200;
inline constexpr double kFeasibilityTolerance = 1e-6;

/// Neumaier compensated summation.
template <typename Scalar>
class CompensatedSum {
 public:
  void add(Scalar x) noexcept {
    const Scalar t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  Scalar value() const noexcept { return sum_ + carry_; }

 private:
  Scalar sum_{0};
  Scalar carry_{0};
};

namespace detail {

inline void require_paley(const FieldTables& field, std::uint32_t m) {
  if (m < 2) throw Error(ErrorKind::DegenerateM, "generalised Paley graphs need m >= 2");
  if ((field.q() - 1) % (2 * m) != 0) {
    throw Error(ErrorKind::NotUndirected, "2*" + std::to_string(m) + " does not divide " +
                                              std::to_string(field.q() - 1));
  }
}

/// Character sums of the negation-closed subgroup of index m over each of its
/// cosets: entry j is sum_{s in S} cos(2 pi Tr(gamma^j s) / p).
template <typename Scalar>
std::vector<Scalar> coset_character_sums(const FieldTables& field, std::uint32_t m) {
  const std::uint32_t p = field.p();
  const std::uint32_t order = field.q() - 1;
  const std::uint32_t r = order / m;
  std::vector<Scalar> cosines(p);
  for (std::uint32_t t = 0; t < p; ++t) {
    cosines[t] = std::cos(Scalar(2) * std::numbers::pi_v<Scalar> * Scalar(t) / Scalar(p));
  }
  const auto exp = field.exp_table();
  std::vector<Scalar> out(m);
  std::vector<std::uint64_t> counts(p);
  for (std::uint32_t j = 0; j < m; ++j) {
    std::fill(counts.begin(), counts.end(), 0);
    // gamma^j * gamma^{m i} = gamma^{j + m i}
    for (std::uint32_t i = 0; i < r; ++i) ++counts[field.trace(exp[j + m * i])];
    CompensatedSum<Scalar> sum;
    for (std::uint32_t t = 0; t < p; ++t) {
      if (counts[t] != 0) sum.add(Scalar(counts[t]) * cosines[t]);
    }
    out[j] = sum.value();
  }
  return out;
}

}  // namespace detail

/// Nonprincipal eigenvalues of the generalised Paley graph: one Gauss period
/// per coset S gamma^j, each of multiplicity (q-1)/m. The full spectrum adds
/// the degree (q-1)/m once.
template <typename Scalar = double>
std::vector<Scalar> gauss_periods(const FieldTables& field, std::uint32_t m) {
  detail::require_paley(field, m);
  return detail::coset_character_sums<Scalar>(field, m);
}

template <typename Scalar = double>
struct SpectralReport {
  std::uint32_t q = 0;
  std::uint32_t m = 0;
  /// Largest eigenvalue, equal to the valency.
  std::uint32_t degree = 0;
  /// Multiplicity of every period.
  std::uint32_t multiplicity = 0;
  std::vector<Scalar> periods;
  Scalar lambda_min{0};
  Scalar theta{0};
  Scalar theta_complement{0};
  Scalar tolerance{0};
};

/// Lovász theta of the graph and its complement from the extreme eigenvalues
/// (valid because the graph is regular, vertex- and edge-transitive).
template <typename Scalar = double>
SpectralReport<Scalar> theta_pair(const FieldTables& field, std::uint32_t m) {
  SpectralReport<Scalar> report;
  report.periods = gauss_periods<Scalar>(field, m);
  report.q = field.q();
  report.m = m;
  report.degree = (field.q() - 1) / m;
  report.multiplicity = report.degree;
  report.lambda_min = *std::min_element(report.periods.begin(), report.periods.end());
  const Scalar n = Scalar(field.q());
  const Scalar top = Scalar(report.degree);
  report.theta = -n * report.lambda_min / (top - report.lambda_min);
  report.theta_complement = n / report.theta;
  report.tolerance = Scalar(1e-9) * std::max<Scalar>(Scalar(1), n);
  return report;
}

/// Degree once plus each period with its multiplicity, sorted descending.
template <typename Scalar>
Vector<Scalar> expanded_spectrum(const SpectralReport<Scalar>& report) {
  Vector<Scalar> out(report.q);
  Eigen::Index k = 0;
  out(k++) = Scalar(report.degree);
  for (const Scalar& eta : report.periods) {
    for (std::uint32_t i = 0; i < report.multiplicity; ++i) out(k++) = eta;
  }
  std::sort(out.begin(), out.end(), std::greater<Scalar>());
  return out;
}

/// degree + multiplicity * sum(periods), zero for an exact spectrum.
template <typename Scalar>
Scalar trace_residual(const SpectralReport<Scalar>& report) {
  CompensatedSum<Scalar> sum;
  sum.add(Scalar(report.degree));
  for (const Scalar& eta : report.periods) sum.add(Scalar(report.multiplicity) * eta);
  return sum.value();
}

template <typename Scalar = double>
Matrix<Scalar> adjacency_matrix(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.n_vertices());
  Matrix<Scalar> a = Matrix<Scalar>::Zero(n, n);
  for (const auto& [u, v] : g.edges()) {
    a(u, v) = Scalar(1);
    a(v, u) = Scalar(1);
  }
  return a;
}

/// Dense symmetric eigensolver, eigenvalues sorted descending. Throws TooLarge above 200 vertices.
template <typename Scalar = double>
Vector<Scalar> eigen_oracle(const Graph& g) {
  if (g.n_vertices() > kEigenOracleMaxVertices) {
    throw Error(ErrorKind::TooLarge, std::to_string(g.n_vertices()) + " vertices exceeds the eigen oracle cap");
  }
  if (g.n_vertices() == 0) return Vector<Scalar>();
  Eigen::SelfAdjointEigenSolver<Matrix<Scalar>> solver(adjacency_matrix<Scalar>(g), Eigen::EigenvaluesOnly);
  Vector<Scalar> values = solver.eigenvalues();
  std::sort(values.begin(), values.end(), std::greater<Scalar>());
  return values;
}

/// Clique sizes k = p^t (t | n, t < n) compatible with omega = chi = k:
/// (k-1) divides the degree and lambda_min = -degree/(k-1). An empty result
/// proves omega != chi.
inline std::vector<std::uint32_t> feasible_clique_sizes(const FieldTables& field, std::uint32_t m,
                                                        double tolerance = kFeasibilityTolerance) {
  const std::vector<double> periods = gauss_periods<double>(field, m);
  const double lambda_min = *std::min_element(periods.begin(), periods.end());
  const std::uint32_t degree = (field.q() - 1) / m;
  std::vector<std::uint32_t> out;
  for (std::uint32_t t = 1; t < field.n(); ++t) {
    if (field.n() % t != 0) continue;
    const auto k = static_cast<std::uint32_t>(ipow(field.p(), t));
    if (degree % (k - 1) != 0) continue;
    if (std::abs(lambda_min + double(degree) / double(k - 1)) < tolerance) out.push_back(k);
  }
  return out;
}

/// Nonprincipal eigenvalues of an orbital union, one per coset of S_{q,m_bar}
/// (each of multiplicity r_bar): entry j sums the m_bar-periods over the
/// selected orbitals shifted by j.
template <typename Scalar = double>
std::vector<Scalar> union_eigenvalues(const OrbitalFamily& family, OrbitalMask mask) {
  const std::uint32_t m_bar = family.m_bar();
  const std::vector<Scalar> base = detail::coset_character_sums<Scalar>(*family.field, m_bar);
  std::vector<Scalar> out(m_bar);
  for (std::uint32_t j = 0; j < m_bar; ++j) {
    CompensatedSum<Scalar> sum;
    for (std::uint32_t i = 0; i < m_bar; ++i) {
      if ((mask >> i) & 1u) sum.add(base[(i + j) % m_bar]);
    }
    out[j] = sum.value();
  }
  return out;
}

struct RatioBounds {
  double alpha_upper = 0;
  double chi_lower = 0;
};

/// Hoffman ratio bounds for a d-regular graph on n vertices with least
/// eigenvalue lambda_min < 0: alpha <= n(-lambda_min)/(d - lambda_min) and
/// chi >= 1 + d/(-lambda_min).
inline RatioBounds ratio_bounds(std::uint32_t n, double degree, double lambda_min) {
  RatioBounds b;
  b.alpha_upper = double(n) * (-lambda_min) / (degree - lambda_min);
  b.chi_lower = 1.0 + degree / (-lambda_min);
  return b;
}

}  // namespace paley
