#include "paley/classify.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>

#include "paley/arith.hpp"
#include "paley/error.hpp"

namespace paley {
namespace {

constexpr double kHintTolerance = 1e-6;

std::string subset_string(OrbitalMask mask) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (std::uint32_t i : mask_to_indices(mask)) {
    if (!first) os << ',';
    os << i;
    first = false;
  }
  os << '}';
  return os.str();
}

PrimePower require_field_order(std::uint32_t q) {
  const auto pp = factor_prime_power(q);
  if (!pp || pp->p == 2) throw Error(ErrorKind::BadInput, std::to_string(q) + " is not an odd prime power");
  return *pp;
}

Classification base_classification(std::uint32_t q, std::uint32_t m) {
  const PrimePower pp = require_field_order(q);
  Classification c;
  c.q = q;
  c.p = pp.p;
  c.n = pp.n;
  c.m = m;
  c.params = normalize_params(q, m);
  c.primitive = primitivity(q, m);
  std::ostringstream os;
  os << "r=" << c.params.r;
  if (c.primitive) {
    os << " divides no p^i-1 for 1<=i<" << c.n;
    c.reasons.push_back({"Lemma 3.1 primitive", os.str()});
  } else {
    c.reasons.push_back({"Lemma 3.1 imprimitive", ""});
  }
  return c;
}

Classification& decide(Classification& c, Verdict verdict, std::string rule, std::string detail) {
  c.verdict = verdict;
  c.rule = rule;
  c.reasons.push_back({std::move(rule), std::move(detail)});
  return c;
}

void attach_field(Classification& c, const FieldTables& field) {
  c.field = field.spec();
  if (c.params.m_bar >= 2) c.spectral = theta_pair<double>(field, c.params.m_bar);
}

std::uint64_t repunit(std::uint32_t p, std::uint32_t n) {
  std::uint64_t sum = 0;
  for (std::uint32_t i = 0; i < n; ++i) sum += ipow(p, i);
  return sum;
}

std::uint32_t floor_hint(double x) {
  if (!(x >= 0)) return 0;
  return static_cast<std::uint32_t>(std::floor(x + kHintTolerance));
}

std::uint32_t ceil_hint(double x) {
  if (!(x >= 0)) return 0;
  return static_cast<std::uint32_t>(std::max(0.0, std::ceil(x - kHintTolerance)));
}

}  // namespace

std::string_view to_string(Verdict verdict) noexcept {
  switch (verdict) {
    case Verdict::Synchronizing: return "Synchronizing";
    case Verdict::NonSynchronizing: return "NonSynchronizing";
    case Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string_view to_string(ClassifyStatus status) noexcept {
  switch (status) {
    case ClassifyStatus::Complete: return "complete";
    case ClassifyStatus::BudgetExhausted: return "budget_exhausted";
    case ClassifyStatus::SkippedExhaustive: return "skipped_exhaustive";
  }
  return "complete";
}

bool primitivity(std::uint32_t q, std::uint32_t m) {
  const PaleyParams params = normalize_params(q, m);
  const auto pp = factor_prime_power(q);
  if (!pp) throw Error(ErrorKind::BadInput, std::to_string(q) + " is not a prime power");
  for (std::uint32_t i = 1; i < pp->n; ++i) {
    if ((ipow(pp->p, i) - 1) % params.r == 0) return false;
  }
  return true;
}

std::optional<Classification> fast_paths(std::uint32_t q, std::uint32_t m) {
  Classification c = base_classification(q, m);
  const std::uint32_t p = c.p;
  const std::uint32_t n = c.n;
  std::ostringstream os;

  if (!c.primitive) {
    c.reasons.pop_back();
    os << "r=" << c.params.r << " divides p^i-1 for some 1<=i<" << n << "; a block system is a regular partition";
    return decide(c, Verdict::NonSynchronizing, "Lemma 3.1 imprimitive", os.str());
  }
  if (c.params.m_bar == 1) {
    return decide(c, Verdict::Synchronizing, "2-homogeneous",
                  "m_bar=1: a single undirected orbital, so the group is 2-homogeneous");
  }
  if (n == 1) {
    os << "prime degree " << q << ": omega=chi=k would force k | " << q << " with 1<k<" << q;
    return decide(c, Verdict::Synchronizing, "Lemma 2.1(1) prime degree", os.str());
  }
  if (n == 2 && m == 2) {
    return decide(c, Verdict::NonSynchronizing, "Thm 5.2(6)",
                  "n=2, m=2: m divides p+1, so the subfield F_p is a clique and omega=chi=p");
  }
  if (n == 2 && m == 3) {
    os << "m=3, p+1=" << p + 1;
    if ((p + 1) % 3 == 0) {
      os << " divisible by 3";
      return decide(c, Verdict::NonSynchronizing, "Thm 5.2(6)", os.str());
    }
    os << " not divisible by 3";
    return decide(c, Verdict::Synchronizing, "Thm 5.2(6)", os.str());
  }
  if (n % 2 == 0) {
    const std::uint64_t half = ipow(p, n / 2) + 1;
    const std::uint64_t g = std::gcd(std::uint64_t{m}, half);
    if (g != 1) {
      os << "gcd(m, p^{n/2}+1) = gcd(" << m << ", " << half << ") = " << g;
      return decide(c, Verdict::NonSynchronizing, "Thm 5.2(4)", os.str());
    }
  }
  if (n % 2 == 1 && m == 2) {
    os << "n=" << n << " odd";
    return decide(c, Verdict::Synchronizing, "Thm 5.2(5)", os.str());
  }
  if (is_prime(n) && (m == 2 || m == 3)) {
    const std::uint64_t rep = repunit(p, n);
    if (rep % m != 0) {
      os << "n=" << n << " prime, m=" << m << " does not divide " << rep;
      return decide(c, Verdict::Synchronizing, "Thm 5.2(3)", os.str());
    }
  }
  return std::nullopt;
}

SubsetOutcome evaluate_orbital_union(const OrbitalFamily& family, OrbitalMask mask, std::uint64_t budget,
                                     const ClassifyOptions& options) {
  const FieldTables& field = *family.field;
  const std::uint32_t q = field.q();
  const std::uint32_t m_bar = family.m_bar();
  SubsetOutcome out;
  out.mask = mask;
  const auto selected = static_cast<std::uint32_t>(std::popcount(mask));

  if (options.use_spectral_filter && selected == 1 && m_bar >= 2 && feasible_clique_sizes(field, m_bar).empty()) {
    out.spectrally_excluded = true;
    out.clique_equals_chromatic = false;
    return out;
  }

  InvariantOptions io;
  io.node_budget = budget;
  io.cayley_field = &field;
  io.exact_chromatic = options.exact_chromatic;
  io.stop_when_decided = !options.exact_chromatic;
  // Translations and multiplication by S_{q,m_bar} act on every union, so a
  // maximum clique may be taken through 0 and one coset representative.
  for (std::uint32_t i = 0; i < m_bar; ++i) {
    std::vector<Vertex> anchor{0, field.power_of_gamma(i)};
    if ((mask >> i) & 1u) {
      io.anchors.push_back(std::move(anchor));
    } else {
      io.complement_anchors.push_back(std::move(anchor));
    }
  }

  if (options.use_ratio_bounds) {
    const std::vector<double> eig = union_eigenvalues<double>(family, mask);
    const double degree = double(selected) * double(family.params.r_bar);
    const double lambda_min = *std::min_element(eig.begin(), eig.end());
    double comp_min = 0;
    for (double e : eig) comp_min = std::min(comp_min, -1.0 - e);
    if (lambda_min < -kHintTolerance) {
      const RatioBounds rb = ratio_bounds(q, degree, lambda_min);
      io.alpha_upper_hint = floor_hint(rb.alpha_upper);
      io.chi_lower_hint = ceil_hint(rb.chi_lower);
    }
    const double comp_degree = double(q - 1) - degree;
    if (comp_degree > 0 && comp_min < -kHintTolerance) {
      io.clique_upper_hint = floor_hint(ratio_bounds(q, comp_degree, comp_min).alpha_upper);
    }
  }

  const Graph g = union_graph(family, mask);
  out.certificate = compute_invariants(g, io);
  out.clique_equals_chromatic = out.certificate.clique_equals_chromatic();
  return out;
}

Classification exhaustive_decision(const FieldTables& field, std::uint32_t m, const ClassifyOptions& options) {
  Classification c = base_classification(field.q(), m);
  attach_field(c, field);
  const OrbitalFamily family = orbital_family(field, m);
  const std::uint32_t m_bar = family.m_bar();

  if (m_bar == 1) {
    return decide(c, Verdict::Synchronizing, "Lemma 2.3 exhaustive",
                  "m_bar=1: the only invariant graph is complete, so no non-trivial union exists");
  }
  if (m_bar > options.max_exhaustive_orbitals || m_bar >= 63) {
    c.status = ClassifyStatus::SkippedExhaustive;
    std::ostringstream os;
    os << "m_bar=" << m_bar << " exceeds the exhaustive cap of " << options.max_exhaustive_orbitals;
    return decide(c, Verdict::Unknown, "skipped exhaustive", os.str());
  }

  const OrbitalMask full = (OrbitalMask{1} << m_bar) - 1;
  const std::uint64_t graphs = full - 1;
  const std::uint64_t per_graph = std::max<std::uint64_t>(1, options.budget / graphs);
  bool undecided = false;
  std::uint64_t excluded = 0;
  for (OrbitalMask mask = 1; mask < full; ++mask) {
    const OrbitalMask comp = full ^ mask;
    if (comp < mask) continue;
    for (OrbitalMask member : {mask, comp}) {
      SubsetOutcome outcome = evaluate_orbital_union(family, member, per_graph, options);
      if (outcome.spectrally_excluded) ++excluded;
      if (!outcome.clique_equals_chromatic.has_value()) {
        undecided = true;
        c.reasons.push_back({"budget exhausted", "subset " + subset_string(member) + " undecided"});
      }
      const bool hit = outcome.clique_equals_chromatic.value_or(false);
      c.subsets.push_back(std::move(outcome));
      if (hit) {
        const SubsetOutcome& w = c.subsets.back();
        SyncWitness witness;
        witness.subset = mask_to_indices(member);
        witness.certificate = w.certificate;
        if (std::popcount(member) == 1) witness.spectral = theta_pair<double>(field, m_bar);
        c.witness = std::move(witness);
        std::ostringstream os;
        os << "orbital union " << subset_string(member) << " has omega=chi=" << w.certificate.omega;
        return decide(c, Verdict::NonSynchronizing, "Lemma 2.3 exhaustive", os.str());
      }
    }
  }
  std::ostringstream os;
  os << "none of " << graphs << " orbital unions has omega=chi";
  if (excluded > 0) os << " (" << excluded << " excluded by the clique-size feasibility filter)";
  if (undecided) {
    c.status = ClassifyStatus::BudgetExhausted;
    return decide(c, Verdict::Unknown, "budget exhausted", "some orbital unions were left undecided");
  }
  return decide(c, Verdict::Synchronizing, "Lemma 2.3 exhaustive", os.str());
}

Classification single_graph_check(const FieldTables& field, std::uint32_t m, const ClassifyOptions& options) {
  Classification c = base_classification(field.q(), m);
  attach_field(c, field);
  if ((m != 2 && m != 3) || c.params.m_bar != m) {
    throw Error(ErrorKind::BadInput, "the single graph check needs m in {2,3} with 2m | q-1");
  }
  const OrbitalFamily family = orbital_family(field, m);
  SubsetOutcome outcome = evaluate_orbital_union(family, 1, options.budget, options);
  const std::optional<bool> equal = outcome.clique_equals_chromatic;
  const bool excluded = outcome.spectrally_excluded;
  const InvariantCertificate cert = outcome.certificate;
  c.subsets.push_back(std::move(outcome));

  std::ostringstream os;
  os << "Gamma_{" << field.q() << "," << m << "}";
  if (!equal) {
    c.status = ClassifyStatus::BudgetExhausted;
    c.reasons.push_back({"Thm 5.2(2)", os.str() + " undecided within budget"});
    return decide(c, Verdict::Unknown, "budget exhausted", "omega = chi not settled");
  }
  if (*equal) {
    SyncWitness witness;
    witness.subset = {0};
    witness.certificate = cert;
    witness.spectral = c.spectral;
    c.witness = std::move(witness);
    os << " has omega=chi=" << cert.omega;
    return decide(c, Verdict::NonSynchronizing, "Thm 5.2(2)", os.str());
  }
  if (excluded) {
    os << " has no feasible clique size for omega=chi";
  } else {
    os << " has omega=" << cert.omega << " < chi lower bound " << cert.chi_bounds.lo;
  }
  return decide(c, Verdict::Synchronizing, "Thm 5.2(2)", os.str());
}

Classification classify(std::uint32_t q, std::uint32_t m, const ClassifyOptions& options) {
  const auto pp = factor_prime_power(q);
  if (!pp || pp->p == 2) throw Error(ErrorKind::BadInput, std::to_string(q) + " is not an odd prime power");
  if (m == 0 || (q - 1) % m != 0) {
    throw Error(ErrorKind::BadInput, std::to_string(m) + " does not divide " + std::to_string(q - 1));
  }
  const FieldTables field = build_field(pp->p, pp->n);
  if (auto fast = fast_paths(q, m)) {
    attach_field(*fast, field);
    return *fast;
  }
  const PaleyParams params = normalize_params(q, m);
  if ((m == 2 || m == 3) && params.m_bar == m) return single_graph_check(field, m, options);
  return exhaustive_decision(field, m, options);
}

}  // namespace paley
