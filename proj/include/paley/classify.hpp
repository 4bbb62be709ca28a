#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "paley/gf.hpp"
#include "paley/invariants.hpp"
#include "paley/paley.hpp"
#include "paley/spectral.hpp"

namespace paley {

enum class Verdict { Synchronizing, NonSynchronizing, Unknown };
enum class ClassifyStatus { Complete, BudgetExhausted, SkippedExhaustive };

std::string_view to_string(Verdict verdict) noexcept;
std::string_view to_string(ClassifyStatus status) noexcept;

struct Reason {
  std::string rule;
  std::string detail;
};

/// Result of examining one orbital union.
struct SubsetOutcome {
  OrbitalMask mask = 0;
  InvariantCertificate certificate;
  /// omega == chi, when settled.
  std::optional<bool> clique_equals_chromatic;
  /// Settled by the clique-size feasibility filter without a search.
  bool spectrally_excluded = false;
};

/// An invariant graph with omega = chi, proving non-synchronization.
struct SyncWitness {
  std::vector<std::uint32_t> subset;
  InvariantCertificate certificate;
  std::optional<SpectralReport<double>> spectral;
};

struct Classification {
  std::uint32_t q = 0;
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  std::uint32_t m = 0;
  PaleyParams params;
  bool primitive = false;
  Verdict verdict = Verdict::Unknown;
  /// The rule that settled the verdict.
  std::string rule;
  std::vector<Reason> reasons;
  std::optional<SyncWitness> witness;
  ClassifyStatus status = ClassifyStatus::Complete;
  std::vector<SubsetOutcome> subsets;
  /// Spectrum of the orbital graph Gamma_{q, m_bar}, when m_bar >= 2.
  std::optional<SpectralReport<double>> spectral;
  std::optional<FieldSpec> field;
};

struct ClassifyOptions {
  std::uint64_t budget = kDefaultNodeBudget;
  /// Larger orbital counts make the exhaustive check report SkippedExhaustive.
  std::uint32_t max_exhaustive_orbitals = 12;
  /// Skip single-orbital searches when no clique size can satisfy omega = chi.
  bool use_spectral_filter = true;
  /// Hoffman ratio bounds as search hints on every orbital union.
  bool use_ratio_bounds = true;
  /// Also pin chi exactly on every union instead of stopping once omega = chi is settled.
  bool exact_chromatic = false;
};

/// The affine group with multipliers S_{q,m} is primitive iff r = (q-1)/m
/// divides no p^i - 1 for 1 <= i < n. Throws BadDivisor.
bool primitivity(std::uint32_t q, std::uint32_t m);

/// Arithmetic rules that settle the verdict without building a graph.
std::optional<Classification> fast_paths(std::uint32_t q, std::uint32_t m);

/// Examines omega = chi on one orbital union with symmetry anchors and spectral hints.
SubsetOutcome evaluate_orbital_union(const OrbitalFamily& family, OrbitalMask mask, std::uint64_t budget,
                                     const ClassifyOptions& options);

/// Decides synchronization by testing every nonempty proper orbital union.
Classification exhaustive_decision(const FieldTables& field, std::uint32_t m, const ClassifyOptions& options = {});

/// For m in {2, 3}: the verdict follows from Gamma_{q,m} alone.
Classification single_graph_check(const FieldTables& field, std::uint32_t m, const ClassifyOptions& options = {});

/// Full pipeline: validate, fast paths, single graph check, exhaustive check.
/// Throws BadInput for invalid (q, m).
Classification classify(std::uint32_t q, std::uint32_t m, const ClassifyOptions& options = {});

}  // namespace paley
