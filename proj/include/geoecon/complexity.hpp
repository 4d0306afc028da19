#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geoecon/specialization.hpp"
#include "geoecon/types.hpp"

namespace geoecon {

enum class CooccurrenceKind { country, domain };

struct EigenResult {
  std::vector<double> eigenvalues;                // descending
  std::vector<std::vector<double>> eigenvectors;  // unit norm, aligned
  std::optional<CooccurrenceKind> matrix_kind;
};

struct ComplexityReport {
  int year = 0;
  Variant variant = Variant::plain;
  std::vector<std::string> countries;
  std::vector<std::string> domains;
  std::vector<int> diversity;                      // per country
  std::vector<int> ubiquity;                       // per domain
  std::vector<std::optional<double>> etgci;        // null for dropped domains
  std::vector<std::optional<double>> gci;          // null for zero-diversity countries
  std::vector<std::optional<int>> country_rank;    // 1 = highest GCI
  std::vector<std::optional<int>> domain_rank;     // 1 = highest ETGCI
};

std::vector<int> diversity(const SpecializationMatrix& m);
std::vector<int> ubiquity(const SpecializationMatrix& m);

// MM^T (country) or M^T M (domain).
Matrix cooccurrence(const SpecializationMatrix& m, CooccurrenceKind kind);

// k largest eigenpairs of a symmetric matrix; residual ||Av - λv||inf <= 1e-10.
EigenResult top_eigenpairs(const Matrix& a, std::size_t k);

// Second eigenvector of M^T M, sign-fixed against ubiquity (Spearman <= 0),
// min-max normalized to [0,1]. Dropped (all-zero) domains get nullopt.
std::vector<std::optional<double>> compute_etgci(const SpecializationMatrix& m);

// GCI_c = mean ETGCI over the country's specializations; nullopt if diversity 0.
std::vector<std::optional<double>> compute_gci(const SpecializationMatrix& m,
                                               const std::vector<std::optional<double>>& etgci);

// Dense descending ranks; exact ties broken by label so ranks come out strict.
std::vector<std::optional<int>> rank_scores(const std::vector<std::optional<double>>& scores,
                                            const std::vector<std::string>& labels);

// Full per-year report: diversity, ubiquity, ETGCI, GCI, both rankings.
ComplexityReport analyze(const SpecializationMatrix& m);

}  // namespace geoecon
