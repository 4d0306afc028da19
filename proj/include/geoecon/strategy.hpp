#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "geoecon/complexity.hpp"
#include "geoecon/ingest.hpp"
#include "geoecon/specialization.hpp"

namespace geoecon {

// Domain-domain co-specialization counts, zero diagonal. Optionally excludes
// one country's row from the counts.
std::vector<std::vector<long>> phi_matrix(const SpecializationMatrix& m,
                                          std::optional<std::size_t> exclude_country = std::nullopt);

struct RelatednessEntry {
  std::string domain;  // a non-specialized candidate
  long score = 0;      // sum of phi over the country's specializations
  int rank = 0;        // dense, 1 = most related, ties share a rank
};

// Candidates ordered by (score desc, domain asc).
std::vector<RelatednessEntry> relatedness(const SpecializationMatrix& m,
                                          const std::string& country,
                                          bool exclude_focal = false);

struct SimulationOutcome {
  std::string country;
  std::string candidate_domain;
  double new_gci = 0.0;
  int baseline_rank = 0;
  int new_rank = 0;
  int rank_change = 0;  // baseline - new; positive = improvement
  long relatedness_score = 0;
  int relatedness_rank = 0;
};

// Toggle one zero cell to 1, recompute everything on the modified matrix.
SimulationOutcome simulate_addition(const SpecializationMatrix& m, const std::string& country,
                                    const std::string& domain);

struct SssetEntry {
  std::string country;
  std::vector<std::string> domains;  // empty = None; ties listed in label order
  int rank_change = 0;
  std::optional<int> relatedness_rank;
  std::optional<long> relatedness_score;
  int indeterminate_candidates = 0;  // skipped due to degenerate spectra
};

struct SssetReport {
  int year = 0;
  std::vector<SssetEntry> entries;  // one per country, matrix row order
};

// Per country: largest rank gain first, then best relatedness rank; ties kept.
SssetReport find_ssset(const SpecializationMatrix& m);

struct BlocRule {
  bool any_member = true;
  int k = 1;  // used when !any_member: at_least_k

  static BlocRule any() { return BlocRule{true, 1}; }
  static BlocRule at_least(int k) { return BlocRule{false, k}; }
  std::string name() const;
};

// One bloc row: OR of member rows, or 1 where >= k members are specialized.
std::vector<std::uint8_t> bloc_matrix(const SpecializationMatrix& m,
                                      const std::vector<std::string>& members,
                                      const BlocRule& rule);

struct BlocOutcome {
  std::vector<std::string> members;
  std::string rule;
  std::vector<std::uint8_t> bloc_row;
  int bloc_rank = 0;
  double bloc_gci = 0.0;
  std::vector<std::pair<std::string, int>> member_baseline_ranks;
  // Naive aggregation comparison (summing S before the RVA ratio), when the
  // underlying flows are available.
  struct Naive {
    std::vector<std::uint8_t> bloc_row;
    int bloc_rank = 0;
    std::vector<std::string> lost_domains;  // specialized under the rule, lost by summing
  };
  std::optional<Naive> naive;
};

// Replace member rows with a single bloc row and recompute the ranking.
BlocOutcome bloc_experiment(const SpecializationMatrix& m,
                            const std::optional<YearSlice>& flows,
                            const std::vector<std::string>& members, const BlocRule& rule);

}  // namespace geoecon
