#pragma once

#include <istream>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "geoecon/taxonomy.hpp"
#include "geoecon/types.hpp"

namespace geoecon {

struct DealRecord {
  std::string firm_id;
  std::string country;   // ISO-3166 alpha-2
  int year = 0;
  double amount_usd = 0.0;
};

struct ClassificationAssignment {
  std::string firm_id;
  std::string domain_id;
  double probability = 0.0;
};

struct FilterParams {
  int top_n_firms = 3000;
  double min_raise_usd = 1e6;
  int min_classified_firms = 500;
  double probability_threshold = 0.5;
  bool split_dual_domains = false;  // 50/50 split instead of full attribution
  int year_min = 2014;
  int year_max = 2024;
};

// One (year) slice of the investment tensor: countries x domains, USD.
struct YearSlice {
  int year = 0;
  std::vector<std::string> countries;  // sorted, only slices that passed coverage
  std::vector<std::string> domains;    // taxonomy order
  Matrix values;                       // countries x domains
  // Selected, classified firms per country; drives the coverage filter.
  std::map<std::string, std::set<std::string>> firms;
};

struct InvestmentTensor {
  std::vector<std::string> domains;  // taxonomy order
  std::map<int, YearSlice> slices;   // by year
  FilterParams params;               // filters this tensor was built with

  bool has_year(int year) const { return slices.count(year) > 0; }
  const YearSlice& slice(int year) const;
};

struct SelectedFirm {
  std::string country;
  int year = 0;
  std::string firm_id;
  bool operator<(const SelectedFirm& o) const {
    return std::tie(country, year, firm_id) < std::tie(o.country, o.year, o.firm_id);
  }
};

// CSV header: firm_id,country,year,amount_usd
std::vector<DealRecord> parse_deals(std::istream& in, const FilterParams& params = {});
std::vector<DealRecord> parse_deals_file(const std::string& path, const FilterParams& params = {});

// CSV header: firm_id,domain_id,probability
std::vector<ClassificationAssignment> parse_classifications(std::istream& in);
std::vector<ClassificationAssignment> parse_classifications_file(const std::string& path);

// Per (country, year): firms with yearly raise >= min_raise_usd, ranked by
// yearly raise descending (ties by firm_id), top_n_firms kept.
std::set<SelectedFirm> select_firms(const std::vector<DealRecord>& deals,
                                    const FilterParams& params);

// Drop low-confidence assignments, keep at most the two best domains per firm.
std::map<std::string, std::vector<std::string>> threshold_classifications(
    const std::vector<ClassificationAssignment>& assignments, const Taxonomy& taxonomy,
    const FilterParams& params);

// Aggregate selected, classified deals into S_{country,domain,year}; apply the
// coverage filter (min_classified_firms) per (country, year).
InvestmentTensor aggregate(const std::vector<DealRecord>& deals,
                           const std::set<SelectedFirm>& selected,
                           const std::map<std::string, std::vector<std::string>>& firm_domains,
                           const Taxonomy& taxonomy, const FilterParams& params);

}  // namespace geoecon
