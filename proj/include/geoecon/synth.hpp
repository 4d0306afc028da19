#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "geoecon/types.hpp"

namespace geoecon {

struct SynthParams {
  std::uint64_t seed = 1;
  int countries = 8;
  int domains = 10;
  int firms_per_country = 40;
  double nestedness = 1.0;  // 1 = maximally nested target
  int year = 2024;
};

struct SynthResult {
  std::vector<std::string> countries;  // generated labels
  std::vector<std::string> domains;    // generated ids
  BinMatrix target;                    // specialization pattern the deals induce
  std::vector<std::vector<long long>> amounts;  // USD per (country, domain)
  std::string deals_csv;
  std::string classifications_csv;
  std::string taxonomy_json;
};

// Deterministic fixture generator. The emitted deals, run through the default
// pipeline (with min_classified_firms <= firms_per_country), binarize to
// exactly `target`. At nestedness=1 the target is the most nested pattern the
// ratio test admits, and domain scores decrease strictly across ubiquity
// levels while country scores increase strictly across diversity levels
// (countries >= 4).
SynthResult generate_synthetic(const SynthParams& params);

}  // namespace geoecon
