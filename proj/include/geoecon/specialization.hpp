#pragma once

#include <string>
#include <vector>

#include "geoecon/ingest.hpp"
#include "geoecon/types.hpp"

namespace geoecon {

struct RvaMatrix {
  int year = 0;
  std::vector<std::string> countries;
  std::vector<std::string> domains;
  Matrix values;
};

struct SpecializationMatrix {
  int year = 0;
  Variant variant = Variant::plain;
  std::vector<std::string> countries;
  std::vector<std::string> domains;
  BinMatrix values;
};

// RVA_{ij} = (S_ij / col_j) / (row_i / total). Domains with zero global
// investment and countries with zero total are dropped before the ratios.
RvaMatrix compute_rva(const YearSlice& slice);
RvaMatrix compute_rva(const InvestmentTensor& tensor, int year);

// M_{ij} = 1 iff RVA_{ij} >= 1 (non-strict).
SpecializationMatrix binarize(const RvaMatrix& rva, Variant variant = Variant::plain);

// Each nonzero cell rounded up to the next multiple of quantum; zeros stay zero.
YearSlice round_up_variant(const InvestmentTensor& tensor, int year, double quantum = 1e8);

// Cell-wise sum over [year-window+1, year]; coverage filter re-evaluated on the
// union of each country's selected firms across the window.
YearSlice windowed_variant(const InvestmentTensor& tensor, int year, int window = 2);

}  // namespace geoecon
