#include "geoecon/specialization.hpp"

#include <cmath>

namespace geoecon {

RvaMatrix compute_rva(const YearSlice& slice) {
  const std::size_t nc = slice.countries.size();
  const std::size_t nd = slice.domains.size();

  std::vector<double> col_total(nd, 0.0), row_total(nc, 0.0);
  double grand = 0.0;
  for (std::size_t i = 0; i < nc; ++i)
    for (std::size_t j = 0; j < nd; ++j) {
      double v = slice.values.at(i, j);
      if (v < 0) throw ComputationError("negative investment cell");
      col_total[j] += v;
      row_total[i] += v;
      grand += v;
    }
  if (grand <= 0.0) throw ComputationError("no investment data in year " + std::to_string(slice.year));

  // Unobserved domains and empty countries are dropped, not divided by zero.
  std::vector<std::size_t> keep_rows, keep_cols;
  for (std::size_t i = 0; i < nc; ++i)
    if (row_total[i] > 0.0) keep_rows.push_back(i);
  for (std::size_t j = 0; j < nd; ++j)
    if (col_total[j] > 0.0) keep_cols.push_back(j);

  RvaMatrix rva;
  rva.year = slice.year;
  for (auto i : keep_rows) rva.countries.push_back(slice.countries[i]);
  for (auto j : keep_cols) rva.domains.push_back(slice.domains[j]);
  rva.values = Matrix(keep_rows.size(), keep_cols.size());
  for (std::size_t a = 0; a < keep_rows.size(); ++a) {
    for (std::size_t b = 0; b < keep_cols.size(); ++b) {
      double share = slice.values.at(keep_rows[a], keep_cols[b]) / col_total[keep_cols[b]];
      double weight = row_total[keep_rows[a]] / grand;
      rva.values.at(a, b) = share / weight;
    }
  }
  return rva;
}

RvaMatrix compute_rva(const InvestmentTensor& tensor, int year) {
  return compute_rva(tensor.slice(year));
}

SpecializationMatrix binarize(const RvaMatrix& rva, Variant variant) {
  SpecializationMatrix m;
  m.year = rva.year;
  m.variant = variant;
  m.countries = rva.countries;
  m.domains = rva.domains;
  m.values = BinMatrix(rva.values.rows, rva.values.cols);
  for (std::size_t i = 0; i < rva.values.rows; ++i)
    for (std::size_t j = 0; j < rva.values.cols; ++j)
      m.values.at(i, j) = rva.values.at(i, j) >= 1.0 ? 1 : 0;
  return m;
}

YearSlice round_up_variant(const InvestmentTensor& tensor, int year, double quantum) {
  if (!(quantum > 0.0)) throw InputError("quantum must be positive");
  YearSlice out = tensor.slice(year);
  for (auto& v : out.values.data)
    if (v > 0.0) v = quantum * std::ceil(v / quantum);
  return out;
}

YearSlice windowed_variant(const InvestmentTensor& tensor, int year, int window) {
  if (window < 1) throw InputError("window must be >= 1");
  for (int y = year - window + 1; y <= year; ++y)
    if (!tensor.has_year(y))
      throw InputError("windowed variant: year " + std::to_string(y) + " missing from tensor");

  if (window == 1) return tensor.slice(year);

  // Union of countries across the window; per-year selections stay as built.
  std::map<std::string, std::set<std::string>> firms;
  std::map<std::string, std::vector<double>> sums;
  const std::size_t nd = tensor.domains.size();
  for (int y = year - window + 1; y <= year; ++y) {
    const YearSlice& s = tensor.slice(y);
    for (std::size_t i = 0; i < s.countries.size(); ++i) {
      const auto& c = s.countries[i];
      auto& row = sums[c];
      if (row.empty()) row.assign(nd, 0.0);
      for (std::size_t j = 0; j < nd; ++j) row[j] += s.values.at(i, j);
      const auto it = s.firms.find(c);
      if (it != s.firms.end()) firms[c].insert(it->second.begin(), it->second.end());
    }
  }

  YearSlice out;
  out.year = year;
  out.domains = tensor.domains;
  for (const auto& [c, firm_set] : firms) {
    if (static_cast<int>(firm_set.size()) < tensor.params.min_classified_firms) continue;
    out.countries.push_back(c);
  }
  out.values = Matrix(out.countries.size(), nd);
  for (std::size_t i = 0; i < out.countries.size(); ++i) {
    const auto& row = sums[out.countries[i]];
    for (std::size_t j = 0; j < nd; ++j) out.values.at(i, j) = row[j];
    out.firms[out.countries[i]] = firms[out.countries[i]];
  }
  return out;
}

}  // namespace geoecon
