#include "geoecon/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace geoecon {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

double parse_number(const std::string& s, std::size_t line_no, const char* field) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw InputError("malformed " + std::string(field) + " '" + s + "' at line " +
                     std::to_string(line_no));
  }
  if (pos != s.size() || !std::isfinite(v))
    throw InputError("malformed " + std::string(field) + " '" + s + "' at line " +
                     std::to_string(line_no));
  return v;
}

int parse_int(const std::string& s, std::size_t line_no, const char* field) {
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(s, &pos);
  } catch (const std::exception&) {
    throw InputError("malformed " + std::string(field) + " '" + s + "' at line " +
                     std::to_string(line_no));
  }
  if (pos != s.size())
    throw InputError("malformed " + std::string(field) + " '" + s + "' at line " +
                     std::to_string(line_no));
  return static_cast<int>(v);
}

void expect_header(std::istream& in, const std::string& expected, const char* what) {
  std::string line;
  if (!std::getline(in, line)) throw InputError(std::string(what) + ": empty input");
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
  if (line != expected)
    throw InputError(std::string(what) + ": expected header '" + expected + "', got '" + line +
                     "'");
}

}  // namespace

std::vector<DealRecord> parse_deals(std::istream& in, const FilterParams& params) {
  expect_header(in, "firm_id,country,year,amount_usd", "deals");
  std::vector<DealRecord> out;
  std::string line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    auto fields = split_csv_line(line);
    if (fields.size() != 4)
      throw InputError("malformed row at line " + std::to_string(line_no) + ": expected 4 fields, got " +
                       std::to_string(fields.size()));
    DealRecord rec;
    rec.firm_id = fields[0];
    rec.country = fields[1];
    rec.year = parse_int(fields[2], line_no, "year");
    rec.amount_usd = parse_number(fields[3], line_no, "amount_usd");
    if (rec.firm_id.empty()) throw InputError("empty firm_id at line " + std::to_string(line_no));
    if (rec.country.empty()) throw InputError("empty country at line " + std::to_string(line_no));
    if (rec.amount_usd < 0)
      throw InputError("negative amount at line " + std::to_string(line_no));
    if (rec.year < params.year_min || rec.year > params.year_max)
      throw InputError("year " + std::to_string(rec.year) + " outside configured range [" +
                       std::to_string(params.year_min) + "," + std::to_string(params.year_max) +
                       "] at line " + std::to_string(line_no));
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<DealRecord> parse_deals_file(const std::string& path, const FilterParams& params) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open deals file: " + path);
  return parse_deals(in, params);
}

std::vector<ClassificationAssignment> parse_classifications(std::istream& in) {
  expect_header(in, "firm_id,domain_id,probability", "classifications");
  std::vector<ClassificationAssignment> out;
  std::string line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    auto fields = split_csv_line(line);
    if (fields.size() != 3)
      throw InputError("malformed row at line " + std::to_string(line_no) + ": expected 3 fields, got " +
                       std::to_string(fields.size()));
    ClassificationAssignment rec;
    rec.firm_id = fields[0];
    rec.domain_id = fields[1];
    rec.probability = parse_number(fields[2], line_no, "probability");
    if (rec.firm_id.empty()) throw InputError("empty firm_id at line " + std::to_string(line_no));
    if (rec.probability < 0.0 || rec.probability > 1.0)
      throw InputError("probability outside [0,1] at line " + std::to_string(line_no));
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<ClassificationAssignment> parse_classifications_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open classifications file: " + path);
  return parse_classifications(in);
}

std::set<SelectedFirm> select_firms(const std::vector<DealRecord>& deals,
                                    const FilterParams& params) {
  if (params.top_n_firms < 1) throw InputError("top_n_firms must be >= 1");
  if (params.min_raise_usd < 0) throw InputError("min_raise_usd must be >= 0");

  // (country, year) -> firm -> yearly total
  std::map<std::pair<std::string, int>, std::map<std::string, double>> totals;
  for (const auto& d : deals) totals[{d.country, d.year}][d.firm_id] += d.amount_usd;

  std::set<SelectedFirm> out;
  for (const auto& [key, firms] : totals) {
    std::vector<std::pair<std::string, double>> ranked;
    for (const auto& [firm, total] : firms)
      if (total >= params.min_raise_usd) ranked.emplace_back(firm, total);
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
      if (a.second != b.second) return a.second > b.second;
      return a.first < b.first;
    });
    std::size_t keep = std::min<std::size_t>(ranked.size(), params.top_n_firms);
    for (std::size_t i = 0; i < keep; ++i)
      out.insert({key.first, key.second, ranked[i].first});
  }
  return out;
}

std::map<std::string, std::vector<std::string>> threshold_classifications(
    const std::vector<ClassificationAssignment>& assignments, const Taxonomy& taxonomy,
    const FilterParams& params) {
  std::map<std::string, std::vector<ClassificationAssignment>> per_firm;
  for (const auto& a : assignments) {
    if (a.probability < 0.0 || a.probability > 1.0)
      throw InputError("probability outside [0,1] for firm '" + a.firm_id + "'");
    if (!taxonomy.contains(a.domain_id))
      throw InputError("unknown domain_id '" + a.domain_id + "'");
    if (a.probability >= params.probability_threshold) per_firm[a.firm_id].push_back(a);
  }

  std::map<std::string, std::vector<std::string>> out;
  for (auto& [firm, list] : per_firm) {
    std::sort(list.begin(), list.end(), [&](const auto& a, const auto& b) {
      if (a.probability != b.probability) return a.probability > b.probability;
      return *taxonomy.index_of(a.domain_id) < *taxonomy.index_of(b.domain_id);
    });
    std::vector<std::string> domains;
    for (const auto& a : list) {
      if (std::find(domains.begin(), domains.end(), a.domain_id) == domains.end())
        domains.push_back(a.domain_id);
      if (domains.size() == 2) break;
    }
    if (!domains.empty()) out[firm] = std::move(domains);
  }
  return out;
}

const YearSlice& InvestmentTensor::slice(int year) const {
  auto it = slices.find(year);
  if (it == slices.end())
    throw InputError("year " + std::to_string(year) + " absent from investment tensor");
  return it->second;
}

InvestmentTensor aggregate(const std::vector<DealRecord>& deals,
                           const std::set<SelectedFirm>& selected,
                           const std::map<std::string, std::vector<std::string>>& firm_domains,
                           const Taxonomy& taxonomy, const FilterParams& params) {
  InvestmentTensor tensor;
  tensor.domains = taxonomy.ids();
  tensor.params = params;

  // (year, country) -> domain -> sum; plus the classified-firm sets.
  std::map<std::pair<int, std::string>, std::vector<double>> sums;
  std::map<std::pair<int, std::string>, std::set<std::string>> firms;

  for (const auto& d : deals) {
    if (!selected.count({d.country, d.year, d.firm_id})) continue;
    auto fd = firm_domains.find(d.firm_id);
    if (fd == firm_domains.end()) continue;
    auto key = std::make_pair(d.year, d.country);
    auto& row = sums[key];
    if (row.empty()) row.assign(tensor.domains.size(), 0.0);
    const auto& domains = fd->second;
    double share = (params.split_dual_domains && domains.size() == 2) ? 0.5 : 1.0;
    for (const auto& dom : domains) row[*taxonomy.index_of(dom)] += share * d.amount_usd;
    firms[key].insert(d.firm_id);
  }

  // Coverage filter, then assemble per-year slices with sorted country lists.
  std::map<int, std::vector<std::string>> countries_by_year;
  for (const auto& [key, firm_set] : firms) {
    if (static_cast<int>(firm_set.size()) < params.min_classified_firms) continue;
    countries_by_year[key.first].push_back(key.second);
  }
  for (auto& [year, countries] : countries_by_year) {
    std::sort(countries.begin(), countries.end());
    YearSlice slice;
    slice.year = year;
    slice.countries = countries;
    slice.domains = tensor.domains;
    slice.values = Matrix(countries.size(), tensor.domains.size());
    for (std::size_t i = 0; i < countries.size(); ++i) {
      const auto& row = sums[{year, countries[i]}];
      for (std::size_t j = 0; j < tensor.domains.size(); ++j) slice.values.at(i, j) = row[j];
      slice.firms[countries[i]] = firms[{year, countries[i]}];
    }
    tensor.slices[year] = std::move(slice);
  }
  return tensor;
}

}  // namespace geoecon
