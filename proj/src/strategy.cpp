#include "geoecon/strategy.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "geoecon/io.hpp"

namespace geoecon {

namespace {

std::size_t country_index(const SpecializationMatrix& m, const std::string& country) {
  for (std::size_t i = 0; i < m.countries.size(); ++i)
    if (m.countries[i] == country) return i;
  throw InputError("unknown country '" + country + "'");
}

std::size_t domain_index(const SpecializationMatrix& m, const std::string& domain) {
  for (std::size_t j = 0; j < m.domains.size(); ++j)
    if (m.domains[j] == domain) return j;
  throw InputError("unknown domain '" + domain + "'");
}

}  // namespace

std::vector<std::vector<long>> phi_matrix(const SpecializationMatrix& m,
                                          std::optional<std::size_t> exclude_country) {
  const std::size_t nd = m.values.cols;
  std::vector<std::vector<long>> phi(nd, std::vector<long>(nd, 0));
  for (std::size_t j = 0; j < nd; ++j)
    for (std::size_t k = j + 1; k < nd; ++k) {
      long s = 0;
      for (std::size_t i = 0; i < m.values.rows; ++i) {
        if (exclude_country && *exclude_country == i) continue;
        s += m.values.at(i, j) * m.values.at(i, k);
      }
      phi[j][k] = phi[k][j] = s;
    }
  return phi;
}

std::vector<RelatednessEntry> relatedness(const SpecializationMatrix& m,
                                          const std::string& country, bool exclude_focal) {
  std::size_t c = country_index(m, country);
  auto phi = phi_matrix(m, exclude_focal ? std::optional<std::size_t>(c) : std::nullopt);

  std::vector<RelatednessEntry> out;
  for (std::size_t j = 0; j < m.values.cols; ++j) {
    if (m.values.at(c, j)) continue;
    long score = 0;
    for (std::size_t k = 0; k < m.values.cols; ++k)
      if (m.values.at(c, k)) score += phi[j][k];
    out.push_back({m.domains[j], score, 0});
  }
  std::sort(out.begin(), out.end(), [](const RelatednessEntry& a, const RelatednessEntry& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.domain < b.domain;
  });
  // Dense ranks: ties share, next distinct score gets the next integer.
  int rank = 0;
  long prev = 0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i == 0 || out[i].score != prev) ++rank;
    out[i].rank = rank;
    prev = out[i].score;
  }
  return out;
}

SimulationOutcome simulate_addition(const SpecializationMatrix& m, const std::string& country,
                                    const std::string& domain) {
  std::size_t c = country_index(m, country);
  std::size_t j = domain_index(m, domain);
  if (m.values.at(c, j)) throw InputError("already specialized: " + country + " in " + domain);

  ComplexityReport baseline = analyze(m);
  if (!baseline.country_rank[c])
    throw ComputationError("country '" + country + "' has no baseline rank");

  SpecializationMatrix toggled = m;
  toggled.values.at(c, j) = 1;
  ComplexityReport after = analyze(toggled);

  auto rel = relatedness(m, country);
  const RelatednessEntry* entry = nullptr;
  for (const auto& e : rel)
    if (e.domain == domain) entry = &e;

  SimulationOutcome out;
  out.country = country;
  out.candidate_domain = domain;
  out.new_gci = after.gci[c].value_or(0.0);
  out.baseline_rank = *baseline.country_rank[c];
  out.new_rank = *after.country_rank[c];
  out.rank_change = out.baseline_rank - out.new_rank;
  if (entry) {
    out.relatedness_score = entry->score;
    out.relatedness_rank = entry->rank;
  }
  return out;
}

SssetReport find_ssset(const SpecializationMatrix& m) {
  SssetReport report;
  report.year = m.year;
  for (std::size_t c = 0; c < m.countries.size(); ++c) {
    SssetEntry entry;
    entry.country = m.countries[c];
    std::vector<SimulationOutcome> outcomes;
    for (std::size_t j = 0; j < m.values.cols; ++j) {
      if (m.values.at(c, j)) continue;
      try {
        outcomes.push_back(simulate_addition(m, m.countries[c], m.domains[j]));
      } catch (const DegenerateSpectrum&) {
        ++entry.indeterminate_candidates;  // candidate indeterminate, not fatal
      }
    }
    int best_change = 0;
    for (const auto& o : outcomes) best_change = std::max(best_change, o.rank_change);
    if (best_change > 0) {
      int best_rel = 0;
      for (const auto& o : outcomes)
        if (o.rank_change == best_change)
          best_rel = best_rel == 0 ? o.relatedness_rank : std::min(best_rel, o.relatedness_rank);
      for (const auto& o : outcomes)
        if (o.rank_change == best_change && o.relatedness_rank == best_rel) {
          entry.domains.push_back(o.candidate_domain);
          entry.relatedness_score = o.relatedness_score;
        }
      std::sort(entry.domains.begin(), entry.domains.end());
      entry.rank_change = best_change;
      entry.relatedness_rank = best_rel;
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

std::string BlocRule::name() const {
  return any_member ? "any" : ("k:" + std::to_string(k));
}

std::vector<std::uint8_t> bloc_matrix(const SpecializationMatrix& m,
                                      const std::vector<std::string>& members,
                                      const BlocRule& rule) {
  if (members.empty()) throw InputError("bloc: empty member set");
  std::set<std::size_t> idx;
  for (const auto& name : members) idx.insert(country_index(m, name));
  if (!rule.any_member) {
    if (rule.k < 1) throw InputError("bloc: k must be >= 1");
    if (rule.k > static_cast<int>(idx.size()))
      throw InputError("bloc: k=" + std::to_string(rule.k) + " exceeds member count " +
                       std::to_string(idx.size()));
  }
  std::vector<std::uint8_t> row(m.values.cols, 0);
  for (std::size_t j = 0; j < m.values.cols; ++j) {
    int count = 0;
    for (auto i : idx) count += m.values.at(i, j);
    row[j] = rule.any_member ? (count >= 1) : (count >= rule.k);
  }
  return row;
}

BlocOutcome bloc_experiment(const SpecializationMatrix& m, const std::optional<YearSlice>& flows,
                            const std::vector<std::string>& members, const BlocRule& rule) {
  auto row = bloc_matrix(m, members, rule);
  std::set<std::size_t> member_idx;
  for (const auto& name : members) member_idx.insert(country_index(m, name));
  if (m.countries.size() - member_idx.size() + 1 < 2)
    throw InputError("bloc: need at least 2 countries after merging members");

  ComplexityReport baseline = analyze(m);

  SpecializationMatrix merged;
  merged.year = m.year;
  merged.variant = m.variant;
  merged.domains = m.domains;
  for (std::size_t i = 0; i < m.countries.size(); ++i)
    if (!member_idx.count(i)) merged.countries.push_back(m.countries[i]);
  merged.countries.push_back("BLOC");
  merged.values = BinMatrix(merged.countries.size(), m.values.cols);
  std::size_t r = 0;
  for (std::size_t i = 0; i < m.countries.size(); ++i) {
    if (member_idx.count(i)) continue;
    for (std::size_t j = 0; j < m.values.cols; ++j)
      merged.values.at(r, j) = m.values.at(i, j);
    ++r;
  }
  for (std::size_t j = 0; j < m.values.cols; ++j) merged.values.at(r, j) = row[j];

  ComplexityReport after = analyze(merged);

  BlocOutcome out;
  out.members = members;
  out.rule = rule.name();
  out.bloc_row = row;
  out.bloc_rank = after.country_rank.back().value_or(0);
  out.bloc_gci = after.gci.back().value_or(0.0);
  for (const auto& name : members) {
    std::size_t i = country_index(m, name);
    out.member_baseline_ranks.emplace_back(name, baseline.country_rank[i].value_or(0));
  }

  if (flows) {
    // Naive aggregation: sum member flows into one row, then redo the ratio test.
    YearSlice summed;
    summed.year = flows->year;
    summed.domains = flows->domains;
    std::vector<double> bloc_flow(flows->domains.size(), 0.0);
    std::vector<std::size_t> member_slice_rows;
    for (const auto& name : members) {
      auto it = std::find(flows->countries.begin(), flows->countries.end(), name);
      if (it == flows->countries.end())
        throw InputError("bloc: member '" + name + "' absent from flow slice");
      member_slice_rows.push_back(it - flows->countries.begin());
    }
    for (std::size_t i = 0; i < flows->countries.size(); ++i) {
      if (std::find(member_slice_rows.begin(), member_slice_rows.end(), i) !=
          member_slice_rows.end()) {
        for (std::size_t j = 0; j < flows->domains.size(); ++j)
          bloc_flow[j] += flows->values.at(i, j);
        continue;
      }
      summed.countries.push_back(flows->countries[i]);
    }
    summed.countries.push_back("BLOC");
    summed.values = Matrix(summed.countries.size(), summed.domains.size());
    std::size_t rr = 0;
    for (std::size_t i = 0; i < flows->countries.size(); ++i) {
      if (std::find(member_slice_rows.begin(), member_slice_rows.end(), i) !=
          member_slice_rows.end())
        continue;
      for (std::size_t j = 0; j < flows->domains.size(); ++j)
        summed.values.at(rr, j) = flows->values.at(i, j);
      ++rr;
    }
    for (std::size_t j = 0; j < flows->domains.size(); ++j) summed.values.at(rr, j) = bloc_flow[j];

    SpecializationMatrix naive_m = binarize(compute_rva(summed), m.variant);
    BlocOutcome::Naive naive;
    naive.bloc_row.assign(m.domains.size(), 0);
    auto bloc_it = std::find(naive_m.countries.begin(), naive_m.countries.end(), "BLOC");
    if (bloc_it != naive_m.countries.end()) {
      std::size_t bi = bloc_it - naive_m.countries.begin();
      for (std::size_t j = 0; j < m.domains.size(); ++j) {
        auto dj = std::find(naive_m.domains.begin(), naive_m.domains.end(), m.domains[j]);
        if (dj != naive_m.domains.end())
          naive.bloc_row[j] = naive_m.values.at(bi, dj - naive_m.domains.begin());
      }
      try {
        ComplexityReport naive_report = analyze(naive_m);
        naive.bloc_rank = naive_report.country_rank[bi].value_or(0);
      } catch (const ComputationError& e) {
        log(LogLevel::warn, std::string("bloc: naive ranking unavailable: ") + e.what());
        naive.bloc_rank = 0;
      }
    }
    for (std::size_t j = 0; j < m.domains.size(); ++j)
      if (row[j] && !naive.bloc_row[j]) naive.lost_domains.push_back(m.domains[j]);
    out.naive = std::move(naive);
  }
  return out;
}

}  // namespace geoecon
