#include "geoecon/complexity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Dense>

#include "geoecon/io.hpp"

namespace geoecon {

namespace {

// Average ranks (1-based) with ties sharing the mean rank.
std::vector<double> average_ranks(const std::vector<double>& x) {
  const std::size_t n = x.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  std::vector<double> ranks(n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && x[order[j + 1]] == x[order[i]]) ++j;
    double r = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = r;
    i = j + 1;
  }
  return ranks;
}

double spearman(const std::vector<double>& a, const std::vector<double>& b) {
  auto ra = average_ranks(a), rb = average_ranks(b);
  const std::size_t n = a.size();
  double ma = 0, mb = 0;
  for (std::size_t i = 0; i < n; ++i) { ma += ra[i]; mb += rb[i]; }
  ma /= n; mb /= n;
  double sab = 0, saa = 0, sbb = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sab += (ra[i] - ma) * (rb[i] - mb);
    saa += (ra[i] - ma) * (ra[i] - ma);
    sbb += (rb[i] - mb) * (rb[i] - mb);
  }
  if (saa <= 0.0 || sbb <= 0.0) return 0.0;
  return sab / std::sqrt(saa * sbb);
}

constexpr double kSymTol = 1e-12;
constexpr double kResidualTol = 1e-10;
constexpr double kDegenerateRelTol = 1e-8;

}  // namespace

std::vector<int> diversity(const SpecializationMatrix& m) {
  std::vector<int> out(m.values.rows, 0);
  for (std::size_t i = 0; i < m.values.rows; ++i)
    for (std::size_t j = 0; j < m.values.cols; ++j) out[i] += m.values.at(i, j);
  return out;
}

std::vector<int> ubiquity(const SpecializationMatrix& m) {
  std::vector<int> out(m.values.cols, 0);
  for (std::size_t i = 0; i < m.values.rows; ++i)
    for (std::size_t j = 0; j < m.values.cols; ++j) out[j] += m.values.at(i, j);
  return out;
}

Matrix cooccurrence(const SpecializationMatrix& m, CooccurrenceKind kind) {
  const std::size_t nc = m.values.rows, nd = m.values.cols;
  if (kind == CooccurrenceKind::country) {
    Matrix a(nc, nc);
    for (std::size_t i = 0; i < nc; ++i)
      for (std::size_t k = 0; k < nc; ++k) {
        int s = 0;
        for (std::size_t j = 0; j < nd; ++j) s += m.values.at(i, j) * m.values.at(k, j);
        a.at(i, k) = s;
      }
    return a;
  }
  Matrix a(nd, nd);
  for (std::size_t j = 0; j < nd; ++j)
    for (std::size_t k = 0; k < nd; ++k) {
      int s = 0;
      for (std::size_t i = 0; i < nc; ++i) s += m.values.at(i, j) * m.values.at(i, k);
      a.at(j, k) = s;
    }
  return a;
}

EigenResult top_eigenpairs(const Matrix& a, std::size_t k) {
  if (a.rows != a.cols) throw ComputationError("eigen: matrix not square");
  const std::size_t n = a.rows;
  if (k < 1 || k > n) throw ComputationError("eigen: invalid pair count");
  double scale = 0.0;
  for (double v : a.data) scale = std::max(scale, std::abs(v));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (std::abs(a.at(i, j) - a.at(j, i)) > kSymTol * std::max(1.0, scale))
        throw ComputationError("eigen: matrix not symmetric");

  Eigen::MatrixXd em(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) em(i, j) = 0.5 * (a.at(i, j) + a.at(j, i));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(em);
  if (solver.info() != Eigen::Success)
    throw ComputationError("eigen: solver failed to converge on a " + std::to_string(n) + "x" +
                           std::to_string(n) + " matrix");

  EigenResult result;
  for (std::size_t t = 0; t < k; ++t) {
    std::size_t idx = n - 1 - t;  // solver returns ascending order
    double lambda = solver.eigenvalues()(idx);
    Eigen::VectorXd v = solver.eigenvectors().col(idx);
    v.normalize();
    Eigen::VectorXd residual = em * v - lambda * v;
    if (residual.lpNorm<Eigen::Infinity>() > kResidualTol * std::max(1.0, scale))
      throw ComputationError("eigen: residual above tolerance for eigenvalue " +
                             std::to_string(lambda));
    result.eigenvalues.push_back(lambda);
    result.eigenvectors.emplace_back(v.data(), v.data() + n);
  }
  return result;
}

std::vector<std::optional<double>> compute_etgci(const SpecializationMatrix& m) {
  const std::size_t nc = m.values.rows, nd = m.values.cols;
  auto div = diversity(m);
  auto ubi = ubiquity(m);

  std::vector<std::size_t> rows, cols;
  for (std::size_t i = 0; i < nc; ++i)
    if (div[i] > 0) rows.push_back(i);
  for (std::size_t j = 0; j < nd; ++j)
    if (ubi[j] > 0) cols.push_back(j);
  if (cols.size() < 2)
    throw ComputationError("etgci: need at least 2 non-empty domains, have " +
                           std::to_string(cols.size()));
  if (rows.size() < 2)
    throw ComputationError("etgci: need at least 2 non-empty countries, have " +
                           std::to_string(rows.size()));

  // M^T M on the reduced matrix.
  const std::size_t d = cols.size();
  Matrix a(d, d);
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q) {
      int s = 0;
      for (auto i : rows) s += m.values.at(i, cols[p]) * m.values.at(i, cols[q]);
      a.at(p, q) = s;
    }

  auto eig = top_eigenpairs(a, std::min<std::size_t>(3, d));
  double l1 = eig.eigenvalues[0];
  double l2 = eig.eigenvalues[1];
  double tol = kDegenerateRelTol * std::max(1.0, std::abs(l1));
  if (std::abs(l1 - l2) <= tol)
    throw DegenerateSpectrum("degenerate spectrum: leading eigenvalues coincide");
  if (eig.eigenvalues.size() > 2 && std::abs(l2 - eig.eigenvalues[2]) <= tol)
    throw DegenerateSpectrum("degenerate spectrum: second eigenvalue not simple");

  std::vector<double> y = eig.eigenvectors[1];
  std::vector<double> u(d);
  for (std::size_t p = 0; p < d; ++p) u[p] = ubi[cols[p]];

  // High complexity should pair with low ubiquity.
  double rho = spearman(y, u);
  bool flip = rho > 0.0;
  if (rho == 0.0) {
    for (double v : y) {
      if (v > 0.0) break;
      if (v < 0.0) { flip = true; break; }
    }
  }
  if (flip)
    for (auto& v : y) v = -v;

  double lo = *std::min_element(y.begin(), y.end());
  double hi = *std::max_element(y.begin(), y.end());
  if (!(hi > lo)) throw ComputationError("etgci: flat eigenvector, scores undefined");

  std::vector<std::optional<double>> out(nd);
  for (std::size_t p = 0; p < d; ++p) out[cols[p]] = (y[p] - lo) / (hi - lo);
  return out;
}

std::vector<std::optional<double>> compute_gci(const SpecializationMatrix& m,
                                               const std::vector<std::optional<double>>& etgci) {
  if (etgci.size() != m.values.cols)
    throw ComputationError("gci: etgci size does not match matrix");
  std::vector<std::optional<double>> out(m.values.rows);
  for (std::size_t i = 0; i < m.values.rows; ++i) {
    double sum = 0.0;
    int count = 0;
    for (std::size_t j = 0; j < m.values.cols; ++j) {
      if (!m.values.at(i, j)) continue;
      if (!etgci[j])
        throw ComputationError("gci: specialized domain '" + m.domains[j] + "' has no score");
      sum += *etgci[j];
      ++count;
    }
    if (count == 0) {
      log(LogLevel::warn, "country '" + m.countries[i] + "' has no specializations; GCI omitted");
      continue;
    }
    out[i] = sum / count;
  }
  return out;
}

std::vector<std::optional<int>> rank_scores(const std::vector<std::optional<double>>& scores,
                                            const std::vector<std::string>& labels) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < scores.size(); ++i)
    if (scores[i]) idx.push_back(i);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (*scores[a] != *scores[b]) return *scores[a] > *scores[b];
    return labels[a] < labels[b];
  });
  std::vector<std::optional<int>> out(scores.size());
  for (std::size_t pos = 0; pos < idx.size(); ++pos) out[idx[pos]] = static_cast<int>(pos) + 1;
  return out;
}

ComplexityReport analyze(const SpecializationMatrix& m) {
  ComplexityReport report;
  report.year = m.year;
  report.variant = m.variant;
  report.countries = m.countries;
  report.domains = m.domains;
  report.diversity = diversity(m);
  report.ubiquity = ubiquity(m);
  report.etgci = compute_etgci(m);
  report.gci = compute_gci(m, report.etgci);
  report.country_rank = rank_scores(report.gci, m.countries);
  report.domain_rank = rank_scores(report.etgci, m.domains);
  return report;
}

}  // namespace geoecon
