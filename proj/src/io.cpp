#include "geoecon/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace geoecon {

LogLevel log_level() {
  static LogLevel level = [] {
    const char* env = std::getenv("GEOECON_LOG");
    if (!env) return LogLevel::warn;
    std::string s(env);
    if (s == "error") return LogLevel::error;
    if (s == "warn") return LogLevel::warn;
    if (s == "info") return LogLevel::info;
    if (s == "debug") return LogLevel::debug;
    return LogLevel::warn;
  }();
  return level;
}

void log(LogLevel level, const std::string& msg) {
  if (level > log_level()) return;
  static const char* names[] = {"error", "warn", "info", "debug"};
  std::cerr << "[" << names[static_cast<int>(level)] << "] " << msg << "\n";
}

std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

void atomic_write_file(const std::string& path, const std::string& content) {
  std::filesystem::path target(path);
  if (target.has_parent_path()) std::filesystem::create_directories(target.parent_path());
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write file: " + tmp.string());
    out << content;
    if (!out) throw InputError("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

}  // namespace

std::string render_rva_csv(const RvaMatrix& rva) {
  std::ostringstream out;
  out << "country";
  for (const auto& d : rva.domains) out << "," << d;
  out << "\n";
  for (std::size_t i = 0; i < rva.countries.size(); ++i) {
    out << rva.countries[i];
    for (std::size_t j = 0; j < rva.domains.size(); ++j) out << "," << fmt6(rva.values.at(i, j));
    out << "\n";
  }
  return out.str();
}

std::string render_matrix_csv(const SpecializationMatrix& m) {
  std::ostringstream out;
  out << "country";
  for (const auto& d : m.domains) out << "," << d;
  out << "\n";
  for (std::size_t i = 0; i < m.countries.size(); ++i) {
    out << m.countries[i];
    for (std::size_t j = 0; j < m.domains.size(); ++j)
      out << "," << static_cast<int>(m.values.at(i, j));
    out << "\n";
  }
  return out.str();
}

std::string render_indices_json(const ComplexityReport& report) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"year\": " << report.year << ",\n";
  out << "  \"variant\": \"" << variant_name(report.variant) << "\",\n";
  out << "  \"countries\": [\n";
  for (std::size_t i = 0; i < report.countries.size(); ++i) {
    out << "    {\"id\": \"" << json_escape(report.countries[i]) << "\", \"diversity\": "
        << report.diversity[i] << ", \"gci\": ";
    out << (report.gci[i] ? fmt6(*report.gci[i]) : std::string("null"));
    out << ", \"rank\": ";
    out << (report.country_rank[i] ? std::to_string(*report.country_rank[i]) : std::string("null"));
    out << "}" << (i + 1 < report.countries.size() ? "," : "") << "\n";
  }
  out << "  ],\n";
  out << "  \"domains\": [\n";
  for (std::size_t j = 0; j < report.domains.size(); ++j) {
    out << "    {\"id\": \"" << json_escape(report.domains[j]) << "\", \"ubiquity\": "
        << report.ubiquity[j] << ", \"etgci\": ";
    out << (report.etgci[j] ? fmt6(*report.etgci[j]) : std::string("null"));
    out << ", \"rank\": ";
    out << (report.domain_rank[j] ? std::to_string(*report.domain_rank[j]) : std::string("null"));
    out << "}" << (j + 1 < report.domains.size() ? "," : "") << "\n";
  }
  out << "  ]\n";
  out << "}\n";
  return out.str();
}

namespace {

// Orders for figure output: rows by diversity desc, columns by ubiquity desc,
// ties by label.
std::vector<std::size_t> sorted_rows(const ComplexityReport& r) {
  std::vector<std::size_t> idx(r.countries.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (r.diversity[a] != r.diversity[b]) return r.diversity[a] > r.diversity[b];
    return r.countries[a] < r.countries[b];
  });
  return idx;
}

std::vector<std::size_t> sorted_cols(const ComplexityReport& r) {
  std::vector<std::size_t> idx(r.domains.size());
  for (std::size_t j = 0; j < idx.size(); ++j) idx[j] = j;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (r.ubiquity[a] != r.ubiquity[b]) return r.ubiquity[a] > r.ubiquity[b];
    return r.domains[a] < r.domains[b];
  });
  return idx;
}

}  // namespace

std::string render_heatmap_csv(const SpecializationMatrix& m, const ComplexityReport& report) {
  auto rows = sorted_rows(report);
  auto cols = sorted_cols(report);
  std::ostringstream out;
  out << "country";
  for (auto j : cols) out << "," << m.domains[j];
  out << "\n";
  for (auto i : rows) {
    out << m.countries[i];
    for (auto j : cols) out << "," << static_cast<int>(m.values.at(i, j));
    out << "\n";
  }
  return out.str();
}

std::string render_scatter_csv(const SpecializationMatrix& m, const ComplexityReport& report) {
  std::ostringstream out;
  out << "country,diversity,mean_ubiquity\n";
  for (std::size_t i = 0; i < m.countries.size(); ++i) {
    if (report.diversity[i] == 0) continue;
    double sum = 0.0;
    for (std::size_t j = 0; j < m.values.cols; ++j)
      if (m.values.at(i, j)) sum += report.ubiquity[j];
    out << m.countries[i] << "," << report.diversity[i] << ","
        << fmt6(sum / report.diversity[i]) << "\n";
  }
  return out.str();
}

std::string render_ssset_csv(const SssetReport& report) {
  std::ostringstream out;
  out << "country,ssset_domains,rank_change,relatedness_rank,relatedness_score\n";
  for (const auto& e : report.entries) {
    out << e.country << ",";
    if (e.domains.empty()) {
      out << "NONE,=,,";
    } else {
      for (std::size_t i = 0; i < e.domains.size(); ++i)
        out << (i ? "|" : "") << e.domains[i];
      out << ",";
      if (e.rank_change == 0) out << "=";
      else if (e.rank_change > 0) out << "+" << e.rank_change;
      else out << e.rank_change;
      out << "," << (e.relatedness_rank ? std::to_string(*e.relatedness_rank) : std::string())
          << "," << (e.relatedness_score ? std::to_string(*e.relatedness_score) : std::string());
    }
    out << "\n";
  }
  return out.str();
}

std::string render_bloc_json(const BlocOutcome& outcome, int year) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"year\": " << year << ",\n";
  out << "  \"members\": [";
  for (std::size_t i = 0; i < outcome.members.size(); ++i)
    out << (i ? ", " : "") << "\"" << json_escape(outcome.members[i]) << "\"";
  out << "],\n";
  out << "  \"rule\": \"" << outcome.rule << "\",\n";
  out << "  \"bloc_rank\": " << outcome.bloc_rank << ",\n";
  out << "  \"bloc_gci\": " << fmt6(outcome.bloc_gci) << ",\n";
  out << "  \"bloc_row\": [";
  for (std::size_t j = 0; j < outcome.bloc_row.size(); ++j)
    out << (j ? ", " : "") << static_cast<int>(outcome.bloc_row[j]);
  out << "],\n";
  out << "  \"member_baseline_ranks\": {";
  for (std::size_t i = 0; i < outcome.member_baseline_ranks.size(); ++i)
    out << (i ? ", " : "") << "\"" << json_escape(outcome.member_baseline_ranks[i].first)
        << "\": " << outcome.member_baseline_ranks[i].second;
  out << "},\n";
  if (outcome.naive) {
    out << "  \"naive_sum\": {\n";
    out << "    \"bloc_rank\": " << outcome.naive->bloc_rank << ",\n";
    out << "    \"bloc_row\": [";
    for (std::size_t j = 0; j < outcome.naive->bloc_row.size(); ++j)
      out << (j ? ", " : "") << static_cast<int>(outcome.naive->bloc_row[j]);
    out << "],\n";
    out << "    \"lost_domains\": [";
    for (std::size_t j = 0; j < outcome.naive->lost_domains.size(); ++j)
      out << (j ? ", " : "") << "\"" << json_escape(outcome.naive->lost_domains[j]) << "\"";
    out << "]\n";
    out << "  }\n";
  } else {
    out << "  \"naive_sum\": null\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace geoecon
