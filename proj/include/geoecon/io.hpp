#pragma once

#include <string>

#include "geoecon/complexity.hpp"
#include "geoecon/specialization.hpp"
#include "geoecon/strategy.hpp"

namespace geoecon {

enum class LogLevel { error = 0, warn = 1, info = 2, debug = 3 };

// Level comes from GEOECON_LOG (error|warn|info|debug), default warn.
LogLevel log_level();
void log(LogLevel level, const std::string& msg);

// Fixed 6-decimal formatting used for all floating-point output.
std::string fmt6(double v);

// Write-then-rename so partial files never appear under the final name.
void atomic_write_file(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);  // throws InputError

std::string render_rva_csv(const RvaMatrix& rva);
std::string render_matrix_csv(const SpecializationMatrix& m);
std::string render_indices_json(const ComplexityReport& report);
std::string render_heatmap_csv(const SpecializationMatrix& m, const ComplexityReport& report);
std::string render_scatter_csv(const SpecializationMatrix& m, const ComplexityReport& report);
std::string render_ssset_csv(const SssetReport& report);
std::string render_bloc_json(const BlocOutcome& outcome, int year);

}  // namespace geoecon
