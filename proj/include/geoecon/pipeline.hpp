#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geoecon/complexity.hpp"
#include "geoecon/ingest.hpp"
#include "geoecon/strategy.hpp"
#include "geoecon/synth.hpp"

namespace geoecon {

struct RunConfig {
  std::string deals_path;
  std::string classifications_path;
  std::string taxonomy_path;  // empty = built-in taxonomy
  int year = 2024;
  Variant variant = Variant::plain;
  int window = 2;
  double quantum = 1e8;
  FilterParams filters;
  std::string out_dir = ".";
  // simulate-only
  std::vector<std::string> bloc_members;
  BlocRule bloc_rule = BlocRule::any();
};

struct PipelineResult {
  SpecializationMatrix matrix;
  RvaMatrix rva;
  ComplexityReport report;
  std::optional<YearSlice> slice;
};

// Shared ingest -> RVA -> M -> report path used by every command.
PipelineResult run_pipeline(const RunConfig& config);

// Write rva.csv, matrix.csv, indices.json.
void cmd_indices(const RunConfig& config);
// Write heatmap.csv, scatter.csv.
void cmd_figures(const RunConfig& config);
// Write ssset.csv (and bloc.json when bloc members are given).
void cmd_simulate(const RunConfig& config);
// Write deals.csv, classifications.csv, taxonomy.json fixtures.
void cmd_synth(const SynthParams& params, const std::string& out_dir);

}  // namespace geoecon
