#pragma once

// Pipeline driver: chains enumeration -> classification -> braces -> YBE ->
// ideals over catalog entries and assembles one deterministic JSON report
// (schema rotabrace-report/1) plus an aligned text rendering.

#include <string>
#include <vector>

#include "rotabrace/catalog.hpp"

namespace rotabrace {

struct PipelineOptions {
  std::vector<std::string> stages = {"enumerate", "classify", "braces", "ybe", "ideals"};
  int max_order = 8;
  int max_ideal_order = 10;
  int max_equiv_order = 8;
  /// Wall-clock timings are excluded by default so reports stay byte-identical
  /// across runs and worker counts.
  bool include_timing = false;
};

struct PipelineResult {
  Json json;
  int checks_passed = 0;
  int checks_failed = 0;

  bool ok() const { return checks_failed == 0; }
};

/// Runs the selected stages on one entry.  Stage order is fixed; missing
/// prerequisites raise PreconditionError("StageDependencyMissing").
PipelineResult run_pipeline(const CatalogEntry& entry, const PipelineOptions& opts);

/// Runs the pipeline over several entries and merges into a single report.
PipelineResult run_catalog_pipeline(const std::vector<CatalogEntry>& entries,
                                    const PipelineOptions& opts);

/// Fixed-width text rendering of a report produced by run_pipeline.
std::string render_text(const Json& report);

}  // namespace rotabrace
