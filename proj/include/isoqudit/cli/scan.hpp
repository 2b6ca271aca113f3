#pragma once

// Grid scans over the bounding box of a spin's physical triangle.

#include <ostream>
#include <string>
#include <vector>

#include "isoqudit/cli/records.hpp"
#include "isoqudit/separability.hpp"

namespace isoqudit::cli {

enum class ScanMode { Ppt, Separability, Classify };
enum class ScanFormat { Csv, Json };

ScanMode parse_scan_mode(const std::string& s);  // throws std::invalid_argument
std::string scan_mode_name(ScanMode m);

struct ScanOptions {
  TwiceSpin s{2};
  int grid = 0;
  ScanMode mode = ScanMode::Ppt;
  ScanFormat format = ScanFormat::Csv;
  SolverConfig solver;  // rng_seed is the master seed
  double threshold = kSeparabilityThreshold;
  int spin_cap = kDefaultSpinCap;
  int threads = 1;

  /// Everything that changes a record, in a fixed textual form.
  std::string canonical() const;
};

struct ScanSummary {
  int points = 0;
  int physical = 0;
  int ppt = 0;
  int separable = 0;
  int indeterminate = 0;
  int cached = 0;

  double ppt_fraction() const { return physical ? static_cast<double>(ppt) / physical : 0.0; }
  double separable_fraction() const { return physical ? static_cast<double>(separable) / physical : 0.0; }
};

/// One grid point, computed from scratch.
ScanRecord evaluate_point(const ScanOptions& opt, ParamPoint p);

struct ScanOutput {
  GridSpec grid;
  std::vector<ScanRecord> records;  // row-major, beta outer
  ScanSummary summary;
};

/// Computes every grid point, reusing and extending the cache.
ScanOutput run_scan(const ScanOptions& opt, ResultCache& cache);

void write_csv(std::ostream& os, const ScanOptions& opt, const ScanOutput& out);
void write_json(std::ostream& os, const ScanOptions& opt, const ScanOutput& out);
nlohmann::json summary_json(const ScanOptions& opt, const ScanOutput& out);

}  // namespace isoqudit::cli
