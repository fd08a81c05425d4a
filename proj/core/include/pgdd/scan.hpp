#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "pgdd/propagate.hpp"

namespace pgdd {

struct GridAxis {
  std::string name;
  double min = 0.0;
  double max = 0.0;
  int points = 0;
  bool log_spaced = true;

  std::vector<double> values() const;
};

// Key=value scan description.  Family parameters are literals or "@axis"
// references into the grid.  Families: gue, multipole, multilinear,
// dis_dipolar, qubit_qutrit, dcg.
struct ScanConfig {
  std::string family;
  std::vector<double> spins;
  std::vector<std::string> sequences;
  int samples = 100;
  std::uint64_t seed = 0;
  std::vector<GridAxis> axes;
  std::map<std::string, std::string> params;
  ErrorModel error;
  double tau0 = -1.0;  // < 0: auto (shortest sequence has unit duration)
  bool anisotropic = true;
  double gate_angle = 1.0471975511965976;  // pi/3
  int gate_axis = 2;
};

ScanConfig parse_scan_config(std::istream& is);
ScanConfig load_scan_config(const std::string& path);

struct ScanRow {
  std::vector<double> grid;
  std::string sequence;
  double mean_distance = 0.0;
  double stddev = 0.0;
  int samples = 0;
  std::uint64_t seed = 0;
};

struct ScanResult {
  std::vector<std::string> grid_names;
  std::vector<ScanRow> rows;
};

// Deterministic for a fixed seed, independent of DD_THREADS.
ScanResult run_scan(const ScanConfig& config);

void write_scan_csv(std::ostream& os, const ScanResult& result,
                    const std::vector<std::string>& fit_comments = {});

// Least-squares slope of log y vs log x over points with y inside
// [y_min, y_max]; throws if fewer than 4 qualify.
double loglog_slope(const std::vector<std::pair<double, double>>& points, double y_min = 1e-6,
                    double y_max = 0.1);

// Slope of mean distance vs grid axis `axis_index` for one sequence.
double fit_scan_slope(const ScanResult& result, const std::string& sequence, int axis_index = 0,
                      double y_min = 1e-6, double y_max = 0.1);

}  // namespace pgdd
