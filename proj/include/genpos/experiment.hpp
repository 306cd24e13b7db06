#pragma once

// Seeded datasets, batch experiments and trend fits.

#include "genpos/geometry.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace genpos {

enum class Family { grid, random_rational, parallel, simplex, projected_grid, dual_of_points };
enum class Operation { census, independent, color, genpos, alpha, arrange, ramsey };

Family parse_family(const std::string& name);
Operation parse_operation(const std::string& name);
std::string to_string(Family f);
std::string to_string(Operation op);

/// grid, random_rational and projected_grid are point families; parallel,
/// simplex and dual_of_points are arrangement families.
bool is_point_family(Family f);

struct DatasetParams {
  int k = 3;  // side of the projected grid
};

/// Point set of `n` points in R^d. grid needs n = k^d for an integer k,
/// projected_grid needs n = params.k^m. Throws PreconditionError for
/// arrangement families or unrealisable sizes.
PointSet generate_points(Family f, int n, int d, std::uint64_t seed, const DatasetParams& params = {});

/// n hyperplanes in R^d. Point families go through dual_arrangement.
/// parallel: x_1 = 1..n. simplex: the d+1 facets of the standard simplex
/// followed by random hyperplanes, perturbed to a simple arrangement.
/// dual_of_points: dual_arrangement of random rational points.
std::vector<Hyperplane> generate_hyperplanes(Family f, int n, int d, std::uint64_t seed,
                                             const DatasetParams& params = {});

struct ExperimentConfig {
  Family family = Family::grid;
  Operation operation = Operation::census;
  std::vector<int> sizes;
  std::vector<int> dims;
  std::vector<std::uint64_t> seeds;
  Rat gamma{1, 2};
  int q = 4;           // ramsey
  int k = 3;           // projected_grid
  bool timing = false; // emit wall_ms rows (excluded from reproducibility)
  bool verify = false; // re-check every measurement with the module checkers
};

/// Strict "key = value" format, '#' comments, lists comma separated with
/// "a..b" ranges. Unknown or repeated keys, empty sizes/dims/seeds and
/// unknown names throw PreconditionError.
ExperimentConfig parse_config(std::istream& in);
void validate(const ExperimentConfig& cfg);

struct ExperimentRecord {
  Family family;
  int n = 0;
  int d = 0;
  std::uint64_t seed = 0;
  Operation operation;
  std::vector<std::pair<std::string, std::string>> metrics;
  std::optional<std::string> error;  // failed run; metrics may be partial
  bool verification_failed = false;
  double wall_ms = 0.0;
};

/// One record per (size, dim, seed) in config order, run on at most `jobs`
/// worker threads. Failures are caught per run and stored in the record.
std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& cfg, int jobs = 1);

/// Header plus rows family,n,d,seed,op,metric,value. Failed runs write an
/// "error" row; wall_ms rows only when with_timing.
void write_records_csv(std::ostream& out, const std::vector<ExperimentRecord>& records, bool with_timing,
                       bool header = true);

enum class TrendModel { power, power_log };

struct TrendFit {
  double exponent = 0.0;
  double constant = 0.0;
  double residual = 0.0;  // RMS of the log-space residuals
};

/// Least squares of ln y against ln n (power) or ln(n ln n) (power_log),
/// i.e. y = c n^e or y = c (n ln n)^e. Needs at least 3 points with y > 0
/// (and n >= 2 for power_log); throws PreconditionError otherwise.
TrendFit fit_trend(std::span<const std::pair<double, double>> points, TrendModel model);

/// (n, value) pairs for one metric, skipping failed runs.
std::vector<std::pair<double, double>> trend_points(const std::vector<ExperimentRecord>& records,
                                                    const std::string& metric);

/// (n, value) pairs for one metric from a CSV written by write_records_csv.
std::vector<std::pair<double, double>> read_trend_csv(std::istream& in, const std::string& metric);

}  // namespace genpos
