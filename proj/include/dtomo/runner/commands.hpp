#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <vector>

#include "dtomo/runner/config.hpp"

namespace dtomo {

struct RunOptions {
  std::uint64_t seed = 1;
  int threads = 1;
};

/// --seed wins over the config's "seed", which wins over 1.
std::uint64_t effective_seed(const RunConfig& c, std::optional<std::uint64_t> cli_seed);

/// Warnings go to `warn`; the CSV goes to `out`.
void cmd_reconstruct(const RunConfig& c, const RunOptions& opt, std::ostream& out, std::ostream& warn);
void cmd_scan(const RunConfig& c, const RunOptions& opt, std::ostream& out, std::ostream& warn);
void cmd_fisher(const RunConfig& c, const RunOptions& opt, std::ostream& out, std::ostream& warn);
void cmd_mc(const RunConfig& c, const RunOptions& opt, std::ostream& out, std::ostream& warn);

/// Least-squares line through (N, log(N^2 y)); `spread` is the max relative
/// deviation of N^2 y from its mean.
struct ScalingFit {
  double slope = 0;
  double intercept = 0;
  double spread = 0;
};
ScalingFit fit_log_scaling(const std::vector<int>& n, const std::vector<double>& y);

struct McPoint {
  Scheme scheme = Scheme::Noon;
  int n = 1;
  ComplexPhase phi;
  std::int64_t shots = 10000;
  int repetitions = 200;
  double tr_split = 0.5;
  Axis pointer_axis = Axis::z;
};

struct McResult {
  Eigen::Vector2d emp_var = Eigen::Vector2d::Constant(std::numeric_limits<double>::quiet_NaN());
  Eigen::Vector2d analytic_var = Eigen::Vector2d::Constant(std::numeric_limits<double>::quiet_NaN());
  Eigen::Vector2d mean = Eigen::Vector2d::Zero();
  int out_of_domain = 0;
  std::vector<MeasurementRecord> first_records;
};

/// Repeated estimation at one working point. Repetition r of point `index`
/// draws from stream_id(index, r, observable).
McResult run_mc_point(const McPoint& p, std::uint64_t seed, std::uint32_t index, int threads);

}  // namespace dtomo
