#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dtomo/estimation.hpp"
#include "dtomo/statekit.hpp"

namespace dtomo {

/// Inclusive arithmetic range min, min + step, ..., max.
struct Range {
  double min = 0.0;
  double max = 0.0;
  double step = 1.0;

  std::vector<double> values() const;
};

struct StateSpec {
  std::string preset;             ///< "uniform-d" or "ramp-d"; empty when explicit
  std::vector<cplx> amplitudes;   ///< explicit [re, im] pairs

  SystemState build() const;
};

struct RunConfig {
  Scheme scheme = Scheme::Qubit;
  std::optional<StateSpec> state;
  double theta = kPi / 2;
  int target_x = 1;
  Axis pointer_axis = Axis::z;
  std::vector<int> n_values;
  std::vector<ComplexPhase> phases;
  std::optional<Range> phi1_grid;
  std::optional<Range> phi2_grid;
  std::int64_t shots = 10000;
  int repetitions = 200;
  bool sampled = false;           ///< reconstruct: "mode": "exact" | "sampled"
  double tr_split = 0.5;
  std::vector<double> gamma_abs;
  std::optional<double> fisher_phi1;
  std::optional<std::uint64_t> seed;
  std::string output;
  std::string records_output;
  /// FNV-1a of the canonical JSON text.
  std::uint64_t hash = 0;

  /// Explicit phases followed by the grid (phi2 outer, phi1 inner).
  std::vector<ComplexPhase> phase_points() const;
};

/// Parses a JSON document. Unknown keys, wrong types and out-of-range values
/// throw Config with the offending field path.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

std::uint64_t fnv1a(const std::string& bytes);

}  // namespace dtomo
