#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "dtomo/dicke_scheme.hpp"
#include "dtomo/noon_scheme.hpp"
#include "dtomo/tr_scheme.hpp"

namespace dtomo {

/// Probe state in any of the supported representations.
struct QubitPointer {
  Qubit state;
};
using PointerState = std::variant<QubitPointer, NoonState, DickeState, TrPairState>;

enum class Observable {
  PauliX,
  PauliY,
  PauliZ,
  M1,        ///< sigma_x^{(x)N} on the NOON or TR-pair subspace
  M2,        ///< diag(+1, -1) on the NOON subspace
  Jz,
  Jz2,
  Jy,
  PostSelect ///< Bernoulli post-selection success, eigenvalue 1 on success
};

std::string_view to_string(Observable o);

/// Observable restricted to a representation: outcome values and Born probabilities.
struct MeasurementModel {
  std::string label;
  std::vector<double> eigenvalues;
  std::vector<double> probabilities;
};

/// Throws UnsupportedRepresentation when `o` does not act on `state`.
MeasurementModel measurement_model(const PointerState& state, Observable o);

/// Two-outcome model with eigenvalues (1, 0).
MeasurementModel bernoulli_model(const std::string& label, double p_success);

struct ShotPlan {
  std::uint64_t seed = 1;
  std::uint64_t stream = 0;
  std::int64_t shots = 1000;
};

struct MeasurementRecord {
  std::string label;
  std::vector<double> eigenvalues;
  std::vector<std::int64_t> counts;
  std::int64_t shots = 0;
  std::uint64_t seed = 0;

  double mean() const;
  /// Sample variance of one outcome divided by the number of shots.
  double variance_of_mean() const;
};

/// i.i.d. Born-rule outcomes by inverse-CDF lookup; shot k uses Philox block k
/// of the plan's stream.
MeasurementRecord sample_observable(const MeasurementModel& model, const ShotPlan& plan);

/// Rows `scheme,observable,eigenvalue,count,seed`.
void write_records_csv(std::ostream& os, const std::string& scheme,
                       const std::vector<MeasurementRecord>& records);

}  // namespace dtomo
