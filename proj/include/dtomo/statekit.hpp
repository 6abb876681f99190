#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "dtomo/types.hpp"

namespace dtomo {

/// Tolerance for normalization and the global-phase convention.
inline constexpr double kStateTolerance = 1e-12;
/// Below this value of psi~ the reconstruction is ill-conditioned.
inline constexpr double kIllConditionedSum = 1e-6;

/// A normalized pure state in a fixed basis {|x>, x = 1..d}, with its global
/// phase chosen so that the amplitude sum psi~ is real and positive.
class SystemState {
 public:
  std::span<const cplx> amplitudes() const { return amplitudes_; }
  int dim() const { return static_cast<int>(amplitudes_.size()); }
  /// 1-based access, matching the basis labelling x = 1..d.
  cplx amplitude(int x) const { return amplitudes_.at(static_cast<std::size_t>(x - 1)); }
  bool ill_conditioned() const;

 private:
  friend SystemState make_state(std::span<const cplx> raw);
  friend SystemState time_reverse(const SystemState& s);
  explicit SystemState(std::vector<cplx> amps) : amplitudes_(std::move(amps)) {}

  std::vector<cplx> amplitudes_;
};

/// Normalizes `raw` and removes the global phase of its amplitude sum.
/// Throws ZeroNorm, ZeroSum, or InvalidArgument (fewer than two amplitudes).
SystemState make_state(std::span<const cplx> raw);

/// psi~ = sum_x psi_x (real and positive by construction).
double tilde_psi(const SystemState& s);

/// Complex conjugation of the amplitudes; the basis is assumed
/// invariant under time reversal.
SystemState time_reverse(const SystemState& s);

/// Named presets: "uniform-d" (all amplitudes equal) and "ramp-d" (psi_x ~ x).
SystemState preset_state(std::string_view name);

}  // namespace dtomo
