#include "dtomo/statekit.hpp"

#include <charconv>
#include <cmath>
#include <numeric>
#include <string>

#include "dtomo/errors.hpp"

namespace dtomo {

bool SystemState::ill_conditioned() const { return tilde_psi(*this) < kIllConditionedSum; }

SystemState make_state(std::span<const cplx> raw) {
  if (raw.size() < 2) {
    fail(ErrorKind::InvalidArgument, "a system state needs at least two amplitudes");
  }
  double norm2 = 0.0;
  for (const cplx& a : raw) norm2 += std::norm(a);
  const double norm = std::sqrt(norm2);
  if (!(norm > 0.0) || !std::isfinite(norm)) fail(ErrorKind::ZeroNorm, "state vector has zero norm");

  const cplx sum = std::accumulate(raw.begin(), raw.end(), cplx{});
  if (std::abs(sum) / norm <= kStateTolerance) {
    fail(ErrorKind::ZeroSum,
         "amplitude sum vanishes; post-selection onto the uniform superposition carries no signal");
  }
  const cplx phase = std::conj(sum) / std::abs(sum);

  std::vector<cplx> amps(raw.begin(), raw.end());
  for (cplx& a : amps) a *= phase / norm;
  return SystemState(std::move(amps));
}

double tilde_psi(const SystemState& s) {
  const auto amps = s.amplitudes();
  return std::accumulate(amps.begin(), amps.end(), cplx{}).real();
}

SystemState time_reverse(const SystemState& s) {
  std::vector<cplx> amps(s.amplitudes().begin(), s.amplitudes().end());
  for (cplx& a : amps) a = std::conj(a);
  return SystemState(std::move(amps));
}

SystemState preset_state(std::string_view name) {
  const auto dash = name.rfind('-');
  if (dash == std::string_view::npos) {
    fail(ErrorKind::InvalidArgument, "unknown state preset '" + std::string(name) + "'");
  }
  const std::string_view kind = name.substr(0, dash);
  const std::string_view digits = name.substr(dash + 1);
  int d = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), d);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || d < 2) {
    fail(ErrorKind::InvalidArgument, "preset dimension must be an integer >= 2 in '" + std::string(name) + "'");
  }
  std::vector<cplx> raw(static_cast<std::size_t>(d));
  if (kind == "uniform") {
    std::fill(raw.begin(), raw.end(), cplx{1.0, 0.0});
  } else if (kind == "ramp") {
    for (int x = 1; x <= d; ++x) raw[static_cast<std::size_t>(x - 1)] = static_cast<double>(x);
  } else {
    fail(ErrorKind::InvalidArgument, "unknown state preset '" + std::string(name) + "'");
  }
  return make_state(raw);
}

}  // namespace dtomo
