#include "dtomo/estimation.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "dtomo/errors.hpp"
#include "dtomo/qubit_scheme.hpp"

namespace dtomo {

std::string_view to_string(Scheme s) {
  switch (s) {
    case Scheme::Qubit: return "qubit";
    case Scheme::Noon: return "noon";
    case Scheme::Dicke: return "dicke";
    case Scheme::Tr: return "tr";
  }
  return "unknown";
}

Scheme parse_scheme(std::string_view name) {
  if (name == "qubit") return Scheme::Qubit;
  if (name == "noon") return Scheme::Noon;
  if (name == "dicke") return Scheme::Dicke;
  if (name == "tr") return Scheme::Tr;
  fail(ErrorKind::Config, "unknown scheme '" + std::string(name) + "'");
}

namespace {

Observable pauli_observable(Axis a) {
  switch (a) {
    case Axis::x: return Observable::PauliX;
    case Axis::y: return Observable::PauliY;
    case Axis::z: return Observable::PauliZ;
  }
  return Observable::PauliZ;
}

const MeasurementRecord& find(const std::vector<MeasurementRecord>& records, Observable o) {
  for (const auto& r : records) {
    if (r.label == to_string(o)) return r;
  }
  fail(ErrorKind::InvalidArgument, "missing record for observable " + std::string(to_string(o)));
}

using Inversion = std::function<ComplexPhase(const Eigen::Vector2d&)>;

// Delta method over two independent means.
CovarianceReport propagate(const Inversion& f, const Eigen::Vector2d& m, const Eigen::Vector2d& var) {
  Eigen::Matrix2d g;
  for (int k = 0; k < 2; ++k) {
    const double h = 1e-7 * std::max(1.0, std::abs(m[k]));
    Eigen::Vector2d up = m, down = m;
    up[k] += h;
    down[k] -= h;
    try {
      const ComplexPhase a = f(up), b = f(down);
      g(0, k) = (a.phi1 - b.phi1) / (2 * h);
      g(1, k) = (a.phi2 - b.phi2) / (2 * h);
    } catch (const Error&) {
      g.col(k).setConstant(std::numeric_limits<double>::quiet_NaN());
    }
  }
  return {g * var.asDiagonal() * g.transpose(), Provenance::MonteCarlo};
}

}  // namespace

std::vector<Observable> scheme_observables(Scheme s, Axis pointer_axis) {
  switch (s) {
    case Scheme::Qubit: {
      const auto axes = perpendicular(pointer_axis);
      return {pauli_observable(axes.k1), pauli_observable(pointer_axis), pauli_observable(axes.k2)};
    }
    case Scheme::Noon: return {Observable::M1, Observable::M2};
    case Scheme::Dicke: return {Observable::Jz2, Observable::Jy};
    case Scheme::Tr: return {Observable::M1, Observable::M2};
  }
  return {};
}

PhaseEstimate empirical_phase_estimate(const std::vector<MeasurementRecord>& records, Scheme scheme,
                                       int n, Axis pointer_axis) {
  const auto obs = scheme_observables(scheme, pointer_axis);
  const MeasurementRecord& r0 = find(records, obs[0]);
  const MeasurementRecord& r1 = find(records, obs[1]);
  const Eigen::Vector2d m(r0.mean(), r1.mean());
  const Eigen::Vector2d var(r0.variance_of_mean(), r1.variance_of_mean());

  Inversion f;
  switch (scheme) {
    case Scheme::Qubit: {
      const double k2 = find(records, obs[2]).mean();
      f = [k2](const Eigen::Vector2d& x) { return estimate_qubit_phase(x[0], x[1], k2).phi; };
      break;
    }
    case Scheme::Noon:
      f = [n](const Eigen::Vector2d& x) { return estimate_noon_phase(x[0], x[1], n); };
      break;
    case Scheme::Dicke: {
      const int j = dicke_j_from_qubits(n);
      f = [j](const Eigen::Vector2d& x) { return estimate_dicke_phase(x[0], x[1], j); };
      break;
    }
    case Scheme::Tr:
      f = [n](const Eigen::Vector2d& x) {
        if (!(std::abs(x[1]) < 1.0)) fail(ErrorKind::OutOfDomainMean, "|<M2>| must be below 1");
        return ComplexPhase{tr_estimate_phi1(x[0], n).phi1, std::atanh(x[1]) / n};
      };
      break;
  }
  return {f(m), propagate(f, m, var)};
}

}  // namespace dtomo
