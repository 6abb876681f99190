#include "dtomo/types.hpp"

namespace dtomo {

Eigen::Matrix2cd pauli(Axis axis) {
  Eigen::Matrix2cd m;
  switch (axis) {
    case Axis::x: m << 0.0, 1.0, 1.0, 0.0; break;
    case Axis::y: m << 0.0, -kI, kI, 0.0; break;
    case Axis::z: m << 1.0, 0.0, 0.0, -1.0; break;
  }
  return m;
}

PerpendicularAxes perpendicular(Axis k) {
  switch (k) {
    case Axis::z: return {Axis::x, Axis::y};
    case Axis::y: return {Axis::z, Axis::x};
    case Axis::x: return {Axis::y, Axis::z};
  }
  return {Axis::x, Axis::y};
}

double global_phase_distance(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  const cplx overlap = b.dot(a);  // <b|a>
  const double mag = std::abs(overlap);
  const cplx phase = mag > 0.0 ? overlap / mag : cplx{1.0, 0.0};
  return (a - phase * b).norm();
}

}  // namespace dtomo
