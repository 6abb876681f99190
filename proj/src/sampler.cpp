#include "dtomo/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dtomo/errors.hpp"
#include "dtomo/philox.hpp"
#include "dtomo/runner/csv.hpp"

namespace dtomo {

std::string_view to_string(Observable o) {
  switch (o) {
    case Observable::PauliX: return "sx";
    case Observable::PauliY: return "sy";
    case Observable::PauliZ: return "sz";
    case Observable::M1: return "M1";
    case Observable::M2: return "M2";
    case Observable::Jz: return "Jz";
    case Observable::Jz2: return "Jz2";
    case Observable::Jy: return "Jy";
    case Observable::PostSelect: return "post";
  }
  return "unknown";
}

namespace {

[[noreturn]] void unsupported(Observable o, std::string_view rep) {
  fail(ErrorKind::UnsupportedRepresentation,
       std::string(to_string(o)) + " is not defined on a " + std::string(rep) + " probe");
}

MeasurementModel two_level(Observable o, const Eigen::Vector2cd& v, const Eigen::Matrix2cd& op) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(op);
  const Eigen::Vector2cd u = v.normalized();
  MeasurementModel m{std::string(to_string(o)), {}, {}};
  for (int k = 0; k < 2; ++k) {
    m.eigenvalues.push_back(std::round(es.eigenvalues()[k]));
    m.probabilities.push_back(std::norm(es.eigenvectors().col(k).dot(u)));
  }
  return m;
}

Eigen::Matrix2cd swap_op() {
  Eigen::Matrix2cd s;
  s << 0, 1, 1, 0;
  return s;
}

MeasurementModel spin_model(Observable o, const DickeState& s) {
  const SpinRep rep(s.twice_j);
  const Eigen::VectorXcd psi = s.coefficients.normalized();
  MeasurementModel m{std::string(to_string(o)), {}, {}};
  if (o == Observable::Jz || o == Observable::Jz2) {
    for (int k = 0; k < rep.dim(); ++k) {
      const double mk = rep.m(k);
      m.eigenvalues.push_back(o == Observable::Jz ? mk : mk * mk);
      m.probabilities.push_back(std::norm(psi[k]));
    }
    return m;
  }
  if (o != Observable::Jy) unsupported(o, "spin");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rep.jy());
  const Eigen::VectorXd p = (es.eigenvectors().adjoint() * psi).cwiseAbs2();
  for (int k = 0; k < rep.dim(); ++k) {
    // eigenvalues are exactly j, j-1, ..., -j
    m.eigenvalues.push_back(std::round(2 * es.eigenvalues()[k]) / 2);
    m.probabilities.push_back(p[k]);
  }
  return m;
}

}  // namespace

MeasurementModel measurement_model(const PointerState& state, Observable o) {
  if (const auto* q = std::get_if<QubitPointer>(&state)) {
    switch (o) {
      case Observable::PauliX: return two_level(o, q->state, pauli(Axis::x));
      case Observable::PauliY: return two_level(o, q->state, pauli(Axis::y));
      case Observable::PauliZ: return two_level(o, q->state, pauli(Axis::z));
      default: unsupported(o, "qubit");
    }
  }
  if (const auto* n = std::get_if<NoonState>(&state)) {
    if (o == Observable::M1) return two_level(o, n->vec(), swap_op());
    if (o == Observable::M2) return two_level(o, n->vec(), pauli(Axis::z));
    unsupported(o, "NOON");
  }
  if (const auto* t = std::get_if<TrPairState>(&state)) {
    if (o == Observable::M1) return two_level(o, t->vec(), swap_op());
    unsupported(o, "TR-pair");
  }
  return spin_model(o, std::get<DickeState>(state));
}

MeasurementModel bernoulli_model(const std::string& label, double p_success) {
  if (!(p_success >= 0.0 && p_success <= 1.0)) {
    fail(ErrorKind::InvalidArgument, "success probability outside [0, 1]");
  }
  return {label, {1.0, 0.0}, {p_success, 1.0 - p_success}};
}

double MeasurementRecord::mean() const {
  double s = 0;
  for (std::size_t k = 0; k < counts.size(); ++k) s += eigenvalues[k] * double(counts[k]);
  return s / double(shots);
}

double MeasurementRecord::variance_of_mean() const {
  if (shots < 2) return 0.0;
  const double mu = mean();
  double s = 0;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    const double d = eigenvalues[k] - mu;
    s += d * d * double(counts[k]);
  }
  return s / double(shots - 1) / double(shots);
}

MeasurementRecord sample_observable(const MeasurementModel& model, const ShotPlan& plan) {
  if (plan.shots < 1) fail(ErrorKind::InvalidArgument, "shots must be positive");
  if (model.eigenvalues.empty() || model.eigenvalues.size() != model.probabilities.size()) {
    fail(ErrorKind::InvalidArgument, "malformed measurement model");
  }
  std::vector<double> cdf(model.probabilities.size());
  double acc = 0;
  for (std::size_t k = 0; k < cdf.size(); ++k) {
    acc += std::max(0.0, model.probabilities[k]);
    cdf[k] = acc;
  }
  if (!(acc > 0)) fail(ErrorKind::InvalidArgument, "outcome probabilities vanish");
  for (double& c : cdf) c /= acc;
  cdf.back() = 1.0;

  const Philox4x32 rng(plan.seed, plan.stream);
  MeasurementRecord rec{model.label, model.eigenvalues, std::vector<std::int64_t>(cdf.size(), 0),
                        plan.shots, plan.seed};
  for (std::int64_t i = 0; i < plan.shots; ++i) {
    const double u = rng.uniform(std::uint64_t(i));
    const auto k = std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin();
    ++rec.counts[std::min<std::size_t>(std::size_t(k), cdf.size() - 1)];
  }
  return rec;
}

void write_records_csv(std::ostream& os, const std::string& scheme,
                       const std::vector<MeasurementRecord>& records) {
  os << "scheme,observable,eigenvalue,count,seed\n";
  for (const auto& r : records) {
    for (std::size_t k = 0; k < r.counts.size(); ++k) {
      os << scheme << ',' << r.label << ',' << format_number(r.eigenvalues[k]) << ',' << r.counts[k]
         << ',' << r.seed << '\n';
    }
  }
}

}  // namespace dtomo
