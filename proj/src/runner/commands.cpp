#include "dtomo/runner/commands.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "dtomo/errors.hpp"
#include "dtomo/philox.hpp"
#include "dtomo/qubit_scheme.hpp"
#include "dtomo/runner/csv.hpp"
#include "dtomo/runner/parallel.hpp"

namespace dtomo {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorKind::Config, what);
}

Observable pauli_observable(Axis a) {
  return a == Axis::x ? Observable::PauliX : a == Axis::y ? Observable::PauliY : Observable::PauliZ;
}

// Models measured by one repetition, with the shots each receives.
struct PlannedModel {
  MeasurementModel model;
  std::int64_t shots;
};

std::vector<PlannedModel> plan_models(const McPoint& p) {
  std::vector<PlannedModel> out;
  switch (p.scheme) {
    case Scheme::Qubit: {
      const PointerState s = QubitPointer{final_pointer_state(p.phi, default_pointer_input(p.pointer_axis),
                                                              p.pointer_axis)};
      for (Observable o : scheme_observables(Scheme::Qubit, p.pointer_axis)) {
        out.push_back({measurement_model(s, o), p.shots});
      }
      break;
    }
    case Scheme::Noon: {
      const PointerState s = noon_final_state(p.phi, p.n);
      for (Observable o : scheme_observables(Scheme::Noon)) out.push_back({measurement_model(s, o), p.shots});
      break;
    }
    case Scheme::Dicke: {
      const int j = dicke_j_from_qubits(p.n);
      const PointerState s = DickeState{2 * j, dicke_state(j, p.phi)};
      for (Observable o : scheme_observables(Scheme::Dicke)) out.push_back({measurement_model(s, o), p.shots});
      break;
    }
    case Scheme::Tr: {
      const auto tr_shots = std::max<std::int64_t>(1, std::llround(p.tr_split * double(p.shots)));
      const auto noon_shots = std::max<std::int64_t>(1, p.shots - tr_shots);
      out.push_back({measurement_model(tr_final_state(p.phi, p.n), Observable::M1), tr_shots});
      out.push_back({measurement_model(noon_final_state(p.phi, p.n), Observable::M2), noon_shots});
      break;
    }
  }
  return out;
}

Eigen::Vector2d analytic_variance(const McPoint& p, const std::vector<PlannedModel>& models) {
  try {
    switch (p.scheme) {
      case Scheme::Qubit:
        return noon_variance(p.phi, 1).cov.diagonal() / double(p.shots);
      case Scheme::Noon:
        return noon_variance(p.phi, p.n).cov.diagonal() / double(p.shots);
      case Scheme::Dicke:
        return dicke_covariance(dicke_j_from_qubits(p.n), p.phi).cov.diagonal() / double(p.shots);
      case Scheme::Tr: {
        const double ch = std::cosh(p.n * p.phi.phi2);
        return {tr_phi1_variance(p.phi.phi1, p.n) / double(models[0].shots),
                ch * ch / (double(p.n) * p.n) / double(models[1].shots)};
      }
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SingularJacobian && e.kind() != ErrorKind::SingularWorkingPoint) throw;
  }
  return Eigen::Vector2d::Constant(kNan);
}

std::ofstream open_output(const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) fail(ErrorKind::Config, "cannot write '" + path + "'");
  return f;
}

}  // namespace

std::uint64_t effective_seed(const RunConfig& c, std::optional<std::uint64_t> cli_seed) {
  if (cli_seed) return *cli_seed;
  return c.seed.value_or(1);
}

void cmd_reconstruct(const RunConfig& c, const RunOptions& opt, std::ostream& out, std::ostream& warn) {
  require(c.scheme == Scheme::Qubit, "reconstruct needs scheme \"qubit\"");
  require(c.state.has_value(), "reconstruct needs a state");
  const SystemState s = c.state->build();
  if (s.ill_conditioned()) warn << "warning: psi~ = " << tilde_psi(s) << " is below 1e-6; reconstruction is ill-conditioned\n";
  const int d = s.dim();
  const double psi_tilde = tilde_psi(s);
  const Qubit in = default_pointer_input(c.pointer_axis);
  const auto axes = perpendicular(c.pointer_axis);

  std::vector<cplx> est(static_cast<std::size_t>(d));
  parallel_for(std::size_t(d), opt.threads, [&](std::size_t i) {
    const int x = int(i) + 1;
    const CouplingConfig cc{c.theta, x, c.pointer_axis};
    ProbTriple p = forward_probabilities(s, cc, in);
    if (c.sampled) {
      const PointerState f = QubitPointer{final_pointer_state(alpha_beta(s, cc), in, c.pointer_axis)};
      auto prob_plus = [&](Axis a, std::uint32_t obs) {
        const auto rec = sample_observable(measurement_model(f, pauli_observable(a)),
                                           {opt.seed, stream_id(std::uint32_t(i), 0, obs), c.shots});
        return (1 + rec.mean()) / 2;
      };
      p.p_k = prob_plus(c.pointer_axis, 0);
      p.p_k1 = prob_plus(axes.k1, 1);
      p.p_k2 = prob_plus(axes.k2, 2);
      p.p_post = sample_observable(bernoulli_model("post", p.p_post),
                                   {opt.seed, stream_id(std::uint32_t(i), 0, 3), c.shots})
                     .mean();
    }
    est[i] = reconstruct_amplitude(p, c.theta, psi_tilde, d);
  });

  write_header_comment(out, "reconstruct", c.hash, opt.seed);
  out << "x,re_psi_true,im_psi_true,re_psi_est,im_psi_est,abs_err\n";
  for (int x = 1; x <= d; ++x) {
    const cplx t = s.amplitude(x), e = est[std::size_t(x - 1)];
    out << (CsvRow() << x << t.real() << t.imag() << e.real() << e.imag() << std::abs(t - e));
  }
}

void cmd_scan(const RunConfig& c, const RunOptions& opt, std::ostream& out, std::ostream& warn) {
  require(c.scheme == Scheme::Noon || c.scheme == Scheme::Dicke, "scan needs scheme \"noon\" or \"dicke\"");
  require(!c.n_values.empty(), "scan needs N");
  const auto pts = c.phase_points();
  require(!pts.empty(), "scan needs phases or a grid");
  if (c.scheme == Scheme::Dicke) {
    for (int n : c.n_values) (void)dicke_j_from_qubits(n);
  }

  const std::size_t total = c.n_values.size() * pts.size();
  std::vector<Eigen::Vector2d> inv(total);
  std::vector<std::string> notes(total);
  parallel_for(total, opt.threads, [&](std::size_t i) {
    const int n = c.n_values[i / pts.size()];
    const ComplexPhase phi = pts[i % pts.size()];
    if (c.scheme == Scheme::Noon) {
      const double ch = std::cosh(n * phi.phi2);
      try {
        const auto cov = noon_variance(phi, n).cov;
        inv[i] = {1 / cov(0, 0), 1 / cov(1, 1)};
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::SingularJacobian) throw;
        inv[i] = {kNan, double(n) * n / (ch * ch)};
        notes[i] = "singular Jacobian (sin(N phi1) = 0)";
      }
    } else {
      const int j = n / 2;
      double inv1 = kNan;
      try {
        inv1 = inv_var_phi1(j, phi);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::DivergentVariance) throw;
        notes[i] = e.what();
      }
      inv[i] = {inv1, 1 / var_phi2(j, phi.phi2)};
    }
  });

  write_header_comment(out, "scan", c.hash, opt.seed);
  out << "scheme,N,phi1,phi2,inv_var_phi1,inv_var_phi2\n";
  for (std::size_t i = 0; i < total; ++i) {
    const ComplexPhase phi = pts[i % pts.size()];
    out << (CsvRow() << to_string(c.scheme) << c.n_values[i / pts.size()] << phi.phi1 << phi.phi2 << inv[i][0]
                     << inv[i][1]);
    if (!notes[i].empty()) {
      warn << "warning: N=" << c.n_values[i / pts.size()] << " phi=(" << phi.phi1 << ", " << phi.phi2
           << "): " << notes[i] << '\n';
    }
  }
}

ScalingFit fit_log_scaling(const std::vector<int>& n, const std::vector<double>& y) {
  if (n.size() != y.size() || n.size() < 2) fail(ErrorKind::InvalidArgument, "need at least two points to fit");
  const double k = double(n.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0, mean = 0;
  for (std::size_t i = 0; i < n.size(); ++i) {
    const double x = n[i], v = std::log(double(n[i]) * n[i] * y[i]);
    sx += x;
    sy += v;
    sxx += x * x;
    sxy += x * v;
    mean += double(n[i]) * n[i] * y[i] / k;
  }
  ScalingFit f;
  f.slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  f.intercept = (sy - f.slope * sx) / k;
  for (std::size_t i = 0; i < n.size(); ++i) {
    f.spread = std::max(f.spread, std::abs(double(n[i]) * n[i] * y[i] / mean - 1));
  }
  return f;
}

void cmd_fisher(const RunConfig& c, const RunOptions& opt, std::ostream& out, std::ostream& warn) {
  require(c.scheme == Scheme::Noon, "fisher needs scheme \"noon\"");
  require(!c.n_values.empty(), "fisher needs N");
  const std::vector<double> gammas = c.gamma_abs.empty() ? std::vector<double>{1.0} : c.gamma_abs;

  struct Row {
    FisherMatrix f;
    Eigen::Matrix2d crb = Eigen::Matrix2d::Constant(kNan);
    std::string note;
  };
  const std::size_t total = gammas.size() * c.n_values.size();
  std::vector<Row> rows(total);
  parallel_for(total, opt.threads, [&](std::size_t i) {
    const double g = gammas[i / c.n_values.size()];
    const int n = c.n_values[i % c.n_values.size()];
    const ComplexPhase phi{c.fisher_phi1.value_or(kPi / (2.0 * n)), std::log(g)};
    Row& r = rows[i];
    try {
      r.f = noon_fisher(phi, n);
      r.crb = cramer_rao_bound(r.f).cov;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SingularFisher && e.kind() != ErrorKind::DegenerateDistribution) throw;
      r.note = e.what();
    }
    if (r.f.suspicious_drops > 0) r.note += " dropped outcomes with |dp| > 1e-7";
  });

  write_header_comment(out, "fisher", c.hash, opt.seed);
  out << "N,gamma_abs,f11,f22,f12,crb11,crb22\n";
  for (std::size_t gi = 0; gi < gammas.size(); ++gi) {
    std::vector<int> fit_n;
    std::vector<double> fit_y;
    for (std::size_t ni = 0; ni < c.n_values.size(); ++ni) {
      const Row& r = rows[gi * c.n_values.size() + ni];
      const int n = c.n_values[ni];
      out << (CsvRow() << n << gammas[gi] << r.f.f(0, 0) << r.f.f(1, 1) << r.f.f(0, 1) << r.crb(0, 0)
                       << r.crb(1, 1));
      if (!r.note.empty()) {
        out << "# N=" << n << " gamma_abs=" << format_number(gammas[gi]) << ": " << r.note << '\n';
        warn << "warning: N=" << n << " gamma_abs=" << gammas[gi] << ": " << r.note << '\n';
      }
      if (std::isfinite(r.crb(0, 0))) {
        fit_n.push_back(n);
        fit_y.push_back(r.crb(0, 0));
      }
    }
    if (fit_n.size() >= 2) {
      const ScalingFit f = fit_log_scaling(fit_n, fit_y);
      out << "# fit gamma_abs=" << format_number(gammas[gi]) << " slope=" << format_number(f.slope)
          << " log_gamma_abs=" << format_number(std::log(gammas[gi]))
          << " intercept=" << format_number(f.intercept) << " spread=" << format_number(f.spread) << '\n';
    }
  }
}

McResult run_mc_point(const McPoint& p, std::uint64_t seed, std::uint32_t index, int threads) {
  const auto models = plan_models(p);
  McResult res;
  res.analytic_var = analytic_variance(p, models);

  const auto reps = std::size_t(p.repetitions);
  std::vector<ComplexPhase> est(reps);
  std::vector<char> ok(reps, 0);
  std::vector<MeasurementRecord> first;
  parallel_for(reps, threads, [&](std::size_t r) {
    std::vector<MeasurementRecord> recs;
    for (std::size_t o = 0; o < models.size(); ++o) {
      recs.push_back(sample_observable(models[o].model,
                                       {seed, stream_id(index, std::uint32_t(r), std::uint32_t(o)), models[o].shots}));
    }
    try {
      est[r] = empirical_phase_estimate(recs, p.scheme, p.n, p.pointer_axis).phi;
      ok[r] = 1;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::OutOfDomainMean) throw;
    }
    if (r == 0) first = std::move(recs);
  });
  res.first_records = std::move(first);

  Eigen::Vector2d sum = Eigen::Vector2d::Zero();
  int good = 0;
  for (std::size_t r = 0; r < reps; ++r) {
    if (!ok[r]) continue;
    sum += Eigen::Vector2d(est[r].phi1, est[r].phi2);
    ++good;
  }
  res.out_of_domain = int(reps) - good;
  if (good < 2) return res;
  res.mean = sum / good;
  Eigen::Vector2d ss = Eigen::Vector2d::Zero();
  for (std::size_t r = 0; r < reps; ++r) {
    if (!ok[r]) continue;
    const Eigen::Vector2d d = Eigen::Vector2d(est[r].phi1, est[r].phi2) - res.mean;
    ss += d.cwiseProduct(d);
  }
  res.emp_var = ss / (good - 1);
  return res;
}

void cmd_mc(const RunConfig& c, const RunOptions& opt, std::ostream& out, std::ostream& warn) {
  const auto pts = c.phase_points();
  require(!pts.empty(), "mc needs phases or a grid");
  const std::vector<int> ns = c.scheme == Scheme::Qubit ? std::vector<int>{1} : c.n_values;
  require(!ns.empty(), "mc needs N");

  std::ofstream records;
  if (!c.records_output.empty()) {
    records = open_output(c.records_output);
    write_header_comment(records, "mc-records", c.hash, opt.seed);
  }

  write_header_comment(out, "mc", c.hash, opt.seed);
  out << "scheme,N,phi1,phi2,shots,emp_var_phi1,emp_var_phi2,analytic_var_phi1,analytic_var_phi2,ratio1,ratio2\n";
  std::vector<std::string> flags;
  bool records_header = false;
  std::uint32_t index = 0;
  for (int n : ns) {
    for (const ComplexPhase& phi : pts) {
      const McPoint p{c.scheme, n, phi, c.shots, c.repetitions, c.tr_split, c.pointer_axis};
      const McResult r = run_mc_point(p, opt.seed, index++, opt.threads);
      const Eigen::Vector2d ratio = r.emp_var.cwiseQuotient(r.analytic_var);
      out << (CsvRow() << to_string(c.scheme) << n << phi.phi1 << phi.phi2 << c.shots << r.emp_var[0]
                       << r.emp_var[1] << r.analytic_var[0] << r.analytic_var[1] << ratio[0] << ratio[1]);
      if (r.out_of_domain > 0) {
        const std::string msg = "N=" + std::to_string(n) + " phi=(" + format_number(phi.phi1) + ", " +
                                format_number(phi.phi2) + "): " + std::to_string(r.out_of_domain) + " of " +
                                std::to_string(c.repetitions) + " repetitions out of domain";
        flags.push_back(msg);
        warn << "warning: " << msg << '\n';
      }
      if (records.is_open()) {
        std::ostringstream block;
        write_records_csv(block, std::string(to_string(c.scheme)), r.first_records);
        std::string text = block.str();
        if (records_header) text = text.substr(text.find('\n') + 1);
        records << text;
        records_header = true;
      }
    }
  }
  for (const auto& f : flags) out << "# flagged " << f << '\n';
}

}  // namespace dtomo
