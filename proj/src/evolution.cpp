#include "entlab/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace entlab {
namespace {

constexpr double kPi = std::numbers::pi;

void check_figure_id(int figure_id) {
  if (figure_id < 1 || figure_id > 8) {
    throw Error("figure id must be in 1..8, got " + std::to_string(figure_id));
  }
}

void check_member(int member) {
  if (member != 0 && member != 1) throw Error("figure member must be 0 or 1");
}

Matrix4 symmetrized(const Matrix4& m) { return 0.5 * (m + m.adjoint()); }

struct CalibrationPlan {
  double theta_ref;
  double T_star;   // first zero crossing of the reference observable curve
  bool use_sz;     // otherwise <S^2> minus a baseline
  double baseline; // crossing level; NaN means "use the t = 0 value"
};

CalibrationPlan calibration_plan(int figure_id) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  switch (figure_id) {
    case 1: return {0.0, kPi / 4.0, true, 0.0};
    case 2: return {0.0, kPi / 4.0, true, 0.0};
    case 3: return {kPi / 8.0, 3.0 * kPi / 8.0, false, 1.0};
    case 4: return {kPi / 8.0, kPi / 8.0, false, 1.0};
    case 5: return {kPi / 4.0, kPi / 2.0, false, nan};
    case 6: return {kPi / 4.0, kPi / 2.0, false, nan};
    case 7: return {kPi / 4.0, kPi / 4.0, true, 0.0};
    default: return {kPi / 4.0, kPi / 4.0, true, 0.0};
  }
}

}  // namespace

TimeGrid TimeGrid::uniform(double t_end, int steps) {
  if (steps < 2) throw Error("time grid needs at least 2 points");
  if (!(t_end > 0.0) || !std::isfinite(t_end)) throw Error("time grid end must be positive");
  return of(linspace(0.0, t_end, steps));
}

TimeGrid TimeGrid::of(std::vector<double> values) {
  if (values.empty()) throw Error("time grid is empty");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) throw Error("time grid has a non-finite entry");
    if (i > 0 && values[i] <= values[i - 1]) {
      throw Error("time grid must be strictly increasing");
    }
  }
  return TimeGrid{std::move(values)};
}

std::vector<double> linspace(double lo, double hi, int n) {
  if (n < 2) throw Error("linspace needs at least 2 points");
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = lo + (hi - lo) * static_cast<double>(i) / (n - 1);
  }
  return out;
}

DensityMatrix scenario_initial_state(const Scenario& s) {
  return std::visit(
      [](const auto& v) -> DensityMatrix {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, FamilyParams>) return build_family(v);
        else if constexpr (std::is_same_v<T, PureInitialState>) return pure_initial(v);
        else if constexpr (std::is_same_v<T, MixedInitialState>) return mixed_initial(v);
        else return v;
      },
      s.initial);
}

Observable scenario_hamiltonian(const Scenario& s) {
  return std::visit(
      [](const auto& v) -> Observable {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, NamedHamiltonianForm>) return named_hamiltonian(v);
        else return hamiltonian_from_coefficients(v);
      },
      s.hamiltonian);
}

std::vector<std::pair<double, DensityMatrix>> run_scenario(const Scenario& s) {
  if (s.times.values.empty() || s.times.values.front() != 0.0) {
    throw Error("scenario time grid must start at 0");
  }
  const DensityMatrix rho0 = scenario_initial_state(s);
  const Propagator prop(scenario_hamiltonian(s));
  std::vector<std::pair<double, DensityMatrix>> out;
  out.reserve(s.times.values.size());
  for (double t : s.times.values) out.emplace_back(t, prop.apply(rho0, t));
  return out;
}

DensityMatrix evolve(const DensityMatrix& rho0, const Observable& h, double t) {
  const Matrix4 u = exp_unitary(h.matrix(), t, -1);
  return DensityMatrix(symmetrized(u * rho0.matrix() * u.adjoint()));
}

Propagator::Propagator(const Observable& h) : eig_(hermitian_eigen(h.matrix())) {}

Matrix4 Propagator::unitary(double t) const {
  if (t == 0.0) return Matrix4::Identity();
  const Eigen::Vector4cd phases =
      (Complex(0.0, -t) * eig_.eigenvalues.cast<Complex>()).array().exp();
  return eig_.eigenvectors * phases.asDiagonal() * eig_.eigenvectors.adjoint();
}

DensityMatrix Propagator::apply(const DensityMatrix& rho0, double t) const {
  const Matrix4 u = unitary(t);
  return DensityMatrix(symmetrized(u * rho0.matrix() * u.adjoint()));
}

HamiltonianForm figure_hamiltonian_form(int figure_id) {
  check_figure_id(figure_id);
  switch (figure_id) {
    case 1: return HamiltonianForm::H21;
    case 2: return HamiltonianForm::H22;
    case 3:
    case 4:
    case 5:
    case 6: return HamiltonianForm::H12;
    case 7: return HamiltonianForm::H21;
    default: return HamiltonianForm::H22;
  }
}

ScenarioKind figure_scenario_kind(int figure_id) {
  check_figure_id(figure_id);
  switch (figure_id) {
    case 1:
    case 2: return ScenarioKind::Psi;
    case 3:
    case 4: return ScenarioKind::Phi;
    case 5: return ScenarioKind::M34;
    case 6: return ScenarioKind::M56;
    default: return ScenarioKind::M3456H2x;
  }
}

NamedHamiltonianForm figure_hamiltonian_spec(int figure_id, const FormParameters& params) {
  return NamedHamiltonianForm{figure_hamiltonian_form(figure_id), params};
}

int figure_family(int figure_id, int member) {
  check_figure_id(figure_id);
  check_member(member);
  switch (figure_id) {
    case 1:
    case 2: return 1;
    case 3:
    case 4: return 2;
    case 5: return 3;
    case 6: return 4;
    default: return member == 0 ? 5 : 6;
  }
}

DensityMatrix figure_initial_state(int figure_id, double theta, int member) {
  check_figure_id(figure_id);
  check_member(member);
  switch (figure_id) {
    case 1:
    case 2: return pure_initial({PureInitialState::Kind::Psi, theta, 0.0});
    case 3: return pure_initial({PureInitialState::Kind::PhiPlus, theta, 0.0});
    case 4: return pure_initial({PureInitialState::Kind::PhiMinus, theta, kPi});
    case 5:
    case 7: return mixed_initial({member == 0 ? 3 : 4, theta});
    default: return mixed_initial({member == 0 ? 5 : 6, theta});
  }
}

FormParameters default_figure_params(int figure_id) {
  FormParameters p;
  switch (figure_hamiltonian_form(figure_id)) {
    case HamiltonianForm::H21:
      p.omega2 = 1.0;
      p.g2 = 0.5;
      p.h2 = 0.5;
      break;
    case HamiltonianForm::H22:
      p.omega2 = 1.0;
      p.f2 = 0.5;
      p.h2 = 0.5;
      break;
    default:  // H12
      p.omega2 = 1.0;
      p.f1 = 0.5;
      p.h1 = 0.5;
      break;
  }
  return p;
}

double figure_coupling(int figure_id, const FormParameters& params) {
  check_figure_id(figure_id);
  const std::optional<double>* field = nullptr;
  const char* name = nullptr;
  switch (figure_id) {
    case 1:
    case 7: field = &params.g2; name = "g2"; break;
    case 2:
    case 8: field = &params.f2; name = "f2"; break;
    default: field = &params.f1; name = "f1"; break;
  }
  if (!field->has_value()) throw MissingParameterError(name);
  return **field;
}

double figure_reference_negativity(int figure_id, double theta, double T) {
  check_figure_id(figure_id);
  const double c2 = std::cos(theta) * std::cos(theta);
  const double s2 = std::sin(theta) * std::sin(theta);
  const double osc2 = std::sin(2.0 * T) * std::sin(2.0 * T);
  switch (figure_id) {
    case 1: {
      const double c = std::cos(2.0 * T) * std::cos(2.0 * theta);
      return 0.5 * std::sqrt(std::max(0.0, 1.0 - c * c));
    }
    case 2: return 0.5 * std::abs(std::sin(2.0 * T - 2.0 * theta));
    case 3: return 0.5 * std::abs(std::sin(2.0 * T + 2.0 * theta));
    case 4: return 0.5 * std::abs(std::sin(2.0 * T - 2.0 * theta));
    case 5:
    case 8: return std::sqrt(c2 * c2 + osc2 * s2 * s2) - c2;
    default: return std::sqrt(s2 * s2 + osc2 * c2 * c2) - s2;  // figures 6, 7
  }
}

double calibrate_time_scale(int figure_id, const FormParameters& params) {
  check_figure_id(figure_id);
  const double coupling = figure_coupling(figure_id, params);
  if (!(std::abs(coupling) > 1e-12)) {
    throw CalibrationFailureError("zero coupling: no oscillation to match", 0.0,
                                  std::numeric_limits<double>::infinity());
  }

  const Propagator prop(named_hamiltonian(figure_hamiltonian_spec(figure_id, params)));
  const CalibrationPlan plan = calibration_plan(figure_id);
  const DensityMatrix rho0 = figure_initial_state(figure_id, plan.theta_ref, 0);

  double baseline = plan.baseline;
  if (std::isnan(baseline)) baseline = observable_vector(rho0).s2;

  const auto signal = [&](double t) {
    const ObservableVector o = observable_vector(prop.apply(rho0, t));
    return (plan.use_sz ? o.sz : o.s2) - baseline;
  };

  // Locate the first zero crossing of the signal. The scan window covers the
  // crossing with a wide margin for any T = O(coupling) * t rescaling.
  const double t_max = 2.5 * kPi / std::abs(coupling);
  const int n = 4096;
  std::vector<double> ts = linspace(0.0, t_max, n);
  std::vector<double> fs(ts.size());
  double max_abs = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    fs[i] = signal(ts[i]);
    max_abs = std::max(max_abs, std::abs(fs[i]));
  }
  if (max_abs < 1e-9) {
    throw CalibrationFailureError("observable does not oscillate", 0.0,
                                  std::numeric_limits<double>::infinity());
  }
  const double threshold = 0.3 * max_abs;
  std::size_t armed = ts.size();
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (std::abs(fs[i]) >= threshold) {
      armed = i;
      break;
    }
  }
  std::size_t bracket = ts.size();
  for (std::size_t i = armed; i + 1 < ts.size(); ++i) {
    if (fs[i] == 0.0) {
      bracket = i;
      break;
    }
    if (fs[i] * fs[i + 1] < 0.0) {
      bracket = i;
      break;
    }
  }
  if (armed == ts.size() || bracket == ts.size()) {
    throw CalibrationFailureError("no zero crossing found in the scan window", 0.0,
                                  std::numeric_limits<double>::infinity());
  }

  double lo = ts[bracket], hi = ts[bracket + 1];
  double flo = fs[bracket];
  if (flo == 0.0) {
    hi = lo;
  } else {
    for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, hi); ++it) {
      const double mid = 0.5 * (lo + hi);
      const double fm = signal(mid);
      if (fm == 0.0) {
        lo = hi = mid;
        break;
      }
      if (flo * fm < 0.0) {
        hi = mid;
      } else {
        lo = mid;
        flo = fm;
      }
    }
  }
  const double t_star = 0.5 * (lo + hi);
  const double kappa = plan.T_star / t_star;

  // Validate: at the reference theta the rescaled reference negativity curve
  // must reproduce the oracle after the amplitude factor gamma.
  const std::vector<double> T_line = linspace(0.0, kPi, 101);
  std::vector<double> oracle(T_line.size()), cap(T_line.size());
  for (std::size_t i = 0; i < T_line.size(); ++i) {
    oracle[i] = negativity_oracle(prop.apply(rho0, T_line[i] / kappa));
    cap[i] = figure_reference_negativity(figure_id, plan.theta_ref, T_line[i]);
  }
  double best_residual = std::numeric_limits<double>::infinity();
  for (double gamma : {0.5, 1.0, 2.0}) {
    double residual = 0.0;
    for (std::size_t i = 0; i < T_line.size(); ++i) {
      residual = std::max(residual, std::abs(gamma * cap[i] - oracle[i]));
    }
    best_residual = std::min(best_residual, residual);
  }
  if (best_residual > 1e-6) {
    throw CalibrationFailureError(
        "reference curve inconsistent with the dynamics beyond a time rescale", kappa,
        best_residual);
  }
  return kappa;
}

std::vector<SurfaceSample> sweep_surface(int figure_id, const std::vector<double>& thetas,
                                         const TimeGrid& times, const FormParameters& params,
                                         int member, std::optional<double> kappa) {
  check_figure_id(figure_id);
  check_member(member);
  const double k = kappa.has_value() ? *kappa : calibrate_time_scale(figure_id, params);
  const Propagator prop(named_hamiltonian(figure_hamiltonian_spec(figure_id, params)));
  const ScenarioKind kind = figure_scenario_kind(figure_id);
  const int family = figure_family(figure_id, member);

  std::vector<Matrix4> us;
  us.reserve(times.values.size());
  for (double t : times.values) us.push_back(prop.unitary(t));

  std::vector<SurfaceSample> out;
  out.reserve(thetas.size() * times.values.size());
  for (double theta : thetas) {
    const DensityMatrix rho0 = figure_initial_state(figure_id, theta, member);
    const ObservableVector obs0 = observable_vector(rho0);
    for (std::size_t ti = 0; ti < times.values.size(); ++ti) {
      const DensityMatrix rho(symmetrized(us[ti] * rho0.matrix() * us[ti].adjoint()));
      SurfaceSample s;
      s.theta = theta;
      s.time = times.values[ti];
      s.scaled_time_T = k * s.time;
      s.obs = observable_vector(rho);
      s.n_oracle = negativity_oracle(rho);
      s.n_printed = scenario_negativity(kind, s.obs, obs0, FormulaVariant::AsPrinted);
      s.n_corrected = scenario_negativity(kind, s.obs, obs0, FormulaVariant::Corrected);
      s.in_family = classifies_into(rho, family, 1e-10);
      out.push_back(s);
    }
  }
  return out;
}

std::vector<SurfaceSample> sweep_surface_T(int figure_id, const std::vector<double>& thetas,
                                           const std::vector<double>& T_values,
                                           const FormParameters& params, int member) {
  const double kappa = calibrate_time_scale(figure_id, params);
  std::vector<double> ts(T_values.size());
  for (std::size_t i = 0; i < T_values.size(); ++i) ts[i] = T_values[i] / kappa;
  return sweep_surface(figure_id, thetas, TimeGrid::of(std::move(ts)), params, member, kappa);
}

FigureRun run_figure(int figure_id, const FormParameters& params,
                     const std::vector<double>& thetas, const std::vector<double>& T_values) {
  FigureRun run;
  run.calibration.kappa = calibrate_time_scale(figure_id, params);
  std::vector<double> ts(T_values.size());
  for (std::size_t i = 0; i < T_values.size(); ++i) ts[i] = T_values[i] / run.calibration.kappa;
  run.samples = sweep_surface(figure_id, thetas, TimeGrid::of(std::move(ts)), params, 0,
                              run.calibration.kappa);

  double best_sse = std::numeric_limits<double>::infinity();
  for (double gamma : {0.5, 1.0, 2.0}) {
    double sse = 0.0;
    for (const SurfaceSample& s : run.samples) {
      const double d =
          gamma * figure_reference_negativity(figure_id, s.theta, s.scaled_time_T) - s.n_oracle;
      sse += d * d;
    }
    if (sse < best_sse) {
      best_sse = sse;
      run.calibration.gamma = gamma;
    }
  }
  double max_err = 0.0;
  for (const SurfaceSample& s : run.samples) {
    const double cap =
        run.calibration.gamma * figure_reference_negativity(figure_id, s.theta, s.scaled_time_T);
    max_err = std::max(max_err, std::abs(cap - s.n_oracle));
  }
  run.calibration.max_reference_error = max_err;
  return run;
}

std::vector<std::pair<double, double>> breaking_demo(const PureInitialState& psi,
                                                     const NamedHamiltonianForm& h,
                                                     const TimeGrid& times) {
  if (h.form != HamiltonianForm::H2 && h.form != HamiltonianForm::H21 &&
      h.form != HamiltonianForm::H22) {
    throw UnsupportedPairingError("breaking_demo expects an H[2]-class Hamiltonian");
  }
  const PureInitialState state{PureInitialState::Kind::Psi, psi.theta, psi.alpha};
  const Propagator prop(named_hamiltonian(h));
  const DensityMatrix rho0 = pure_initial(state);

  std::vector<std::pair<double, double>> trace;
  trace.reserve(times.values.size());
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (double t : times.values) {
    const double n = negativity_oracle(prop.apply(rho0, t));
    lo = std::min(lo, n);
    hi = std::max(hi, n);
    trace.emplace_back(t, n);
  }

  // For the simplified forms and generic theta the trace must actually move;
  // a flat trace there means a broken kernel. The grid has to cover a full
  // oscillation period before the check is meaningful.
  if (h.form != HamiltonianForm::H2 && std::abs(std::cos(2.0 * psi.theta)) > 0.1) {
    double coupling = 0.0;
    if (h.form == HamiltonianForm::H21 && h.params.g2) coupling = *h.params.g2;
    if (h.form == HamiltonianForm::H22 && h.params.f2) coupling = *h.params.f2;
    const bool covered =
        std::abs(coupling) > 1e-12 &&
        times.values.back() >= kPi / (2.0 * std::abs(coupling));
    if (covered && hi - lo <= 1e-3) {
      throw Error("breaking_demo: negativity unexpectedly conserved");
    }
  }
  return trace;
}

}  // namespace entlab
