// Command-line front end: negativity queries, figure-surface CSV export,
// verification suites, and the as-printed-vs-corrected discrepancy report.
//
// Exit codes: 0 success / all claims pass, 1 verification failure,
// 2 invalid input or configuration, 3 I/O failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "entlab/io.hpp"

namespace {

using namespace entlab;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

std::vector<std::string> form_parameter_names(HamiltonianForm form) {
  switch (form) {
    case HamiltonianForm::H21: return {"omega2", "g2", "h2"};
    case HamiltonianForm::H22: return {"omega2", "f2", "h2"};
    case HamiltonianForm::H12: return {"omega2", "f1", "h1"};
    case HamiltonianForm::H11: return {"omega1", "g1", "h1"};
    case HamiltonianForm::H1: return {"h30", "h03", "f1", "g1", "h33"};
    case HamiltonianForm::H2: return {"h30", "h03", "f2", "g2", "h33"};
  }
  return {};
}

void set_form_parameter(FormParameters& p, const std::string& key, double value) {
  if (key == "h30") p.h30 = value;
  else if (key == "h03") p.h03 = value;
  else if (key == "h33") p.h33 = value;
  else if (key == "f1") p.f1 = value;
  else if (key == "g1") p.g1 = value;
  else if (key == "f2") p.f2 = value;
  else if (key == "g2") p.g2 = value;
  else if (key == "omega1") p.omega1 = value;
  else if (key == "omega2") p.omega2 = value;
  else if (key == "h1") p.h1 = value;
  else if (key == "h2") p.h2 = value;
  else throw ConfigError("unknown Hamiltonian parameter: " + key);
}

FormParameters figure_params_from_cli(int figure_id, const std::vector<std::string>& raw) {
  FormParameters params = default_figure_params(figure_id);
  const auto allowed = form_parameter_names(figure_hamiltonian_form(figure_id));
  for (const std::string& item : raw) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
      throw ConfigError("--param expects key=value, got \"" + item + "\"");
    }
    const std::string key = item.substr(0, eq);
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ConfigError("parameter \"" + key + "\" is not used by " +
                        form_label(figure_hamiltonian_form(figure_id)));
    }
    double value = 0.0;
    try {
      std::size_t pos = 0;
      value = std::stod(item.substr(eq + 1), &pos);
      if (pos != item.size() - eq - 1) throw std::invalid_argument("trailing garbage");
    } catch (const std::exception&) {
      throw ConfigError("cannot parse value in \"" + item + "\"");
    }
    set_form_parameter(params, key, value);
  }
  return params;
}

int cmd_negativity(const std::string& state_path) {
  const StateSpec spec = load_state_spec(state_path);
  const DensityMatrix rho = realize(spec);
  std::cout << "state: " << describe(spec) << "\n";
  std::cout << "N_oracle          = " << format_g17(negativity_oracle(rho)) << "\n";
  if (const auto* family = std::get_if<FamilyParams>(&spec.value)) {
    const DiscrepancyRecord rec = discrepancy(describe(spec), *family);
    std::cout << "N_as_printed      = " << format_g17(rec.printed_value) << "\n"
              << "N_corrected       = " << format_g17(rec.corrected_value) << "\n"
              << "printed_deviation = " << format_g17(rec.abs_deviation_printed) << "\n";
  }
  return kExitOk;
}

int cmd_surface(int figure_id, int theta_steps, int time_steps,
                const std::vector<std::string>& raw_params, const std::string& out_path) {
  const FormParameters params = figure_params_from_cli(figure_id, raw_params);
  const std::vector<double> thetas = linspace(0.0, std::numbers::pi / 2.0, theta_steps);
  const std::vector<double> Ts = linspace(0.0, std::numbers::pi, time_steps);
  const auto samples = sweep_surface_T(figure_id, thetas, Ts, params);

  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw IoError("cannot open output file: " + out_path);
  write_surface_csv(out, samples);
  out.flush();
  if (!out) throw IoError("failed writing output file: " + out_path);
  std::cout << "wrote " << samples.size() << " samples to " << out_path << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& suite, int trials, std::uint64_t seed, double tol) {
  if (trials < 0) throw ConfigError("--trials must be positive");
  if (tol < 0.0) throw ConfigError("--tol must be positive");
  std::vector<VerificationReport> reports;
  const auto append = [&reports](std::vector<VerificationReport> r) {
    std::move(r.begin(), r.end(), std::back_inserter(reports));
  };

  // Per-claim defaults; --trials/--tol override the suite's main knobs.
  const int closed_trials = trials > 0 ? trials : 1000;
  const int evolution_trials = trials > 0 ? trials : 100;
  if (suite == "closed_forms") {
    append(suite_closed_forms(closed_trials, tol > 0 ? tol : 1e-12, seed));
  } else if (suite == "observable_relations") {
    append(suite_observable_relations(closed_trials, tol > 0 ? tol : 1e-12, seed));
  } else if (suite == "invariance") {
    append(suite_invariance(evolution_trials, tol > 0 ? tol : 1e-10, seed));
  } else if (suite == "conservation") {
    append(suite_conservation(evolution_trials, tol > 0 ? tol : 1e-10, seed));
  } else if (suite == "figures") {
    append(suite_figures(101, 101, tol > 0 ? tol : 1e-6, 1e-10));
  } else if (suite == "all") {
    append(suite_closed_forms(closed_trials, 1e-12, seed));
    append(suite_observable_relations(closed_trials, 1e-12, seed));
    append(suite_invariance(evolution_trials, 1e-10, seed));
    append(suite_conservation(evolution_trials, 1e-10, seed));
    append(suite_figures(101, 101, 1e-6, 1e-10));
  } else {
    throw ConfigError("unknown suite: " + suite);
  }

  std::cout << "seed=" << seed << " generator=mt19937_64\n" << verification_table(reports);
  const bool ok = all_pass(reports);
  std::cout << (ok ? "all claims pass\n" : "some claims FAILED\n");
  return ok ? kExitOk : kExitVerifyFailed;
}

int cmd_report(const std::string& out_path, std::uint64_t seed, int samples) {
  const DiscrepancyReport report = build_discrepancy_report(seed, samples);
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw IoError("cannot open output file: " + out_path);
    write_discrepancy_report(out, report);
    out.flush();
    if (!out) throw IoError("failed writing output file: " + out_path);
  }
  std::cout << discrepancy_summary(report);
  if (!out_path.empty()) {
    std::cout << "wrote " << report.records.size() << " records to " << out_path << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entlab: two-qubit negativity versus spin observables"};
  app.require_subcommand(1);

  std::string state_path;
  auto* negativity = app.add_subcommand("negativity", "oracle and formula negativities of a state");
  negativity->add_option("--state", state_path, "JSON state spec file")->required();

  int figure_id = 1, theta_steps = 101, time_steps = 101;
  std::vector<std::string> raw_params;
  std::string surface_out;
  auto* surface = app.add_subcommand("surface", "export one scenario surface as CSV");
  surface->add_option("--figure", figure_id, "scenario surface id (1..8)")
      ->required()
      ->check(CLI::Range(1, 8));
  surface->add_option("--theta-steps", theta_steps, "theta grid points over [0, pi/2]")
      ->check(CLI::Range(2, 100000));
  surface->add_option("--time-steps", time_steps, "T grid points over [0, pi]")
      ->check(CLI::Range(2, 100000));
  surface->add_option("--param", raw_params, "Hamiltonian parameter key=value (repeatable)");
  surface->add_option("--out", surface_out, "output CSV path")->required();

  std::string suite = "all";
  int trials = 0;
  std::uint64_t seed = kDefaultSeed;
  double tol = 0.0;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite,
                     "closed_forms|observable_relations|invariance|conservation|figures|all");
  verify->add_option("--trials", trials, "override the per-claim trial count");
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--tol", tol, "override the suite's main tolerance");

  std::string report_out;
  std::uint64_t report_seed = kDefaultSeed;
  int report_samples = 200;
  auto* report = app.add_subcommand("report", "emit the discrepancy report");
  report->add_option("--out", report_out, "output CSV path")->required();
  report->add_option("--seed", report_seed, "random seed");
  report->add_option("--samples", report_samples, "sampled points per formula family")
      ->check(CLI::Range(1, 1000000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (negativity->parsed()) return cmd_negativity(state_path);
    if (surface->parsed()) return cmd_surface(figure_id, theta_steps, time_steps, raw_params, surface_out);
    if (verify->parsed()) return cmd_verify(suite, trials, seed, tol);
    if (report->parsed()) return cmd_report(report_out, report_seed, report_samples);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}
