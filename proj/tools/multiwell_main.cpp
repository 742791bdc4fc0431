// Command-line front end: parameter sweeps over the triple-well family,
// verification suites, single-point ground/bound reports, and SI scaling.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "multiwell/scaling.hpp"
#include "multiwell/sweep.hpp"
#include "multiwell/triple_well.hpp"
#include "multiwell/verify.hpp"
#include "multiwell/version.hpp"

namespace {

using multiwell::format_double;

constexpr int k_exit_ok = 0;
constexpr int k_exit_assertion = 1;
constexpr int k_exit_usage = 2;
constexpr int k_exit_io = 3;

struct NamedValues {
  std::vector<std::pair<std::string, double>> rows;
};

void emit_named(const NamedValues& values, const std::string& format,
                const std::string& out_path) {
  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::binary);
    if (!file) throw multiwell::IoError("cannot open output file", out_path);
    out = &file;
  }
  if (format == "json") {
    nlohmann::ordered_json doc;
    doc["tool"] = multiwell::k_tool_name;
    doc["version"] = multiwell::k_version;
    for (const auto& [name, value] : values.rows) doc[name] = value;
    *out << doc.dump(2) << "\n";
  } else {
    *out << "quantity,value\n";
    for (const auto& [name, value] : values.rows)
      *out << name << ',' << format_double(value) << "\n";
  }
  if (!*out) throw multiwell::IoError("write failure", out_path);
}

int run(int argc, char** argv) {
  CLI::App app{std::string(multiwell::k_tool_name) +
               " - multi-well potentials with exactly known ground states"};
  app.set_version_flag("--version", multiwell::k_version);
  app.require_subcommand(1);

  // ---- sweep
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "tabulate quantities over a (lambda, a) grid");
  std::string sweep_lambda, sweep_a, sweep_quantity, sweep_format;
  std::string sweep_out, sweep_config_path;
  std::optional<double> sweep_xmin, sweep_xmax, sweep_dx;
  sweep_cmd->add_option("--lambda", sweep_lambda,
                        "lambda grid: comma list or lo:hi:step");
  sweep_cmd->add_option("--a", sweep_a, "a grid: comma list or lo:hi:step");
  sweep_cmd->add_option("--quantity", sweep_quantity,
                        "comma list of potential,density,alpha,bounds,q,c,f,"
                        "oracle_spectrum");
  sweep_cmd->add_option("--xmin", sweep_xmin, "x start for x-resolved tables");
  sweep_cmd->add_option("--xmax", sweep_xmax, "x end for x-resolved tables");
  sweep_cmd->add_option("--dx", sweep_dx, "x step (default 0.01)");
  sweep_cmd->add_option("--format", sweep_format, "csv or json");
  sweep_cmd->add_option("--out", sweep_out, "output file prefix");
  sweep_cmd->add_option("--config", sweep_config_path,
                        "key=value config file; flags override it");

  // ---- verify
  auto* verify_cmd =
      app.add_subcommand("verify", "run a verification suite");
  std::string verify_suite = "all";
  verify_cmd->add_option(
      "--suite", verify_suite,
      "construction, bounds, appendix, scaling or all (default all)");

  // ---- ground
  auto* ground_cmd = app.add_subcommand(
      "ground", "exact ground data for one (lambda, a) point");
  double ground_lambda = 2.0 / 3.0, ground_a = 5.0;
  std::string ground_format = "csv", ground_out;
  ground_cmd->add_option("--lambda", ground_lambda, "lambda in (0,1)");
  ground_cmd->add_option("--a", ground_a, "well separation a > 0");
  ground_cmd->add_option("--format", ground_format, "csv or json");
  ground_cmd->add_option("--out", ground_out, "output file (default stdout)");

  // ---- bounds
  auto* bounds_cmd = app.add_subcommand(
      "bounds", "variational bound report for one (lambda, a) point");
  double bounds_lambda = 2.0 / 3.0, bounds_a = 5.0;
  std::string bounds_format = "csv", bounds_out;
  bounds_cmd->add_option("--lambda", bounds_lambda, "lambda in (0,1)");
  bounds_cmd->add_option("--a", bounds_a, "well separation a > 0");
  bounds_cmd->add_option("--format", bounds_format, "csv or json");
  bounds_cmd->add_option("--out", bounds_out, "output file (default stdout)");

  // ---- scale
  auto* scale_cmd =
      app.add_subcommand("scale", "map adimensional results to SI units");
  std::string mass_preset = "quoted";
  std::optional<double> mass_kg, length_m, d_xi, d_x, omega_adim, energy_adim;
  std::string scale_format = "csv", scale_out;
  scale_cmd->add_option("--mass-preset", mass_preset,
                        "quoted (1.7e-27 kg) or electron (9.1093837e-31 kg)");
  scale_cmd->add_option("--mass", mass_kg, "explicit mass in kg");
  scale_cmd->add_option("--length", length_m, "length scale L in m");
  scale_cmd->add_option("--d-xi", d_xi,
                        "physical dispersion in m (derives L with --d-x)");
  scale_cmd->add_option("--d-x", d_x, "adimensional dispersion (default 2.34)");
  scale_cmd->add_option("--omega", omega_adim,
                        "adimensional frequency to convert");
  scale_cmd->add_option("--energy", energy_adim,
                        "adimensional energy to convert");
  scale_cmd->add_option("--format", scale_format, "csv or json");
  scale_cmd->add_option("--out", scale_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help / --version
      app.exit(e);
      return k_exit_ok;
    }
    std::cerr << e.what() << "\n";
    return k_exit_usage;
  }

  if (sweep_cmd->parsed()) {
    multiwell::SweepConfig config;
    if (!sweep_config_path.empty())
      for (const auto& [key, value] :
           multiwell::read_config_file(sweep_config_path))
        multiwell::apply_key_value(config, key, value);
    if (!sweep_lambda.empty())
      multiwell::apply_key_value(config, "lambda", sweep_lambda);
    if (!sweep_a.empty()) multiwell::apply_key_value(config, "a", sweep_a);
    if (!sweep_quantity.empty())
      multiwell::apply_key_value(config, "quantity", sweep_quantity);
    if (sweep_xmin) config.x_min = *sweep_xmin;
    if (sweep_xmax) config.x_max = *sweep_xmax;
    if (sweep_dx) config.dx = *sweep_dx;
    if (!sweep_format.empty())
      multiwell::apply_key_value(config, "format", sweep_format);
    if (!sweep_out.empty()) config.out_prefix = sweep_out;

    const multiwell::RunReport report = multiwell::run_sweep(config);
    std::cout << multiwell::k_tool_name << " sweep v" << report.version
              << ": " << report.row_count << " rows in "
              << format_double(report.wall_seconds) << " s\n";
    for (const std::string& file : report.files)
      std::cout << "wrote " << file << "\n";
    return k_exit_ok;
  }

  if (verify_cmd->parsed()) {
    const auto suite = multiwell::suite_from_name(verify_suite);
    if (!suite)
      throw multiwell::UsageError("unknown suite '" + verify_suite + "'");
    const multiwell::VerifyReport report = multiwell::run_verify(*suite);
    multiwell::print_report(report, std::cout);
    return report.all_passed() ? k_exit_ok : k_exit_assertion;
  }

  if (ground_cmd->parsed()) {
    const multiwell::TripleParams p(ground_lambda, ground_a);
    NamedValues values;
    values.rows = {
        {"lambda", p.lambda},
        {"a", p.a},
        {"alpha", multiwell::alpha3(p)},
        {"ground_energy", -1.0},
        {"v_at_0", multiwell::v3(p, 0.0)},
        {"v_at_a", multiwell::v3(p, p.a)},
        {"psi_at_0", multiwell::psi3(p, 0.0)},
        {"psi_at_a", multiwell::psi3(p, p.a)},
        {"q", multiwell::q_ratio(p)},
        {"c", multiwell::c_ratio(p)},
    };
    emit_named(values, ground_format, ground_out);
    return k_exit_ok;
  }

  if (bounds_cmd->parsed()) {
    const multiwell::TripleParams p(bounds_lambda, bounds_a);
    const multiwell::BoundReport report = multiwell::bounds_report(p);
    NamedValues values;
    values.rows = {
        {"lambda", p.lambda},
        {"a", p.a},
        {"e1_upper", report.e1_upper},
        {"e2_gap_upper", report.e2_gap_upper},
        {"overlap_pm", report.overlap_pm},
        {"overlap_0p", report.overlap_0p},
        {"alpha", report.alpha},
        {"f_monotone_limit", multiwell::f_monotone_limit(p.a)},
        {"phi2_rayleigh_bound", multiwell::phi2_rayleigh_bound(p)},
    };
    emit_named(values, bounds_format, bounds_out);
    return k_exit_ok;
  }

  if (scale_cmd->parsed()) {
    double mass = multiwell::k_quoted_mass;
    if (mass_preset == "electron")
      mass = multiwell::k_electron_mass;
    else if (mass_preset != "quoted")
      throw multiwell::UsageError("mass preset must be quoted or electron");
    if (mass_kg) mass = *mass_kg;

    double length = 0.0;
    if (length_m) {
      length = *length_m;
    } else {
      const double dispersion_si = d_xi.value_or(multiwell::k_default_well_width);
      const double dispersion_adim =
          d_x.value_or(multiwell::k_quoted_seed_dispersion);
      length = multiwell::derive_length(dispersion_si, dispersion_adim);
    }
    const multiwell::PhysicalScale scale(mass, length);

    NamedValues values;
    values.rows = {
        {"mass_kg", scale.mass()},
        {"length_m", scale.length()},
        {"energy_unit_J", scale.energy_unit()},
        {"frequency_unit_hz", scale.frequency_unit()},
    };
    if (energy_adim)
      values.rows.emplace_back("energy_si_J", scale.energy_to_si(*energy_adim));
    if (omega_adim) {
      const double omega_si = scale.frequency_to_si(*omega_adim);
      const auto coherence = multiwell::compare_with_coherence_time(omega_si);
      values.rows.emplace_back("omega_si_hz", omega_si);
      values.rows.emplace_back("omega_times_tau", coherence.omega_tau);
      values.rows.emplace_back("oscillation_observable",
                               coherence.oscillation_observable ? 1.0 : 0.0);
    }
    emit_named(values, scale_format, scale_out);
    return k_exit_ok;
  }

  return k_exit_usage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const multiwell::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return k_exit_usage;
  } catch (const multiwell::IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return k_exit_io;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return k_exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return k_exit_assertion;
  }
}
