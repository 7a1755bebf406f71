// drp: coefficient routes, spectral curves, matrix-equation analysis,
// time stepping, and objective sweeps for one-dimensional advection schemes.
//
// Every subcommand reads an optional JSON config, writes deterministic
// artifacts into --out, and appends a meta.json sidecar (the only file with
// a timestamp). Failures print a one-line JSON error to stderr and exit
// nonzero.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "drp/analysis.hpp"
#include "drp/config.hpp"
#include "drp/csv.hpp"
#include "drp/errors.hpp"
#include "drp/parallel.hpp"
#include "drp/report.hpp"
#include "drp/simulate.hpp"
#include "drp/sylvester.hpp"

namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

struct CommonOptions {
  std::string config_path;
  std::string out_dir;
  std::string scheme;
  std::string format;
  std::uint64_t seed = 0;
  bool seed_set = false;
};

void add_common(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--config", opt.config_path, "JSON config file");
  cmd->add_option("--out", opt.out_dir, "Output directory (overrides config out_dir)");
  cmd->add_option("--format", opt.format, "Output format: csv or json");
  cmd->add_option_function<std::uint64_t>(
         "--seed", [&opt](std::uint64_t v) { opt.seed = v; opt.seed_set = true; },
         "RNG seed recorded in the config echo")
      ->expected(1);
}

drp::RunConfig resolve_config(const CommonOptions& opt) {
  drp::RunConfig c =
      opt.config_path.empty() ? drp::parse_config("{}") : drp::load_config(opt.config_path);
  if (!opt.out_dir.empty()) c.out_dir = opt.out_dir;
  if (!opt.scheme.empty()) c.scheme = opt.scheme;
  if (!opt.format.empty()) c.format = opt.format;
  if (opt.seed_set) c.seed = opt.seed;
  // Overrides may invalidate a loaded config; the round trip re-checks
  // every precondition.
  return drp::parse_config(drp::emit_config(c));
}

class OutputSet {
public:
  explicit OutputSet(std::string dir) : dir_(std::move(dir)) { fs::create_directories(dir_); }

  void write(const std::string& name, const std::string& content) {
    std::ofstream out(fs::path(dir_) / name, std::ios::binary);
    if (!out) throw drp::Error("cannot open output file '" + name + "'");
    out << content;
    written_.push_back(name);
  }

  void finish(const std::string& command) {
    ordered_json meta;
    meta["command"] = command;
    meta["written"] = written_;
    auto now = std::chrono::system_clock::now();
    meta["timestamp_unix_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(now.time_since_epoch()).count();
    std::ofstream out(fs::path(dir_) / "meta.json", std::ios::binary);
    out << meta.dump(2) << "\n";
  }

  const std::string& dir() const { return dir_; }

private:
  std::string dir_;
  std::vector<std::string> written_;
};

std::string matrix_csv(const drp::Matrix& m) {
  std::ostringstream os;
  drp::write_matrix_csv(os, m);
  return os.str();
}

drp::StencilSpec spatial_stencil(const drp::SchemeCoefficients& coeffs,
                                 const drp::GridSpec& grid) {
  drp::SpatialTriple t{coeffs.beta_x / grid.speed, coeffs.delta_x / grid.speed,
                       coeffs.epsilon_x / grid.speed};
  return drp::stencil_from_triple(t, grid.h);
}

int run_coeffs(const CommonOptions& opt, double h) {
  drp::RunConfig c = resolve_config(opt);
  OutputSet out(c.out_dir);
  out.write("coefficients.json", drp::coefficients_json(h, drp::config_band(c)));
  out.finish("coeffs");
  return 0;
}

int run_spectral(const CommonOptions& opt) {
  drp::RunConfig c = resolve_config(opt);
  drp::GridSpec grid = drp::config_grid(c);
  drp::SchemeCoefficients coeffs = drp::config_coefficients(c, grid);
  drp::StencilSpec stencil = spatial_stencil(coeffs, grid);
  drp::QuadratureSpec band = drp::config_band(c);

  OutputSet out(c.out_dir);
  std::ostringstream spectral;
  drp::write_spectral_csv(spectral, drp::spectral_rows(stencil, band, c.spectral_samples));
  out.write("spectral_" + c.scheme + ".csv", spectral.str());

  std::ostringstream integrand;
  drp::write_integrand_csv(integrand, stencil, band, c.spectral_samples);
  out.write("integrand_" + c.scheme + ".csv", integrand.str());
  out.finish("spectral");
  return 0;
}

int run_analyze(const CommonOptions& opt) {
  drp::RunConfig c = resolve_config(opt);
  drp::Report report = drp::build_report(c);

  OutputSet out(c.out_dir);
  out.write("analysis.json", drp::report_json(report));
  if (c.format == "csv") {
    drp::InitialCondition ic = drp::config_ic(c);
    drp::BoundaryData boundary = drp::boundary_from_exact(report.grid, ic);
    drp::SylvesterSystem sys = drp::assemble_system(report.coeffs, boundary, report.grid);
    drp::Matrix u_exact = drp::sample_interior_exact(report.grid, ic);
    out.write("m1.csv", matrix_csv(sys.m1));
    out.write("m2.csv", matrix_csv(sys.m2));
    out.write("m0.csv", matrix_csv(sys.m0));
    out.write("u_exact.csv", matrix_csv(u_exact));
    out.write("f_residual.csv", matrix_csv(drp::exact_residual(u_exact, sys)));
  }
  out.finish("analyze");
  return 0;
}

struct SimulationOutcome {
  std::string scheme;
  bool stable = true;
  std::size_t instability_level = 0;
  drp::ErrorSeries series;
};

SimulationOutcome simulate_one(const drp::RunConfig& base, const std::string& scheme) {
  drp::RunConfig c = base;
  c.scheme = scheme;
  drp::GridSpec grid = drp::config_grid(c);
  drp::SchemeCoefficients coeffs = drp::config_coefficients(c, grid);
  drp::InitialCondition ic = drp::config_ic(c);
  drp::SimulationOptions options = drp::config_sim_options(c);

  SimulationOutcome outcome;
  outcome.scheme = scheme;
  try {
    outcome.series = drp::run_simulation(grid, coeffs, ic, options).series;
  } catch (const drp::InstabilityError& e) {
    outcome.stable = false;
    outcome.instability_level = static_cast<std::size_t>(e.step());
    if (outcome.instability_level > 1) {
      // Rerun the stable prefix so the series still gets reported.
      outcome.series =
          drp::run_simulation(grid, coeffs, ic, options, outcome.instability_level - 1).series;
    }
  }
  return outcome;
}

int run_simulate(const CommonOptions& opt, const std::vector<std::string>& schemes) {
  drp::RunConfig c = resolve_config(opt);
  std::vector<std::string> names = schemes;
  if (names.empty()) names.push_back(c.scheme);

  std::vector<SimulationOutcome> outcomes(names.size());
  drp::parallel_for(names.size(),
                    [&](std::size_t i) { outcomes[i] = simulate_one(c, names[i]); });

  OutputSet out(c.out_dir);
  ordered_json summary = ordered_json::array();
  for (const SimulationOutcome& o : outcomes) {
    std::ostringstream csv;
    drp::write_series_csv(csv, o.series);
    out.write("series_" + o.scheme + ".csv", csv.str());

    ordered_json entry;
    entry["scheme"] = o.scheme;
    entry["status"] = o.stable ? "stable" : "unstable";
    if (!o.stable) entry["instability_level"] = o.instability_level;
    entry["levels"] = o.series.size();
    if (!o.series.empty()) {
      entry["final_linf"] = o.series.back().linf;
      entry["final_l2"] = o.series.back().l2;
    }
    summary.push_back(entry);
  }

  ordered_json doc;
  doc["config"] = ordered_json::parse(drp::emit_config(c));
  doc["runs"] = summary;
  out.write("simulate.json", doc.dump(2) + "\n");
  out.finish("simulate");
  return 0;
}

int run_sweep(const CommonOptions& opt, const std::vector<std::string>& pins) {
  drp::RunConfig c = resolve_config(opt);
  drp::GridSpec grid = drp::config_grid(c);

  drp::GSearchSpec spec;
  drp::SpatialTriple cf = drp::closed_form_triple(grid.h);
  spec.fixed_triple = {cf.beta_x * grid.speed, cf.delta_x * grid.speed,
                       cf.epsilon_x * grid.speed};
  double spatial_scale = grid.speed / grid.h;
  double time_scale = 1.0 / (2.0 * grid.tau);
  for (std::size_t d = 0; d < 5; ++d) {
    double scale = d < 3 ? spatial_scale : time_scale;
    spec.lo[d] = -c.sweep_half_width * scale;
    spec.hi[d] = c.sweep_half_width * scale;
  }
  spec.w1 = c.w1;
  spec.w2 = c.w2;
  spec.w3 = c.w3;
  spec.grid_points = c.sweep_grid_points;
  spec.refinements = c.sweep_refinements;

  for (const std::string& pin : pins) {
    auto eq = pin.find('=');
    if (eq == std::string::npos)
      throw drp::ParseError("pin '" + pin + "' must have the form name=value");
    std::string name = pin.substr(0, eq);
    double value = 0.0;
    try {
      value = std::stod(pin.substr(eq + 1));
    } catch (const std::exception&) {
      throw drp::ParseError("pin '" + pin + "' has a non-numeric value");
    }
    bool found = false;
    for (std::size_t d = 0; d < 5; ++d) {
      if (name == drp::g_search_dimension_names[d]) {
        spec.pinned[d] = true;
        spec.pinned_value[d] = value;
        found = true;
      }
    }
    if (!found)
      throw drp::UnknownNameError(
          "unknown sweep dimension '" + name +
          "'; expected beta_t, delta_t, epsilon_t, alpha_x, or gamma_x");
  }

  if (c.w3 > 0.0) {
    drp::InitialCondition ic = drp::config_ic(c);
    drp::BoundaryData boundary = drp::boundary_from_exact(grid, ic);
    spec.m0_norm_fn = [boundary, grid](const drp::SchemeCoefficients& coeffs) {
      return drp::assemble_m0(coeffs, boundary, grid).frobenius_norm();
    };
  }

  drp::GSearchResult result = drp::minimize_g(spec);

  OutputSet out(c.out_dir);
  std::ostringstream csv;
  drp::write_sweep_csv(csv, result);
  out.write("sweep.csv", csv.str());
  out.write("sweep_result.json", drp::sweep_json(spec, result));
  out.finish("sweep");
  return 0;
}

struct MappedError {
  std::string kind;
  int exit_code;
};

MappedError classify(const std::exception& e) {
  if (dynamic_cast<const drp::ParseError*>(&e)) return {"parse", 2};
  if (dynamic_cast<const drp::UnknownNameError*>(&e)) return {"unknown-name", 2};
  if (dynamic_cast<const drp::ValidationError*>(&e)) return {"validation", 3};
  if (dynamic_cast<const drp::SizingError*>(&e)) return {"sizing", 3};
  if (dynamic_cast<const drp::DimensionError*>(&e)) return {"dimension", 3};
  if (dynamic_cast<const drp::NotExplicitError*>(&e)) return {"not-explicit", 3};
  if (dynamic_cast<const drp::SingularMatrixError*>(&e)) return {"singular-matrix", 4};
  if (dynamic_cast<const drp::RankError*>(&e)) return {"rank", 4};
  if (dynamic_cast<const drp::InfeasibleError*>(&e)) return {"infeasible", 4};
  if (dynamic_cast<const drp::NonFiniteError*>(&e)) return {"non-finite", 4};
  if (dynamic_cast<const drp::InstabilityError*>(&e)) return {"instability", 4};
  if (dynamic_cast<const drp::Error*>(&e)) return {"internal", 1};
  return {"internal", 1};
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"DRP advection scheme toolkit"};
  app.require_subcommand(1);

  CommonOptions coeffs_opt;
  double coeffs_h = 1.0;
  CLI::App* coeffs_cmd = app.add_subcommand("coeffs", "Spatial coefficient routes at one h");
  coeffs_cmd->set_help_flag("--help", "Print this help message and exit");
  add_common(coeffs_cmd, coeffs_opt);
  coeffs_cmd->add_option("--h", coeffs_h, "Mesh width the coefficients refer to");

  CommonOptions spectral_opt;
  CLI::App* spectral_cmd =
      app.add_subcommand("spectral", "Effective-wavenumber curve of a scheme's spatial part");
  add_common(spectral_cmd, spectral_opt);
  spectral_cmd->add_option("--scheme", spectral_opt.scheme, "Preset scheme name");

  CommonOptions analyze_opt;
  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "Matrix-equation reduction report for one scheme");
  add_common(analyze_cmd, analyze_opt);
  analyze_cmd->add_option("--scheme", analyze_opt.scheme, "Preset scheme name");

  CommonOptions simulate_opt;
  std::vector<std::string> simulate_schemes;
  CLI::App* simulate_cmd = app.add_subcommand("simulate", "Time-step schemes and track errors");
  add_common(simulate_cmd, simulate_opt);
  simulate_cmd->add_option("--scheme", simulate_schemes,
                           "Preset scheme name; repeat to fan out");

  CommonOptions sweep_opt;
  std::vector<std::string> sweep_pins;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "Grid-refinement search over the split coefficients");
  add_common(sweep_cmd, sweep_opt);
  sweep_cmd->add_option("--pin", sweep_pins, "Pin a dimension, e.g. --pin beta_t=0");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << drp::error_json("usage", e.what());
    return 2;
  }

  try {
    if (coeffs_cmd->parsed()) return run_coeffs(coeffs_opt, coeffs_h);
    if (spectral_cmd->parsed()) return run_spectral(spectral_opt);
    if (analyze_cmd->parsed()) return run_analyze(analyze_opt);
    if (simulate_cmd->parsed()) return run_simulate(simulate_opt, simulate_schemes);
    if (sweep_cmd->parsed()) return run_sweep(sweep_opt, sweep_pins);
  } catch (const std::exception& e) {
    MappedError mapped = classify(e);
    std::cerr << drp::error_json(mapped.kind, e.what());
    return mapped.exit_code;
  }
  return 0;
}
