#include "drp/config.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "drp/errors.hpp"

namespace drp {
namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::array<std::pair<const char*, double SchemeCoefficients::*>, 14>
    k_coefficient_fields = {{
        {"alpha_x", &SchemeCoefficients::alpha_x},
        {"alpha_t", &SchemeCoefficients::alpha_t},
        {"beta_x", &SchemeCoefficients::beta_x},
        {"beta_t", &SchemeCoefficients::beta_t},
        {"gamma_x", &SchemeCoefficients::gamma_x},
        {"gamma_t", &SchemeCoefficients::gamma_t},
        {"delta_x", &SchemeCoefficients::delta_x},
        {"delta_t", &SchemeCoefficients::delta_t},
        {"epsilon_x", &SchemeCoefficients::epsilon_x},
        {"epsilon_t", &SchemeCoefficients::epsilon_t},
        {"zeta", &SchemeCoefficients::zeta},
        {"eta", &SchemeCoefficients::eta},
        {"theta", &SchemeCoefficients::theta},
        {"vartheta", &SchemeCoefficients::vartheta},
    }};

bool is_coefficient_key(const std::string& key) {
  for (const auto& [name, field] : k_coefficient_fields)
    if (key == name) return true;
  return false;
}

double want_number(const ordered_json& v, const std::string& key) {
  if (!v.is_number()) throw ParseError("config key '" + key + "' must be a number");
  return v.get<double>();
}

std::size_t want_count(const ordered_json& v, const std::string& key) {
  if (!v.is_number_integer() || v.get<double>() < 0)
    throw ParseError("config key '" + key + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

std::string want_string(const ordered_json& v, const std::string& key) {
  if (!v.is_string()) throw ParseError("config key '" + key + "' must be a string");
  return v.get<std::string>();
}

void want_one_of(const std::string& value, std::initializer_list<const char*> allowed,
                 const std::string& key) {
  for (const char* a : allowed)
    if (value == a) return;
  std::ostringstream msg;
  msg << "config key '" << key << "' must be one of";
  for (const char* a : allowed) msg << " '" << a << "'";
  throw ValidationError(msg.str());
}

void validate_resolved(const RunConfig& c) {
  GridSpec grid = config_grid(c);
  want_one_of(c.ic_kind, {"sine", "gaussian"}, "ic");
  validate_ic(config_ic(c), grid);
  want_one_of(c.boundary, {"dirichlet-exact", "periodic"}, "boundary");
  want_one_of(c.bootstrap, {"exact", "ftcs-step"}, "bootstrap");
  want_one_of(c.format, {"csv", "json"}, "format");
  preset_scheme(c.scheme, grid);
  make_quadrature(c.band_lo, c.band_hi, c.quad_nodes);
  if (c.spectral_samples < 2)
    throw ValidationError("config key 'spectral_samples' must be at least 2");
  if (!(c.rank_tol > 0.0)) throw ValidationError("config key 'rank_tol' must be positive");
  if (!(c.overflow_guard > 0.0))
    throw ValidationError("config key 'overflow_guard' must be positive");
  if (!(c.sweep_half_width > 0.0))
    throw ValidationError("config key 'sweep_half_width' must be positive");
  if (c.sweep_grid_points < 2)
    throw ValidationError("config key 'sweep_grid_points' must be at least 2");
  if (c.w1 < 0.0 || c.w2 < 0.0 || c.w3 < 0.0)
    throw ValidationError("config keys 'w1', 'w2', 'w3' must be non-negative");
}

} // namespace

RunConfig parse_config(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!doc.is_object()) throw ParseError("config root must be a JSON object");

  RunConfig c;
  for (const auto& [key, value] : doc.items()) {
    if (key == "L") c.length = want_number(value, key);
    else if (key == "T") c.final_time = want_number(value, key);
    else if (key == "n_x") c.n_x = want_count(value, key);
    else if (key == "n_t") c.n_t = want_count(value, key);
    else if (key == "c") c.speed = want_number(value, key);
    else if (key == "scheme") c.scheme = want_string(value, key);
    else if (key == "ic") c.ic_kind = want_string(value, key);
    else if (key == "ic_k") c.ic_k = want_number(value, key);
    else if (key == "ic_x0") c.ic_x0 = want_number(value, key);
    else if (key == "ic_s") c.ic_s = want_number(value, key);
    else if (key == "boundary") c.boundary = want_string(value, key);
    else if (key == "bootstrap") c.bootstrap = want_string(value, key);
    else if (key == "overflow_guard") c.overflow_guard = want_number(value, key);
    else if (key == "band_lo") c.band_lo = want_number(value, key);
    else if (key == "band_hi") c.band_hi = want_number(value, key);
    else if (key == "quad_nodes") c.quad_nodes = want_count(value, key);
    else if (key == "spectral_samples") c.spectral_samples = want_count(value, key);
    else if (key == "rank_tol") c.rank_tol = want_number(value, key);
    else if (key == "sweep_half_width") c.sweep_half_width = want_number(value, key);
    else if (key == "sweep_grid_points") c.sweep_grid_points = want_count(value, key);
    else if (key == "sweep_refinements") c.sweep_refinements = want_count(value, key);
    else if (key == "w1") c.w1 = want_number(value, key);
    else if (key == "w2") c.w2 = want_number(value, key);
    else if (key == "w3") c.w3 = want_number(value, key);
    else if (key == "seed") {
      if (!value.is_number_unsigned())
        throw ParseError("config key 'seed' must be a non-negative integer");
      c.seed = value.get<std::uint64_t>();
    } else if (key == "out_dir") c.out_dir = want_string(value, key);
    else if (key == "format") c.format = want_string(value, key);
    else if (is_coefficient_key(key)) c.overrides[key] = want_number(value, key);
    else throw UnknownNameError("unknown config key '" + key + "'");
  }

  if (c.ic_k == 0.0) c.ic_k = 2.0 * std::numbers::pi / c.length;
  if (c.ic_x0 < 0.0) c.ic_x0 = c.length / 4.0;
  if (c.ic_s < 0.0) c.ic_s = c.length / 16.0;
  if (c.band_lo == c.band_hi) {
    QuadratureSpec band = default_band(c.quad_nodes);
    c.band_lo = band.kappa_lo;
    c.band_hi = band.kappa_hi;
  }

  validate_resolved(c);
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string emit_config(const RunConfig& c) {
  ordered_json doc;
  doc["L"] = c.length;
  doc["T"] = c.final_time;
  doc["n_x"] = c.n_x;
  doc["n_t"] = c.n_t;
  doc["c"] = c.speed;
  doc["scheme"] = c.scheme;
  for (const auto& [name, field] : k_coefficient_fields) {
    auto it = c.overrides.find(name);
    if (it != c.overrides.end()) doc[name] = it->second;
  }
  doc["ic"] = c.ic_kind;
  doc["ic_k"] = c.ic_k;
  doc["ic_x0"] = c.ic_x0;
  doc["ic_s"] = c.ic_s;
  doc["boundary"] = c.boundary;
  doc["bootstrap"] = c.bootstrap;
  doc["overflow_guard"] = c.overflow_guard;
  doc["band_lo"] = c.band_lo;
  doc["band_hi"] = c.band_hi;
  doc["quad_nodes"] = c.quad_nodes;
  doc["spectral_samples"] = c.spectral_samples;
  doc["rank_tol"] = c.rank_tol;
  doc["sweep_half_width"] = c.sweep_half_width;
  doc["sweep_grid_points"] = c.sweep_grid_points;
  doc["sweep_refinements"] = c.sweep_refinements;
  doc["w1"] = c.w1;
  doc["w2"] = c.w2;
  doc["w3"] = c.w3;
  doc["seed"] = c.seed;
  doc["out_dir"] = c.out_dir;
  doc["format"] = c.format;
  return doc.dump(2) + "\n";
}

GridSpec config_grid(const RunConfig& c) {
  return make_grid(c.length, c.final_time, c.n_x, c.n_t, c.speed);
}

InitialCondition config_ic(const RunConfig& c) {
  if (c.ic_kind == "gaussian") return gaussian_pulse(c.ic_x0, c.ic_s);
  return sine_wave(c.ic_k);
}

QuadratureSpec config_band(const RunConfig& c) {
  return make_quadrature(c.band_lo, c.band_hi, c.quad_nodes);
}

SimulationOptions config_sim_options(const RunConfig& c) {
  SimulationOptions opt;
  opt.boundary =
      c.boundary == "periodic" ? BoundaryPolicy::periodic : BoundaryPolicy::dirichlet_exact;
  opt.bootstrap = c.bootstrap == "ftcs-step" ? Bootstrap::ftcs_step : Bootstrap::exact;
  opt.overflow_guard = c.overflow_guard;
  return opt;
}

SchemeCoefficients config_coefficients(const RunConfig& c, const GridSpec& grid) {
  SchemeCoefficients coeffs = preset_scheme(c.scheme, grid);
  for (const auto& [name, field] : k_coefficient_fields) {
    auto it = c.overrides.find(name);
    if (it != c.overrides.end()) coeffs.*field = it->second;
  }
  return coeffs;
}

std::string coefficient_provenance(const RunConfig& c) {
  if (!c.overrides.empty()) return "override";
  if (c.scheme == "leapfrog-drp-closed-form") return "closed-form";
  if (c.scheme == "leapfrog-drp-least-squares") return "least-squares";
  return "preset";
}

} // namespace drp
