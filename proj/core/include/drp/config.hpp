#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>

#include "drp/quadrature.hpp"
#include "drp/scheme.hpp"
#include "drp/simulate.hpp"

namespace drp {

// Flat run configuration. Every field has a usable default, so an empty
// document is a valid config. Parsing resolves the derived defaults
// (ic_k from L, pulse placement from L) immediately; a config that has been
// through parse_config once is fully explicit and survives an emit/parse
// round trip unchanged.
struct RunConfig {
  double length = 1.0;
  double final_time = 0.5;
  std::size_t n_x = 200;
  std::size_t n_t = 200;
  double speed = 1.0;

  std::string scheme = "leapfrog-central";
  // Per-coefficient overrides applied on top of the preset. Keys are the
  // split coefficient names (alpha_x, beta_t, ..., zeta, eta, theta,
  // vartheta). Only keys present in the document appear here.
  std::map<std::string, double> overrides;

  std::string ic_kind = "sine";
  double ic_k = 0.0;  // 0 = resolve to 2*pi/L at parse time
  double ic_x0 = -1.0;
  double ic_s = -1.0;

  std::string boundary = "dirichlet-exact";
  std::string bootstrap = "exact";
  double overflow_guard = 1e100;

  double band_lo = 0.0;  // band_lo == band_hi = resolve to default band
  double band_hi = 0.0;
  std::size_t quad_nodes = 64;
  std::size_t spectral_samples = 257;

  double rank_tol = 1e-12;

  double sweep_half_width = 2.0;
  std::size_t sweep_grid_points = 11;
  std::size_t sweep_refinements = 24;
  double w1 = 1.0;
  double w2 = 1.0;
  double w3 = 0.0;

  std::uint64_t seed = 0;
  std::string out_dir = "out";
  std::string format = "csv";

  bool operator==(const RunConfig&) const = default;
};

// Parses a JSON document. Unknown keys are rejected by name; type
// mismatches and malformed documents raise ParseError; value constraints
// are checked by constructing the derived objects, so the message names
// the violated precondition. The returned config is fully resolved.
RunConfig parse_config(const std::string& text);

// Reads the file and parses it. An unreadable file raises ParseError
// naming the path.
RunConfig load_config(const std::string& path);

// Deterministic JSON emission: fixed key order, resolved values,
// overrides inline. parse_config(emit_config(c)) == c.
std::string emit_config(const RunConfig& c);

// Resolves a parsed config into module inputs.
GridSpec config_grid(const RunConfig& c);
InitialCondition config_ic(const RunConfig& c);
QuadratureSpec config_band(const RunConfig& c);
SimulationOptions config_sim_options(const RunConfig& c);

// Preset coefficients with overrides applied.
SchemeCoefficients config_coefficients(const RunConfig& c, const GridSpec& grid);

// "preset", "closed-form", "least-squares", or "override" when any
// coefficient override is present.
std::string coefficient_provenance(const RunConfig& c);

} // namespace drp
