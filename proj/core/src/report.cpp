#include "drp/report.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "drp/csv.hpp"

namespace drp {
namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json grid_json(const GridSpec& g) {
  ordered_json j;
  j["L"] = g.length;
  j["T"] = g.final_time;
  j["n_x"] = g.n_x;
  j["n_t"] = g.n_t;
  j["c"] = g.speed;
  j["h"] = g.h;
  j["tau"] = g.tau;
  j["sigma"] = g.sigma;
  return j;
}

ordered_json coefficients_object(const SchemeCoefficients& c) {
  ordered_json j;
  j["alpha_x"] = c.alpha_x;
  j["alpha_t"] = c.alpha_t;
  j["beta_x"] = c.beta_x;
  j["beta_t"] = c.beta_t;
  j["gamma_x"] = c.gamma_x;
  j["gamma_t"] = c.gamma_t;
  j["delta_x"] = c.delta_x;
  j["delta_t"] = c.delta_t;
  j["epsilon_x"] = c.epsilon_x;
  j["epsilon_t"] = c.epsilon_t;
  j["zeta"] = c.zeta;
  j["eta"] = c.eta;
  j["theta"] = c.theta;
  j["vartheta"] = c.vartheta;
  return j;
}

ordered_json effective_object(const EffectiveWeights& e) {
  ordered_json j;
  j["alpha"] = e.alpha;
  j["beta"] = e.beta;
  j["gamma"] = e.gamma;
  j["delta"] = e.delta;
  j["epsilon"] = e.epsilon;
  j["zeta"] = e.zeta;
  j["eta"] = e.eta;
  j["theta"] = e.theta;
  j["vartheta"] = e.vartheta;
  return j;
}

ordered_json triple_object(const SpatialTriple& t) {
  ordered_json j;
  j["beta_x"] = t.beta_x;
  j["delta_x"] = t.delta_x;
  j["epsilon_x"] = t.epsilon_x;
  return j;
}

double max_abs_entry(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

ordered_json route_error_object(const SpatialTriple& t, double h, const QuadratureSpec& band) {
  ordered_json j;
  double closed = integrated_error_closed_form_3pt(t, h, band.kappa_lo, band.kappa_hi);
  double quad = integrated_error(t, h, band);
  j["integrated_error"] = closed;
  j["integrated_error_quadrature"] = quad;
  j["integrated_error_agreement"] = std::abs(closed - quad);
  return j;
}

} // namespace

Report build_report(const RunConfig& c) {
  Report r;
  r.config = c;
  r.grid = config_grid(c);
  r.provenance = coefficient_provenance(c);
  r.coeffs = config_coefficients(c, r.grid);
  InitialCondition ic = config_ic(c);
  r.warnings = ic_warnings(ic, r.grid);
  r.analysis = analyze_instance(r.grid, r.coeffs, ic, c.rank_tol);
  return r;
}

std::string report_json(const Report& r) {
  const AnalysisReport& a = r.analysis;
  ordered_json j;
  j["config"] = ordered_json::parse(emit_config(r.config));
  j["grid"] = grid_json(r.grid);

  ordered_json scheme;
  scheme["name"] = r.config.scheme;
  scheme["provenance"] = r.provenance;
  scheme["restricted"] = is_restricted(r.coeffs);
  scheme["consistency_defect"] = a.consistency;
  scheme["coefficients"] = coefficients_object(r.coeffs);
  scheme["effective"] = effective_object(effective(r.coeffs));
  j["scheme"] = scheme;

  ordered_json assembly;
  assembly["n_x"] = a.n_x;
  assembly["n_t"] = a.n_t;
  assembly["u_exact_norm"] = a.u_exact_norm;
  assembly["m0_norm"] = a.m0_norm;
  j["assembly"] = assembly;

  ordered_json residual;
  residual["f_norm"] = a.f_norm;
  residual["max_supported_residual"] = a.max_supported_residual;
  j["residual"] = residual;

  ordered_json svd;
  svd["m1_singular_values"] = a.m1_singular_values;
  svd["m2_singular_values"] = a.m2_singular_values;
  svd["rank1"] = a.rank1;
  svd["rank2"] = a.rank2;
  j["svd"] = svd;

  ordered_json reduction;
  reduction["f_tilde_norm"] = a.f_tilde_norm;
  reduction["f11_norm"] = a.f11_norm;
  reduction["f12_norm"] = a.f12_norm;
  reduction["f21_norm"] = a.f21_norm;
  reduction["f22_norm"] = a.f22_norm;
  j["reduction"] = reduction;

  ordered_json spectrum;
  spectrum["m1_gram_eigenvalues_closed"] = {a.m1_gram_eigenvalues_closed.first,
                                            a.m1_gram_eigenvalues_closed.second};
  spectrum["m2_gram_eigenvalues_closed"] = {a.m2_gram_eigenvalues_closed.first,
                                            a.m2_gram_eigenvalues_closed.second};
  spectrum["m1_spectrum_gap"] = a.m1_spectrum_gap;
  spectrum["m2_spectrum_gap"] = a.m2_spectrum_gap;
  j["spectrum"] = spectrum;

  const NormIdentityReport& n = a.norm_identities;
  ordered_json identities;
  identities["m1_closed_form_sq"] = n.m1_closed_form_sq;
  identities["m1_exact_sq"] = n.m1_exact_sq;
  identities["m1_gap"] = n.m1_gap;
  identities["m2_closed_form_sq"] = n.m2_closed_form_sq;
  identities["m2_exact_sq"] = n.m2_exact_sq;
  identities["m2_gap"] = n.m2_gap;
  identities["parity_mismatch"] = n.parity_mismatch;
  j["norm_identities"] = identities;

  const BoundReport& b = a.bound;
  ordered_json bound;
  bound["u_exact_norm"] = b.u_exact_norm;
  bound["m0_norm"] = b.m0_norm;
  bound["space_factor"] = b.space_factor;
  bound["time_factor"] = b.time_factor;
  bound["bound"] = b.bound;
  bound["has_measured"] = b.has_measured;
  bound["measured_f11"] = b.measured_f11;
  bound["holds"] = b.holds;
  j["bound"] = bound;

  ordered_json obj;
  obj["f1"] = a.f_objectives.f1;
  obj["f2"] = a.f_objectives.f2;
  obj["f3"] = a.f_objectives.f3;
  obj["g1"] = a.g.g1;
  obj["g2"] = a.g.g2;
  obj["g3"] = a.g.g3;
  j["objectives"] = obj;

  j["warnings"] = r.warnings;
  j["flags"] = a.flags;
  return j.dump(2) + "\n";
}

std::string coefficients_json(double h, const QuadratureSpec& band) {
  ordered_json j;
  j["h"] = h;
  ordered_json band_j;
  band_j["kappa_lo"] = band.kappa_lo;
  band_j["kappa_hi"] = band.kappa_hi;
  band_j["nodes"] = band.nodes;
  j["band"] = band_j;

  SpatialTriple cf = closed_form_triple(h);
  ordered_json cf_j = triple_object(cf);
  cf_j["provenance"] = "closed-form";
  ordered_json formula;
  formula["beta_x"] = "pi / (h (pi^2 - 8))";
  formula["delta_x"] = "1/2 - 2 / (h (pi^2 - 8))";
  formula["epsilon_x"] = "-2 / (h (pi^2 - 8))";
  cf_j["formula"] = formula;
  cf_j["system_residual_max"] = max_abs_entry(closed_form_system_residual(cf, h));
  cf_j["consistency_defect"] = cf.beta_x + cf.delta_x + cf.epsilon_x;
  cf_j.update(route_error_object(cf, h, band));
  j["closed_form"] = cf_j;

  SpatialTriple ls = least_squares_triple(h, band);
  ordered_json ls_j = triple_object(ls);
  ls_j["provenance"] = "least-squares";
  ls_j["stationarity_residual_max"] =
      max_abs_entry(stationarity_residual(ls, h, band));
  ls_j["consistency_defect"] = ls.beta_x + ls.delta_x + ls.epsilon_x;
  ls_j.update(route_error_object(ls, h, band));
  j["least_squares"] = ls_j;

  SpatialTriple central{0.0, 1.0 / (2.0 * h), -1.0 / (2.0 * h)};
  SpatialTriple zero{0.0, 0.0, 0.0};
  ordered_json ref;
  ordered_json central_j = triple_object(central);
  central_j.update(route_error_object(central, h, band));
  ref["central"] = central_j;
  ordered_json zero_j = triple_object(zero);
  zero_j.update(route_error_object(zero, h, band));
  ref["zero"] = zero_j;
  j["reference"] = ref;

  return j.dump(2) + "\n";
}

std::vector<SpectralRow> spectral_rows(const StencilSpec& s, const QuadratureSpec& band,
                                       std::size_t samples) {
  std::vector<SpectralRow> rows;
  rows.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    double kappa = band.kappa_lo +
                   (band.kappa_hi - band.kappa_lo) * double(i) / double(samples - 1);
    std::complex<double> lh = effective_wavenumber(s, kappa);
    rows.push_back({kappa, lh.real(), lh.imag()});
  }
  return rows;
}

void write_spectral_csv(std::ostream& os, const std::vector<SpectralRow>& rows) {
  os << "kappa,re,im\n";
  for (const SpectralRow& r : rows)
    os << format_double(r.kappa) << ',' << format_double(r.re) << ','
       << format_double(r.im) << '\n';
}

void write_integrand_csv(std::ostream& os, const StencilSpec& s, const QuadratureSpec& band,
                         std::size_t samples) {
  os << "kappa,value\n";
  for (std::size_t i = 0; i < samples; ++i) {
    double kappa = band.kappa_lo +
                   (band.kappa_hi - band.kappa_lo) * double(i) / double(samples - 1);
    os << format_double(kappa) << ',' << format_double(error_integrand(s, kappa)) << '\n';
  }
}

void write_series_csv(std::ostream& os, const ErrorSeries& series) {
  os << "step,t,t_over_T,linf,l2\n";
  for (const ErrorPoint& p : series)
    os << p.step << ',' << format_double(p.t) << ',' << format_double(p.t_over_total)
       << ',' << format_double(p.linf) << ',' << format_double(p.l2) << '\n';
}

void write_sweep_csv(std::ostream& os, const GSearchResult& result) {
  os << "beta_t,delta_t,epsilon_t,alpha_x,gamma_x,g1,g2,g3\n";
  for (const GSample& s : result.samples) {
    for (double p : s.params) os << format_double(p) << ',';
    os << format_double(s.g1) << ',' << format_double(s.g2) << ',' << format_double(s.g3)
       << '\n';
  }
}

std::string sweep_json(const GSearchSpec& spec, const GSearchResult& result) {
  ordered_json j;
  ordered_json spec_j;
  spec_j["fixed_triple"] = triple_object(spec.fixed_triple);
  for (std::size_t d = 0; d < 5; ++d) {
    ordered_json dim;
    dim["lo"] = spec.lo[d];
    dim["hi"] = spec.hi[d];
    dim["pinned"] = spec.pinned[d];
    if (spec.pinned[d]) dim["pinned_value"] = spec.pinned_value[d];
    spec_j[g_search_dimension_names[d]] = dim;
  }
  spec_j["w1"] = spec.w1;
  spec_j["w2"] = spec.w2;
  spec_j["w3"] = spec.w3;
  spec_j["grid_points"] = spec.grid_points;
  spec_j["refinements"] = spec.refinements;
  j["search"] = spec_j;

  ordered_json best;
  for (std::size_t d = 0; d < 5; ++d) best[g_search_dimension_names[d]] = result.best[d];
  j["best"] = best;
  j["g1"] = result.g1;
  j["g2"] = result.g2;
  j["g3"] = result.g3;
  j["objective"] = result.objective;
  j["coarse_samples"] = result.samples.size();
  return j.dump(2) + "\n";
}

std::string error_json(const std::string& kind, const std::string& message) {
  nlohmann::json j;
  j["error"] = kind;
  j["message"] = message;
  return j.dump() + "\n";
}

} // namespace drp
