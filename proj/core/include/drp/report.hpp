#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "drp/analysis.hpp"
#include "drp/config.hpp"
#include "drp/optimizer.hpp"
#include "drp/simulate.hpp"

namespace drp {

// Everything one analyze run produces, ready for serialization.
struct Report {
  RunConfig config;
  GridSpec grid;
  std::string provenance;
  SchemeCoefficients coeffs;
  AnalysisReport analysis;
  std::vector<std::string> warnings;
};

Report build_report(const RunConfig& c);

// Deterministic JSON: fixed key order, numbers in shortest round-trip form,
// each numeric group keyed by the operation that produced it.
std::string report_json(const Report& r);

// Both coefficient routes at mesh width h side by side, with formulas,
// residuals, and band-integral cross-checks.
std::string coefficients_json(double h, const QuadratureSpec& band);

struct SpectralRow {
  double kappa;
  double re; // Re(lambda_bar h), ideal kappa
  double im; // Im(lambda_bar h), ideal 0
};

std::vector<SpectralRow> spectral_rows(const StencilSpec& s, const QuadratureSpec& band,
                                       std::size_t samples);

// kappa,re,im
void write_spectral_csv(std::ostream& os, const std::vector<SpectralRow>& rows);

// kappa,value of the squared symbol error
void write_integrand_csv(std::ostream& os, const StencilSpec& s, const QuadratureSpec& band,
                         std::size_t samples);

// step,t,t_over_T,linf,l2
void write_series_csv(std::ostream& os, const ErrorSeries& series);

// beta_t,delta_t,epsilon_t,alpha_x,gamma_x,g1,g2,g3 over the coarse pass
void write_sweep_csv(std::ostream& os, const GSearchResult& result);

std::string sweep_json(const GSearchSpec& spec, const GSearchResult& result);

// {"error": kind, "message": ...}
std::string error_json(const std::string& kind, const std::string& message);

} // namespace drp
