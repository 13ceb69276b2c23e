#pragma once

#include <cmath>
#include <functional>

#include "zic/errors.hpp"
#include "zic/region_geom.hpp"

namespace zic {

/// Gaussian channel parameters in linear scale, rates in bits per channel
/// use with base-2 logs throughout. cg is the cooperation rate in bits.
struct GaussParams {
  double snr = 0;
  double inr = 0;
  double cg = 0;

  void validate() const {
    if (!(std::isfinite(snr) && snr >= 0)) throw param_error("snr must be finite and >= 0");
    if (!(std::isfinite(inr) && inr >= 0)) throw param_error("inr must be finite and >= 0");
    if (!(std::isfinite(cg) && cg >= 0)) throw param_error("cg must be finite and >= 0");
  }

  /// snr = hd^2 P, inr = hc^2 P for transmit power P and channel gains.
  static GaussParams from_gains(double p, double hd, double hc, double cg = 0) {
    if (!(std::isfinite(p) && p >= 0)) throw param_error("power must be finite and >= 0");
    if (!std::isfinite(hd) || !std::isfinite(hc)) throw param_error("gains must be finite");
    GaussParams g{hd * hd * p, hc * hc * p, cg};
    g.validate();
    return g;
  }
};

struct RhoResult {
  double rho = 0;
  double value = 0;
};

/// Maximize a smooth objective over the correlation coefficient rho in
/// [-1, 1]: a 4001-point coarse scan (ties keep the smallest rho), then
/// golden-section refinement of the bracketing cell until its width drops
/// below tol. The returned value is the objective evaluated at the
/// returned rho.
inline RhoResult maximize_over_rho(const std::function<double(double)>& objective,
                                   double tol = 1e-9) {
  constexpr int kGrid = 4001;
  double best_rho = -1, best_val = 0;
  bool have = false;
  for (int i = 0; i < kGrid; ++i) {
    const double rho = -1 + 2.0 * i / (kGrid - 1);
    const double v = objective(rho);
    if (!std::isfinite(v)) throw numeric_error("objective not finite over rho in [-1, 1]");
    if (!have || v > best_val) {
      have = true;
      best_val = v;
      best_rho = rho;
    }
  }

  constexpr double kStep = 2.0 / (kGrid - 1);
  double a = std::max(-1.0, best_rho - kStep);
  double b = std::min(1.0, best_rho + kStep);
  constexpr double kInvPhi = 0.6180339887498949;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = objective(c), fd = objective(d);
  while (b - a > tol) {
    if (fc >= fd) {  // ties move left, toward smaller rho
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = objective(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = objective(d);
    }
  }
  RhoResult r{(a + b) / 2, 0};
  r.value = objective(r.rho);
  if (best_val > r.value) return {best_rho, best_val};
  return r;
}

/// Point-to-point capacity 0.5 log2(1 + snr); the individual-rate bound in
/// every outer region here.
inline double single_user_rate(const GaussParams& g) { return 0.5 * std::log2(1 + g.snr); }

/// Cooperative multiple-access style sum bound:
/// 0.5 log2(1 + snr + inr + 2 sqrt(snr inr)) + 0.5 log2(1 + snr/(1+inr)) + cg.
inline double thm4_sum_bound(const GaussParams& g) {
  const double w = std::sqrt(g.snr * g.inr);
  return 0.5 * std::log2(1 + g.snr + g.inr + 2 * w) + 0.5 * std::log2(1 + g.snr / (1 + g.inr)) +
         g.cg;
}

/// Secrecy penalty on R2 from receiver 1's side view, as a function of the
/// input correlation rho:
/// 0.5 log2(1 + snr - (rho snr + sqrt(snr inr))^2 / (1 + snr + inr + 2 rho sqrt(snr inr))).
/// The log argument is a conditional variance with unit noise floor, so it
/// stays >= 1; nonpositive values indicate a numeric fault.
inline double r2_secrecy_objective(const GaussParams& g, double rho) {
  const double w = std::sqrt(g.snr * g.inr);
  const double den = 1 + g.snr + g.inr + 2 * rho * w;  // >= 1 + (sqrt(snr)-sqrt(inr))^2
  const double num = rho * g.snr + w;
  const double arg = 1 + g.snr - num * num / den;
  if (!(arg > 0)) throw numeric_error("secrecy rate argument must stay positive");
  return 0.5 * std::log2(arg);
}

/// Cross-link-aware sum bound, rho-free:
/// log2(1 + snr) - 0.5 log2(1 + inr) + cg. Needs inr <= snr, which also
/// keeps it nonnegative.
inline double thm5_sum_bound(const GaussParams& g) {
  return std::log2(1 + g.snr) - 0.5 * std::log2(1 + g.inr) + g.cg;
}

/// Residual variance of receiver 2's observation given the genie side
/// information pair, at input correlation rho. Equals 1 at snr = 0 and
/// never drops below the unit noise floor.
inline double sigma_y2_given_s(const GaussParams& g, double rho) {
  const double w = std::sqrt(g.snr * g.inr);
  const double s11 = 1 + g.snr;
  const double s12 = g.snr + rho * w;
  const double s22 = 1 + g.snr + g.inr + 2 * rho * w;
  // det = 1 + 2 snr + inr + 2 rho w + snr inr (1 - rho^2) >= 1 for |rho| <= 1
  const double det = s11 * s22 - s12 * s12;
  if (det < 1e-12) throw numeric_error("side-information covariance is singular");
  const double a = rho * g.snr;
  const double b = rho * g.snr + w;
  const double quad = (a * a * s22 - 2 * a * b * s12 + b * b * s11) / det;
  const double sigma = 1 + g.snr - quad;
  if (!(sigma > 0)) throw numeric_error("conditional variance must stay positive");
  return sigma;
}

/// Correlation-aware sum objective (before adding cg): both log terms sit
/// inside the maximization over rho.
inline double thm6_sum_objective(const GaussParams& g, double rho) {
  const double w = std::sqrt(g.snr * g.inr);
  const double arg = 1 + g.snr + g.inr + 2 * rho * w -
                     (rho * g.snr + w) * (rho * g.snr + w) / (1 + g.snr);
  if (!(arg > 0)) throw numeric_error("sum rate argument must stay positive");
  return 0.5 * std::log2(arg) + 0.5 * std::log2(sigma_y2_given_s(g, rho));
}

namespace detail {

// cg = 0 pins rho = 0: with no cooperation the inputs are independent.
inline double optimized_r2_bound(const GaussParams& g) {
  if (g.cg == 0) return r2_secrecy_objective(g, 0);
  return maximize_over_rho([&](double rho) { return r2_secrecy_objective(g, rho); }).value;
}

inline double optimized_thm6_sum(const GaussParams& g) {
  if (g.cg == 0) return thm6_sum_objective(g, 0);
  return maximize_over_rho([&](double rho) { return thm6_sum_objective(g, rho); }).value + g.cg;
}

}  // namespace detail

/// R2 bound shared by the two secrecy-aware regions; requires inr <= snr
/// in the thm5 flavor.
inline double thm5_r2_bound(const GaussParams& g) {
  g.validate();
  if (g.inr > g.snr) throw regime_error("bound requires inr <= snr");
  return detail::optimized_r2_bound(g);
}

inline double thm6_r2_bound(const GaussParams& g) {
  g.validate();
  return detail::optimized_r2_bound(g);
}

inline double thm6_sum_bound(const GaussParams& g) {
  g.validate();
  return detail::optimized_thm6_sum(g);
}

/// {R1 <= single-user, R2 <= single-user, R1+R2 <= cooperative MAC sum}.
inline RateRegion thm4_region(const GaussParams& g) {
  g.validate();
  const double r = single_user_rate(g);
  return {{{1, 0, r}, {0, 1, r}, {1, 1, thm4_sum_bound(g)}}};
}

/// Adds the secrecy penalty on R2 and the cross-link-aware sum. Only valid
/// when the cross link is no stronger than the direct link (inr <= snr).
inline RateRegion thm5_region(const GaussParams& g) {
  g.validate();
  if (g.inr > g.snr) throw regime_error("bound requires inr <= snr");
  return {{{1, 0, single_user_rate(g)},
           {0, 1, detail::optimized_r2_bound(g)},
           {1, 1, thm5_sum_bound(g)}}};
}

/// Correlation-optimized bound, valid in every interference regime.
inline RateRegion thm6_region(const GaussParams& g) {
  g.validate();
  return {{{1, 0, single_user_rate(g)},
           {0, 1, detail::optimized_r2_bound(g)},
           {1, 1, detail::optimized_thm6_sum(g)}}};
}

/// Intersection of every applicable outer bound.
inline RateRegion best_outer_region(const GaussParams& g) {
  RateRegion r = intersect(thm4_region(g), thm6_region(g));
  if (g.inr <= g.snr) r = intersect(r, thm5_region(g));
  return r;
}

}  // namespace zic
