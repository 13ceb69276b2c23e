#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "zic/det_channel.hpp"
#include "zic/gauss_regions.hpp"

namespace zic {

/// m = (floor(0.5 log2 snr))+, same for n, C = floor(cg). The clamp means
/// the result may carry m = 0, which deterministic-model operations reject;
/// validity is checked where the parameters are used.
inline DetParams det_params_from_gauss(const GaussParams& g) {
  g.validate();
  auto level_count = [](double x) {
    if (x <= 0) return 0;
    return std::max(0, static_cast<int>(std::floor(0.5 * std::log2(x))));
  };
  return {level_count(g.snr), level_count(g.inr), static_cast<int>(std::floor(g.cg))};
}

/// Canonical inverse: snr = 2^(2m), inr = 2^(2n), cg = C. Exact in double
/// up to the m, n <= 500 guard.
inline GaussParams gauss_params_from_det(const DetParams& d) {
  d.validate();
  if (d.m > 500 || d.n > 500) throw param_error("m and n above 500 overflow the snr mapping");
  return {std::ldexp(1.0, 2 * d.m), std::ldexp(1.0, 2 * d.n), static_cast<double>(d.c)};
}

/// How closely each Gaussian bound tracks its deterministic counterpart at
/// the canonical snr = 2^(2m), inr = 2^(2n) operating point.
struct GapReport {
  DetParams det;
  GaussParams gauss;
  std::vector<std::pair<std::string, double>> gaps;
  double max_gap = 0;
};

/// Weak/moderate interference compares the single-user rates against m and
/// the cross-link-aware sum against 2m-n+C; high interference compares the
/// correlation-optimized bound against m, 2m-n and m. Comparisons that
/// depend on the optimizing rho are only meaningful without cooperation, so
/// they are emitted just for C = 0; the sum comparisons carry +C on both
/// sides and survive any C. Very high interference has no high-snr
/// counterpart here.
inline GapReport correspondence_report(const DetParams& d) {
  const Regime reg = classify_regime(d);
  GapReport rep;
  rep.det = d;
  rep.gauss = gauss_params_from_det(d);
  const GaussParams& g = rep.gauss;
  const double m = d.m, n = d.n, c = d.c;

  auto add = [&rep](std::string name, double actual, double target) {
    rep.gaps.emplace_back(std::move(name), std::abs(actual - target));
  };

  switch (reg.kind) {
    case RegimeKind::WeakModerate:
      add("thm4_r1 vs m", single_user_rate(g), m);
      add("thm4_r2 vs m", single_user_rate(g), m);
      add("thm5_sum vs 2m-n+C", thm5_sum_bound(g), 2 * m - n + c);
      if (d.c == 0) add("thm5_r2 vs m", r2_secrecy_objective(g, 0), m);
      break;
    case RegimeKind::High:
      add("thm6_r1 vs m", single_user_rate(g), m);
      if (d.c == 0) {
        add("thm6_r2 vs 2m-n", r2_secrecy_objective(g, 0), 2 * m - n);
        add("thm6_sum vs m", thm6_sum_objective(g, 0), m);
      }
      break;
    case RegimeKind::VeryHigh:
      throw regime_error("no high-snr correspondence for alpha >= 2");
  }

  for (const auto& [name, gap] : rep.gaps) {
    (void)name;
    rep.max_gap = std::max(rep.max_gap, gap);
  }
  return rep;
}

}  // namespace zic
