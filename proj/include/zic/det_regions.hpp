#pragma once

#include "zic/det_channel.hpp"
#include "zic/region_geom.hpp"

namespace zic {

/// Secrecy-capacity outer bound for the deterministic model. Redundant
/// constraints are kept verbatim so emitted regions match the stated bounds
/// line for line.
///
///   weak/moderate (n <= m):   R1 <= m, R2 <= m,      R1+R2 <= 2m-n+C
///   high (m < n < 2m):        R1 <= m, R2 <= 2m-n,   R1+R2 <= m+C
///   very high (n >= 2m):      R1 <= m, R2 <= 0
inline RateRegion det_outer_region(const DetParams& p) {
  const Regime reg = classify_regime(p);
  const double m = p.m, n = p.n, c = p.c;
  switch (reg.kind) {
    case RegimeKind::WeakModerate:
      return {{{1, 0, m}, {0, 1, m}, {1, 1, 2 * m - n + c}}};
    case RegimeKind::High:
      return {{{1, 0, m}, {0, 1, 2 * m - n}, {1, 1, m + c}}};
    case RegimeKind::VeryHigh:
    default:
      return {{{1, 0, m}, {0, 1, 0}}};
  }
}

}  // namespace zic
