#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <utility>
#include <vector>

#include "zic/errors.hpp"

namespace zic {

/// Column of binary signal levels. Level 1 is the bottom (least significant,
/// first to fall off when the column shifts down), level size() the top.
class BitVec {
 public:
  BitVec() = default;

  explicit BitVec(int levels) : bits_(checked_len(levels), 0) {}

  /// Values listed bottom-up: BitVec{b1, b2, ...} puts b1 at level 1.
  BitVec(std::initializer_list<int> bottom_up) {
    bits_.reserve(bottom_up.size());
    for (int v : bottom_up) bits_.push_back(checked_bit(v));
  }

  int size() const { return static_cast<int>(bits_.size()); }

  int level(int i) const {
    check_index(i);
    return bits_[static_cast<std::size_t>(i) - 1];
  }

  void set_level(int i, int v) {
    check_index(i);
    bits_[static_cast<std::size_t>(i) - 1] = checked_bit(v);
  }

  /// Mask bit i-1 holds level i. Requires size() <= 64.
  std::uint64_t to_mask() const {
    if (size() > 64) throw resource_error("bit column longer than 64 levels has no mask form");
    std::uint64_t m = 0;
    for (int i = 0; i < size(); ++i) m |= static_cast<std::uint64_t>(bits_[i]) << i;
    return m;
  }

  static BitVec from_mask(std::uint64_t bits, int levels) {
    if (levels > 64) throw resource_error("bit column longer than 64 levels has no mask form");
    BitVec v(levels);
    for (int i = 0; i < levels; ++i) v.bits_[i] = static_cast<std::uint8_t>((bits >> i) & 1u);
    return v;
  }

  friend bool operator==(const BitVec&, const BitVec&) = default;

 private:
  static int checked_len(int levels) {
    if (levels < 0) throw param_error("bit column length must be >= 0");
    return levels;
  }
  static std::uint8_t checked_bit(int v) {
    if (v != 0 && v != 1) throw param_error("bit value must be 0 or 1");
    return static_cast<std::uint8_t>(v);
  }
  void check_index(int i) const {
    if (i < 1 || i > size()) throw param_error("level index out of range");
  }

  std::vector<std::uint8_t> bits_;
};

/// Deterministic channel parameters: m direct-link levels, n cross-link
/// levels, C cooperation bits per channel use.
struct DetParams {
  int m = 0;
  int n = 0;
  int c = 0;

  int q() const { return std::max(m, n); }

  friend bool operator==(const DetParams&, const DetParams&) = default;

  void validate() const {
    if (m < 1) throw param_error("m must be >= 1");
    if (n < 0) throw param_error("n must be >= 0");
    if (c < 0) throw param_error("C must be >= 0");
  }
};

enum class RegimeKind { WeakModerate, High, VeryHigh };

/// Interference strength alpha = n/m, kept exact as a reduced fraction.
struct Regime {
  RegimeKind kind = RegimeKind::WeakModerate;
  int alpha_num = 0;
  int alpha_den = 1;
};

/// alpha <= 1 is weak/moderate, 1 < alpha < 2 is high, alpha >= 2 is very
/// high. Boundaries compare integers, so alpha = 1 and alpha = 2 are exact.
inline Regime classify_regime(const DetParams& p) {
  p.validate();
  Regime r;
  if (p.n <= p.m)
    r.kind = RegimeKind::WeakModerate;
  else if (p.n < 2 * p.m)
    r.kind = RegimeKind::High;
  else
    r.kind = RegimeKind::VeryHigh;
  const int g = std::gcd(p.m, p.n) > 0 ? std::gcd(p.m, p.n) : 1;
  r.alpha_num = p.n / g;
  r.alpha_den = p.m / g;
  return r;
}

struct DetOutputs {
  BitVec y1;  // q levels
  BitVec y2;  // m levels
};

/// One noiseless channel use. x1 spans levels 1..m, x2 spans levels
/// 1..q = max(m, n). With both columns embedded top-aligned in a q-column
/// and shifted down q-m (direct) or q-n (cross) levels:
///   y1 level i = x1 level i (i <= m)  XOR  x2 level i + q - n (i <= n)
///   y2 level i = x2 level i + q - m   for i = 1..m
/// Receiver 2 never sees x1; the bottom q-n levels of x2 never reach
/// receiver 1.
inline DetOutputs transmit(const BitVec& x1, const BitVec& x2, const DetParams& p) {
  p.validate();
  const int q = p.q();
  if (x1.size() != p.m) throw param_error("x1 must have exactly m levels");
  if (x2.size() != q) throw param_error("x2 must have exactly max(m, n) levels");

  DetOutputs out{BitVec(q), BitVec(p.m)};
  for (int i = 1; i <= q; ++i) {
    int v = (i <= p.m) ? x1.level(i) : 0;
    if (i <= p.n) v ^= x2.level(i + q - p.n);
    out.y1.set_level(i, v);
  }
  for (int i = 1; i <= p.m; ++i) out.y2.set_level(i, x2.level(i + q - p.m));
  return out;
}

/// Mask-form transmit for exhaustive enumeration. Bit i-1 is level i;
/// requires q <= 64. Agrees with transmit() on every input.
inline std::pair<std::uint64_t, std::uint64_t> transmit_masks(std::uint64_t x1, std::uint64_t x2,
                                                              const DetParams& p) {
  const int q = p.q();
  const std::uint64_t cross = (p.n == 0) ? 0 : (x2 >> (q - p.n));
  return {x1 ^ cross, x2 >> (q - p.m)};
}

}  // namespace zic
