#pragma once

#include <boost/rational.hpp>

#include <array>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zic/det_channel.hpp"

namespace zic {

// Probabilities stay exact: enumeration yields counts over 2^T assignments
// with T <= 24, so numerators and denominators fit comfortably.
using Rational = boost::rational<long long>;

/// Joint probability table; rows and columns are outcome labels.
struct JointDist {
  std::vector<std::vector<Rational>> cells;

  std::size_t rows() const { return cells.size(); }
  std::size_t cols() const { return cells.empty() ? 0 : cells[0].size(); }

  void validate() const {
    if (cells.empty() || cells[0].empty()) throw param_error("joint table must be nonempty");
    Rational total(0);
    for (const auto& row : cells) {
      if (row.size() != cells[0].size()) throw param_error("joint table must be rectangular");
      for (const Rational& p : row) {
        if (p < Rational(0)) throw param_error("probabilities must be nonnegative");
        total += p;
      }
    }
    if (total != Rational(1)) throw param_error("probabilities must sum to exactly 1");
  }
};

/// Shannon entropy in bits. Exactly 0.0 when one atom carries all the mass.
inline double entropy(const std::vector<Rational>& p) {
  if (p.empty()) throw param_error("distribution must be nonempty");
  Rational total(0);
  for (const Rational& v : p) {
    if (v < Rational(0)) throw param_error("probabilities must be nonnegative");
    total += v;
  }
  if (total != Rational(1)) throw param_error("probabilities must sum to exactly 1");
  for (const Rational& v : p)
    if (v == Rational(1)) return 0.0;
  double h = 0;
  for (const Rational& v : p) {
    if (v == Rational(0)) continue;
    const double d = boost::rational_cast<double>(v);
    h -= d * std::log2(d);
  }
  return h;
}

/// I(row; col) in bits. Independence is decided symbolically first
/// (p(x,y) = p(x)p(y) on every cell, exact rational equality), so
/// independent tables yield exactly 0.0. Otherwise evaluated in floating
/// point; tiny negative rounding residue is clamped to 0.
inline double mutual_information(const JointDist& j) {
  j.validate();
  const std::size_t R = j.rows(), C = j.cols();
  std::vector<Rational> px(R, Rational(0)), py(C, Rational(0));
  for (std::size_t x = 0; x < R; ++x)
    for (std::size_t y = 0; y < C; ++y) {
      px[x] += j.cells[x][y];
      py[y] += j.cells[x][y];
    }

  bool independent = true;
  for (std::size_t x = 0; x < R && independent; ++x)
    for (std::size_t y = 0; y < C; ++y)
      if (j.cells[x][y] != px[x] * py[y]) {
        independent = false;
        break;
      }
  if (independent) return 0.0;

  double info = 0;
  for (std::size_t x = 0; x < R; ++x)
    for (std::size_t y = 0; y < C; ++y) {
      if (j.cells[x][y] == Rational(0)) continue;
      const double pxy = boost::rational_cast<double>(j.cells[x][y]);
      const double prod =
          boost::rational_cast<double>(px[x]) * boost::rational_cast<double>(py[y]);
      info += pxy * std::log2(pxy / prod);
    }
  return info < 0 ? 0.0 : info;
}

enum class Assign { Zero, Jam, Data };

/// Per-level transmit rule: a fresh uniform bit (Jam), a message bit
/// (Data, 1-based index into message msg), or the constant 0.
struct LevelUse {
  Assign kind = Assign::Zero;
  int msg = 0;
  int bit = 0;

  friend bool operator==(const LevelUse&, const LevelUse&) = default;
};

/// Block-length-1 transmission plan. tx1[i] drives transmitter 1's level
/// i+1 (m levels); tx2 drives transmitter 2 (max(m, n) levels). Message 1
/// data may only ride on tx1, message 2 data only on tx2.
struct Scheme {
  DetParams params;
  std::vector<LevelUse> tx1;
  std::vector<LevelUse> tx2;

  friend bool operator==(const Scheme&, const Scheme&) = default;

  void validate() const {
    params.validate();
    if (static_cast<int>(tx1.size()) != params.m) throw param_error("tx1 must cover levels 1..m");
    if (static_cast<int>(tx2.size()) != params.q())
      throw param_error("tx2 must cover levels 1..max(m, n)");
    std::vector<int> bits1, bits2;
    auto scan = [&](const std::vector<LevelUse>& tx, int owner, std::vector<int>& bits) {
      for (const LevelUse& u : tx) {
        if (u.kind != Assign::Data) continue;
        if (u.msg != owner)
          throw param_error("w" + std::to_string(u.msg) + " data allowed only on tx" +
                            std::to_string(owner));
        if (u.bit < 1) throw param_error("data bit indices are 1-based");
        bits.push_back(u.bit);
      }
    };
    scan(tx1, 1, bits1);
    scan(tx2, 2, bits2);
    for (auto* bits : {&bits1, &bits2}) {
      std::vector<int> s = *bits;
      std::sort(s.begin(), s.end());
      for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] != static_cast<int>(i) + 1)
          throw param_error("data bit indices must form 1..k with no repeats");
    }
  }
};

/// Everything evaluate_scheme can say about a plan. Rates are integers
/// (bits per channel use at block length 1); secure means the leakage
/// I(W2; y1) is exactly zero, decided in rational arithmetic.
struct SchemeReport {
  int r1 = 0;
  int r2 = 0;
  double leakage_bits = 0;
  bool secure = false;
  bool decodable1 = false;
  bool decodable2 = false;
};

/// Transmitter 1 fills levels 1..m with its message; transmitter 2 uses
/// only the bottom m-n levels, which the cross link never carries to
/// receiver 1. Rates (m, m-n). Requires n <= m.
inline Scheme corner_scheme_a(const DetParams& p) {
  if (classify_regime(p).kind != RegimeKind::WeakModerate)
    throw regime_error("corner schemes require n <= m");
  Scheme s{p, std::vector<LevelUse>(static_cast<std::size_t>(p.m)),
           std::vector<LevelUse>(static_cast<std::size_t>(p.q()))};
  for (int i = 1; i <= p.m; ++i) s.tx1[static_cast<std::size_t>(i) - 1] = {Assign::Data, 1, i};
  for (int i = 1; i <= p.m - p.n; ++i)
    s.tx2[static_cast<std::size_t>(i) - 1] = {Assign::Data, 2, i};
  return s;
}

/// Transmitter 2 fills all m levels; transmitter 1 jams its bottom n
/// levels, exactly the ones that collide with x2's top n levels at
/// receiver 1, and carries data above. Rates (m-n, m). Requires n <= m.
inline Scheme corner_scheme_b(const DetParams& p) {
  if (classify_regime(p).kind != RegimeKind::WeakModerate)
    throw regime_error("corner schemes require n <= m");
  Scheme s{p, std::vector<LevelUse>(static_cast<std::size_t>(p.m)),
           std::vector<LevelUse>(static_cast<std::size_t>(p.q()))};
  for (int i = 1; i <= p.n; ++i) s.tx1[static_cast<std::size_t>(i) - 1] = {Assign::Jam, 0, 0};
  for (int i = p.n + 1; i <= p.m; ++i)
    s.tx1[static_cast<std::size_t>(i) - 1] = {Assign::Data, 1, i - p.n};
  for (int i = 1; i <= p.m; ++i) s.tx2[static_cast<std::size_t>(i) - 1] = {Assign::Data, 2, i};
  return s;
}

namespace detail {

inline std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

inline int parse_int(const std::string& tok, int line_no, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &used);
  } catch (const std::exception&) {
    throw parse_error(line_no, "expected integer " + what + ", got '" + tok + "'");
  }
  if (used != tok.size())
    throw parse_error(line_no, "expected integer " + what + ", got '" + tok + "'");
  return v;
}

}  // namespace detail

/// Scheme file format, one directive per line, '#' starts a comment:
///   m=<int> n=<int>                    header, first content line
///   tx<1|2> <level> data w<1|2> <bit>  message bit on a level
///   tx<1|2> <level> jam                fresh uniform bit
///   tx<1|2> <level> zero               constant 0 (default for unlisted levels)
inline Scheme parse_scheme(std::string_view text) {
  Scheme s;
  bool have_header = false;
  std::array<int, 2> last_data_line{0, 0};
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::vector<std::string> toks = detail::tokenize(raw);
    if (toks.empty()) continue;

    if (!have_header) {
      if (toks.size() != 2 || toks[0].rfind("m=", 0) != 0 || toks[1].rfind("n=", 0) != 0)
        throw parse_error(line_no, "expected header 'm=<int> n=<int>'");
      s.params.m = detail::parse_int(toks[0].substr(2), line_no, "for m");
      s.params.n = detail::parse_int(toks[1].substr(2), line_no, "for n");
      s.params.c = 0;
      try {
        s.params.validate();
      } catch (const param_error& e) {
        throw parse_error(line_no, e.what());
      }
      if (s.params.q() > 64) throw resource_error("schemes support at most 64 levels");
      s.tx1.assign(static_cast<std::size_t>(s.params.m), LevelUse{});
      s.tx2.assign(static_cast<std::size_t>(s.params.q()), LevelUse{});
      have_header = true;
      continue;
    }

    if (toks[0] != "tx1" && toks[0] != "tx2")
      throw parse_error(line_no, "unknown keyword '" + toks[0] + "'");
    const int tx = toks[0] == "tx1" ? 1 : 2;
    if (toks.size() < 3) throw parse_error(line_no, "expected '<level> data|jam|zero ...'");
    const int level = detail::parse_int(toks[1], line_no, "level");
    const int max_level = tx == 1 ? s.params.m : s.params.q();
    if (level < 1 || level > max_level)
      throw parse_error(line_no, "level " + std::to_string(level) + " out of range 1.." +
                                     std::to_string(max_level) + " for tx" + std::to_string(tx));
    std::vector<LevelUse>& col = tx == 1 ? s.tx1 : s.tx2;
    LevelUse& slot = col[static_cast<std::size_t>(level) - 1];
    if (slot.kind != Assign::Zero || slot.msg != 0)
      throw parse_error(line_no, "duplicate level " + std::to_string(level) + " for tx" +
                                     std::to_string(tx));

    if (toks[2] == "jam" || toks[2] == "zero") {
      if (toks.size() != 3) throw parse_error(line_no, "trailing tokens after '" + toks[2] + "'");
      slot = {toks[2] == "jam" ? Assign::Jam : Assign::Zero, tx == 1 ? -1 : -2, 0};
      // msg < 0 marks an explicit directive so duplicate zeros are caught too
      continue;
    }
    if (toks[2] != "data") throw parse_error(line_no, "unknown keyword '" + toks[2] + "'");
    if (toks.size() != 5) throw parse_error(line_no, "expected 'data w<1|2> <bit>'");
    if (toks[3] != "w1" && toks[3] != "w2")
      throw parse_error(line_no, "unknown keyword '" + toks[3] + "'");
    const int msg = toks[3] == "w1" ? 1 : 2;
    if (msg != tx)
      throw parse_error(line_no,
                        "w" + std::to_string(msg) + " data allowed only on tx" + std::to_string(msg));
    const int bit = detail::parse_int(toks[4], line_no, "bit index");
    if (bit < 1) throw parse_error(line_no, "data bit indices are 1-based");
    slot = {Assign::Data, msg, bit};
    last_data_line[static_cast<std::size_t>(msg) - 1] = line_no;
  }
  if (!have_header) throw parse_error(line_no > 0 ? line_no : 1, "missing header 'm=<int> n=<int>'");

  for (LevelUse& u : s.tx1)
    if (u.msg < 0) u.msg = 0;  // strip the explicit-directive marker
  for (LevelUse& u : s.tx2)
    if (u.msg < 0) u.msg = 0;

  try {
    s.validate();
  } catch (const param_error& e) {
    const int msg_line = std::max(last_data_line[0], last_data_line[1]);
    throw parse_error(msg_line > 0 ? msg_line : line_no, e.what());
  }
  return s;
}

/// Inverse of parse_scheme: levels ascending, tx1 before tx2, zero levels
/// omitted. parse_scheme(scheme_to_text(s)) == s for any valid s.
inline std::string scheme_to_text(const Scheme& s) {
  s.validate();
  std::ostringstream out;
  out << "m=" << s.params.m << " n=" << s.params.n << "\n";
  auto emit = [&](const std::vector<LevelUse>& col, int tx) {
    for (std::size_t i = 0; i < col.size(); ++i) {
      const LevelUse& u = col[i];
      if (u.kind == Assign::Zero) continue;
      out << "tx" << tx << ' ' << i + 1 << ' ';
      if (u.kind == Assign::Jam)
        out << "jam";
      else
        out << "data w" << u.msg << ' ' << u.bit;
      out << "\n";
    }
  };
  emit(s.tx1, 1);
  emit(s.tx2, 2);
  return out.str();
}

/// Exhaustive, exact evaluation: every (message 1, message 2, jam bits)
/// assignment is transmitted once, so counts over 2^T outcomes are the true
/// joint distribution. Leakage is I(W2; y1) on that table; decodability
/// demands each receiver output be consistent with exactly one message.
/// T = k1 + k2 + #jam is capped at 24.
inline SchemeReport evaluate_scheme(const Scheme& s) {
  s.validate();
  const DetParams& p = s.params;
  if (p.q() > 64) throw resource_error("schemes support at most 64 levels");

  int k1 = 0, k2 = 0;
  std::vector<int> w1_level, w2_level;           // bit index -> level
  std::vector<std::pair<int, int>> jam_slots;    // (tx, level)
  auto collect = [&](const std::vector<LevelUse>& col, int tx, std::vector<int>& levels) {
    for (std::size_t i = 0; i < col.size(); ++i) {
      if (col[i].kind == Assign::Data) {
        if (static_cast<std::size_t>(col[i].bit) > levels.size())
          levels.resize(static_cast<std::size_t>(col[i].bit));
        levels[static_cast<std::size_t>(col[i].bit) - 1] = static_cast<int>(i) + 1;
      } else if (col[i].kind == Assign::Jam) {
        jam_slots.emplace_back(tx, static_cast<int>(i) + 1);
      }
    }
  };
  collect(s.tx1, 1, w1_level);
  collect(s.tx2, 2, w2_level);
  k1 = static_cast<int>(w1_level.size());
  k2 = static_cast<int>(w2_level.size());
  const int nj = static_cast<int>(jam_slots.size());
  const int total_bits = k1 + k2 + nj;
  if (total_bits > 24) throw resource_error("scheme enumerates more than 2^24 assignments");

  std::map<std::pair<std::uint64_t, std::uint64_t>, long long> w2y1, w1y1, w2y2;
  const std::uint64_t W1 = 1ull << k1, W2 = 1ull << k2, J = 1ull << nj;
  for (std::uint64_t w2 = 0; w2 < W2; ++w2) {
    std::uint64_t x2_data = 0;
    for (int b = 0; b < k2; ++b)
      if ((w2 >> b) & 1u) x2_data |= 1ull << (w2_level[static_cast<std::size_t>(b)] - 1);
    for (std::uint64_t w1 = 0; w1 < W1; ++w1) {
      std::uint64_t x1_data = 0;
      for (int b = 0; b < k1; ++b)
        if ((w1 >> b) & 1u) x1_data |= 1ull << (w1_level[static_cast<std::size_t>(b)] - 1);
      for (std::uint64_t jv = 0; jv < J; ++jv) {
        std::uint64_t x1 = x1_data, x2 = x2_data;
        for (int b = 0; b < nj; ++b)
          if ((jv >> b) & 1u) {
            const auto& [tx, level] = jam_slots[static_cast<std::size_t>(b)];
            (tx == 1 ? x1 : x2) |= 1ull << (level - 1);
          }
        const auto [y1, y2] = transmit_masks(x1, x2, p);
        ++w2y1[{w2, y1}];
        ++w1y1[{w1, y1}];
        ++w2y2[{w2, y2}];
      }
    }
  }

  auto decodable = [](const std::map<std::pair<std::uint64_t, std::uint64_t>, long long>& joint) {
    std::map<std::uint64_t, std::uint64_t> seen;  // output -> unique message
    for (const auto& [key, cnt] : joint) {
      (void)cnt;
      const auto [msg, out] = key;
      if (const auto it = seen.find(out); it != seen.end()) {
        if (it->second != msg) return false;
      } else {
        seen.emplace(out, msg);
      }
    }
    return true;
  };

  // Columns are the observed y1 values in ascending order.
  std::map<std::uint64_t, std::size_t> col_of;
  for (const auto& [key, cnt] : w2y1) {
    (void)cnt;
    col_of.emplace(key.second, 0);
  }
  std::size_t next = 0;
  for (auto& [y1, idx] : col_of) {
    (void)y1;
    idx = next++;
  }
  JointDist joint;
  joint.cells.assign(W2, std::vector<Rational>(col_of.size(), Rational(0)));
  const long long denom = 1ll << total_bits;
  for (const auto& [key, cnt] : w2y1)
    joint.cells[key.first][col_of[key.second]] = Rational(cnt, denom);

  SchemeReport rep;
  rep.r1 = k1;
  rep.r2 = k2;
  rep.leakage_bits = mutual_information(joint);
  rep.secure = rep.leakage_bits == 0.0;
  rep.decodable1 = decodable(w1y1);
  rep.decodable2 = decodable(w2y2);
  return rep;
}

}  // namespace zic
