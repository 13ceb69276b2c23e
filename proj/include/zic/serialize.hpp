#pragma once

#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "zic/correspondence.hpp"
#include "zic/det_channel.hpp"
#include "zic/det_schemes.hpp"
#include "zic/gauss_regions.hpp"
#include "zic/region_geom.hpp"

namespace zic {

// All real values are emitted with exactly six decimals so equal inputs
// produce byte-identical output; key order is fixed by the emitters below.
inline std::string fmt6(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

namespace detail {

inline std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out.push_back('\\');
    out.push_back(ch);
  }
  return out;
}

inline void emit_constraints(std::ostringstream& out, const RateRegion& r,
                             const std::string& indent) {
  out << indent << "\"constraints\": [\n";
  for (std::size_t i = 0; i < r.constraints.size(); ++i) {
    const Constraint& c = r.constraints[i];
    out << indent << "  {\"a1\": " << fmt6(c.a1) << ", \"a2\": " << fmt6(c.a2)
        << ", \"b\": " << fmt6(c.b) << '}' << (i + 1 < r.constraints.size() ? "," : "") << '\n';
  }
  out << indent << "],\n";
  const std::vector<RatePair> verts = vertices(r);
  out << indent << "\"vertices\": [\n";
  for (std::size_t i = 0; i < verts.size(); ++i)
    out << indent << "  [" << fmt6(verts[i].r1) << ", " << fmt6(verts[i].r2) << ']'
        << (i + 1 < verts.size() ? "," : "") << '\n';
  out << indent << "]";
}

}  // namespace detail

/// A region document: the region plus the parameters it was computed from.
struct RegionDoc {
  std::optional<DetParams> det;
  std::optional<GaussParams> gauss;
  RateRegion region;
};

inline std::string params_json_fragment(const DetParams& d) {
  std::ostringstream out;
  out << "{\"model\": \"deterministic\", \"m\": " << d.m << ", \"n\": " << d.n
      << ", \"c\": " << d.c << '}';
  return out.str();
}

inline std::string params_json_fragment(const GaussParams& g) {
  std::ostringstream out;
  out << "{\"model\": \"gaussian\", \"snr\": " << fmt6(g.snr) << ", \"inr\": " << fmt6(g.inr)
      << ", \"cg\": " << fmt6(g.cg) << '}';
  return out.str();
}

/// Canonical region JSON: params, constraints, vertices, in that order.
/// Vertices are recomputed from the constraints, never stored state.
inline std::string region_to_json(const RegionDoc& doc) {
  std::ostringstream out;
  out << "{\n  \"params\": ";
  if (doc.det)
    out << params_json_fragment(*doc.det);
  else if (doc.gauss)
    out << params_json_fragment(*doc.gauss);
  else
    throw param_error("region document needs parameters");
  out << ",\n";
  detail::emit_constraints(out, doc.region, "  ");
  out << "\n}\n";
  return out.str();
}

/// Accepts exactly what region_to_json emits. Vertices are ignored on
/// input; parsing then re-emitting reproduces the original bytes.
inline RegionDoc region_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw param_error(std::string("region json: ") + e.what());
  }
  RegionDoc doc;
  try {
    const auto& params = j.at("params");
    const std::string model = params.at("model").get<std::string>();
    if (model == "deterministic") {
      doc.det = DetParams{params.at("m").get<int>(), params.at("n").get<int>(),
                          params.at("c").get<int>()};
      doc.det->validate();
    } else if (model == "gaussian") {
      doc.gauss = GaussParams{params.at("snr").get<double>(), params.at("inr").get<double>(),
                              params.at("cg").get<double>()};
      doc.gauss->validate();
    } else {
      throw param_error("region json: unknown model '" + model + "'");
    }
    for (const auto& c : j.at("constraints"))
      doc.region.constraints.push_back(
          {c.at("a1").get<double>(), c.at("a2").get<double>(), c.at("b").get<double>()});
  } catch (const nlohmann::json::exception& e) {
    throw param_error(std::string("region json: ") + e.what());
  }
  geom::validate(doc.region);
  return doc;
}

inline std::string region_vertices_csv(const RateRegion& r) {
  std::ostringstream out;
  out << "r1,r2\n";
  for (const RatePair& p : vertices(r)) out << fmt6(p.r1) << ',' << fmt6(p.r2) << '\n';
  return out.str();
}

/// One labeled region per requested bound family.
struct LabeledRegion {
  std::string label;
  RateRegion region;
};

inline std::string gauss_regions_json(const GaussParams& g,
                                      const std::vector<LabeledRegion>& regions) {
  std::ostringstream out;
  out << "{\n  \"params\": " << params_json_fragment(g) << ",\n  \"regions\": [\n";
  for (std::size_t i = 0; i < regions.size(); ++i) {
    out << "    {\n      \"theorem\": \"" << detail::json_escape(regions[i].label) << "\",\n";
    detail::emit_constraints(out, regions[i].region, "      ");
    out << "\n    }" << (i + 1 < regions.size() ? "," : "") << '\n';
  }
  out << "  ]\n}\n";
  return out.str();
}

inline std::string gauss_regions_csv(const std::vector<LabeledRegion>& regions) {
  std::ostringstream out;
  out << "theorem,r1,r2\n";
  for (const LabeledRegion& lr : regions)
    for (const RatePair& p : vertices(lr.region))
      out << lr.label << ',' << fmt6(p.r1) << ',' << fmt6(p.r2) << '\n';
  return out.str();
}

inline std::string scheme_report_json_fragment(const SchemeReport& rep) {
  std::ostringstream out;
  out << "{\"r1\": " << rep.r1 << ", \"r2\": " << rep.r2
      << ", \"leakage_bits\": " << fmt6(rep.leakage_bits)
      << ", \"secure\": " << (rep.secure ? "true" : "false") << ", \"decodable\": ["
      << (rep.decodable1 ? "true" : "false") << ", " << (rep.decodable2 ? "true" : "false")
      << "]}";
  return out.str();
}

inline std::string scheme_report_json(const SchemeReport& rep) {
  return scheme_report_json_fragment(rep) + "\n";
}

inline std::string scheme_report_csv(const SchemeReport& rep, const std::string& label = "") {
  std::ostringstream out;
  if (label.empty())
    out << "r1,r2,leakage_bits,secure,decodable1,decodable2\n";
  else
    out << label << ',';
  out << rep.r1 << ',' << rep.r2 << ',' << fmt6(rep.leakage_bits) << ','
      << (rep.secure ? "true" : "false") << ',' << (rep.decodable1 ? "true" : "false") << ','
      << (rep.decodable2 ? "true" : "false") << '\n';
  return out.str();
}

inline std::string corner_schemes_json(const SchemeReport& a, const SchemeReport& b) {
  return "{\n  \"scheme_a\": " + scheme_report_json_fragment(a) +
         ",\n  \"scheme_b\": " + scheme_report_json_fragment(b) + "\n}\n";
}

inline std::string corner_schemes_csv(const SchemeReport& a, const SchemeReport& b) {
  return "scheme,r1,r2,leakage_bits,secure,decodable1,decodable2\n" + scheme_report_csv(a, "a") +
         scheme_report_csv(b, "b");
}

inline std::string gap_report_json(const GapReport& rep) {
  std::ostringstream out;
  out << "{\n  \"mapping\": {\"m\": " << rep.det.m << ", \"n\": " << rep.det.n
      << ", \"c\": " << rep.det.c << ", \"snr\": " << fmt6(rep.gauss.snr)
      << ", \"inr\": " << fmt6(rep.gauss.inr) << ", \"cg\": " << fmt6(rep.gauss.cg) << "},\n";
  out << "  \"gaps\": {\n";
  for (std::size_t i = 0; i < rep.gaps.size(); ++i)
    out << "    \"" << detail::json_escape(rep.gaps[i].first) << "\": " << fmt6(rep.gaps[i].second)
        << (i + 1 < rep.gaps.size() ? "," : "") << '\n';
  out << "  },\n  \"max_gap\": " << fmt6(rep.max_gap) << "\n}\n";
  return out.str();
}

inline std::string gap_report_csv(const GapReport& rep) {
  std::ostringstream out;
  out << "bound,gap_bits\n";
  for (const auto& [name, gap] : rep.gaps) out << name << ',' << fmt6(gap) << '\n';
  return out.str();
}

/// One sweep row per (cg, theorem, bound) triple.
struct SweepRow {
  double snr = 0;
  double inr = 0;
  double cg = 0;
  std::string theorem;
  std::string bound;  // r1, r2 or sum
  double value = 0;
};

inline std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "snr,inr,cg,theorem,bound,value\n";
  for (const SweepRow& r : rows)
    out << fmt6(r.snr) << ',' << fmt6(r.inr) << ',' << fmt6(r.cg) << ',' << r.theorem << ','
        << r.bound << ',' << fmt6(r.value) << '\n';
  return out.str();
}

inline std::string sweep_json(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "[\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const SweepRow& r = rows[i];
    out << "  {\"snr\": " << fmt6(r.snr) << ", \"inr\": " << fmt6(r.inr)
        << ", \"cg\": " << fmt6(r.cg) << ", \"theorem\": \"" << r.theorem << "\", \"bound\": \""
        << r.bound << "\", \"value\": " << fmt6(r.value) << '}'
        << (i + 1 < rows.size() ? "," : "") << '\n';
  }
  out << "]\n";
  return out.str();
}

}  // namespace zic
