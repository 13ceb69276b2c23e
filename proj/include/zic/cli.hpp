#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "zic/det_regions.hpp"
#include "zic/det_schemes.hpp"
#include "zic/serialize.hpp"

namespace zic {
namespace detail {

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

// --x and --x-db are mutually exclusive at the parser level; exactly one
// must be present.
struct LinOption {
  double lin = 0;
  double db = 0;
  CLI::Option* lin_opt = nullptr;
  CLI::Option* db_opt = nullptr;

  void add(CLI::App* cmd, const std::string& name, const std::string& what) {
    lin_opt = cmd->add_option("--" + name, lin, what + " (linear)");
    db_opt = cmd->add_option("--" + name + "-db", db, what + " (dB)");
    lin_opt->excludes(db_opt);
    db_opt->excludes(lin_opt);
  }

  double value(const std::string& name) const {
    if (lin_opt->count()) return lin;
    if (db_opt->count()) return db_to_linear(db);
    throw param_error("missing --" + name + " or --" + name + "-db");
  }
};

inline std::vector<std::string> parse_theorem_list(const std::string& spec, bool allow_best) {
  std::vector<std::string> labels;
  std::stringstream in(spec);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    tok.erase(0, tok.find_first_not_of(" \t"));
    tok.erase(tok.find_last_not_of(" \t") + 1);
    if (tok != "4" && tok != "5" && tok != "6" && !(allow_best && tok == "best"))
      throw param_error("--theorems accepts 4, 5, 6" +
                        std::string(allow_best ? " or best" : "") + ", got '" + tok + "'");
    if (std::find(labels.begin(), labels.end(), tok) == labels.end()) labels.push_back(tok);
  }
  if (labels.empty()) throw param_error("--theorems must name at least one bound");
  return labels;
}

inline void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw param_error("cannot write '" + path + "'");
  file << text;
}

}  // namespace detail

/// Entry point behind the zicsec binary. Returns the process exit code:
/// 0 success, 2 usage or input validation failure, 1 internal evaluation
/// failure. Diagnostics go to err, results to out or the -o file.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"secrecy outer bounds for the Z interference channel with unidirectional transmitter cooperation"};
  app.name("zicsec");
  app.require_subcommand(1);

  struct {
    int m = 0, n = 0, c = 0;
    std::string format = "json", output;
  } det;
  CLI::App* det_cmd = app.add_subcommand("det-region", "deterministic-model outer bound region");
  det_cmd->add_option("-m", det.m, "direct-link level count")->required();
  det_cmd->add_option("-n", det.n, "cross-link level count")->required();
  det_cmd->add_option("-C,--coop", det.c, "cooperation bits per channel use");
  det_cmd->add_option("--format", det.format)->check(CLI::IsMember({"json", "csv"}));
  det_cmd->add_option("-o,--output", det.output, "write to file instead of stdout");

  struct {
    detail::LinOption snr, inr;
    double cg = 0;
    std::string theorems = "best", format = "json", output;
  } gauss;
  CLI::App* gauss_cmd = app.add_subcommand("gauss-region", "Gaussian-model outer bound regions");
  gauss.snr.add(gauss_cmd, "snr", "direct-link snr");
  gauss.inr.add(gauss_cmd, "inr", "cross-link inr");
  gauss_cmd->add_option("--cg", gauss.cg, "cooperation rate in bits");
  gauss_cmd->add_option("--theorems", gauss.theorems, "comma list of 4, 5, 6, best");
  gauss_cmd->add_option("--format", gauss.format)->check(CLI::IsMember({"json", "csv"}));
  gauss_cmd->add_option("-o,--output", gauss.output, "write to file instead of stdout");

  struct {
    std::string file, format = "json", output;
  } verify;
  CLI::App* verify_cmd =
      app.add_subcommand("verify-scheme", "evaluate a scheme file: rates, leakage, decodability");
  verify_cmd->add_option("file", verify.file, "scheme file path")->required();
  verify_cmd->add_option("--format", verify.format)->check(CLI::IsMember({"json", "csv"}));
  verify_cmd->add_option("-o,--output", verify.output, "write to file instead of stdout");

  struct {
    int m = 0, n = 0;
    std::string format = "json", output;
  } corner;
  CLI::App* corner_cmd =
      app.add_subcommand("corner-schemes", "build and evaluate both corner schemes");
  corner_cmd->add_option("-m", corner.m, "direct-link level count")->required();
  corner_cmd->add_option("-n", corner.n, "cross-link level count")->required();
  corner_cmd->add_option("--format", corner.format)->check(CLI::IsMember({"json", "csv"}));
  corner_cmd->add_option("-o,--output", corner.output, "write to file instead of stdout");

  struct {
    int m = 0, n = 0, c = 0;
    std::string format = "json", output;
  } corr;
  CLI::App* corr_cmd = app.add_subcommand(
      "correspond", "gap report between deterministic and Gaussian bounds at snr = 2^(2m)");
  corr_cmd->add_option("-m", corr.m, "direct-link level count")->required();
  corr_cmd->add_option("-n", corr.n, "cross-link level count")->required();
  corr_cmd->add_option("-C,--coop", corr.c, "cooperation bits per channel use");
  corr_cmd->add_option("--format", corr.format)->check(CLI::IsMember({"json", "csv"}));
  corr_cmd->add_option("-o,--output", corr.output, "write to file instead of stdout");

  struct {
    detail::LinOption snr, inr;
    double cg_from = 0, cg_to = 3, cg_step = 0.5;
    std::string theorems = "4,5,6", format = "csv", output;
  } sweep;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "bound values over a cooperation-rate sweep");
  sweep.snr.add(sweep_cmd, "snr", "direct-link snr");
  sweep.inr.add(sweep_cmd, "inr", "cross-link inr");
  sweep_cmd->add_option("--cg-from", sweep.cg_from, "first cg value");
  sweep_cmd->add_option("--cg-to", sweep.cg_to, "last cg value (inclusive)");
  sweep_cmd->add_option("--cg-step", sweep.cg_step, "cg increment");
  sweep_cmd->add_option("--theorems", sweep.theorems, "comma list of 4, 5, 6");
  sweep_cmd->add_option("--format", sweep.format)->check(CLI::IsMember({"json", "csv"}));
  sweep_cmd->add_option("-o,--output", sweep.output, "write to file instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(det_cmd)) {
      const DetParams p{det.m, det.n, det.c};
      RegionDoc doc{p, std::nullopt, det_outer_region(p)};
      detail::write_output(
          det.format == "json" ? region_to_json(doc) : region_vertices_csv(doc.region),
          det.output, out);
    } else if (app.got_subcommand(gauss_cmd)) {
      const GaussParams g{gauss.snr.value("snr"), gauss.inr.value("inr"), gauss.cg};
      g.validate();
      std::vector<LabeledRegion> regions;
      for (const std::string& label : detail::parse_theorem_list(gauss.theorems, true)) {
        if (label == "4")
          regions.push_back({label, thm4_region(g)});
        else if (label == "5")
          regions.push_back({label, thm5_region(g)});
        else if (label == "6")
          regions.push_back({label, thm6_region(g)});
        else
          regions.push_back({label, best_outer_region(g)});
      }
      detail::write_output(
          gauss.format == "json" ? gauss_regions_json(g, regions) : gauss_regions_csv(regions),
          gauss.output, out);
    } else if (app.got_subcommand(verify_cmd)) {
      std::ifstream file(verify.file);
      if (!file) throw param_error("cannot open '" + verify.file + "'");
      std::ostringstream text;
      text << file.rdbuf();
      SchemeReport rep;
      try {
        rep = evaluate_scheme(parse_scheme(text.str()));
      } catch (const param_error& e) {
        throw param_error(verify.file + ": " + e.what());
      }
      detail::write_output(
          verify.format == "json" ? scheme_report_json(rep) : scheme_report_csv(rep),
          verify.output, out);
    } else if (app.got_subcommand(corner_cmd)) {
      const DetParams p{corner.m, corner.n, 0};
      const SchemeReport a = evaluate_scheme(corner_scheme_a(p));
      const SchemeReport b = evaluate_scheme(corner_scheme_b(p));
      detail::write_output(
          corner.format == "json" ? corner_schemes_json(a, b) : corner_schemes_csv(a, b),
          corner.output, out);
    } else if (app.got_subcommand(corr_cmd)) {
      const GapReport rep = correspondence_report(DetParams{corr.m, corr.n, corr.c});
      detail::write_output(corr.format == "json" ? gap_report_json(rep) : gap_report_csv(rep),
                           corr.output, out);
    } else if (app.got_subcommand(sweep_cmd)) {
      const double snr = sweep.snr.value("snr"), inr = sweep.inr.value("inr");
      const std::vector<std::string> labels = detail::parse_theorem_list(sweep.theorems, false);
      if (inr > snr &&
          std::find(labels.begin(), labels.end(), "5") != labels.end())
        throw regime_error("--theorems 5 requires inr <= snr");
      if (!(sweep.cg_step > 0)) throw param_error("--cg-step must be > 0");
      if (sweep.cg_to < sweep.cg_from) throw param_error("--cg-to must be >= --cg-from");
      if (sweep.cg_from < 0) throw param_error("--cg-from must be >= 0");
      std::vector<SweepRow> rows;
      for (int i = 0;; ++i) {
        const double cg = sweep.cg_from + i * sweep.cg_step;
        if (cg > sweep.cg_to + 1e-12) break;
        const GaussParams g{snr, inr, cg};
        g.validate();
        for (const std::string& label : labels) {
          double r2 = 0, sum = 0;
          if (label == "4") {
            r2 = single_user_rate(g);
            sum = thm4_sum_bound(g);
          } else if (label == "5") {
            r2 = thm5_r2_bound(g);
            sum = thm5_sum_bound(g);
          } else {
            r2 = thm6_r2_bound(g);
            sum = thm6_sum_bound(g);
          }
          rows.push_back({snr, inr, cg, label, "r1", single_user_rate(g)});
          rows.push_back({snr, inr, cg, label, "r2", r2});
          rows.push_back({snr, inr, cg, label, "sum", sum});
        }
      }
      detail::write_output(sweep.format == "json" ? sweep_json(rows) : sweep_csv(rows),
                           sweep.output, out);
    }
    return 0;
  } catch (const param_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace zic
