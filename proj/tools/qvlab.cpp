// qvlab: command-line front end for the knot-invariant and quantization modules.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "qvlab/acurve.hpp"
#include "qvlab/asymfit.hpp"
#include "qvlab/bracket.hpp"
#include "qvlab/cjones.hpp"
#include "qvlab/errors.hpp"
#include "qvlab/knot_table.hpp"
#include "qvlab/qrec.hpp"
#include "qvlab/quantize.hpp"
#include "qvlab/report.hpp"

namespace {

using namespace qvl;

struct RunConfig {
  unsigned digits = 64;
  std::string format = "json";
  std::string out;
  std::string table = QVLAB_DEFAULT_TABLE;
  std::string knot;
  std::string n_range;
  std::string u = "ipi";
  int order = 3;
  int degree = 14;
  std::uint64_t seed = 1;
};

struct Range {
  int lo;
  int hi;
};

Range parse_range(const std::string& text, Range fallback) {
  if (text.empty()) return fallback;
  const auto colon = text.find(':');
  try {
    std::size_t used = 0;
    if (colon == std::string::npos) {
      const int n = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {n, n};
    }
    const std::string a = text.substr(0, colon);
    const std::string b = text.substr(colon + 1);
    Range r{std::stoi(a, &used), 0};
    if (used != a.size()) throw std::invalid_argument(text);
    r.hi = std::stoi(b, &used);
    if (used != b.size()) throw std::invalid_argument(text);
    if (r.lo < 1 || r.hi < r.lo) throw InputError("--N range must satisfy 1 <= a <= b");
    return r;
  } catch (const std::logic_error&) {
    throw InputError("--N expects a:b or a single integer, got '" + text + "'");
  }
}

std::vector<int> range_values(Range r, int step) {
  std::vector<int> out;
  for (int n = r.lo; n <= r.hi; n += step) out.push_back(n);
  return out;
}

void emit(const RunConfig& cfg, const Report& report) {
  const std::string text = report.render(parse_format(cfg.format));
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw InputError("cannot write " + cfg.out);
  f << text;
}

Report base_report(const std::string& command, const RunConfig& cfg) {
  Report r(command, 20);
  r.meta("digits", std::to_string(cfg.digits));
  return r;
}

void cmd_jones(const RunConfig& cfg) {
  if (cfg.knot.empty()) throw InputError("jones needs a knot name");
  const KnotTable table = KnotTable::load(cfg.table);
  const KnotRecord& rec = table.get(cfg.knot);
  Report report = base_report("jones", cfg);
  report.meta("knot", rec.name);
  if (cfg.n_range.empty()) {
    report.row().text("knot", rec.name).laurent("jones", jones(rec.diagram));
  } else {
    const Range r = parse_range(cfg.n_range, {2, 2});
    if (rec.diagram.is_link()) throw InputError("colored Jones polynomials need a knot, not a link");
    for (int n = r.lo; n <= r.hi; ++n) {
      report.row().exact("N", n).laurent("colored_jones", colored_jones_by_cabling(rec.diagram, n));
    }
  }
  emit(cfg, report);
}

void require_figure_eight(const RunConfig& cfg, const std::string& command) {
  if (!cfg.knot.empty() && cfg.knot != "4_1") {
    throw InputError(command + " is implemented for the figure-eight knot (4_1) only");
  }
}

void cmd_kashaev(const RunConfig& cfg) {
  require_figure_eight(cfg, "kashaev");
  const Range r = parse_range(cfg.n_range, {1, 10});
  PrecisionScope scope(cfg.digits);
  Report report = base_report("kashaev", cfg);
  report.meta("knot", "4_1");
  for (int n = r.lo; n <= r.hi; ++n) {
    const Certified v = kashaev_41(n, cfg.digits);
    report.row().exact("N", n).complex("V", v.value, v.error);
  }
  emit(cfg, report);
}

void cmd_volume(const RunConfig& cfg) {
  require_figure_eight(cfg, "volume");
  PrecisionScope scope(cfg.digits);
  const BigComplex u = parse_complex(cfg.u);
  const BivarPoly a = BivarPoly::figure_eight();
  const BranchPoint seed = geometric_seed_41();
  const BranchPoint bp = is_complete_point(u) ? seed : solve_branch(a, u, seed);
  Certified ics = ics_path(a, u);
  // Never report less than the rounding level of the working precision.
  const Real floor = ten_to_minus(cfg.digits - 4);
  if (ics.error < floor) ics.error = floor;
  const CSVolume cv = cs_volume(u, ics.value, bp.v);
  Report report = base_report("volume", cfg);
  report.meta("knot", "4_1").meta("u", cfg.u);
  report.row()
      .complex("u", u, Real(0))
      .complex("l", bp.l, Real(0))
      .complex("ics", ics.value, ics.error)
      .complex("ics_closed", ics_closed_41(u), Real(0))
      .real("vol", cv.vol, ics.error)
      .real("cs", cv.cs, ics.error);
  emit(cfg, report);
}

void cmd_fit(const RunConfig& cfg, int step, bool constrain) {
  require_figure_eight(cfg, "fit");
  PrecisionScope scope(cfg.digits);
  const BigComplex u = parse_complex(cfg.u);
  const Range r = parse_range(cfg.n_range, {100, 800});
  if (step < 1) throw InputError("--step must be positive");
  const std::vector<SequenceSample> samples = build_sequence(u, range_values(r, step), cfg.digits);
  FitOptions options;
  options.model_order = cfg.order;
  options.constrain_log = constrain;
  const FitReport fit = fit_expansion(samples, options);

  Report report = base_report("fit", cfg);
  report.meta("knot", "4_1").meta("u", cfg.u).meta("N", std::to_string(r.lo) + ":" + std::to_string(r.hi));
  report.meta("step", std::to_string(step)).meta("model_order", std::to_string(cfg.order));
  report.meta("log_coefficient", constrain ? "fixed" : "free");
  // Parameter errors are estimated by the held-out residual.
  const Real& err = fit.residual;
  report.row().text("quantity", "a").complex("value", fit.a, err);
  report.row().text("quantity", "b").complex("value", BigComplex(fit.b), constrain ? Real(0) : err);
  report.row().text("quantity", "c").complex("value", fit.c, err);
  for (std::size_t k = 0; k < fit.d.size(); ++k) {
    report.row().text("quantity", "d" + std::to_string(k + 1)).complex("value", fit.d[k], err);
  }
  report.row().text("quantity", "holdout_residual").complex("value", BigComplex(fit.residual), Real(0));
  report.row().text("quantity", "condition").complex("value", BigComplex(fit.condition), Real(0));
  for (const Discrepancy& d : compare_quantum_vc(fit, u)) {
    report.row()
        .text("quantity", "compare:" + d.quantity)
        .complex("value", d.fitted, err)
        .complex("predicted", d.predicted, Real(0))
        .real("relative_error", d.relative_error, Real(0))
        .flag("real_part_only", d.on_real_part);
  }
  emit(cfg, report);
}

void cmd_recursion(const RunConfig& cfg, int max_n, bool inhomogeneous) {
  const std::string knot = cfg.knot.empty() ? "4_1" : cfg.knot;
  JSequence seq;
  if (knot == "4_1") {
    seq = JSequence::figure_eight(max_n);
  } else if (knot == "unknot") {
    seq = JSequence::unknot(max_n);
  } else {
    throw InputError("recursion data is available for 4_1 and unknot only");
  }
  DiscoveryOptions opt;
  opt.order = cfg.order;
  opt.m_degree = cfg.degree;
  opt.inhomogeneous = inhomogeneous;
  const std::optional<Recursion> rec = discover_recursion(seq, opt);

  Report report = base_report("recursion", cfg);
  report.meta("knot", knot).meta("order", std::to_string(cfg.order)).meta("degree", std::to_string(cfg.degree));
  report.meta("max_N", std::to_string(max_n));
  auto& row = report.row().flag("found", rec.has_value());
  if (rec) {
    std::string holdout;
    for (int n : rec->holdout_N) holdout += (holdout.empty() ? "" : " ") + std::to_string(n);
    row.exact("s_degree", rec->s_degree).text("holdout_N", holdout).op("operator", rec->op);
    if (rec->inhomogeneous) row.op("rhs", rec->rhs);
    row.bivar("classical_limit", classical_limit(rec->op));
  }
  emit(cfg, report);
  if (!rec) throw NumericError("no recursion within the search bounds");
}

void cmd_quantize(const RunConfig& cfg, const std::string& check, int max_level) {
  Report report = base_report("quantize", cfg);
  report.meta("check", check).meta("seed", std::to_string(cfg.seed));
  const bool all = check == "all";
  if (!all && check != "graphs" && check != "moyal" && check != "oscillator" && check != "bohr") {
    throw InputError("unknown quantize check '" + check + "'");
  }
  if (all || check == "graphs") {
    for (int n = 1; n <= 3; ++n) {
      report.row()
          .text("check", "graph_count")
          .exact("n", n)
          .exact("count", static_cast<long>(enumerate_graphs(n).size()))
          .exact("expected", static_cast<long>(admissible_graph_count(n)));
    }
  }
  if (all || check == "moyal") {
    const PoissonBivector alpha = PoissonBivector::canonical(2);
    const PolyObs x = PolyObs::variable(0);
    const PolyObs p = PolyObs::variable(1);
    report.row().text("check", "commutator").text("value", (moyal(x, p, alpha) - moyal(p, x, alpha)).to_string());
    std::mt19937_64 rng(cfg.seed);
    int failures = 0;
    const int trials = 20;
    for (int t = 0; t < trials; ++t) {
      const PolyObs f = PolyObs::random(2, 4, rng);
      const PolyObs g = PolyObs::random(2, 4, rng);
      const PolyObs h = PolyObs::random(2, 4, rng);
      if (!(moyal(moyal(f, g, alpha), h, alpha) - moyal(f, moyal(g, h, alpha), alpha)).is_zero()) ++failures;
    }
    report.row().text("check", "associativity").exact("trials", trials).exact("failures", failures);
  }
  if (all || check == "oscillator") {
    if (max_level < 0 || max_level > 6) throw InputError("--levels must be in 0..6");
    for (int n = 0; n <= max_level; ++n) {
      const PolyObs at_level = oscillator_check(n);
      const PolyObs shifted = oscillator_check(n, mpq_class(n + 1));
      report.row()
          .text("check", "oscillator")
          .exact("n", n)
          .text("state", oscillator_state(n).with_gaussian(true).to_string())
          .flag("zero_at_level", at_level.is_zero())
          .flag("zero_off_level", shifted.is_zero());
    }
  }
  if (all || check == "bohr") {
    for (const char* e : {"1/2", "1", "3", "7/2"}) {
      const BohrSommerfeld bs = bohr_sommerfeld(mpq_class(e), 1);
      auto& row = report.row().text("check", "bohr_sommerfeld").text("E_over_hbar", e).flag("quantizable", bs.quantizable);
      if (bs.n) row.exact("level", *bs.n);
    }
  }
  emit(cfg, report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qvlab: colored Jones polynomials, volume conjecture fits, q-recursions and quantization checks"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;

  app.add_option("--digits", cfg.digits, "working precision in decimal digits")->check(CLI::Range(32u, 4096u));
  app.add_option("--format", cfg.format, "report format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", cfg.out, "write the report to this file instead of stdout");
  app.add_option("--table", cfg.table, "knot table (JSON)");
  app.add_option("--seed", cfg.seed, "seed for randomized checks");

  auto* jones_cmd = app.add_subcommand("jones", "Jones polynomial (or colored Jones with --N) of a tabulated knot");
  jones_cmd->add_option("name", cfg.knot, "knot name");
  jones_cmd->add_option("--knot", cfg.knot, "knot name");
  jones_cmd->add_option("--N", cfg.n_range, "colors a:b (1..3, by cabling)");

  auto* kashaev_cmd = app.add_subcommand("kashaev", "Kashaev invariants V_N of 4_1");
  kashaev_cmd->add_option("--N", cfg.n_range, "range a:b");
  kashaev_cmd->add_option("--knot", cfg.knot, "knot name (4_1)");

  auto* volume_cmd = app.add_subcommand("volume", "Chern-Simons invariant, volume and CS of 4_1 at u");
  volume_cmd->add_option("--u", cfg.u, "u as 'ipi', 'ipi+0.3' or 're+im i'");
  volume_cmd->add_option("--knot", cfg.knot, "knot name (4_1)");

  int step = 10;
  bool constrain = false;
  auto* fit_cmd = app.add_subcommand("fit", "asymptotic expansion fit of log J_N (or log V_N at u = ipi)");
  fit_cmd->add_option("--u", cfg.u, "u as 'ipi', 'ipi+0.3' or 're+im i'");
  fit_cmd->add_option("--N", cfg.n_range, "range a:b");
  fit_cmd->add_option("--step", step, "spacing of N values");
  fit_cmd->add_option("--order", cfg.order, "number of 1/N correction terms")->check(CLI::Range(0, 8));
  fit_cmd->add_flag("--constrain", constrain, "fix the log coefficient to 3/2");
  fit_cmd->add_option("--knot", cfg.knot, "knot name (4_1)");

  int max_n = 20;
  bool inhomogeneous = false;
  auto* rec_cmd = app.add_subcommand("recursion", "discover a q-difference operator annihilating J_N");
  rec_cmd->add_option("--knot", cfg.knot, "4_1 or unknot");
  rec_cmd->add_option("--order", cfg.order, "order in l")->check(CLI::Range(0, 6));
  rec_cmd->add_option("--degree", cfg.degree, "degree in m")->check(CLI::Range(0, 32));
  rec_cmd->add_option("--max-N", max_n, "number of J_N values used")->check(CLI::Range(2, 40));
  rec_cmd->add_flag("--inhomogeneous", inhomogeneous, "allow a right-hand side");

  std::string check = "all";
  int levels = 6;
  auto* quant_cmd = app.add_subcommand("quantize", "graph counts, Moyal product, oscillator and Bohr-Sommerfeld checks");
  quant_cmd->add_option("check", check, "graphs | moyal | oscillator | bohr | all");
  quant_cmd->add_option("--levels", levels, "highest oscillator level");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*jones_cmd) cmd_jones(cfg);
    if (*kashaev_cmd) cmd_kashaev(cfg);
    if (*volume_cmd) cmd_volume(cfg);
    if (*fit_cmd) cmd_fit(cfg, step, constrain);
    if (*rec_cmd) cmd_recursion(cfg, max_n, inhomogeneous);
    if (*quant_cmd) cmd_quantize(cfg, check, levels);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
