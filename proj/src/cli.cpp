#include "aspectral/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aspectral/aspectrum.hpp"
#include "aspectral/errors.hpp"
#include "aspectral/laws.hpp"
#include "aspectral/matrix_io.hpp"
#include "aspectral/shiftlab.hpp"
#include "aspectral/weightspace.hpp"

namespace aspectral {

namespace {

namespace fs = std::filesystem;

// Short human-readable form; machine outputs use format_double.
std::string show(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string show(Complex z) { return "(" + show(z.real()) + ", " + show(z.imag()) + ")"; }

struct GlobalOptions {
  std::optional<double> rank_rel_tol;
  std::optional<double> residual_tol;
  std::optional<double> set_match_tol;
  std::optional<double> psd_clamp_tol;
  bool serial = false;

  ToleranceConfig tolerances() const {
    ToleranceConfig t;
    if (rank_rel_tol) t.rank_rel_tol = *rank_rel_tol;
    if (residual_tol) t.residual_tol = *residual_tol;
    if (set_match_tol) t.set_match_tol = *set_match_tol;
    if (psd_clamp_tol) t.psd_clamp_tol = *psd_clamp_tol;
    t.validate();
    return t;
  }

  std::map<std::string, double> overrides() const {
    std::map<std::string, double> m;
    if (rank_rel_tol) m["rank_rel_tol"] = *rank_rel_tol;
    if (residual_tol) m["residual_tol"] = *residual_tol;
    if (set_match_tol) m["set_match_tol"] = *set_match_tol;
    if (psd_clamp_tol) m["psd_clamp_tol"] = *psd_clamp_tol;
    return m;
  }

  Execution execution() const { return serial ? Execution::serial : Execution::parallel; }
};

struct Inputs {
  PositiveWeight weight;
  ComplexMatrix op;
};

Inputs load_inputs(const std::string& weight_path, const std::string& op_path,
                   const GlobalOptions& g) {
  const ComplexMatrix a = read_matrix_file(weight_path);
  const ComplexMatrix t = read_matrix_file(op_path);
  require_square(a, "weight");
  require_square(t, "operator");
  if (a.rows() != t.rows())
    throw DimensionMismatch("weight is " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.rows()) + ", operator is " +
                            std::to_string(t.rows()) + "x" + std::to_string(t.rows()));
  return {make_weight(a, g.tolerances()), t};
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw ParseError("write to '" + path + "' failed");
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw InvalidArgument("'" + item + "' is not an integer");
    }
    if (used != item.size()) throw InvalidArgument("'" + item + "' is not an integer");
    values.push_back(v);
  }
  if (values.empty()) throw InvalidArgument("empty integer list");
  return values;
}

std::vector<std::string> parse_id_list(const std::string& text) {
  std::vector<std::string> ids;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) ids.push_back(item);
  return ids;
}

std::pair<int, int> parse_dims(const std::string& text) {
  const auto dash = text.find('-');
  if (dash == std::string::npos) {
    const int d = parse_int_list(text).at(0);
    return {d, d};
  }
  return {parse_int_list(text.substr(0, dash)).at(0), parse_int_list(text.substr(dash + 1)).at(0)};
}

RunManifest make_manifest(const std::string& command, const std::vector<std::string>& args,
                          const GlobalOptions& g, std::uint64_t seed) {
  RunManifest m;
  m.command = command;
  m.arguments = args;
  m.tolerance_overrides = g.overrides();
  m.seed = seed;
  m.version = kVersion;
  m.timestamp = utc_timestamp();
  return m;
}

// --- subcommands ----------------------------------------------------------

struct NormArgs {
  std::string weight, op;
};

int cmd_norm(const NormArgs& a, const GlobalOptions& g, std::ostream& out) {
  const Inputs in = load_inputs(a.weight, a.op, g);
  if (!membership(in.weight, in.op)) {
    out << "membership: not in M^A\n"
        << "||T||_A = inf\n"
        << "||L||_A = undefined\n";
    return kExitNotApplicable;
  }
  const ComplexMatrix l = half_adjoint(in.weight, in.op);
  out << "membership: in M^A\n"
      << "||T||_A = " << show(operator_a_seminorm(in.weight, in.op)) << "\n"
      << "||L||_A = " << show(operator_a_seminorm(in.weight, l)) << "\n"
      << "compression: " << in.weight.rank() << "x" << in.weight.rank() << "\n";
  return kExitOk;
}

struct AdjointArgs {
  std::string weight, op, out_path;
  bool half = false;
};

int cmd_adjoint(const AdjointArgs& a, const GlobalOptions& g, std::ostream& out) {
  const Inputs in = load_inputs(a.weight, a.op, g);
  if (!membership(in.weight, in.op)) {
    out << "membership: not in M^A\n";
    return kExitNotApplicable;
  }
  const ComplexMatrix adj = a.half ? half_adjoint(in.weight, in.op) : a_adjoint(in.weight, in.op);
  if (a.out_path.empty())
    out << matrix_to_json(adj);
  else
    write_matrix_file(a.out_path, adj);
  return kExitOk;
}

struct SpectrumArgs {
  std::string weight, op, method = "compression";
  int doublings = 12;
  bool json = false;
};

int cmd_spectrum(const SpectrumArgs& a, const GlobalOptions& g, std::ostream& out) {
  const SpectrumMethod method = parse_spectrum_method(a.method);
  const Inputs in = load_inputs(a.weight, a.op, g);
  if (!membership(in.weight, in.op)) {
    out << "membership: not in M^A\n";
    return kExitNotApplicable;
  }
  SpectrumReport report;
  switch (method) {
    case SpectrumMethod::compression: report = a_spectrum(in.weight, in.op); break;
    case SpectrumMethod::pure_state: report = pure_state_spectrum(in.weight, in.op); break;
    case SpectrumMethod::gelfand_radius_only: {
      const GelfandRadius gr = a_radius_gelfand(in.weight, in.op, a.doublings);
      report.method = method;
      report.radius = gr.radius;
      report.residuals.underflow = gr.underflow;
      report.weight_rank = in.weight.rank();
      break;
    }
  }
  if (a.json) {
    out << spectrum_to_json(report);
    return kExitOk;
  }
  out << "method: " << to_string(report.method) << "\n";
  if (method != SpectrumMethod::gelfand_radius_only) {
    out << "points:";
    for (const Complex& p : report.points) out << ' ' << show(p);
    out << "\n";
  }
  out << "radius: " << show(report.radius) << "\n"
      << "weight rank: " << report.weight_rank << "\n";
  const SpectrumDiagnostics& d = report.residuals;
  switch (method) {
    case SpectrumMethod::compression:
      out << "eig residual: " << show(d.eig_residual)
          << (d.clustered ? " (clustered eigenvalues skipped)" : "") << "\n";
      break;
    case SpectrumMethod::pure_state:
      out << "certified pure states: " << d.certified << "\n"
          << "max |tr(QP) - 1|: " << show(d.trace_qp_defect) << "\n";
      if (d.degenerate_eigenvectors) out << "degenerate eigenvectors: fell back to compression\n";
      break;
    case SpectrumMethod::gelfand_radius_only:
      out << "doublings: " << a.doublings << "\n";
      if (d.underflow) out << "underflow: iterates collapsed, radius reported as 0\n";
      break;
  }
  return kExitOk;
}

struct InvertArgs {
  std::string weight, op, route = "compression", out_path;
};

int cmd_invert(const InvertArgs& a, const GlobalOptions& g, std::ostream& out) {
  const InvertibilityRoute route = parse_invertibility_route(a.route);
  const Inputs in = load_inputs(a.weight, a.op, g);
  if (!membership(in.weight, in.op)) {
    out << "membership: not in M^A\n";
    return kExitNotApplicable;
  }
  const InvertibilityVerdict v = a_invertible(in.weight, in.op, route);
  out << "route: " << to_string(v.route) << "\n"
      << "A-invertible: " << (v.invertible ? "yes" : "no") << "\n"
      << "margin: " << show(v.margin) << "\n";
  if (v.failing != FailingCondition::none) out << "failing condition: " << to_string(v.failing) << "\n";
  if (!v.invertible) return kExitNotApplicable;
  if (!a.out_path.empty()) {
    write_matrix_file(a.out_path, *v.inverse);
    out << "inverse written to " << a.out_path << "\n";
  }
  return kExitOk;
}

struct LawsArgs {
  std::uint64_t seed = 1;
  int trials = 200;
  std::string dims = "2-8";
  std::string laws;
  std::string rank_policy = "mixed";
  double scale = 1.0;
  bool json = false;
  bool timing = false;
  std::string counterexample_dir = "counterexamples";
  std::string manifest;
};

void write_counterexamples(const std::string& dir, const std::vector<LawReport>& reports,
                           std::ostream& out) {
  for (const LawReport& r : reports) {
    if (!r.counterexample) continue;
    const fs::path base = fs::path(dir) / r.law_id;
    std::error_code ec;
    fs::create_directories(base, ec);
    if (ec) throw ParseError("cannot create '" + base.string() + "': " + ec.message());
    const Witness& w = *r.counterexample;
    write_text((base / "witness.json").string(), witness_to_json(r.law_id, w));
    write_matrix_file((base / "weight.json").string(), w.weight);
    for (const auto& [name, m] : w.operators) write_matrix_file((base / (name + ".json")).string(), m);
    out << "counterexample for " << r.law_id << " written to " << base.string() << "\n";
  }
}

int cmd_laws(const LawsArgs& a, const GlobalOptions& g, const std::vector<std::string>& argv,
             std::ostream& out, std::ostream& err) {
  FuzzConfig cfg;
  cfg.seed = a.seed;
  cfg.trials = a.trials;
  std::tie(cfg.dim_min, cfg.dim_max) = parse_dims(a.dims);
  cfg.rank_policy = parse_rank_policy(a.rank_policy);
  cfg.scale = a.scale;
  cfg.tolerances = g.tolerances();
  cfg.validate();

  const std::vector<std::string> ids = a.laws.empty() ? law_ids() : parse_id_list(a.laws);
  for (const std::string& id : ids) {
    bool known = false;
    for (const std::string& k : law_ids()) known = known || k == id;
    if (!known) throw UnknownLaw("'" + id + "'");
  }
  const std::vector<LawReport> reports = run_suite(cfg, ids, g.execution());

  bool all_ok = true;
  for (const LawReport& r : reports) all_ok = all_ok && r.ok();

  if (a.json) {
    out << law_reports_to_json(cfg, reports, a.timing);
  } else {
    char line[160];
    std::snprintf(line, sizeof line, "%-22s %7s %7s %12s %16s  %s\n", "law", "trials", "passed",
                  "inconclusive", "worst_deviation", "status");
    out << line;
    for (const LawReport& r : reports) {
      std::snprintf(line, sizeof line, "%-22s %7d %7d %12d %16.3e  %s\n", r.law_id.c_str(),
                    r.trials, r.passed, r.inconclusive, r.worst_deviation,
                    r.ok() ? "pass" : "FAIL");
      out << line;
      if (a.timing) out << "  elapsed " << show(r.elapsed_seconds) << " s\n";
    }
  }
  if (!all_ok && !a.counterexample_dir.empty()) {
    std::ostringstream notes;
    write_counterexamples(a.counterexample_dir, reports, notes);
    (a.json ? err : out) << notes.str();
  }
  if (!a.manifest.empty()) write_text(a.manifest, manifest_to_json(make_manifest("laws", argv, g, cfg.seed)));
  return all_ok ? kExitOk : kExitNotApplicable;
}

struct ShiftlabArgs {
  std::string model = "bilateral_factorial";
  std::string n_list = "20,40,60";
  double grid = 0.25;
  std::string out_path = "shiftlab.csv";
  std::string scores_path;
  std::string manifest_path;
  std::string ratio_n;
  bool log_domain = false;
};

int cmd_shiftlab(const ShiftlabArgs& a, const GlobalOptions& g,
                 const std::vector<std::string>& argv, std::ostream& out) {
  const ShiftKind kind = parse_shift_kind(a.model);
  const std::vector<int> n_list = parse_int_list(a.n_list);
  for (int n : n_list) make_shift_model(kind, n);  // validates every truncation up front

  if (kind == ShiftKind::unilateral_halved) {
    for (int n : n_list) {
      const BuiltModel built = build_model(kind, n);
      out << "norms (N=" << n << "): " << show(operator_a_seminorm(built.weight, built.T)) << ", "
          << show(operator_a_seminorm(built.weight, *built.L)) << "\n";
    }
  }

  if (!a.ratio_n.empty()) {
    const std::vector<int> indices = parse_int_list(a.ratio_n);
    int n_max = 0;
    for (int n : n_list) n_max = std::max(n_max, n);
    const ShiftModel model = make_shift_model(
        kind, n_max, a.log_domain ? WeightScaleMode::log_domain : WeightScaleMode::linear);
    const std::vector<double> ratios = vector_ratio_probe(model, RatioProbe::adjoint_shift, indices);
    for (std::size_t i = 0; i < indices.size(); ++i)
      out << "ratio (n=" << indices[i] << "): " << show(ratios[i]) << "\n";
  }

  const DiscReport report = disc_report(kind, a.grid, n_list, g.execution());
  {
    std::ofstream csv(a.out_path);
    if (!csv) throw ParseError("cannot open '" + a.out_path + "' for writing");
    write_scan_csv(csv, report.rows);
  }
  const fs::path out_path(a.out_path);
  const std::string scores = a.scores_path.empty()
                                 ? (out_path.parent_path() / (out_path.stem().string() + "_scores.csv")).string()
                                 : a.scores_path;
  {
    std::ofstream csv(scores);
    if (!csv) throw ParseError("cannot open '" + scores + "' for writing");
    write_disc_csv(csv, report);
  }
  const std::string manifest = a.manifest_path.empty() ? a.out_path + ".manifest.json" : a.manifest_path;
  write_text(manifest, manifest_to_json(make_manifest("shiftlab", argv, g, 0)));

  out << "model: " << to_string(kind) << "\n"
      << "grid points: " << report.points.size() << " (step " << show(a.grid) << ")\n"
      << "divergent: " << report.divergent_count() << "\n"
      << "bounded: " << report.bounded_count() << "\n"
      << "scan csv: " << a.out_path << "\n"
      << "scores csv: " << scores << "\n"
      << "manifest: " << manifest << "\n";
  return kExitOk;
}

int exit_code_for(const Error& e) {
  if (dynamic_cast<const NotInMA*>(&e) || dynamic_cast<const NotAInvertible*>(&e) ||
      dynamic_cast<const ConvergenceFailure*>(&e))
    return kExitNotApplicable;
  return kExitUsage;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"A-weighted spectral toolkit for matrix algebras", "aspectral"};
  app.require_subcommand(1);
  GlobalOptions g;
  app.add_option("--rank-rel-tol", g.rank_rel_tol, "relative singular-value cutoff");
  app.add_option("--residual-tol", g.residual_tol, "equation-residual acceptance");
  app.add_option("--set-match-tol", g.set_match_tol, "spectrum-set matching tolerance");
  app.add_option("--psd-clamp-tol", g.psd_clamp_tol, "negative-eigenvalue clamp bound");
  app.add_flag("--serial", g.serial, "disable OpenMP parallel loops");

  NormArgs norm;
  auto* norm_cmd = app.add_subcommand("norm", "membership verdict and A-seminorms of T and its A^{1/2}-adjoint");
  norm_cmd->add_option("weight", norm.weight, "weight MatrixFile")->required();
  norm_cmd->add_option("operator", norm.op, "operator MatrixFile")->required();

  AdjointArgs adjoint;
  auto* adjoint_cmd = app.add_subcommand("adjoint", "canonical A-adjoint A^+ T* A");
  adjoint_cmd->add_option("weight", adjoint.weight, "weight MatrixFile")->required();
  adjoint_cmd->add_option("operator", adjoint.op, "operator MatrixFile")->required();
  adjoint_cmd->add_flag("--half", adjoint.half, "emit the A^{1/2}-adjoint instead");
  adjoint_cmd->add_option("--out", adjoint.out_path, "write the MatrixFile here instead of stdout");

  SpectrumArgs spectrum;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "A-spectrum and A-spectral radius");
  spectrum_cmd->add_option("weight", spectrum.weight, "weight MatrixFile")->required();
  spectrum_cmd->add_option("operator", spectrum.op, "operator MatrixFile")->required();
  spectrum_cmd->add_option("--method", spectrum.method, "compression | pure_state | gelfand")
      ->capture_default_str();
  spectrum_cmd->add_option("--doublings", spectrum.doublings, "squarings for the gelfand method")
      ->capture_default_str()
      ->check(CLI::Range(0, 60));
  spectrum_cmd->add_flag("--json", spectrum.json, "machine-readable report");

  InvertArgs invert;
  auto* invert_cmd = app.add_subcommand("invert", "A-invertibility verdict and A-inverse");
  invert_cmd->add_option("weight", invert.weight, "weight MatrixFile")->required();
  invert_cmd->add_option("operator", invert.op, "operator MatrixFile")->required();
  invert_cmd->add_option("--route", invert.route, "compression | douglas")->capture_default_str();
  invert_cmd->add_option("--out", invert.out_path, "write the A-inverse MatrixFile here");

  LawsArgs laws;
  auto* laws_cmd = app.add_subcommand("laws", "seeded property fuzzing of the A-spectral laws");
  laws_cmd->add_option("--seed", laws.seed, "suite seed")->capture_default_str();
  laws_cmd->add_option("--trials", laws.trials, "trials per law")->capture_default_str();
  laws_cmd->add_option("--dims", laws.dims, "dimension range, e.g. 2-8")->capture_default_str();
  laws_cmd->add_option("--laws", laws.laws, "comma-separated law ids (default: all)");
  laws_cmd->add_option("--rank-policy", laws.rank_policy, "full | deficient | mixed")
      ->capture_default_str();
  laws_cmd->add_option("--scale", laws.scale, "operator entry scale")->capture_default_str();
  laws_cmd->add_flag("--json", laws.json, "machine-readable report");
  laws_cmd->add_flag("--timing", laws.timing, "include wall-clock timings");
  laws_cmd->add_option("--counterexample-dir", laws.counterexample_dir,
                       "where replay bundles of failing trials go")
      ->capture_default_str();
  laws_cmd->add_option("--manifest", laws.manifest, "write a RunManifest here");

  ShiftlabArgs shift;
  auto* shift_cmd = app.add_subcommand("shiftlab", "truncated weighted-shift resolvent scans");
  shift_cmd->add_option("--model", shift.model, "unilateral_halved | bilateral_factorial")
      ->capture_default_str();
  shift_cmd->add_option("--N-list", shift.n_list, "comma-separated truncation sizes")
      ->capture_default_str();
  shift_cmd->add_option("--grid", shift.grid, "grid step on [-1.5, 1.5]^2")->capture_default_str();
  shift_cmd->add_option("--out", shift.out_path, "scan CSV path")->capture_default_str();
  shift_cmd->add_option("--scores", shift.scores_path, "per-lambda score CSV (default: <out>_scores.csv)");
  shift_cmd->add_option("--manifest", shift.manifest_path, "RunManifest path (default: <out>.manifest.json)");
  shift_cmd->add_option("--ratio-n", shift.ratio_n, "indices for the vector ratio probe");
  shift_cmd->add_flag("--log-domain", shift.log_domain, "evaluate the ratio probe in log arithmetic");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);

  try {
    if (*norm_cmd) return cmd_norm(norm, g, out);
    if (*adjoint_cmd) return cmd_adjoint(adjoint, g, out);
    if (*spectrum_cmd) return cmd_spectrum(spectrum, g, out);
    if (*invert_cmd) return cmd_invert(invert, g, out);
    if (*laws_cmd) return cmd_laws(laws, g, args, out, err);
    if (*shift_cmd) return cmd_shiftlab(shift, g, args, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace aspectral
