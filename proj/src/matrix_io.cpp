#include "aspectral/matrix_io.hpp"

#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "aspectral/errors.hpp"

namespace aspectral {

using nlohmann::json;

namespace {

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json points_json(const std::vector<Complex>& points) {
  json out = json::array();
  for (const Complex& p : points) out.push_back(complex_json(p));
  return out;
}

// JSON has no infinity; unbounded quantities are written as null.
json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string matrix_to_json(const ComplexMatrix& m) {
  if (!is_finite(m)) throw InvalidArgument("cannot serialise a matrix with non-finite entries");
  std::ostringstream os;
  os << "{\"rows\": " << m.rows() << ", \"cols\": " << m.cols() << ", \"data\": [";
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (i + j > 0) os << ", ";
      os << '[' << format_double(m(i, j).real()) << ", " << format_double(m(i, j).imag()) << ']';
    }
  os << "]}\n";
  return os.str();
}

ComplexMatrix matrix_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
  if (!doc.is_object() || !doc.contains("rows") || !doc.contains("cols") || !doc.contains("data"))
    throw ParseError("expected an object with rows, cols and data");
  const json& rows = doc["rows"];
  const json& cols = doc["cols"];
  const json& data = doc["data"];
  if (!rows.is_number_unsigned() || !cols.is_number_unsigned())
    throw ParseError("rows and cols must be non-negative integers");
  if (!data.is_array()) throw ParseError("data must be an array");
  const auto r = rows.get<std::uint64_t>();
  const auto c = cols.get<std::uint64_t>();
  if (data.size() != r * c)
    throw ParseError("data has " + std::to_string(data.size()) + " entries, expected " +
                     std::to_string(r * c));
  ComplexMatrix m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  for (std::size_t k = 0; k < data.size(); ++k) {
    const json& entry = data[k];
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number())
      throw ParseError("entry " + std::to_string(k) + " is not a [re, im] pair");
    const double re = entry[0].get<double>();
    const double im = entry[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im))
      throw ParseError("entry " + std::to_string(k) + " is not finite");
    m(static_cast<Eigen::Index>(k / c), static_cast<Eigen::Index>(k % c)) = Complex(re, im);
  }
  return m;
}

void write_matrix_file(const std::string& path, const ComplexMatrix& m) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  out << matrix_to_json(m);
  if (!out) throw ParseError("write to '" + path + "' failed");
}

ComplexMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return matrix_from_json(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string spectrum_to_json(const SpectrumReport& report) {
  const SpectrumDiagnostics& d = report.residuals;
  json doc = {
      {"method", to_string(report.method)},
      {"points", points_json(report.points)},
      {"radius", report.radius},
      {"weight_rank", report.weight_rank},
      {"residuals",
       {{"eig_residual", d.eig_residual},
        {"trace_qp_defect", d.trace_qp_defect},
        {"clustered", d.clustered},
        {"degenerate_eigenvectors", d.degenerate_eigenvectors},
        {"underflow", d.underflow},
        {"certified", d.certified}}},
  };
  return doc.dump(2) + "\n";
}

std::string law_reports_to_json(const FuzzConfig& cfg, const std::vector<LawReport>& reports,
                                bool include_timing) {
  const ToleranceConfig& t = cfg.tolerances;
  json laws = json::array();
  bool all_ok = true;
  for (const LawReport& r : reports) {
    all_ok = all_ok && r.ok();
    json entry = {
        {"law_id", r.law_id},
        {"trials", r.trials},
        {"passed", r.passed},
        {"inconclusive", r.inconclusive},
        {"worst_deviation", finite_or_null(r.worst_deviation)},
        {"ok", r.ok()},
    };
    if (r.counterexample)
      entry["counterexample"] = {{"seed", r.counterexample->seed},
                                 {"trial", r.counterexample->trial},
                                 {"note", r.counterexample->note}};
    if (include_timing) entry["elapsed_seconds"] = r.elapsed_seconds;
    laws.push_back(std::move(entry));
  }
  json doc = {
      {"seed", cfg.seed},
      {"trials", cfg.trials},
      {"dims", {cfg.dim_min, cfg.dim_max}},
      {"rank_policy", to_string(cfg.rank_policy)},
      {"scale", cfg.scale},
      {"tolerances",
       {{"rank_rel_tol", t.rank_rel_tol},
        {"residual_tol", t.residual_tol},
        {"set_match_tol", t.set_match_tol},
        {"psd_clamp_tol", t.psd_clamp_tol}}},
      {"laws", std::move(laws)},
      {"all_passed", all_ok},
  };
  return doc.dump(2) + "\n";
}

std::string witness_to_json(const std::string& law_id, const Witness& w) {
  json ops = json::object();
  for (const auto& [name, m] : w.operators) ops[name] = json::parse(matrix_to_json(m));
  json doc = {
      {"law_id", law_id},
      {"seed", w.seed},
      {"trial", w.trial},
      {"note", w.note},
      {"weight", json::parse(matrix_to_json(w.weight))},
      {"operators", std::move(ops)},
  };
  return doc.dump(2) + "\n";
}

std::string manifest_to_json(const RunManifest& m) {
  json doc = {
      {"command", m.command},
      {"arguments", m.arguments},
      {"tolerance_overrides", m.tolerance_overrides},
      {"seed", m.seed},
      {"version", m.version},
      {"timestamp", m.timestamp},
  };
  return doc.dump(2) + "\n";
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace aspectral
