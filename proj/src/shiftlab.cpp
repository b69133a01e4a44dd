#include "aspectral/shiftlab.hpp"

#include <cmath>
#include <limits>
#include <ostream>

#include "aspectral/errors.hpp"
#include "aspectral/matrix_io.hpp"

namespace aspectral {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

ComplexMatrix right_shift(int n, double weight) {
  ComplexMatrix t = ComplexMatrix::Zero(n, n);
  for (int p = 0; p + 1 < n; ++p) t(p + 1, p) = weight;
  return t;
}

ScanResult scan_point(const BuiltModel& built, Complex lambda) {
  ScanResult out;
  out.lambda = lambda;
  out.N = built.model.N;
  const int n = built.model.N;
  const ComplexMatrix shifted = built.T - lambda * ComplexMatrix::Identity(n, n);
  // T_N - lambda is lower bidiagonal with constant diagonal -lambda.
  if (std::abs(lambda) <= ToleranceConfig{}.rank_rel_tol * op_norm(shifted)) {
    out.status = ScanStatus::singular;
    out.growth = kInf;
    return out;
  }
  const ComplexMatrix resolvent =
      shifted.triangularView<Eigen::Lower>().solve(ComplexMatrix::Identity(n, n));
  out.growth = operator_a_seminorm(built.weight, resolvent);
  return out;
}

}  // namespace

std::string to_string(ShiftKind k) {
  return k == ShiftKind::unilateral_halved ? "unilateral_halved" : "bilateral_factorial";
}

ShiftKind parse_shift_kind(const std::string& s) {
  if (s == "unilateral_halved") return ShiftKind::unilateral_halved;
  if (s == "bilateral_factorial") return ShiftKind::bilateral_factorial;
  throw InvalidArgument("unknown shift model '" + s + "'");
}

std::string to_string(ScanStatus s) { return s == ScanStatus::finite ? "finite" : "singular"; }

ShiftModel make_shift_model(ShiftKind kind, int N, WeightScaleMode mode) {
  if (N < 4) throw TruncationTooSmall("N = " + std::to_string(N) + " < 4");
  if (kind == ShiftKind::bilateral_factorial && mode == WeightScaleMode::linear &&
      N > kLinearFactorialLimit)
    throw UnderflowRisk("N = " + std::to_string(N) + " exceeds the linear-mode limit " +
                        std::to_string(kLinearFactorialLimit));
  ShiftModel m;
  m.kind = kind;
  m.N = N;
  m.weight_scale_mode = mode;
  m.index_offset = kind == ShiftKind::unilateral_halved ? 0 : -(N / 2);
  m.log_a.resize(static_cast<std::size_t>(N));
  for (int p = 0; p < N; ++p) {
    const int n = m.index_at(p);
    if (kind == ShiftKind::unilateral_halved)
      m.log_a[p] = -n * std::log(2.0);
    else
      m.log_a[p] = n < 0 ? 0.0 : -std::lgamma(n + 1.0);
  }
  return m;
}

ToleranceConfig shift_tolerances() {
  ToleranceConfig tol;
  tol.rank_rel_tol = 1e-300;
  return tol;
}

BuiltModel build_model(ShiftKind kind, int N) {
  ShiftModel model = make_shift_model(kind, N, WeightScaleMode::linear);
  ComplexMatrix a = ComplexMatrix::Zero(N, N);
  for (int p = 0; p < N; ++p) {
    const int n = model.index_at(p);
    double a_n = 1.0;
    if (kind == ShiftKind::unilateral_halved) {
      a_n = std::ldexp(1.0, -n);
    } else {
      for (int k = 2; k <= n; ++k) a_n /= k;
    }
    a(p, p) = a_n * a_n;
  }
  PositiveWeight weight = make_weight(a, shift_tolerances());
  if (kind == ShiftKind::unilateral_halved) {
    ComplexMatrix t = right_shift(N, 0.4);
    ComplexMatrix l = right_shift(N, 0.2).transpose();
    return BuiltModel{std::move(model), std::move(weight), std::move(t), std::move(l)};
  }
  return BuiltModel{std::move(model), std::move(weight), right_shift(N, 1.0), std::nullopt};
}

std::vector<ScanResult> resolvent_scan(ShiftKind kind, const std::vector<Complex>& lambdas,
                                       const std::vector<int>& n_list, Execution exec) {
  std::vector<BuiltModel> models;
  models.reserve(n_list.size());
  for (int n : n_list) models.push_back(build_model(kind, n));
  std::vector<ScanResult> rows(lambdas.size() * n_list.size());
  for_each_index(rows.size(), exec, [&](std::size_t i) {
    rows[i] = scan_point(models[i % n_list.size()], lambdas[i / n_list.size()]);
  });
  return rows;
}

std::vector<double> vector_ratio_probe(const ShiftModel& model, RatioProbe,
                                       const std::vector<int>& n_values) {
  std::optional<BuiltModel> built;
  if (model.weight_scale_mode == WeightScaleMode::linear) built = build_model(model.kind, model.N);

  std::vector<double> ratios;
  ratios.reserve(n_values.size());
  for (int n : n_values) {
    const int p = model.position_of(n);
    if (p < 1 || p > model.N - 2)
      throw IndexOutOfTruncation("index " + std::to_string(n) + " is not interior to the truncation");
    if (!built) {
      ratios.push_back(std::exp(model.log_a[p - 1] - model.log_a[p]));
      continue;
    }
    ComplexVector e = ComplexVector::Zero(model.N);
    e(p) = 1.0;
    const ComplexMatrix& root = built->weight.sqrtA();
    ratios.push_back((root * built->T.adjoint() * e).norm() / (root * e).norm());
  }
  return ratios;
}

DiscPoint score_lambda(const std::vector<ScanResult>& rows) {
  DiscPoint out;
  if (rows.empty()) return out;
  out.lambda = rows.front().lambda;
  bool singular = false;
  for (const ScanResult& r : rows) singular = singular || r.status == ScanStatus::singular;
  if (singular) {
    out.score = kInf;
    out.growth_ratio = kInf;
    out.divergent = true;
    return out;
  }
  const ScanResult* lo = &rows.front();
  const ScanResult* hi = &rows.front();
  double mean_n = 0.0, mean_g = 0.0;
  for (const ScanResult& r : rows) {
    if (r.N < lo->N) lo = &r;
    if (r.N > hi->N) hi = &r;
    mean_n += r.N;
    mean_g += std::log(r.growth);
  }
  mean_n /= rows.size();
  mean_g /= rows.size();
  double sxy = 0.0, sxx = 0.0;
  for (const ScanResult& r : rows) {
    sxy += (r.N - mean_n) * (std::log(r.growth) - mean_g);
    sxx += (r.N - mean_n) * (r.N - mean_n);
  }
  out.score = sxx > 0.0 ? sxy / sxx : 0.0;
  out.growth_ratio = hi->growth / lo->growth;
  out.divergent = out.growth_ratio >= kDivergenceRatio;
  return out;
}

int DiscReport::divergent_count() const {
  int c = 0;
  for (const DiscPoint& p : points) c += p.divergent ? 1 : 0;
  return c;
}

DiscReport disc_report(ShiftKind kind, double grid_step, const std::vector<int>& n_list,
                       Execution exec) {
  if (!(grid_step > 0.0) || grid_step > 3.0) throw InvalidArgument("grid step must lie in (0, 3]");
  if (n_list.size() < 2) throw InvalidArgument("disc report needs at least two truncations");
  const int steps = static_cast<int>(std::floor(3.0 / grid_step + 1e-9));
  std::vector<Complex> lambdas;
  for (int i = 0; i <= steps; ++i)
    for (int j = 0; j <= steps; ++j)
      lambdas.emplace_back(-1.5 + j * grid_step, -1.5 + i * grid_step);

  DiscReport report;
  report.n_list = n_list;
  report.grid_step = grid_step;
  report.rows = resolvent_scan(kind, lambdas, n_list, exec);
  const std::size_t per = n_list.size();
  for (std::size_t k = 0; k < lambdas.size(); ++k) {
    std::vector<ScanResult> rows(report.rows.begin() + k * per, report.rows.begin() + (k + 1) * per);
    report.points.push_back(score_lambda(rows));
  }
  return report;
}

void write_scan_csv(std::ostream& os, const std::vector<ScanResult>& rows) {
  os << "lambda_re,lambda_im,N,growth,status\n";
  for (const ScanResult& r : rows)
    os << format_double(r.lambda.real()) << ',' << format_double(r.lambda.imag()) << ',' << r.N
       << ',' << format_double(r.growth) << ',' << to_string(r.status) << '\n';
}

void write_disc_csv(std::ostream& os, const DiscReport& report) {
  os << "lambda_re,lambda_im,score,growth_ratio,divergent\n";
  for (const DiscPoint& p : report.points)
    os << format_double(p.lambda.real()) << ',' << format_double(p.lambda.imag()) << ','
       << format_double(p.score) << ',' << format_double(p.growth_ratio) << ','
       << (p.divergent ? 1 : 0) << '\n';
}

}  // namespace aspectral
