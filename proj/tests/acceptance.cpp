// Acceptance run: one PASS/FAIL line per criterion. Tolerances and runtime
// budgets are fixed here; the process exits nonzero if any line fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "aspectral/aspectrum.hpp"
#include "aspectral/laws.hpp"
#include "aspectral/matrix_io.hpp"
#include "aspectral/rng.hpp"
#include "aspectral/shiftlab.hpp"
#include "aspectral/weightspace.hpp"

using namespace aspectral;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<Outcome()> run;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// Weights with dims 2-8 and ranks uniform in [1, n].
PositiveWeight draw_mixed_weight(Rng& rng) {
  const int n = rng.uniform_int(2, 8);
  const int r = rng.uniform_int(1, n);
  return random_weight(rng.next_seed(), n, r, 10.0);
}

int distinct_points(const std::vector<Complex>& points, double radius) {
  std::vector<Complex> reps;
  for (const Complex& p : points) {
    bool seen = false;
    for (const Complex& q : reps) seen = seen || std::abs(p - q) <= radius;
    if (!seen) reps.push_back(p);
  }
  return static_cast<int>(reps.size());
}

double distance_to_set(Complex z, const std::vector<Complex>& points) {
  double d = std::numeric_limits<double>::infinity();
  for (const Complex& p : points) d = std::min(d, std::abs(z - p));
  return d;
}

Outcome unilateral_norms() {
  constexpr double kTol = 1e-12;
  double worst = 0.0;
  for (int n : {4, 8, 16, 64}) {
    const BuiltModel m = build_model(ShiftKind::unilateral_halved, n);
    worst = std::max(worst, std::abs(operator_a_seminorm(m.weight, m.T) - 0.2));
    worst = std::max(worst, std::abs(operator_a_seminorm(m.weight, *m.L) - 0.4));
  }
  return {worst <= kTol, "max |err| = " + sci(worst) + " (tol " + sci(kTol) + ")"};
}

Outcome bilateral_ratio() {
  constexpr double kRelTol = 1e-9;
  std::vector<int> ns;
  for (int n = 2; n <= 30; ++n) ns.push_back(n);
  double worst = 0.0;
  for (WeightScaleMode mode : {WeightScaleMode::linear, WeightScaleMode::log_domain}) {
    const ShiftModel model = make_shift_model(ShiftKind::bilateral_factorial, 64, mode);
    const std::vector<double> r = vector_ratio_probe(model, RatioProbe::adjoint_shift, ns);
    for (std::size_t i = 0; i < ns.size(); ++i) worst = std::max(worst, std::abs(r[i] - ns[i]) / ns[i]);
  }
  return {worst <= kRelTol, "max rel err = " + sci(worst) + " over n = 2..30, linear and log (tol " +
                                sci(kRelTol) + ")"};
}

Outcome disc_filling() {
  constexpr double kGrowthFactor = 10.0;
  constexpr double kFlatness = 0.10;
  const auto inside = resolvent_scan(ShiftKind::bilateral_factorial, {0.5}, {20, 60});
  const auto outside = resolvent_scan(ShiftKind::bilateral_factorial, {1.5}, {40, 80});
  const double up = inside[1].growth / inside[0].growth;
  const double drift = std::abs(outside[1].growth / outside[0].growth - 1.0);
  return {up >= kGrowthFactor && drift < kFlatness,
          "lambda=0.5: growth x" + sci(up) + " (need >= 10); lambda=1.5: drift " + sci(drift) +
              " (need < 0.1)"};
}

Outcome weight_identities() {
  Rng rng(kSeed + 4);
  double worst = 0.0;
  bool ok = true;
  for (int i = 0; i < 100; ++i) {
    const PositiveWeight w = draw_mixed_weight(rng);
    const double norm_a = op_norm(w.A());
    const double tol = 1e-8 * (1.0 + norm_a);

    const EigenSystem eig = hermitian_eig(w.A());
    std::vector<Complex> nonzero;
    for (Eigen::Index k = 0; k < eig.values.size(); ++k)
      if (eig.values[k].real() > w.tolerances().rank_rel_tol * norm_a) nonzero.push_back(eig.values[k]);
    const double d_a = hausdorff_distance(a_spectrum(w, w.A()).points, nonzero);
    const double d_p = hausdorff_distance(a_spectrum(w, w.P()).points, {Complex(1.0)});
    const double d_r = std::max(std::abs(a_radius_eig(w, w.A()) - norm_a),
                                std::abs(operator_a_seminorm(w, w.A()) - norm_a));
    const double dev = std::max({d_a, d_p, d_r});
    worst = std::max(worst, dev / tol);
    ok = ok && dev <= tol;
  }
  return {ok, "100 weights, worst deviation / tol = " + sci(worst)};
}

Outcome route_equivalence() {
  FuzzConfig cfg;
  cfg.seed = kSeed + 5;
  const LawReport r = law_invertibility_routes(cfg);
  return {r.trials == 500 && r.ok(),
          std::to_string(r.trials) + " trials, " + std::to_string(r.trials - r.passed) + " disagreements"};
}

Outcome pure_state_oracle() {
  Rng rng(kSeed + 6);
  int mismatches = 0;
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const PositiveWeight w = draw_mixed_weight(rng);
    const ComplexMatrix t = random_member(rng, w, 1.0);
    const ComplexMatrix l = half_adjoint(w, t);
    const double scale = std::max(op_norm(compress(w, t)), op_norm(compress(w, l)));
    const double tol = spectrum_tolerance(w, scale);
    const SpectrumReport cs = a_spectrum(w, t);
    const SetMatch pure = match_multisets(pure_state_spectrum(w, t).points, cs.points, tol);
    const SetMatch conj = match_multisets(cs.points, conjugated(a_spectrum(w, l).points), tol);
    worst = std::max({worst, pure.max_distance / tol, conj.max_distance / tol});
    mismatches += (pure.matched ? 0 : 1) + (conj.matched ? 0 : 1);
  }
  return {mismatches == 0, "200 members, " + std::to_string(mismatches) +
                               " mismatches, worst distance / tol = " + sci(worst)};
}

Outcome gelfand_radius() {
  constexpr double kRel = 2e-2;
  Rng rng(kSeed + 7);
  int used = 0, failures = 0;
  double worst = 0.0;
  while (used < 100) {
    const PositiveWeight w = draw_mixed_weight(rng);
    const ComplexMatrix t = random_member(rng, w, 1.0);
    const double r = a_radius_eig(w, t);
    if (r < 0.1) continue;
    ++used;
    const double err = std::abs(a_radius_gelfand(w, t, 12).radius - r) / (1.0 + r);
    worst = std::max(worst, err);
    if (err > kRel) ++failures;
  }
  return {failures == 0, "100 members, worst |gelfand - eig| / (1 + r) = " + sci(worst) + " (tol " +
                             sci(kRel) + ")"};
}

Outcome law_suite() {
  FuzzConfig cfg;
  cfg.seed = kSeed + 8;
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<LawReport> first = run_suite(cfg, law_ids());
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const std::vector<LawReport> second = run_suite(cfg, law_ids());
  int failures = 0;
  std::string failing;
  for (const LawReport& r : first)
    if (!r.ok()) {
      failures += r.trials - r.passed;
      failing += " " + r.law_id;
    }
  const bool identical = law_reports_to_json(cfg, first) == law_reports_to_json(cfg, second);
  std::string detail = std::to_string(first.size()) + " laws, " + std::to_string(failures) +
                       " failed trials, rerun JSON " + (identical ? "identical" : "DIFFERS") +
                       ", one pass " + sci(seconds) + " s";
  if (!failing.empty()) detail += " [failing:" + failing + "]";
  return {first.size() == 13 && failures == 0 && identical && seconds < 120.0, detail};
}

Outcome gkz_harness() {
  constexpr int kSamples = 200;
  constexpr int kFunctionals = 50;
  Rng rng(kSeed + 9);

  // Constructive: A = a q q*, phi(X) = q* X q.
  const int n = 5;
  const ComplexVector q = rng.gaussian_vector(n).normalized();
  const PositiveWeight w1 = make_weight(2.0 * q * q.adjoint());
  const LinearFunctional phi{q * q.adjoint()};
  double worst = 0.0;
  bool constructive_ok = std::abs(phi(ComplexMatrix::Identity(n, n)) - 1.0) <= 1e-12;
  for (int i = 0; i < kSamples; ++i) {
    const ComplexMatrix x = random_member(rng, w1, 1.0);
    const ComplexMatrix y = random_member(rng, w1, 1.0);
    const double tol = spectrum_tolerance(w1, (1.0 + op_norm(x)) * (1.0 + op_norm(y)));
    const double incl = distance_to_set(phi(x), a_spectrum(w1, x).points);
    const double mult = std::abs(phi(x * y) - phi(x) * phi(y));
    worst = std::max({worst, incl / tol, mult / tol});
    constructive_ok = constructive_ok && incl <= tol && mult <= tol;
  }

  // Random trace functionals: each must be non-multiplicative and fail inclusion.
  int survivors = 0, multiplicative = 0, max_samples = 0;
  for (int k = 0; k < kFunctionals; ++k) {
    const PositiveWeight w = draw_mixed_weight(rng);
    const LinearFunctional psi{rng.gaussian_matrix(w.dim(), w.dim())};
    const ComplexMatrix x0 = random_member(rng, w, 1.0), y0 = random_member(rng, w, 1.0);
    if (std::abs(psi(x0 * y0) - psi(x0) * psi(y0)) <= 1e-6) ++multiplicative;
    int rejected_at = -1;
    for (int i = 0; i < kSamples && rejected_at < 0; ++i) {
      const ComplexMatrix x = random_member(rng, w, 1.0);
      const double tol = spectrum_tolerance(w, op_norm(x) * op_norm(psi.F));
      if (distance_to_set(psi(x), a_spectrum(w, x).points) > tol) rejected_at = i + 1;
    }
    if (rejected_at < 0) ++survivors;
    max_samples = std::max(max_samples, rejected_at);
  }
  return {constructive_ok && survivors == 0 && multiplicative == 0,
          "constructive worst / tol = " + sci(worst) + "; " + std::to_string(kFunctionals) +
              " random functionals, " + std::to_string(survivors) + " survived, slowest rejection after " +
              std::to_string(max_samples) + " samples"};
}

Outcome socle() {
  constexpr int kWeights = 100;
  constexpr int kMembers = 50;
  Rng rng(kSeed + 10);
  int bad_counts = 0, bad_dims = 0;
  for (int k = 0; k < kWeights; ++k) {
    const PositiveWeight w = draw_mixed_weight(rng);
    const int n = w.dim(), r = w.rank();
    int max_distinct = 0;
    bool sizes_ok = true;
    for (int i = 0; i < kMembers; ++i) {
      const ComplexMatrix t = random_member(rng, w, 1.0);
      const auto points = a_spectrum(w, t).points;
      sizes_ok = sizes_ok && static_cast<int>(points.size()) == r;
      max_distinct = std::max(max_distinct, distinct_points(points, spectrum_tolerance(w, op_norm(t))));
    }
    if (max_distinct != r || !sizes_ok) ++bad_counts;

    ComplexMatrix span(n * n, n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) span.col(i * n + j) = (w.A().col(i) * w.A().row(j)).reshaped();
    if (numeric_rank(span, w.tolerances().rank_rel_tol) != r * r) ++bad_dims;
  }
  return {bad_counts == 0 && bad_dims == 0,
          std::to_string(kWeights) + " weights: " + std::to_string(bad_counts) + " point-count mismatches, " +
              std::to_string(bad_dims) + " span-dimension mismatches"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "unilateral shift seminorms, N in {4,8,16,64}", 1.0, unilateral_norms},
      {2, "bilateral shift vector ratio probe", 1.0, bilateral_ratio},
      {3, "disc-filling divergence diagnostic", 30.0, disc_filling},
      {4, "weight-spectrum identities", 10.0, weight_identities},
      {5, "invertibility route equivalence", 30.0, route_equivalence},
      {6, "pure-state oracle and conjugate-adjoint symmetry", 30.0, pure_state_oracle},
      {7, "Gelfand radius vs eigenvalue radius", 20.0, gelfand_radius},
      {8, "full law suite, determinism", 240.0, law_suite},
      {9, "GKZ functional harness", 20.0, gkz_harness},
      {10, "socle point counts and span dimension", 20.0, socle},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = seconds < c.budget_seconds;
    const bool ok = o.ok && in_time;
    failed += ok ? 0 : 1;
    std::printf("%s  %2d  %-50s %s; %.2f s (budget %.0f s%s)\n", ok ? "PASS" : "FAIL", c.id, c.title,
                o.detail.c_str(), seconds, c.budget_seconds, in_time ? "" : ", EXCEEDED");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
