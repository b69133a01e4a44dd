// Trial bodies for every law id. Each body draws its own weight and operators
// from the trial generator and records one or more sub-checks.

#include <algorithm>
#include <cmath>
#include <limits>

#include "aspectral/errors.hpp"
#include "law_support.hpp"

namespace aspectral {

using detail::TrialOutcome;

namespace {

constexpr int kProbeSamples = 50;   // X samples in the forward directions
constexpr int kWitnessBudget = 100;  // X samples in converse witness searches
constexpr int kGkzInclusionSamples = 200;
constexpr int kGkzPairs = 50;

double compressed_norm(const PositiveWeight& w, const ComplexMatrix& t) {
  return op_norm(compress(w, t));
}

double max_modulus(const std::vector<Complex>& points) {
  double r = 0.0;
  for (const Complex& p : points) r = std::max(r, std::abs(p));
  return r;
}

double distance_to_set(Complex z, const std::vector<Complex>& points) {
  double d = std::numeric_limits<double>::infinity();
  for (const Complex& p : points) d = std::min(d, std::abs(z - p));
  return d;
}

int distinct_count(const std::vector<Complex>& points, double radius) {
  std::vector<Complex> reps;
  for (const Complex& p : points)
    if (distance_to_set(p, reps) > radius) reps.push_back(p);
  return static_cast<int>(reps.size());
}

// Multiset identity after removing the excluded values from both sides.
SetMatch match_modulo(const std::vector<Complex>& a, const std::vector<Complex>& b,
                      const std::vector<Complex>& excluded, double tol) {
  return match_multisets(excise(a, excluded, tol), excise(b, excluded, tol), tol);
}

ComplexMatrix kernel_supported(Rng& rng, const PositiveWeight& w, double scale) {
  return from_block_basis(w, detail::random_block_lower(rng, w.dim(), w.rank(), scale, true));
}

TrialOutcome commutation_trial(Rng& rng, const FuzzConfig& cfg) {
  const PositiveWeight w = detail::draw_weight(rng, cfg);
  const ComplexMatrix s = random_member(rng, w, cfg.scale);
  const ComplexMatrix t = random_member(rng, w, cfg.scale);
  const ComplexMatrix st = s * t;
  const ComplexMatrix ts = t * s;
  const double tol = spectrum_tolerance(w, compressed_norm(w, s) * compressed_norm(w, t));
  const auto p_st = detail::spectrum_points(w, st);
  const auto p_ts = detail::spectrum_points(w, ts);
  const SetMatch m = match_modulo(p_st, p_ts, {Complex{0.0}}, tol);
  const double radius_gap = std::abs(max_modulus(p_st) - max_modulus(p_ts));

  TrialOutcome out;
  out.check(m.matched, m.max_distance, "sigma_A(ST)\\{0} != sigma_A(TS)\\{0}", w,
            {{"S", &s}, {"T", &t}});
  out.check(radius_gap <= tol, radius_gap, "r_A(ST) != r_A(TS)", w, {{"S", &s}, {"T", &t}});
  return out;
}

TrialOutcome orthogonal_sum_trial(Rng& rng, const FuzzConfig& cfg) {
  const PositiveWeight w = detail::draw_weight(rng, cfg);
  const int n = w.dim();
  const int r = w.rank();
  const int r1 = r == 1 ? 1 : rng.uniform_int(1, r - 1);
  const double s_scale = cfg.scale / std::sqrt(static_cast<double>(n));

  // Compressed parts live on complementary sub-blocks of range(P).
  ComplexMatrix mt = detail::random_block_lower(rng, n, r, cfg.scale, true);
  ComplexMatrix ms = detail::random_block_lower(rng, n, r, cfg.scale, true);
  mt.topLeftCorner(r1, r1) = rng.gaussian_matrix(r1, r1, s_scale);
  if (r > r1) ms.block(r1, r1, r - r1, r - r1) = rng.gaussian_matrix(r - r1, r - r1, s_scale);
  const ComplexMatrix t = from_block_basis(w, mt);
  const ComplexMatrix s = from_block_basis(w, ms);
  const ComplexMatrix sum = t + s;

  const double scale = compressed_norm(w, t) + compressed_norm(w, s);
  const double tol = spectrum_tolerance(w, scale);
  const double orth = std::max(op_norm(w.A() * t * s), op_norm(w.A() * s * t));

  std::vector<Complex> joined = detail::spectrum_points(w, t);
  const auto p_s = detail::spectrum_points(w, s);
  joined.insert(joined.end(), p_s.begin(), p_s.end());
  const SetMatch m = match_modulo(detail::spectrum_points(w, sum), joined, {Complex{0.0}}, tol);

  TrialOutcome out;
  out.check(orth <= w.tolerances().residual_tol * w.norm() * (1.0 + scale * scale), orth,
            "construction violates ATS = AST = 0", w, {{"T", &t}, {"S", &s}});
  out.check(m.matched, m.max_distance, "sigma_A(T+S)\\{0} != (sigma_A(T) u sigma_A(S))\\{0}", w,
            {{"T", &t}, {"S", &s}});
  return out;
}

// V D V^{-1} with V = I + block-lower perturbation and D a random 0/1 diagonal.
ComplexMatrix random_member_idempotent(Rng& rng, const PositiveWeight& w) {
  const int n = w.dim();
  const ComplexMatrix v = ComplexMatrix::Identity(n, n) +
                          0.5 * detail::random_block_lower(rng, n, w.rank(), 1.0);
  ComplexVector pattern(n);
  for (int i = 0; i < n; ++i) pattern(i) = rng.uniform(0.0, 1.0) < 0.5 ? 0.0 : 1.0;
  const ComplexMatrix m = v * pattern.asDiagonal() * v.partialPivLu().inverse();
  return from_block_basis(w, m);
}

TrialOutcome idempotent_trial(Rng& rng, const FuzzConfig& cfg) {
  const PositiveWeight w = detail::draw_weight(rng, cfg);
  const int n = w.dim();
  const ComplexMatrix t = random_member_idempotent(rng, w);
  const ComplexMatrix s = random_member_idempotent(rng, w);
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  const ComplexMatrix lhs = (id - t) * (id - s);
  const ComplexMatrix rhs = t * s;
  const double scale = (1.0 + op_norm(t)) * (1.0 + op_norm(s));
  const double tol = spectrum_tolerance(w, scale);
  const double idem = std::max(op_norm(t * t - t), op_norm(s * s - s));
  const SetMatch m = match_modulo(detail::spectrum_points(w, lhs), detail::spectrum_points(w, rhs),
                                  {Complex{0.0}, Complex{1.0}}, tol);

  TrialOutcome out;
  out.check(idem <= w.tolerances().residual_tol * scale, idem, "generated operator not idempotent",
            w, {{"T", &t}, {"S", &s}});
  out.check(m.matched, m.max_distance,
            "sigma_A((I-T)(I-S))\\{0,1} != sigma_A(TS)\\{0,1}", w, {{"T", &t}, {"S", &s}});
  return out;
}

TrialOutcome socle_trial(Rng& rng, const FuzzConfig& cfg) {
  const PositiveWeight w = detail::draw_weight(rng, cfg);
  const int n = w.dim();
  const int r = w.rank();
  TrialOutcome out;

  int max_distinct = 0;
  for (int k = 0; k < 10; ++k) {
    const ComplexMatrix t = random_member(rng, w, cfg.scale);
    const auto points = detail::spectrum_points(w, t);
    const int distinct = distinct_count(points, spectrum_tolerance(w, compressed_norm(w, t)));
    max_distinct = std::max(max_distinct, distinct);
    out.check(distinct <= r && static_cast<int>(points.size()) == r,
              std::max(0, distinct - r), "more A-spectrum points than rank(A)", w, {{"T", &t}});
  }
  out.check(max_distinct == r, std::abs(max_distinct - r), "rank(A) points never realised", w, {});

  // Columns vec(A E_ij A) span a space of dimension rank(A)^2.
  ComplexMatrix span(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const ComplexMatrix product = w.A().col(i) * w.A().row(j);
      span.col(i * n + j) = product.reshaped();
    }
  const int dim = numeric_rank(span, w.tolerances().rank_rel_tol);
  out.check(dim == r * r, std::abs(dim - r * r), "dim span{A E_ij A} != rank(A)^2", w, {});
  return out;
}

TrialOutcome spectrum_determines_trial(Rng& rng, const FuzzConfig& cfg) {
  const PositiveWeight w = detail::draw_weight(rng, cfg);
  TrialOutcome out;

  // Forward: S = T + K with AK = 0.
  const ComplexMatrix t = random_member(rng, w, cfg.scale);
  const ComplexMatrix k = kernel_supported(rng, w, cfg.scale);
  const ComplexMatrix s = t + k;
  const double ak = op_norm(w.A() * k);
  out.check(ak <= w.tolerances().residual_tol * w.norm() * (1.0 + op_norm(k)), ak,
            "kernel perturbation has AK != 0", w, {{"K", &k}});
  for (int i = 0; i < kProbeSamples; ++i) {
    const ComplexMatrix x = random_member(rng, w, cfg.scale);
    const ComplexMatrix sx = s * x;
    const ComplexMatrix tx = t * x;
    const double tol = spectrum_tolerance(w, compressed_norm(w, t) * compressed_norm(w, x));
    const SetMatch m =
        match_multisets(detail::spectrum_points(w, sx), detail::spectrum_points(w, tx), tol);
    out.check(m.matched, m.max_distance, "AS = AT but sigma_A(SX) != sigma_A(TX)", w,
              {{"S", &s}, {"T", &t}, {"X", &x}});
  }

  // Converse: AS != AT admits an X separating the spectra.
  ComplexMatrix s2 = random_member(rng, w, cfg.scale);
  ComplexMatrix t2 = random_member(rng, w, cfg.scale);
  for (int tries = 0; tries < 10 && op_norm(w.A() * (s2 - t2)) <= 0.1; ++tries) {
    s2 = random_member(rng, w, cfg.scale);
    t2 = random_member(rng, w, cfg.scale);
  }
  bool found = false;
  for (int i = 0; i < kWitnessBudget && !found; ++i) {
    const ComplexMatrix x = random_member(rng, w, cfg.scale);
    const double scale = (compressed_norm(w, s2) + compressed_norm(w, t2)) * compressed_norm(w, x);
    const SetMatch m = match_multisets(detail::spectrum_points(w, s2 * x),
                                       detail::spectrum_points(w, t2 * x), 0.0);
    found = m.max_distance > 1e3 * spectrum_tolerance(w, scale);
  }
  out.inconclusive = !found;
  return out;
}

TrialOutcome radius_domination_trial(Rng& rng, const FuzzConfig& cfg) {
  const PositiveWeight w = detail::draw_weight(rng, cfg);
  TrialOutcome out;

  // Forward: AS = alpha AT with |alpha| <= 1.
  const ComplexMatrix t = random_member(rng, w, cfg.scale);
  const Complex alpha = std::polar(rng.uniform(0.0, 1.0), rng.uniform(0.0, 2.0 * M_PI));
  const ComplexMatrix s = alpha * t + kernel_supported(rng, w, cfg.scale);
  for (int i = 0; i < kProbeSamples; ++i) {
    const ComplexMatrix x = random_member(rng, w, cfg.scale);
    const double r_sx = a_radius_eig(w, s * x);
    const double r_tx = a_radius_eig(w, t * x);
    const double tol = spectrum_tolerance(w, r_tx);
    out.check(r_sx <= r_tx + tol, std::max(0.0, r_sx - r_tx),
              "AS = alpha AT, |alpha| <= 1, but r_A(SX) > r_A(TX)", w,
              {{"S", &s}, {"T", &t}, {"X", &x}});
  }

  // Converse: without proportionality some X gives r_A(SX) > r_A(TX).
  const ComplexMatrix t2 = random_member(rng, w, cfg.scale);
  const ComplexMatrix s2 = w.rank() == 1 ? ComplexMatrix(2.0 * t2) : random_member(rng, w, cfg.scale);
  bool found = false;
  for (int i = 0; i < kWitnessBudget && !found; ++i) {
    const ComplexMatrix x = random_member(rng, w, cfg.scale);
    const double r_sx = a_radius_eig(w, s2 * x);
    const double r_tx = a_radius_eig(w, t2 * x);
    found = r_sx > r_tx + 1e3 * spectrum_tolerance(w, r_tx);
  }
  out.inconclusive = !found;
  return out;
}

TrialOutcome gkz_trial(Rng& rng, const FuzzConfig& cfg) {
  TrialOutcome out;
  const int n = rng.uniform_int(cfg.dim_min, cfg.dim_max);

  // (a), (c): rank-one A = a q q* and phi(X) = q* X q.
  const ComplexVector q = rng.gaussian_vector(n).normalized();
  const double a = std::exp(rng.uniform(-std::log(detail::kWeightSpread),
                                        std::log(detail::kWeightSpread)));
  const PositiveWeight w1 = make_weight(a * q * q.adjoint(), cfg.tolerances);
  const LinearFunctional phi{q * q.adjoint()};
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  const double unit_gap = std::abs(phi(id) - 1.0);
  out.check(unit_gap <= w1.tolerances().residual_tol, unit_gap, "phi(I) != 1", w1, {});
  for (int i = 0; i < 20; ++i) {
    const ComplexMatrix x = random_member(rng, w1, cfg.scale);
    const ComplexMatrix y = random_member(rng, w1, cfg.scale);
    const double scale = (1.0 + op_norm(x)) * (1.0 + op_norm(y));
    const double tol = spectrum_tolerance(w1, scale);
    const double incl = distance_to_set(phi(x), detail::spectrum_points(w1, x));
    const double mult = std::abs(phi(x * y) - phi(x) * phi(y));
    const double polar = std::abs(phi(x * y + y * x) - 2.0 * phi(x) * phi(y));
    out.check(incl <= tol, incl, "constructive phi(X) not in sigma_A(X)", w1, {{"X", &x}});
    out.check(mult <= tol, mult, "constructive phi not multiplicative", w1, {{"X", &x}, {"Y", &y}});
    out.check(polar <= tol, polar, "phi(ST+TS) != 2 phi(S) phi(T)", w1, {{"X", &x}, {"Y", &y}});
  }

  // (b): a random trace functional that survives the inclusion test must be
  // multiplicative; a surviving non-multiplicative one would break the characterisation.
  const PositiveWeight w = detail::draw_weight(rng, cfg);
  const LinearFunctional psi{rng.gaussian_matrix(w.dim(), w.dim())};
  bool survived = true;
  for (int i = 0; i < kGkzInclusionSamples && survived; ++i) {
    const ComplexMatrix x = random_member(rng, w, cfg.scale);
    const double tol = spectrum_tolerance(w, op_norm(x) * op_norm(psi.F));
    survived = distance_to_set(psi(x), detail::spectrum_points(w, x)) <= 1e3 * tol;
  }
  if (survived) {
    for (int i = 0; i < kGkzPairs; ++i) {
      const ComplexMatrix x = random_member(rng, w, cfg.scale);
      const ComplexMatrix y = random_member(rng, w, cfg.scale);
      const double gap = std::abs(psi(x * y) - psi(x) * psi(y));
      const double tol = spectrum_tolerance(w, op_norm(psi.F) * (1.0 + op_norm(x) * op_norm(y)));
      out.check(gap <= 1e3 * tol, 0.0, "non-multiplicative functional survived inclusion", w,
                {{"F", &psi.F}, {"X", &x}, {"Y", &y}});
    }
  }
  return out;
}

TrialOutcome radical_trial(Rng& rng, const FuzzConfig& cfg) {
  const PositiveWeight w = detail::draw_weight(rng, cfg);
  const ComplexMatrix t = random_member(rng, w, cfg.scale);
  const ComplexMatrix d = w.P() * t - t * w.P();
  TrialOutcome out;
  out.check(membership(w, d), 0.0, "PT - TP left M^A", w, {{"T", &t}});
  for (int i = 0; i < kProbeSamples; ++i) {
    const ComplexMatrix x = random_member(rng, w, cfg.scale);
    const ComplexMatrix dx = d * x;
    const double scale = op_norm(d) * op_norm(x);
    const double r_full = max_modulus(to_points(general_eig(dx, false, w.tolerances()).values));
    const double r_a = a_radius_eig(w, dx);
    out.check(r_full <= detail::nilpotent_tolerance(w, scale), r_full,
              "r((PT - TP) X) not zero", w, {{"T", &t}, {"X", &x}});
    out.check(r_a <= spectrum_tolerance(w, scale), r_a, "r_A((PT - TP) X) not zero", w,
              {{"T", &t}, {"X", &x}});
  }
  return out;
}

TrialOutcome diag_characters_trial(Rng& rng, const FuzzConfig& cfg) {
  const int n = rng.uniform_int(cfg.dim_min, cfg.dim_max);
  const int r = detail::draw_rank(rng, cfg, n);
  const double log_spread = std::log(detail::kWeightSpread);
  std::vector<double> a(n, 0.0);
  for (int i = 0; i < r; ++i) a[i] = std::exp(rng.uniform(-log_spread, log_spread));
  for (int i = n - 1; i > 0; --i) std::swap(a[i], a[rng.uniform_int(0, i)]);

  ComplexMatrix weight = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) weight(i, i) = a[i];
  const PositiveWeight w = make_weight(weight, cfg.tolerances);
  const ComplexVector t_diag = rng.gaussian_vector(n, cfg.scale);
  const ComplexMatrix t = t_diag.asDiagonal();

  // Characters with g(P) = 1 are the coordinates where a_i survives the cutoff.
  std::vector<Complex> expected;
  const double cutoff = w.tolerances().rank_rel_tol * w.norm();
  for (int i = 0; i < n; ++i)
    if (a[i] > cutoff) expected.push_back(t_diag(i));
  const auto sigma = detail::spectrum_points(w, t);
  const double tol = spectrum_tolerance(w, t_diag.cwiseAbs().maxCoeff());

  TrialOutcome out;
  const SetMatch m = match_multisets(sigma, expected, tol);
  out.check(m.matched, m.max_distance, "sigma_A(diag t) != {t_i : a_i > 0}", w, {{"T", &t}});

  const ComplexVector e_diag = rng.gaussian_vector(n, cfg.scale);
  ComplexVector kernel_diag = rng.gaussian_vector(n, cfg.scale);
  for (int i = 0; i < n; ++i)
    if (a[i] > cutoff) kernel_diag(i) = 0.0;
  for (int k = 1; k <= 8; ++k) {
    const ComplexMatrix delta = (e_diag / static_cast<double>(k)).asDiagonal();
    const ComplexMatrix t_k = t + delta;
    const double dist = operator_a_seminorm(w, delta);
    const SetMatch mk = match_multisets(detail::spectrum_points(w, t_k), sigma, tol + dist);
    out.check(mk.matched, std::max(0.0, mk.max_distance - dist),
              "sigma_A(T_k) not within ||T_k - T||_A of sigma_A(T)", w, {{"T", &t}, {"T_k", &t_k}});

    const ComplexMatrix t_kernel = t + ComplexMatrix((kernel_diag / static_cast<double>(k)).asDiagonal());
    const SetMatch mc = match_multisets(detail::spectrum_points(w, t_kernel), sigma, tol);
    out.check(mc.matched, mc.max_distance, "kernel-supported perturbation moved sigma_A", w,
              {{"T", &t}, {"T_k", &t_kernel}});
  }
  return out;
}

TrialOutcome rank_one_operator_trial(Rng& rng, const FuzzConfig& cfg) {
  const PositiveWeight w = detail::draw_weight(rng, cfg);
  ComplexVector x = w.U() * rng.gaussian_vector(w.rank(), cfg.scale);
  const ComplexVector y = rng.gaussian_vector(w.dim(), cfg.scale);
  const ComplexVector z = w.sqrtA() * y;
  const bool orthogonal = rng.uniform(0.0, 1.0) < 0.25;
  if (orthogonal) x -= z * (z.dot(x) / z.squaredNorm());

  // (x (x) z) h = <h, z> x, i.e. the matrix x z*.
  const ComplexMatrix r1 = x * z.adjoint();
  const Complex trace_value = z.dot(x);  // <x, A^{1/2} y>
  const double scale = op_norm(r1);
  const double tol = orthogonal ? detail::nilpotent_tolerance(w, scale) : spectrum_tolerance(w, scale);

  TrialOutcome out;
  out.check(membership(w, r1), 0.0, "x (x) A^{1/2} y left M^A", w, {{"R", &r1}});
  double worst = 0.0;
  for (const Complex& p : detail::spectrum_points(w, r1))
    worst = std::max(worst, std::min(std::abs(p), std::abs(p - trace_value)));
  out.check(worst <= tol, worst, "sigma_A(x (x) A^{1/2} y) not in {0, <x, A^{1/2} y>}", w,
            {{"R", &r1}});
  return out;
}

TrialOutcome invertibility_routes_trial(Rng& rng, const FuzzConfig& cfg) {
  const PositiveWeight w = detail::draw_weight(rng, cfg);
  ComplexMatrix t = random_member(rng, w, cfg.scale);
  const int kind = rng.uniform_int(0, 3);
  if (kind == 2) {
    // Shift by a point of the A-spectrum.
    const auto points = detail::spectrum_points(w, t);
    const Complex lambda = points[static_cast<std::size_t>(rng.uniform_int(0, w.rank() - 1))];
    t -= lambda * ComplexMatrix::Identity(w.dim(), w.dim());
  } else if (kind == 3) {
    // Kill one range direction.
    const ComplexVector u = (w.U() * rng.gaussian_vector(w.rank())).normalized();
    t = (t * (ComplexMatrix::Identity(w.dim(), w.dim()) - u * u.adjoint())).eval();
  }

  const InvertibilityVerdict by_compression = a_invertible(w, t, InvertibilityRoute::compression);
  const InvertibilityVerdict by_douglas = a_invertible(w, t, InvertibilityRoute::douglas);
  const ComplexMatrix b = compress(w, t);
  const double b_norm = op_norm(b);
  const auto points = detail::spectrum_points(w, t);
  double nearest_zero = std::numeric_limits<double>::infinity();
  for (const Complex& p : points) nearest_zero = std::min(nearest_zero, std::abs(p));
  const bool zero_outside = nearest_zero > spectrum_tolerance(w, b_norm);

  TrialOutcome out;
  const bool agree = by_compression.invertible == by_douglas.invertible &&
                     by_douglas.invertible == zero_outside;
  out.check(agree, 0.0, "invertibility routes disagree", w, {{"T", &t}});
  if (by_compression.invertible) {
    const ComplexMatrix& s = *by_compression.inverse;
    const double cond = b_norm / by_compression.margin;
    const double res = std::max(op_norm(w.A() * t * s - w.A()), op_norm(w.A() * s * t - w.A()));
    out.check(res <= w.tolerances().residual_tol * w.norm() * cond, res,
              "A-inverse certificate residual too large", w, {{"T", &t}});
  }
  return out;
}

TrialOutcome radius_bounds_trial(Rng& rng, const FuzzConfig& cfg) {
  const PositiveWeight w = detail::draw_weight(rng, cfg);
  const ComplexMatrix t = random_member(rng, w, cfg.scale);
  const ComplexMatrix l = half_adjoint(w, t);
  const double r_a = a_radius_eig(w, t);
  const double t_a = operator_a_seminorm(w, t);
  const double l_a = operator_a_seminorm(w, l);
  const double r_full = max_modulus(to_points(general_eig(t, false, w.tolerances()).values));
  const double tol = spectrum_tolerance(w, std::max(t_a, r_full));

  TrialOutcome out;
  out.check(r_a <= t_a + tol, std::max(0.0, r_a - t_a), "r_A(T) > ||T||_A", w, {{"T", &t}});
  out.check(r_a <= std::max(t_a, l_a) + tol, std::max(0.0, r_a - std::max(t_a, l_a)),
            "r_A(T) > max(||T||_A, ||L||_A)", w, {{"T", &t}});
  out.check(r_a <= r_full + tol, std::max(0.0, r_a - r_full), "r_A(T) > r(T)", w, {{"T", &t}});
  return out;
}

TrialOutcome conjugate_adjoint_trial(Rng& rng, const FuzzConfig& cfg) {
  const PositiveWeight w = detail::draw_weight(rng, cfg);
  const ComplexMatrix t = random_member(rng, w, cfg.scale);
  const ComplexMatrix l = half_adjoint(w, t);
  const double tol = spectrum_tolerance(w, compressed_norm(w, t) + compressed_norm(w, l));
  const SetMatch m = match_multisets(detail::spectrum_points(w, t),
                                     conjugated(detail::spectrum_points(w, l)), tol);
  TrialOutcome out;
  out.check(m.matched, m.max_distance, "sigma_A(T) != conj(sigma_A(L))", w, {{"T", &t}, {"L", &l}});
  return out;
}

}  // namespace

LawReport law_commutation(const FuzzConfig& cfg, Execution exec) {
  return detail::run_trials("commutation", cfg, cfg.trials, commutation_trial, exec);
}
LawReport law_orthogonal_sum(const FuzzConfig& cfg, Execution exec) {
  return detail::run_trials("orthogonal_sum", cfg, cfg.trials, orthogonal_sum_trial, exec);
}
LawReport law_idempotent(const FuzzConfig& cfg, Execution exec) {
  return detail::run_trials("idempotent", cfg, cfg.trials, idempotent_trial, exec);
}
LawReport law_socle(const FuzzConfig& cfg, Execution exec) {
  return detail::run_trials("socle", cfg, cfg.trials, socle_trial, exec);
}
LawReport law_spectrum_determines(const FuzzConfig& cfg, Execution exec) {
  return detail::run_trials("spectrum_determines", cfg, cfg.trials, spectrum_determines_trial,
                            exec);
}
LawReport law_radius_domination(const FuzzConfig& cfg, Execution exec) {
  return detail::run_trials("radius_domination", cfg, cfg.trials, radius_domination_trial, exec);
}
LawReport law_gkz(const FuzzConfig& cfg, Execution exec) {
  return detail::run_trials("gkz", cfg, cfg.trials, gkz_trial, exec);
}
LawReport law_radical(const FuzzConfig& cfg, Execution exec) {
  return detail::run_trials("radical", cfg, cfg.trials, radical_trial, exec);
}
LawReport law_diag_characters(const FuzzConfig& cfg, Execution exec) {
  return detail::run_trials("diag_characters", cfg, cfg.trials, diag_characters_trial, exec);
}
LawReport law_rank_one_operator(const FuzzConfig& cfg, Execution exec) {
  return detail::run_trials("rank_one_operator", cfg, cfg.trials, rank_one_operator_trial, exec);
}
LawReport law_invertibility_routes(const FuzzConfig& cfg, Execution exec) {
  const int trials = std::max(1, cfg.trials * 5 / 2);
  return detail::run_trials("invertibility_routes", cfg, trials, invertibility_routes_trial, exec);
}
LawReport law_radius_bounds(const FuzzConfig& cfg, Execution exec) {
  return detail::run_trials("radius_bounds", cfg, cfg.trials, radius_bounds_trial, exec);
}
LawReport law_conjugate_adjoint(const FuzzConfig& cfg, Execution exec) {
  return detail::run_trials("conjugate_adjoint", cfg, cfg.trials, conjugate_adjoint_trial, exec);
}

}  // namespace aspectral
