#include <doctest.h>

#include <cmath>
#include <sstream>

#include "aspectral/errors.hpp"
#include "aspectral/shiftlab.hpp"

using namespace aspectral;

TEST_CASE("unilateral model reproduces the exact seminorms") {
  for (int n : {4, 8, 16, 64}) {
    CAPTURE(n);
    const BuiltModel m = build_model(ShiftKind::unilateral_halved, n);
    REQUIRE(m.L);
    CHECK(m.weight.rank() == n);
    CHECK(std::abs(operator_a_seminorm(m.weight, m.T) - 0.2) <= 1e-12);
    CHECK(std::abs(operator_a_seminorm(m.weight, *m.L) - 0.4) <= 1e-12);
    // T* A^{1/2} = A^{1/2} L and L is the A^{1/2}-adjoint of T.
    CHECK(op_norm(m.T.adjoint() * m.weight.sqrtA() - m.weight.sqrtA() * *m.L) <= 1e-12);
    CHECK(op_norm(half_adjoint(m.weight, m.T) - *m.L) <= 1e-12);
  }
}

TEST_CASE("bilateral model construction") {
  const BuiltModel m = build_model(ShiftKind::bilateral_factorial, 12);
  CHECK(m.model.index_offset == -6);
  const std::vector<double> expected = {1, 1, 1, 1, 1, 1, 1, 1, 1.0 / 2, 1.0 / 6, 1.0 / 24, 1.0 / 120};
  for (int p = 0; p < 12; ++p) {
    CAPTURE(p);
    CHECK(m.weight.sqrtA()(p, p).real() == doctest::Approx(expected[p]).epsilon(1e-15));
    CHECK(std::exp(m.model.log_a[p]) == doctest::Approx(expected[p]).epsilon(1e-13));
  }
  CHECK(m.T(1, 0) == Complex(1.0));
  CHECK_FALSE(m.L);

  const ShiftModel odd = make_shift_model(ShiftKind::bilateral_factorial, 9);
  CHECK(odd.index_at(0) == -4);
  CHECK(odd.index_at(8) == 4);
}

TEST_CASE("truncation limits") {
  CHECK_THROWS_AS(build_model(ShiftKind::unilateral_halved, 3), TruncationTooSmall);
  CHECK_THROWS_AS(make_shift_model(ShiftKind::bilateral_factorial, 161), UnderflowRisk);
  CHECK_NOTHROW(make_shift_model(ShiftKind::bilateral_factorial, 160));
  CHECK_NOTHROW(make_shift_model(ShiftKind::bilateral_factorial, 400, WeightScaleMode::log_domain));
  CHECK_THROWS_AS(parse_shift_kind("periodic"), InvalidArgument);
}

TEST_CASE("vector ratio probe") {
  const ShiftModel lin = make_shift_model(ShiftKind::bilateral_factorial, 64);
  const std::vector<double> r = vector_ratio_probe(lin, RatioProbe::adjoint_shift, {2, 7, -3});
  CHECK(r[0] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(r[1] == doctest::Approx(7.0).epsilon(1e-12));
  CHECK(r[2] == doctest::Approx(1.0).epsilon(1e-12));

  const ShiftModel log = make_shift_model(ShiftKind::bilateral_factorial, 120, WeightScaleMode::log_domain);
  CHECK(std::abs(vector_ratio_probe(log, RatioProbe::adjoint_shift, {50})[0] - 50.0) <= 1e-9 * 50.0);

  // Both modes agree where both are defined.
  const ShiftModel log64 = make_shift_model(ShiftKind::bilateral_factorial, 64, WeightScaleMode::log_domain);
  std::vector<int> idx;
  for (int n = -30; n <= 30; ++n) idx.push_back(n);
  const auto a = vector_ratio_probe(lin, RatioProbe::adjoint_shift, idx);
  const auto b = vector_ratio_probe(log64, RatioProbe::adjoint_shift, idx);
  for (std::size_t i = 0; i < idx.size(); ++i) CHECK(std::abs(a[i] - b[i]) <= 1e-9 * b[i]);

  CHECK_THROWS_AS(vector_ratio_probe(lin, RatioProbe::adjoint_shift, {-32}), IndexOutOfTruncation);
  CHECK_THROWS_AS(vector_ratio_probe(lin, RatioProbe::adjoint_shift, {31}), IndexOutOfTruncation);
  CHECK_NOTHROW(vector_ratio_probe(lin, RatioProbe::adjoint_shift, {-31, 30}));
}

TEST_CASE("resolvent scan") {
  const auto rows = resolvent_scan(ShiftKind::bilateral_factorial, {0.5, 1.5, 0.0}, {20, 40, 60});
  REQUIRE(rows.size() == 9);
  // Ordered by (lambda index, N index).
  CHECK(rows[0].N == 20);
  CHECK(rows[2].N == 60);
  CHECK(rows[3].lambda == Complex(1.5));

  CHECK(rows[0].growth < rows[1].growth);
  CHECK(rows[1].growth < rows[2].growth);
  CHECK(rows[2].growth >= 10.0 * rows[0].growth);

  const auto far = resolvent_scan(ShiftKind::bilateral_factorial, {1.5}, {40, 80});
  CHECK(std::abs(far[1].growth / far[0].growth - 1.0) < 0.1);

  for (int k = 6; k < 9; ++k) {
    CHECK(rows[k].status == ScanStatus::singular);
    CHECK(std::isinf(rows[k].growth));
  }
}

TEST_CASE("divergence increases monotonically inside the disc") {
  const std::vector<int> ns = {20, 30, 40};
  for (const Complex lambda : {Complex(0.3), Complex(0, 0.6), Complex(-0.9), Complex(0.5, 0.5)}) {
    CAPTURE(lambda);
    const auto rows = resolvent_scan(ShiftKind::bilateral_factorial, {lambda}, ns);
    CHECK(rows[0].growth < rows[1].growth);
    CHECK(rows[1].growth < rows[2].growth);
  }
}

TEST_CASE("serial and parallel scans agree bit for bit") {
  const std::vector<Complex> lambdas = {0.2, Complex(0.7, -0.3), 1.3};
  const auto a = resolvent_scan(ShiftKind::bilateral_factorial, lambdas, {10, 20}, Execution::serial);
  const auto b = resolvent_scan(ShiftKind::bilateral_factorial, lambdas, {10, 20}, Execution::parallel);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].growth == b[i].growth);
}

TEST_CASE("disc report separates the disc from the exterior") {
  const DiscReport r = disc_report(ShiftKind::bilateral_factorial, 0.25, {20, 40, 60});
  CHECK(r.points.size() == 13 * 13);
  CHECK(r.rows.size() == 13 * 13 * 3);
  for (const DiscPoint& p : r.points) {
    if (std::abs(p.lambda) <= 0.9) CHECK(p.divergent);
    if (std::abs(p.lambda) >= 1.2) CHECK_FALSE(p.divergent);
  }
  CHECK(r.divergent_count() + r.bounded_count() == 169);

  const DiscPoint inside = score_lambda(resolvent_scan(ShiftKind::bilateral_factorial, {0.5}, {20, 40, 60}));
  const DiscPoint outside = score_lambda(resolvent_scan(ShiftKind::bilateral_factorial, {1.2}, {20, 40, 60}));
  CHECK(inside.divergent);
  CHECK_FALSE(outside.divergent);
  CHECK(inside.score > outside.score);

  CHECK_THROWS_AS(disc_report(ShiftKind::bilateral_factorial, 0.0, {20, 40}), InvalidArgument);
  CHECK_THROWS_AS(disc_report(ShiftKind::bilateral_factorial, 0.5, {20}), InvalidArgument);
}

TEST_CASE("csv output") {
  const auto rows = resolvent_scan(ShiftKind::bilateral_factorial, {0.0, 1.5}, {8});
  std::ostringstream os;
  write_scan_csv(os, rows);
  const std::string text = os.str();
  CHECK(text.rfind("lambda_re,lambda_im,N,growth,status\n", 0) == 0);
  CHECK(text.find("0,0,8,inf,singular\n") != std::string::npos);
  CHECK(text.find("1.5,0,8,") != std::string::npos);

  std::ostringstream again;
  write_scan_csv(again, resolvent_scan(ShiftKind::bilateral_factorial, {0.0, 1.5}, {8}));
  CHECK(again.str() == text);

  std::ostringstream disc;
  write_disc_csv(disc, disc_report(ShiftKind::bilateral_factorial, 1.5, {8, 12}));
  CHECK(disc.str().rfind("lambda_re,lambda_im,score,growth_ratio,divergent\n", 0) == 0);
}
