#include "aspectral/weightspace.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "aspectral/errors.hpp"
#include "aspectral/rng.hpp"

namespace aspectral {

namespace {

void require_dim(const PositiveWeight& w, const ComplexMatrix& t, const char* what) {
  require_square(t, what);
  if (t.rows() != w.dim())
    throw DimensionMismatch(std::string(what) + " has dimension " + std::to_string(t.rows()) +
                            ", weight has " + std::to_string(w.dim()));
}

ComplexMatrix block_basis(const PositiveWeight& w) {
  ComplexMatrix basis(w.dim(), w.dim());
  basis << w.U(), w.kernel_basis();
  return basis;
}

}  // namespace

PositiveWeight make_weight(const ComplexMatrix& a, const ToleranceConfig& tol) {
  tol.validate();
  require_square(a, "weight");
  if (a.rows() == 0) throw ZeroWeight("empty weight");
  if (!is_finite(a)) throw InvalidArgument("weight has non-finite entries");

  const EigenSystem eig = hermitian_eig(a, tol);
  const RealVector lambda = eig.values.real();
  const Eigen::Index n = a.rows();
  const double top = lambda(n - 1);
  const double scale = std::max(std::abs(lambda(0)), std::abs(top));
  if (scale == 0.0) throw ZeroWeight("A = 0");
  if (lambda(0) < -tol.psd_clamp_tol * scale)
    throw NotPSD("smallest eigenvalue " + std::to_string(lambda(0)));
  if (top <= 0.0) throw ZeroWeight("no positive eigenvalue");

  const double cutoff = tol.rank_rel_tol * top;
  Eigen::Index first_kept = 0;
  while (first_kept < n && lambda(first_kept) <= cutoff) ++first_kept;
  const Eigen::Index r = n - first_kept;

  const ComplexMatrix& vectors = *eig.right_vectors;
  PositiveWeight w;
  w.tol_ = tol;
  w.a_ = a;
  w.d_ = lambda.tail(r);
  w.u_ = vectors.rightCols(r);
  w.v_ = vectors.leftCols(first_kept);
  const RealVector root = w.d_.cwiseSqrt();
  const ComplexMatrix& u = w.u_;
  w.sqrt_a_ = u * root.cast<Complex>().asDiagonal() * u.adjoint();
  w.sqrt_a_pinv_ = u * root.cwiseInverse().cast<Complex>().asDiagonal() * u.adjoint();
  w.a_pinv_ = u * w.d_.cwiseInverse().cast<Complex>().asDiagonal() * u.adjoint();
  w.p_ = u * u.adjoint();
  return w;
}

double vector_a_norm(const PositiveWeight& w, const ComplexVector& h) {
  if (h.size() != w.dim())
    throw DimensionMismatch("vector has length " + std::to_string(h.size()) +
                            ", weight has dimension " + std::to_string(w.dim()));
  const double q = (h.adjoint() * w.A() * h)(0, 0).real();
  return q > 0.0 ? std::sqrt(q) : 0.0;
}

bool membership(const PositiveWeight& w, const ComplexMatrix& t) {
  require_dim(w, t, "operator");
  if (w.rank() == w.dim()) return true;
  const double leak = op_norm(w.U().adjoint() * t * w.kernel_basis());
  return leak <= w.tolerances().residual_tol * (1.0 + op_norm(t));
}

ComplexMatrix a_adjoint(const PositiveWeight& w, const ComplexMatrix& t) {
  if (!membership(w, t)) throw NotInMA("operator does not leave N(A) invariant");
  return w.A_pinv() * t.adjoint() * w.A();
}

ComplexMatrix half_adjoint(const PositiveWeight& w, const ComplexMatrix& t) {
  if (!membership(w, t)) throw NotInMA("operator does not leave N(A) invariant");
  return (w.sqrtA() * t * w.sqrtA_pinv()).adjoint();
}

double operator_a_seminorm(const PositiveWeight& w, const ComplexMatrix& t) {
  if (!membership(w, t)) return std::numeric_limits<double>::infinity();
  const RealVector root = w.range_eigenvalues().cwiseSqrt();
  const ComplexMatrix compressed = root.cast<Complex>().asDiagonal() *
                                   (w.U().adjoint() * t * w.U()) *
                                   root.cwiseInverse().cast<Complex>().asDiagonal();
  return op_norm(compressed);
}

AOperator make_operator(const PositiveWeight& w, const ComplexMatrix& t) {
  AOperator op;
  op.T = t;
  op.in_MA = membership(w, t);
  if (!op.in_MA) return op;
  op.sharp = a_adjoint(w, t);
  op.half_adjoint = half_adjoint(w, t);
  op.seminorm = operator_a_seminorm(w, t);
  return op;
}

PositiveWeight random_weight(std::uint64_t seed, int n, int rank, double spread,
                             const ToleranceConfig& tol) {
  if (n < 1 || rank < 1 || rank > n)
    throw InvalidArgument("rank " + std::to_string(rank) + " outside [1, " +
                          std::to_string(n) + "]");
  if (!(spread >= 1.0)) throw InvalidArgument("spread must be >= 1");
  Rng rng(seed);
  const ComplexMatrix q = rng.haar_unitary(n);
  RealVector d = RealVector::Zero(n);
  const double log_spread = std::log(spread);
  for (int i = 0; i < rank; ++i)
    d(i) = spread == 1.0 ? 1.0 : std::exp(rng.uniform(-log_spread, log_spread));
  ComplexMatrix a = q * d.cast<Complex>().asDiagonal() * q.adjoint();
  a = (0.5 * (a + a.adjoint())).eval();
  return make_weight(a, tol);
}

ComplexMatrix from_block_basis(const PositiveWeight& w, const ComplexMatrix& m) {
  const ComplexMatrix basis = block_basis(w);
  return basis * m * basis.adjoint();
}

ComplexMatrix to_block_basis(const PositiveWeight& w, const ComplexMatrix& t) {
  const ComplexMatrix basis = block_basis(w);
  return basis.adjoint() * t * basis;
}

ComplexMatrix random_member(Rng& rng, const PositiveWeight& w, double scale) {
  const int n = w.dim();
  const int r = w.rank();
  const double s = scale / std::sqrt(static_cast<double>(n));
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  m.topLeftCorner(r, r) = rng.gaussian_matrix(r, r, s);
  m.bottomLeftCorner(n - r, r) = rng.gaussian_matrix(n - r, r, s);
  m.bottomRightCorner(n - r, n - r) = rng.gaussian_matrix(n - r, n - r, s);
  return from_block_basis(w, m);
}

AOperator random_in_MA(std::uint64_t seed, const PositiveWeight& w, double scale) {
  Rng rng(seed);
  return make_operator(w, random_member(rng, w, scale));
}

}  // namespace aspectral
