#pragma once

// The weight A and the operator class it induces.
//
// A PositiveWeight caches the spectral data of A once: an orthonormal range
// basis U (eigenvectors of the retained eigenvalues d), a kernel basis V, the
// square root, its pseudoinverse and the range projector P = U U*. Every block
// statement downstream is evaluated in the [U V] basis.
//
// In finite dimension A is automatically well supported, so the operators
// admitting an A^{1/2}-adjoint and those admitting an A-adjoint coincide;
// membership() is the single predicate for both.

#include <cstdint>
#include <optional>

#include "aspectral/matcore.hpp"

namespace aspectral {

class PositiveWeight {
 public:
  const ComplexMatrix& A() const { return a_; }
  const ComplexMatrix& sqrtA() const { return sqrt_a_; }
  const ComplexMatrix& sqrtA_pinv() const { return sqrt_a_pinv_; }
  const ComplexMatrix& A_pinv() const { return a_pinv_; }
  const ComplexMatrix& P() const { return p_; }
  const ComplexMatrix& U() const { return u_; }
  const ComplexMatrix& kernel_basis() const { return v_; }
  const RealVector& range_eigenvalues() const { return d_; }  // ascending
  int rank() const { return static_cast<int>(u_.cols()); }
  int dim() const { return static_cast<int>(a_.rows()); }
  double min_pos_eig() const { return d_(0); }
  double norm() const { return d_(d_.size() - 1); }
  const ToleranceConfig& tolerances() const { return tol_; }

 private:
  friend PositiveWeight make_weight(const ComplexMatrix& a, const ToleranceConfig& tol);

  ComplexMatrix a_, sqrt_a_, sqrt_a_pinv_, a_pinv_, p_, u_, v_;
  RealVector d_;
  ToleranceConfig tol_;
};

// Throws NotHermitian, NotPSD, ZeroWeight.
PositiveWeight make_weight(const ComplexMatrix& a, const ToleranceConfig& tol = {});

// sqrt(h* A h). Throws DimensionMismatch.
double vector_a_norm(const PositiveWeight& w, const ComplexVector& h);

// T leaves the numeric kernel of A invariant: ||U* T V|| <= residual_tol (1 + ||T||).
bool membership(const PositiveWeight& w, const ComplexMatrix& t);

// Canonical A-adjoint A^+ T* A. Throws NotInMA.
ComplexMatrix a_adjoint(const PositiveWeight& w, const ComplexMatrix& t);

// L = (A^{1/2} T (A^{1/2})^+)*, so that A^{1/2} T = L* A^{1/2}. Throws NotInMA.
ComplexMatrix half_adjoint(const PositiveWeight& w, const ComplexMatrix& t);

// ||A^{1/2} T (A^{1/2})^+||; +inf for operators outside M^A.
double operator_a_seminorm(const PositiveWeight& w, const ComplexMatrix& t);

struct AOperator {
  ComplexMatrix T;
  bool in_MA = false;
  std::optional<ComplexMatrix> sharp;         // canonical A-adjoint
  std::optional<ComplexMatrix> half_adjoint;  // canonical A^{1/2}-adjoint L
  std::optional<double> seminorm;
};

// Fills every cache eagerly; non-members carry only T and in_MA = false.
AOperator make_operator(const PositiveWeight& w, const ComplexMatrix& t);

// A = Q diag(d_1..d_rank, 0..0) Q*, Q Haar, d_i log-uniform in [1/spread, spread].
// Throws InvalidArgument for rank outside [1, n] or spread < 1.
PositiveWeight random_weight(std::uint64_t seed, int n, int rank, double spread,
                             const ToleranceConfig& tol = {});

// Block-lower operator [U V] [[T11, 0], [T21, T22]] [U V]* with Gaussian blocks.
AOperator random_in_MA(std::uint64_t seed, const PositiveWeight& w, double scale);

// Raw matrix variant of random_in_MA drawing from an existing generator.
class Rng;
ComplexMatrix random_member(Rng& rng, const PositiveWeight& w, double scale);

// Embeds coordinates in the [U V] basis: [U V] M [U V]*.
ComplexMatrix from_block_basis(const PositiveWeight& w, const ComplexMatrix& m);

// Inverse of from_block_basis: [U V]* T [U V].
ComplexMatrix to_block_basis(const PositiveWeight& w, const ComplexMatrix& t);

}  // namespace aspectral
