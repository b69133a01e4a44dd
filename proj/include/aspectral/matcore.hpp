#pragma once

// Dense complex linear-algebra substrate shared by every other module.
//
// ComplexMatrix is Eigen's dynamic complex matrix; all operator-valued
// quantities are square. The decompositions below wrap Eigen's solvers and add
// the tolerance policy used throughout the library: rank decisions are
// relative to the largest singular value, residual checks are relative to the
// operator norm of the input.

#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace aspectral {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

struct ToleranceConfig {
  double rank_rel_tol = 1e-10;   // relative singular-value cutoff
  double residual_tol = 1e-9;    // equation-residual acceptance
  double set_match_tol = 1e-8;   // spectrum-set matching
  double psd_clamp_tol = 1e-10;  // negative-eigenvalue clamp bound

  // Throws InvalidArgument unless every field is strictly positive and finite.
  void validate() const;
};

struct EigenSystem {
  ComplexVector values;                      // with algebraic multiplicity
  std::optional<ComplexMatrix> right_vectors;  // columns, unit norm
  std::optional<ComplexMatrix> left_vectors;   // columns w with w* M = lambda w*
  double max_residual = 0.0;  // over pairs whose eigenvalue is well separated
  bool clustered = false;     // some eigenvalue skipped the per-vector check
};

struct PseudoInverse {
  ComplexMatrix matrix;
  int rank = 0;
};

struct RangeBasis {
  ComplexMatrix projector;  // P = U U*
  ComplexMatrix basis;      // U, n x r orthonormal columns
  int rank = 0;
};

// Largest singular value.
double op_norm(const ComplexMatrix& m);

// Real ascending eigenvalues, unitary eigenvectors. Throws NotHermitian.
EigenSystem hermitian_eig(const ComplexMatrix& m, const ToleranceConfig& tol = {});

// Hessenberg reduction followed by shifted QR with a budget of 30 n sweeps.
// Throws ConvergenceFailure when the budget is exhausted.
EigenSystem general_eig(const ComplexMatrix& m, bool want_vectors,
                        const ToleranceConfig& tol = {});

// SVD pseudoinverse; singular values below rank_rel_tol * sigma_max are zero.
PseudoInverse pinv(const ComplexMatrix& m, const ToleranceConfig& tol = {});

// Hermitian PSD square root. Throws NotHermitian or NotPSD.
ComplexMatrix psd_sqrt(const ComplexMatrix& m, const ToleranceConfig& tol = {});

RangeBasis range_basis(const ComplexMatrix& m, const ToleranceConfig& tol = {});

// Numeric rank: retained singular values above rank_rel_tol * sigma_max.
int numeric_rank(const ComplexMatrix& m, double rel_tol);

bool is_finite(const ComplexMatrix& m);
void require_square(const ComplexMatrix& m, const char* what);

// Greedy minimal-distance matching of two spectra.
struct SetMatch {
  bool matched = false;
  double max_distance = 0.0;  // worst matched pair (inf if sizes differ)
};
SetMatch match_multisets(const std::vector<Complex>& a, const std::vector<Complex>& b,
                         double threshold);

// Removes points within `radius` of any excluded value.
std::vector<Complex> excise(const std::vector<Complex>& points,
                            const std::vector<Complex>& excluded, double radius);

// Symmetric Hausdorff distance between two finite point sets.
double hausdorff_distance(const std::vector<Complex>& a, const std::vector<Complex>& b);

std::vector<Complex> to_points(const ComplexVector& v);
std::vector<Complex> conjugated(std::vector<Complex> points);

}  // namespace aspectral
