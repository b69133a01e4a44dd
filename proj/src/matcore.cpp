#include "aspectral/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "aspectral/errors.hpp"

namespace aspectral {

namespace {

Eigen::BDCSVD<ComplexMatrix> thin_svd(const ComplexMatrix& m) {
  return Eigen::BDCSVD<ComplexMatrix>(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
}

// Nearest-neighbour gap of each eigenvalue; +inf for a 1x1 spectrum.
std::vector<double> neighbour_gaps(const ComplexVector& values) {
  const Eigen::Index n = values.size();
  std::vector<double> gaps(n, std::numeric_limits<double>::infinity());
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (i != j) gaps[i] = std::min(gaps[i], std::abs(values[i] - values[j]));
  return gaps;
}

}  // namespace

void ToleranceConfig::validate() const {
  for (double v : {rank_rel_tol, residual_tol, set_match_tol, psd_clamp_tol})
    if (!(v > 0.0) || !std::isfinite(v))
      throw InvalidArgument("tolerances must be strictly positive and finite");
}

bool is_finite(const ComplexMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
  return true;
}

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols())
    throw DimensionMismatch(std::string(what) + " must be square, got " +
                            std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

double op_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::BDCSVD<ComplexMatrix> svd(m);
  return svd.singularValues()(0);
}

int numeric_rank(const ComplexMatrix& m, double rel_tol) {
  if (m.size() == 0) return 0;
  Eigen::BDCSVD<ComplexMatrix> svd(m);
  const RealVector& s = svd.singularValues();
  if (s(0) == 0.0) return 0;
  const double cutoff = rel_tol * s(0);
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > cutoff) ++r;
  return r;
}

EigenSystem hermitian_eig(const ComplexMatrix& m, const ToleranceConfig& tol) {
  require_square(m, "hermitian_eig input");
  const double scale = op_norm(m);
  const double asym = op_norm(m - m.adjoint());
  if (asym > tol.residual_tol * scale)
    throw NotHermitian("||M - M*|| = " + std::to_string(asym));

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
  if (solver.info() != Eigen::Success) throw ConvergenceFailure("Hermitian eigensolver");

  EigenSystem out;
  out.values = solver.eigenvalues().cast<Complex>();
  out.right_vectors = solver.eigenvectors();
  out.left_vectors = solver.eigenvectors();
  const ComplexMatrix& v = *out.right_vectors;
  out.max_residual =
      op_norm(v * solver.eigenvalues().cast<Complex>().asDiagonal() * v.adjoint() - m);
  return out;
}

EigenSystem general_eig(const ComplexMatrix& m, bool want_vectors, const ToleranceConfig& tol) {
  require_square(m, "general_eig input");
  const Eigen::Index n = m.rows();
  EigenSystem out;
  if (n == 0) {
    out.values.resize(0);
    return out;
  }

  Eigen::ComplexEigenSolver<ComplexMatrix> right(m, want_vectors);
  if (right.info() != Eigen::Success)
    throw ConvergenceFailure("shifted QR did not settle within " + std::to_string(30 * n) +
                             " sweeps");
  out.values = right.eigenvalues();
  if (!want_vectors) return out;

  Eigen::ComplexEigenSolver<ComplexMatrix> left(m.adjoint(), true);
  if (left.info() != Eigen::Success)
    throw ConvergenceFailure("shifted QR (adjoint) did not settle within " +
                             std::to_string(30 * n) + " sweeps");

  // Pair each eigenvalue with the adjoint eigenvalue nearest to its conjugate.
  ComplexMatrix left_vectors(n, n);
  std::vector<bool> used(n, false);
  for (Eigen::Index i = 0; i < n; ++i) {
    Eigen::Index best = -1;
    double best_d = std::numeric_limits<double>::infinity();
    for (Eigen::Index j = 0; j < n; ++j) {
      if (used[j]) continue;
      const double d = std::abs(std::conj(left.eigenvalues()[j]) - out.values[i]);
      if (d < best_d) {
        best_d = d;
        best = j;
      }
    }
    used[best] = true;
    left_vectors.col(i) = left.eigenvectors().col(best);
  }
  out.right_vectors = right.eigenvectors();
  out.left_vectors = std::move(left_vectors);

  const double scale = op_norm(m);
  const double gap_floor = 1e3 * tol.set_match_tol * (1.0 + scale);
  const std::vector<double> gaps = neighbour_gaps(out.values);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (gaps[i] <= gap_floor) {
      out.clustered = true;
      continue;
    }
    const ComplexVector& v = out.right_vectors->col(i);
    const ComplexVector& w = out.left_vectors->col(i);
    const double r_right = (m * v - out.values[i] * v).norm();
    const double r_left = (w.adjoint() * m - out.values[i] * w.adjoint()).norm();
    out.max_residual = std::max({out.max_residual, r_right, r_left});
  }
  return out;
}

PseudoInverse pinv(const ComplexMatrix& m, const ToleranceConfig& tol) {
  PseudoInverse out;
  out.matrix = ComplexMatrix::Zero(m.cols(), m.rows());
  if (m.size() == 0) return out;
  auto svd = thin_svd(m);
  const RealVector& s = svd.singularValues();
  if (s(0) == 0.0) return out;
  const double cutoff = tol.rank_rel_tol * s(0);
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) <= cutoff) break;
    out.matrix += svd.matrixV().col(i) * (1.0 / s(i)) * svd.matrixU().col(i).adjoint();
    ++out.rank;
  }
  return out;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m, const ToleranceConfig& tol) {
  EigenSystem eig = hermitian_eig(m, tol);
  const Eigen::Index n = m.rows();
  if (n == 0) return m;
  const RealVector lambda = eig.values.real();
  const double scale = std::max(std::abs(lambda(0)), std::abs(lambda(n - 1)));
  if (lambda(0) < -tol.psd_clamp_tol * scale)
    throw NotPSD("smallest eigenvalue " + std::to_string(lambda(0)));
  RealVector root(n);
  for (Eigen::Index i = 0; i < n; ++i) root(i) = lambda(i) > 0.0 ? std::sqrt(lambda(i)) : 0.0;
  const ComplexMatrix& v = *eig.right_vectors;
  return v * root.cast<Complex>().asDiagonal() * v.adjoint();
}

RangeBasis range_basis(const ComplexMatrix& m, const ToleranceConfig& tol) {
  require_square(m, "range_basis input");
  RangeBasis out;
  const Eigen::Index n = m.rows();
  if (n == 0) return out;
  auto svd = thin_svd(m);
  const RealVector& s = svd.singularValues();
  const double cutoff = tol.rank_rel_tol * s(0);
  if (s(0) > 0.0)
    for (Eigen::Index i = 0; i < s.size(); ++i)
      if (s(i) > cutoff) ++out.rank;
  out.basis = svd.matrixU().leftCols(out.rank);
  out.projector = out.basis * out.basis.adjoint();
  if (out.rank == 0) out.projector = ComplexMatrix::Zero(n, n);
  return out;
}

namespace {

// Kuhn augmenting path over pairs with distance <= limit.
bool augment(std::size_t i, const std::vector<std::vector<double>>& dist, double limit,
             std::vector<bool>& seen, std::vector<std::size_t>& owner) {
  for (std::size_t j = 0; j < dist.size(); ++j) {
    if (seen[j] || dist[i][j] > limit) continue;
    seen[j] = true;
    if (owner[j] == dist.size() || augment(owner[j], dist, limit, seen, owner)) {
      owner[j] = i;
      return true;
    }
  }
  return false;
}

bool perfect_matching(const std::vector<std::vector<double>>& dist, double limit) {
  const std::size_t n = dist.size();
  std::vector<std::size_t> owner(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> seen(n, false);
    if (!augment(i, dist, limit, seen, owner)) return false;
  }
  return true;
}

}  // namespace

// Bottleneck matching: the smallest pairwise distance admitting a perfect matching.
SetMatch match_multisets(const std::vector<Complex>& a, const std::vector<Complex>& b,
                         double threshold) {
  SetMatch out;
  if (a.size() != b.size()) {
    out.max_distance = std::numeric_limits<double>::infinity();
    return out;
  }
  const std::size_t n = a.size();
  std::vector<std::vector<double>> dist(n, std::vector<double>(n));
  std::vector<double> candidates;
  candidates.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) candidates.push_back(dist[i][j] = std::abs(a[i] - b[j]));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  if (n > 0 && std::any_of(candidates.begin(), candidates.end(), [](double d) { return std::isnan(d); })) {
    out.max_distance = std::numeric_limits<double>::quiet_NaN();
    return out;
  }
  std::size_t lo = 0, hi = candidates.empty() ? 0 : candidates.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (perfect_matching(dist, candidates[mid])) hi = mid;
    else lo = mid + 1;
  }
  out.max_distance = candidates.empty() ? 0.0 : candidates[lo];
  out.matched = out.max_distance <= threshold;
  return out;
}

std::vector<Complex> excise(const std::vector<Complex>& points,
                            const std::vector<Complex>& excluded, double radius) {
  std::vector<Complex> kept;
  for (const Complex& p : points) {
    const bool near = std::any_of(excluded.begin(), excluded.end(),
                                  [&](const Complex& e) { return std::abs(p - e) <= radius; });
    if (!near) kept.push_back(p);
  }
  return kept;
}

double hausdorff_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  if (a.empty() && b.empty()) return 0.0;
  if (a.empty() || b.empty()) return std::numeric_limits<double>::infinity();
  auto directed = [](const std::vector<Complex>& x, const std::vector<Complex>& y) {
    double worst = 0.0;
    for (const Complex& p : x) {
      double nearest = std::numeric_limits<double>::infinity();
      for (const Complex& q : y) nearest = std::min(nearest, std::abs(p - q));
      worst = std::max(worst, nearest);
    }
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

std::vector<Complex> to_points(const ComplexVector& v) {
  return std::vector<Complex>(v.data(), v.data() + v.size());
}

std::vector<Complex> conjugated(std::vector<Complex> points) {
  for (Complex& p : points) p = std::conj(p);
  return points;
}

}  // namespace aspectral
