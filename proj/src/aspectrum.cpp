#include "aspectral/aspectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "aspectral/errors.hpp"

namespace aspectral {

namespace {

void require_member(const PositiveWeight& w, const ComplexMatrix& t) {
  if (!membership(w, t)) throw NotInMA("operator does not leave N(A) invariant");
}

double max_modulus(const std::vector<Complex>& points) {
  double r = 0.0;
  for (const Complex& p : points) r = std::max(r, std::abs(p));
  return r;
}

struct PencilSpectrum {
  double min = 0.0;
  double max = 0.0;
};

// Generalised eigenvalues of the Hermitian pencil (h, g), g positive definite,
// after whitening by the Cholesky factor of g.
PencilSpectrum pencil_extremes(const ComplexMatrix& h, const ComplexMatrix& g) {
  Eigen::LLT<ComplexMatrix> chol(0.5 * (g + g.adjoint()));
  if (chol.info() != Eigen::Success) return {0.0, 0.0};
  const auto lower = chol.matrixL();
  ComplexMatrix whitened = lower.solve(h);
  whitened = lower.solve(whitened.adjoint()).adjoint().eval();
  whitened = (0.5 * (whitened + whitened.adjoint())).eval();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(whitened, Eigen::EigenvaluesOnly);
  const RealVector& values = eig.eigenvalues();
  return {values(0), values(values.size() - 1)};
}

// Cutoffs are relative to ||T||, not to sigma_max(B): a rank-one B has sigma_min == sigma_max.
InvertibilityVerdict compression_verdict(const PositiveWeight& w, const ComplexMatrix& t,
                                         const ComplexMatrix& b) {
  InvertibilityVerdict v;
  v.route = InvertibilityRoute::compression;
  Eigen::BDCSVD<ComplexMatrix> svd(b);
  const RealVector& s = svd.singularValues();
  v.margin = s(s.size() - 1);
  v.invertible = s(0) > 0.0 && v.margin > w.tolerances().rank_rel_tol * op_norm(t);
  return v;
}

InvertibilityVerdict douglas_verdict(const PositiveWeight& w, const ComplexMatrix& t) {
  InvertibilityVerdict v;
  v.route = InvertibilityRoute::douglas;
  const ComplexMatrix& a = w.A();
  const ComplexMatrix& u = w.U();
  const double rel = w.tolerances().rank_rel_tol;
  const double t_norm = op_norm(t);

  // (i), lower half: T* A T >= A / c on the range block.
  const ComplexMatrix tat = t.adjoint() * a * t;
  const PencilSpectrum lower = pencil_extremes(u.adjoint() * tat * u, u.adjoint() * a * u);
  v.margin = lower.min;
  if (!(lower.max > 0.0 && lower.min > rel * t_norm * t_norm)) {
    v.failing = FailingCondition::cond_i_lower;
    return v;
  }

  // (i), upper half: T* A T <= c A forces T* A T to vanish on N(A).
  if (w.rank() < w.dim()) {
    const ComplexMatrix& kernel = w.kernel_basis();
    const double leak = op_norm(kernel.adjoint() * tat * kernel);
    if (leak > w.tolerances().residual_tol * w.norm() * (1.0 + t_norm) * (1.0 + t_norm)) {
      v.failing = FailingCondition::cond_i_upper;
      return v;
    }
  }

  // (ii): A^2 <= alpha A T T* A, i.e. A T T* A positive definite on the range block.
  const ComplexMatrix att_a = a * t * t.adjoint() * a;
  const PencilSpectrum upper = pencil_extremes(u.adjoint() * att_a * u, u.adjoint() * a * a * u);
  if (!(upper.max > 0.0 && upper.min > rel * t_norm * t_norm)) {
    v.failing = FailingCondition::cond_ii;
    return v;
  }
  v.invertible = true;
  return v;
}

}  // namespace

std::string to_string(SpectrumMethod m) {
  switch (m) {
    case SpectrumMethod::compression: return "compression";
    case SpectrumMethod::pure_state: return "pure_state";
    case SpectrumMethod::gelfand_radius_only: return "gelfand_radius_only";
  }
  return "unknown";
}

SpectrumMethod parse_spectrum_method(const std::string& s) {
  if (s == "compression") return SpectrumMethod::compression;
  if (s == "pure_state") return SpectrumMethod::pure_state;
  if (s == "gelfand" || s == "gelfand_radius_only") return SpectrumMethod::gelfand_radius_only;
  throw InvalidArgument("unknown spectrum method '" + s + "'");
}

std::string to_string(InvertibilityRoute r) {
  return r == InvertibilityRoute::compression ? "compression" : "douglas";
}

std::string to_string(FailingCondition c) {
  switch (c) {
    case FailingCondition::none: return "none";
    case FailingCondition::cond_i_lower: return "cond_i_lower";
    case FailingCondition::cond_i_upper: return "cond_i_upper";
    case FailingCondition::cond_ii: return "cond_ii";
  }
  return "unknown";
}

InvertibilityRoute parse_invertibility_route(const std::string& s) {
  if (s == "compression") return InvertibilityRoute::compression;
  if (s == "douglas") return InvertibilityRoute::douglas;
  throw InvalidArgument("unknown invertibility route '" + s + "'");
}

ComplexMatrix compress(const PositiveWeight& w, const ComplexMatrix& t) {
  require_member(w, t);
  return w.U().adjoint() * t * w.U();
}

SpectrumReport a_spectrum(const PositiveWeight& w, const ComplexMatrix& t) {
  const ComplexMatrix b = compress(w, t);
  const EigenSystem eig = general_eig(b, true, w.tolerances());
  SpectrumReport report;
  report.method = SpectrumMethod::compression;
  report.points = to_points(eig.values);
  report.radius = max_modulus(report.points);
  report.residuals.eig_residual = eig.max_residual;
  report.residuals.clustered = eig.clustered;
  report.weight_rank = w.rank();
  return report;
}

double a_radius_eig(const PositiveWeight& w, const ComplexMatrix& t) {
  const ComplexMatrix b = compress(w, t);
  return max_modulus(to_points(general_eig(b, false, w.tolerances()).values));
}

GelfandRadius a_radius_gelfand(const PositiveWeight& w, const ComplexMatrix& t, int doublings) {
  if (doublings < 0) throw InvalidArgument("doublings must be non-negative");
  const ComplexMatrix b = compress(w, t);
  // D^{1/2} B D^{-1/2} is A^{1/2} T (A^{1/2})^+ written in the range basis.
  const RealVector root = w.range_eigenvalues().cwiseSqrt();
  ComplexMatrix m = root.cast<Complex>().asDiagonal() * b *
                    root.cwiseInverse().cast<Complex>().asDiagonal();

  constexpr double kFloor = 1e-300;
  GelfandRadius out;
  double log_scale = 0.0;  // log of the factor stripped from the current iterate
  for (int k = 0; k < doublings; ++k) {
    const double nu = op_norm(m);
    if (!(nu >= kFloor)) {
      out.underflow = true;
      return out;
    }
    log_scale = 2.0 * (log_scale + std::log(nu));
    m /= nu;
    m = (m * m).eval();
  }
  const double nu = op_norm(m);
  if (!(nu >= kFloor)) {
    out.underflow = true;
    return out;
  }
  out.radius = std::exp((log_scale + std::log(nu)) / std::ldexp(1.0, doublings));
  return out;
}

InvertibilityVerdict a_invertible(const PositiveWeight& w, const ComplexMatrix& t,
                                  InvertibilityRoute route) {
  const ComplexMatrix b = compress(w, t);
  InvertibilityVerdict v = route == InvertibilityRoute::compression ? compression_verdict(w, t, b)
                                                                    : douglas_verdict(w, t);
  if (v.invertible)
    v.inverse = w.U() * b.partialPivLu().inverse() * w.U().adjoint();
  return v;
}

ComplexMatrix a_inverse(const PositiveWeight& w, const ComplexMatrix& t) {
  const ComplexMatrix b = compress(w, t);
  if (!compression_verdict(w, t, b).invertible)
    throw NotAInvertible("range compression is numerically singular");
  return w.U() * b.partialPivLu().inverse() * w.U().adjoint();
}

SpectrumReport pure_state_spectrum(const PositiveWeight& w, const ComplexMatrix& t) {
  const ComplexMatrix b = compress(w, t);
  const ToleranceConfig& tol = w.tolerances();
  const int r = w.rank();
  const ComplexMatrix& p = w.P();
  const ComplexMatrix pt = p * t;
  const double pt_norm = op_norm(pt);
  const double zero_radius = tol.set_match_tol * (1.0 + op_norm(b));

  SpectrumReport report;
  report.method = SpectrumMethod::pure_state;
  report.weight_rank = r;

  // Left eigenvectors q of PT are right eigenvectors of (PT)* = T* P.
  const EigenSystem eig = general_eig(pt.adjoint(), true, tol);
  report.residuals.eig_residual = eig.max_residual;
  report.residuals.clustered = eig.clustered;

  std::vector<ComplexVector> states;
  bool all_certified = true;
  for (Eigen::Index k = 0; k < eig.values.size(); ++k) {
    const Complex lambda = std::conj(eig.values[k]);
    if (std::abs(lambda) <= zero_radius) continue;
    const ComplexVector q = eig.right_vectors->col(k).normalized();
    const double residual = (q.adjoint() * pt - lambda * q.adjoint()).norm();
    const double trace_qp = (q.adjoint() * p * q)(0, 0).real();
    const double defect = std::abs(trace_qp - 1.0);
    if (residual > tol.residual_tol * (1.0 + pt_norm) || defect > tol.residual_tol) {
      all_certified = false;
      continue;
    }
    report.residuals.trace_qp_defect = std::max(report.residuals.trace_qp_defect, defect);
    report.points.push_back((q.adjoint() * pt * q)(0, 0));
    states.push_back(q);
  }

  // Zero points come from the kernel of B*, lifted into range(P) by U.
  Eigen::BDCSVD<ComplexMatrix> svd(b, Eigen::ComputeFullU);
  const RealVector& s = svd.singularValues();
  const double cutoff = tol.rank_rel_tol * s(0);
  for (int i = 0; i < r; ++i) {
    if (s(0) > 0.0 && s(i) > cutoff) continue;
    const ComplexVector q = (w.U() * svd.matrixU().col(i)).normalized();
    const double defect = std::abs((q.adjoint() * p * q)(0, 0).real() - 1.0);
    report.residuals.trace_qp_defect = std::max(report.residuals.trace_qp_defect, defect);
    report.points.push_back((q.adjoint() * pt * q)(0, 0));
    states.push_back(q);
  }

  bool independent = true;
  if (!states.empty()) {
    ComplexMatrix stacked(w.dim(), static_cast<Eigen::Index>(states.size()));
    for (std::size_t i = 0; i < states.size(); ++i)
      stacked.col(static_cast<Eigen::Index>(i)) = states[i];
    Eigen::BDCSVD<ComplexMatrix> check(stacked);
    const RealVector& sv = check.singularValues();
    independent = sv(sv.size() - 1) > 1e-6;
  }

  report.residuals.certified = static_cast<int>(states.size());
  if (!all_certified || !independent || static_cast<int>(states.size()) != r) {
    const EigenSystem fallback = general_eig(b, false, tol);
    report.points = to_points(fallback.values);
    report.residuals.degenerate_eigenvectors = true;
    report.residuals.certified = 0;
  }
  report.radius = max_modulus(report.points);
  return report;
}

}  // namespace aspectral
