#pragma once

// A-spectrum, A-spectral radius and A-invertibility of members of M^A.
//
// The working definition is the spectrum of the range compression
// B = U* T U. Two further routes check it: the Douglas pencil conditions for
// A-invertibility and the pure-state form, in which each spectral value is
// tr(Q P T) for a rank-one projection Q with tr(Q P) = 1.
//
// Left and right A-spectra coincide for the finite compression and are not
// exposed separately.

#include <optional>
#include <string>
#include <vector>

#include "aspectral/matcore.hpp"
#include "aspectral/weightspace.hpp"

namespace aspectral {

enum class SpectrumMethod { compression, pure_state, gelfand_radius_only };

std::string to_string(SpectrumMethod m);
SpectrumMethod parse_spectrum_method(const std::string& s);

struct SpectrumDiagnostics {
  double eig_residual = 0.0;     // eigenpair residual of the underlying solve
  double trace_qp_defect = 0.0;  // max |tr(QP) - 1| over certified pure states
  bool clustered = false;
  bool degenerate_eigenvectors = false;  // pure-state route fell back to compression
  bool underflow = false;                // Gelfand iterates collapsed
  int certified = 0;                     // pure states verified individually
};

struct SpectrumReport {
  std::vector<Complex> points;
  double radius = 0.0;
  SpectrumMethod method = SpectrumMethod::compression;
  SpectrumDiagnostics residuals;
  int weight_rank = 0;
};

enum class InvertibilityRoute { compression, douglas };
enum class FailingCondition { none, cond_i_lower, cond_i_upper, cond_ii };

std::string to_string(InvertibilityRoute r);
std::string to_string(FailingCondition c);
InvertibilityRoute parse_invertibility_route(const std::string& s);

struct InvertibilityVerdict {
  bool invertible = false;
  InvertibilityRoute route = InvertibilityRoute::compression;
  std::optional<ComplexMatrix> inverse;  // certificate when invertible
  FailingCondition failing = FailingCondition::none;
  double margin = 0.0;  // smallest singular value, or smallest pencil eigenvalue
};

struct GelfandRadius {
  double radius = 0.0;
  bool underflow = false;
};

// U* T U. Throws NotInMA.
ComplexMatrix compress(const PositiveWeight& w, const ComplexMatrix& t);

SpectrumReport a_spectrum(const PositiveWeight& w, const ComplexMatrix& t);
double a_radius_eig(const PositiveWeight& w, const ComplexMatrix& t);

// ||S0^(2^k)||^(1/2^k) with S0 = A^{1/2} T (A^{1/2})^+, normalised at every squaring.
GelfandRadius a_radius_gelfand(const PositiveWeight& w, const ComplexMatrix& t, int doublings);

InvertibilityVerdict a_invertible(const PositiveWeight& w, const ComplexMatrix& t,
                                  InvertibilityRoute route);

// U B^{-1} U*. Throws NotAInvertible.
ComplexMatrix a_inverse(const PositiveWeight& w, const ComplexMatrix& t);

SpectrumReport pure_state_spectrum(const PositiveWeight& w, const ComplexMatrix& t);

// Threshold used when comparing spectra of operators of size ~scale.
inline double spectrum_tolerance(const PositiveWeight& w, double scale) {
  return w.tolerances().set_match_tol * (1.0 + scale);
}

}  // namespace aspectral
