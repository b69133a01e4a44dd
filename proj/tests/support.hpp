#pragma once

#include <initializer_list>
#include <vector>

#include "aspectral/matcore.hpp"
#include "aspectral/rng.hpp"

namespace testing {

using aspectral::Complex;
using aspectral::ComplexMatrix;

inline ComplexMatrix diag(std::initializer_list<double> values) {
  const auto n = static_cast<Eigen::Index>(values.size());
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  Eigen::Index i = 0;
  for (double v : values) m(i, i) = v, ++i;
  return m;
}

inline ComplexMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
  ComplexMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

inline ComplexMatrix random_hermitian(aspectral::Rng& rng, int n) {
  const ComplexMatrix g = rng.gaussian_matrix(n, n, 1.0);
  return 0.5 * (g + g.adjoint());
}

inline bool same_multiset(const std::vector<Complex>& a, const std::vector<Complex>& b,
                          double tol) {
  return aspectral::match_multisets(a, b, tol).matched;
}

}  // namespace testing
