#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "aspectral/matcore.hpp"

namespace aspectral {

// splitmix64 finaliser; used to derive independent sub-seeds.
constexpr std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// FNV-1a, so that a law's sub-seed depends on its id and not its position.
constexpr std::uint64_t hash_id(std::string_view id) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : id) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix_seed(seed)) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  double gaussian() { return normal_(engine_); }

  // Standard complex Gaussian: E|z|^2 = 1.
  Complex complex_gaussian() {
    constexpr double s = 0.70710678118654752440;
    const double re = normal_(engine_);
    const double im = normal_(engine_);
    return {s * re, s * im};
  }

  ComplexMatrix gaussian_matrix(Eigen::Index rows, Eigen::Index cols, double scale = 1.0) {
    ComplexMatrix m(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
      for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = scale * complex_gaussian();
    return m;
  }

  ComplexVector gaussian_vector(Eigen::Index n, double scale = 1.0) {
    return gaussian_matrix(n, 1, scale).col(0);
  }

  // Haar-distributed unitary: QR of a Ginibre matrix with phase-fixed R diagonal.
  ComplexMatrix haar_unitary(Eigen::Index n);

  std::uint64_t next_seed() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

inline ComplexMatrix Rng::haar_unitary(Eigen::Index n) {
  const ComplexMatrix g = gaussian_matrix(n, n);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < n; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

}  // namespace aspectral
