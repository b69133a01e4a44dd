#pragma once

#include <functional>
#include <initializer_list>
#include <string>
#include <utility>

#include "aspectral/aspectrum.hpp"
#include "aspectral/laws.hpp"
#include "aspectral/rng.hpp"
#include "aspectral/weightspace.hpp"

namespace aspectral::detail {

struct TrialOutcome {
  bool passed = true;
  bool inconclusive = false;
  double deviation = 0.0;
  std::optional<Witness> witness;

  // Records one sub-check; the first failing check attaches the witness.
  void check(bool ok, double dev, const std::string& note, const PositiveWeight& w,
             std::initializer_list<std::pair<const char*, const ComplexMatrix*>> ops);
};

using TrialBody = std::function<TrialOutcome(Rng&, const FuzzConfig&)>;

LawReport run_trials(const std::string& law_id, const FuzzConfig& cfg, int trials,
                     const TrialBody& body, Execution exec);

constexpr double kWeightSpread = 10.0;

// Rank of a fresh weight of dimension n under the configured policy.
int draw_rank(Rng& rng, const FuzzConfig& cfg, int n);
PositiveWeight draw_weight(Rng& rng, const FuzzConfig& cfg);

// Block-lower matrix in [U V] coordinates; `kernel_only` zeroes the range rows.
ComplexMatrix random_block_lower(Rng& rng, int n, int r, double scale, bool kernel_only = false);

std::vector<Complex> spectrum_points(const PositiveWeight& w, const ComplexMatrix& t);

// Tolerance for eigenvalues of nilpotent-by-construction products, whose
// computed values scale like sqrt(eps).
inline double nilpotent_tolerance(const PositiveWeight& w, double scale) {
  return std::sqrt(w.tolerances().residual_tol) * (1.0 + scale);
}

}  // namespace aspectral::detail
