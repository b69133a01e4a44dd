#pragma once

// Seeded property fuzzing of the identities satisfied by A-spectra in matrix
// algebras. Every law draws random weights and members of M^A, evaluates one
// identity per trial and aggregates a LawReport.
//
// Seeding: the law seed is mix_seed(cfg.seed ^ hash_id(law_id)) and trial i
// uses mix_seed(law_seed + i), so a law's trials do not depend on which other
// laws run or on the execution policy. Converse directions (existence of a
// witness X) are bounded searches; an unsuccessful search is counted as
// inconclusive, never as a failure.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aspectral/matcore.hpp"
#include "aspectral/parallel.hpp"

namespace aspectral {

enum class RankPolicy { full, deficient, mixed };

std::string to_string(RankPolicy p);
RankPolicy parse_rank_policy(const std::string& s);

struct FuzzConfig {
  std::uint64_t seed = 1;
  int trials = 200;
  int dim_min = 2;
  int dim_max = 8;
  RankPolicy rank_policy = RankPolicy::mixed;
  double scale = 1.0;
  ToleranceConfig tolerances{};

  // Throws InvalidArgument: trials >= 1, 2 <= dim_min <= dim_max <= 12, scale > 0.
  void validate() const;
};

struct Witness {
  std::uint64_t seed = 0;  // trial seed; replays the trial exactly
  int trial = 0;
  std::string note;
  ComplexMatrix weight;
  std::vector<std::pair<std::string, ComplexMatrix>> operators;
};

struct LawReport {
  std::string law_id;
  int trials = 0;
  int passed = 0;
  int inconclusive = 0;  // converse searches that found no witness
  double worst_deviation = 0.0;
  std::optional<Witness> counterexample;  // first failing trial
  double elapsed_seconds = 0.0;

  bool ok() const { return passed == trials; }
};

// Stable law ids, in suite order.
const std::vector<std::string>& law_ids();

LawReport law_commutation(const FuzzConfig& cfg, Execution exec = Execution::parallel);
LawReport law_orthogonal_sum(const FuzzConfig& cfg, Execution exec = Execution::parallel);
LawReport law_idempotent(const FuzzConfig& cfg, Execution exec = Execution::parallel);
LawReport law_socle(const FuzzConfig& cfg, Execution exec = Execution::parallel);
LawReport law_spectrum_determines(const FuzzConfig& cfg, Execution exec = Execution::parallel);
LawReport law_radius_domination(const FuzzConfig& cfg, Execution exec = Execution::parallel);
LawReport law_gkz(const FuzzConfig& cfg, Execution exec = Execution::parallel);
LawReport law_radical(const FuzzConfig& cfg, Execution exec = Execution::parallel);
LawReport law_diag_characters(const FuzzConfig& cfg, Execution exec = Execution::parallel);
LawReport law_rank_one_operator(const FuzzConfig& cfg, Execution exec = Execution::parallel);
// Runs 5/2 * cfg.trials trials (500 at the default 200).
LawReport law_invertibility_routes(const FuzzConfig& cfg, Execution exec = Execution::parallel);
LawReport law_radius_bounds(const FuzzConfig& cfg, Execution exec = Execution::parallel);
LawReport law_conjugate_adjoint(const FuzzConfig& cfg, Execution exec = Execution::parallel);

// Throws UnknownLaw.
LawReport run_law(const std::string& id, const FuzzConfig& cfg,
                  Execution exec = Execution::parallel);

std::vector<LawReport> run_suite(const FuzzConfig& cfg, const std::vector<std::string>& ids,
                                 Execution exec = Execution::parallel);

// Linear functional X -> tr(F X).
struct LinearFunctional {
  ComplexMatrix F;
  Complex operator()(const ComplexMatrix& x) const { return (F * x).trace(); }
};

}  // namespace aspectral
