#include "aspectral/laws.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>

#include "aspectral/errors.hpp"
#include "law_support.hpp"

namespace aspectral {

namespace detail {

void TrialOutcome::check(bool ok, double dev, const std::string& note, const PositiveWeight& w,
                         std::initializer_list<std::pair<const char*, const ComplexMatrix*>> ops) {
  if (std::isnan(dev)) ok = false;
  else deviation = std::max(deviation, dev);
  if (ok) return;
  passed = false;
  if (witness) return;
  Witness wit;
  wit.note = note;
  wit.weight = w.A();
  for (const auto& [name, m] : ops) wit.operators.emplace_back(name, *m);
  witness = std::move(wit);
}

LawReport run_trials(const std::string& law_id, const FuzzConfig& cfg, int trials,
                     const TrialBody& body, Execution exec) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t law_seed = mix_seed(cfg.seed ^ hash_id(law_id));
  std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(trials));
  std::vector<std::uint64_t> seeds(outcomes.size());

  for_each_index(outcomes.size(), exec, [&](std::size_t i) {
    seeds[i] = mix_seed(law_seed + i);
    Rng rng(seeds[i]);
    try {
      outcomes[i] = body(rng, cfg);
    } catch (const Error& e) {
      TrialOutcome failed;
      failed.passed = false;
      Witness wit;
      wit.note = std::string("exception: ") + e.what();
      failed.witness = std::move(wit);
      outcomes[i] = std::move(failed);
    }
  });

  LawReport report;
  report.law_id = law_id;
  report.trials = trials;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    TrialOutcome& o = outcomes[i];
    report.worst_deviation = std::max(report.worst_deviation, o.deviation);
    if (o.inconclusive) ++report.inconclusive;
    if (o.passed) {
      ++report.passed;
    } else if (!report.counterexample) {
      report.counterexample = o.witness.value_or(Witness{});
      report.counterexample->seed = seeds[i];
      report.counterexample->trial = static_cast<int>(i);
    }
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

int draw_rank(Rng& rng, const FuzzConfig& cfg, int n) {
  switch (cfg.rank_policy) {
    case RankPolicy::full: return n;
    case RankPolicy::deficient: return n == 1 ? 1 : rng.uniform_int(1, n - 1);
    case RankPolicy::mixed: return rng.uniform_int(1, n);
  }
  return n;
}

PositiveWeight draw_weight(Rng& rng, const FuzzConfig& cfg) {
  const int n = rng.uniform_int(cfg.dim_min, cfg.dim_max);
  const int r = draw_rank(rng, cfg, n);
  return random_weight(rng.next_seed(), n, r, kWeightSpread, cfg.tolerances);
}

ComplexMatrix random_block_lower(Rng& rng, int n, int r, double scale, bool kernel_only) {
  const double s = scale / std::sqrt(static_cast<double>(n));
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  if (!kernel_only) m.topLeftCorner(r, r) = rng.gaussian_matrix(r, r, s);
  m.bottomLeftCorner(n - r, r) = rng.gaussian_matrix(n - r, r, s);
  m.bottomRightCorner(n - r, n - r) = rng.gaussian_matrix(n - r, n - r, s);
  return m;
}

std::vector<Complex> spectrum_points(const PositiveWeight& w, const ComplexMatrix& t) {
  return a_spectrum(w, t).points;
}

}  // namespace detail

std::string to_string(RankPolicy p) {
  switch (p) {
    case RankPolicy::full: return "full";
    case RankPolicy::deficient: return "deficient";
    case RankPolicy::mixed: return "mixed";
  }
  return "unknown";
}

RankPolicy parse_rank_policy(const std::string& s) {
  if (s == "full") return RankPolicy::full;
  if (s == "deficient") return RankPolicy::deficient;
  if (s == "mixed") return RankPolicy::mixed;
  throw InvalidArgument("unknown rank policy '" + s + "'");
}

void FuzzConfig::validate() const {
  if (trials < 1) throw InvalidArgument("trials must be >= 1");
  if (dim_min < 2 || dim_min > dim_max || dim_max > 12)
    throw InvalidArgument("dimension range must satisfy 2 <= min <= max <= 12");
  if (!(scale > 0.0) || !std::isfinite(scale)) throw InvalidArgument("scale must be positive");
  tolerances.validate();
}

const std::vector<std::string>& law_ids() {
  static const std::vector<std::string> ids = {
      "commutation",        "orthogonal_sum",     "idempotent",         "socle",
      "spectrum_determines", "radius_domination", "gkz",                "radical",
      "diag_characters",    "rank_one_operator",  "invertibility_routes", "radius_bounds",
      "conjugate_adjoint"};
  return ids;
}

LawReport run_law(const std::string& id, const FuzzConfig& cfg, Execution exec) {
  using LawFn = LawReport (*)(const FuzzConfig&, Execution);
  static const std::map<std::string, LawFn> table = {
      {"commutation", law_commutation},
      {"orthogonal_sum", law_orthogonal_sum},
      {"idempotent", law_idempotent},
      {"socle", law_socle},
      {"spectrum_determines", law_spectrum_determines},
      {"radius_domination", law_radius_domination},
      {"gkz", law_gkz},
      {"radical", law_radical},
      {"diag_characters", law_diag_characters},
      {"rank_one_operator", law_rank_one_operator},
      {"invertibility_routes", law_invertibility_routes},
      {"radius_bounds", law_radius_bounds},
      {"conjugate_adjoint", law_conjugate_adjoint},
  };
  const auto it = table.find(id);
  if (it == table.end()) throw UnknownLaw("'" + id + "'");
  return it->second(cfg, exec);
}

std::vector<LawReport> run_suite(const FuzzConfig& cfg, const std::vector<std::string>& ids,
                                 Execution exec) {
  for (const auto& id : ids)
    if (std::find(law_ids().begin(), law_ids().end(), id) == law_ids().end())
      throw UnknownLaw("'" + id + "'");
  std::vector<LawReport> reports;
  reports.reserve(ids.size());
  for (const auto& id : ids) reports.push_back(run_law(id, cfg, exec));
  return reports;
}

}  // namespace aspectral
