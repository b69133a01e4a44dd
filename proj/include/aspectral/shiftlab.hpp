#pragma once

// Truncated weighted-shift models.
//
//   unilateral_halved:   a_n = 2^-n (n = 0..N-1), A = diag(a_n^2),
//                        T = (2/5) right shift, L = (1/5) left shift.
//   bilateral_factorial: indices n = -floor(N/2) .. ceil(N/2)-1,
//                        a_n = 1 for n < 0 and 1/n! for n >= 0,
//                        A^{1/2} = diag(a_n), T = right shift.
//
// Truncation is a hard cutoff, so T_N is nilpotent. Weights keep their
// log-magnitudes next to the linear values; the log form is exact far past the
// point where 1/n! underflows.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "aspectral/matcore.hpp"
#include "aspectral/parallel.hpp"
#include "aspectral/weightspace.hpp"

namespace aspectral {

enum class ShiftKind { unilateral_halved, bilateral_factorial };
enum class WeightScaleMode { linear, log_domain };
enum class RatioProbe { adjoint_shift };
enum class ScanStatus { finite, singular };

std::string to_string(ShiftKind k);
ShiftKind parse_shift_kind(const std::string& s);
std::string to_string(ScanStatus s);

// Linear-mode ceiling on the bilateral truncation (1/n! underflows near n = 170).
inline constexpr int kLinearFactorialLimit = 160;

struct ShiftModel {
  ShiftKind kind = ShiftKind::unilateral_halved;
  int N = 0;
  int index_offset = 0;  // index of position 0
  WeightScaleMode weight_scale_mode = WeightScaleMode::linear;
  std::vector<double> log_a;  // log a_n by position

  int index_at(int position) const { return index_offset + position; }
  int position_of(int index) const { return index - index_offset; }
};

// Throws TruncationTooSmall (N < 4) and, in linear mode, UnderflowRisk.
ShiftModel make_shift_model(ShiftKind kind, int N,
                            WeightScaleMode mode = WeightScaleMode::linear);

// Tolerances for the shift weights: the rank cutoff is pushed to the bottom of
// the double range so that the full diagonal is retained.
ToleranceConfig shift_tolerances();

struct BuiltModel {
  ShiftModel model;
  PositiveWeight weight;
  ComplexMatrix T;
  std::optional<ComplexMatrix> L;  // unilateral_halved only
};

BuiltModel build_model(ShiftKind kind, int N);

struct ScanResult {
  Complex lambda;
  int N = 0;
  double growth = 0.0;  // ||(T_N - lambda)^{-1}||_A, +inf when singular
  ScanStatus status = ScanStatus::finite;
};

// Results ordered by (lambda index, N index).
std::vector<ScanResult> resolvent_scan(ShiftKind kind, const std::vector<Complex>& lambdas,
                                       const std::vector<int>& n_list,
                                       Execution exec = Execution::parallel);

// ||A^{1/2} T* e_n|| / ||A^{1/2} e_n|| = a_{n-1} / a_n for each index n.
// Throws IndexOutOfTruncation unless n sits one step inside both edges.
std::vector<double> vector_ratio_probe(const ShiftModel& model, RatioProbe probe,
                                       const std::vector<int>& n_values);

// growth(N_max) / growth(N_min) at or above this flags lambda as divergent.
inline constexpr double kDivergenceRatio = 10.0;

struct DiscPoint {
  Complex lambda;
  double score = 0.0;         // least-squares slope of log growth against N
  double growth_ratio = 0.0;  // growth(N_max) / growth(N_min)
  bool divergent = false;
};

struct DiscReport {
  std::vector<int> n_list;
  double grid_step = 0.0;
  std::vector<DiscPoint> points;  // row-major over the grid on [-1.5, 1.5]^2
  std::vector<ScanResult> rows;

  int divergent_count() const;
  int bounded_count() const { return static_cast<int>(points.size()) - divergent_count(); }
};

DiscReport disc_report(ShiftKind kind, double grid_step, const std::vector<int>& n_list,
                       Execution exec = Execution::parallel);

DiscPoint score_lambda(const std::vector<ScanResult>& rows_for_lambda);

// CSV: lambda_re,lambda_im,N,growth,status
void write_scan_csv(std::ostream& os, const std::vector<ScanResult>& rows);
// CSV: lambda_re,lambda_im,score,growth_ratio,divergent
void write_disc_csv(std::ostream& os, const DiscReport& report);

}  // namespace aspectral
