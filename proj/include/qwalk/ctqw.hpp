#pragma once

// Continuous-time quantum walk U(t) = exp(+i A t / 3) on the semi-Cayley graph.
//
// From vertex i to vertex j, with delta = (residue(j) - residue(i)) mod n and
// eps = +1 (same block) or -1 (different blocks):
//
//   <j|U(t)|i> = (1/2n) sum_m omega^{m delta} (exp(i lp_m t) + eps exp(i lm_m t))
//
// where lp/lm are the plus/minus branch eigenvalues. Time averages over [0, T]
// are evaluated exactly through the kernel
//   Phi_T(x) = (exp(i x T) - 1) / (i x T),  Phi_T(0) = 1.

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qwalk/block_circulant.hpp"
#include "qwalk/group.hpp"
#include "qwalk/norms.hpp"
#include "qwalk/spectral.hpp"

namespace qwalk {

struct WalkParams {
  int n = 3;
  double t = 0.0;
  double T = 1.0;

  // Throws on even/small n, negative or non-finite t, or T <= 0.
  void validate() const;
};

Complex amplitude(int n, const VertexIndex& from, const VertexIndex& to, double t);
double probability(int n, const VertexIndex& from, const VertexIndex& to, double t);

// {P_t(from, j)} for all 2n targets in O(n^2).
std::vector<double> transition_row(int n, const VertexIndex& from, double t);

// P_t as a block-circulant table (column/row structure of the whole matrix).
BlockCirculant instantaneous_matrix(int n, double t);

inline constexpr int kOracleCap = 512;

// U(t) assembled as sum_k exp(i lambda_k t) |v_k><v_k| from the unit-norm
// eigenpairs; column i is U(t)|i>. Throws CapExceeded when n > cap.
Eigen::MatrixXcd propagator_oracle(int n, double t, int cap = kOracleCap);

// Phi_T(x). Uses exp(i x T / 2) sinc(x T / 2), exact at x = 0.
Complex averaging_kernel(double gap, double T);

// One entry of the time-averaged matrix by the direct O(n^2) double sum over
// eigenpairs. Throws ParameterError for T <= 0 or eps not in {+1, -1}.
double averaged_entry(int n, int delta, int eps, double T);

// Time-averaged walk matrix stored as its 2n distinct values g(delta, eps).
class AveragedWalkMatrix {
 public:
  AveragedWalkMatrix(double T, BlockCirculant values) : T_(T), values_(std::move(values)) {}

  int n() const { return values_.n(); }
  double horizon() const { return T_; }
  double g(int delta, int eps) const { return values_.value(delta, eps); }
  double entry(int i, int j) const { return values_.entry(i, j); }
  Eigen::MatrixXd full() const { return values_.dense(); }
  const BlockCirculant& values() const { return values_; }

 private:
  double T_;
  BlockCirculant values_;
};

// All g(delta, eps) at once in O(n^2): eigen-pair terms are grouped by mode
// difference before a single Fourier synthesis.
AveragedWalkMatrix averaged_matrix(int n, double T);

// T -> infinity limit. Values are exact rationals over the common
// denominator 2n^2: diagonal (2n - 1) / 2n^2, off-diagonal (n - 1) / 2n^2.
// The diagonal class is delta = 0, i.e. j = i or |i - j| = n.
struct LimitingDistribution {
  int n = 3;
  std::int64_t denominator = 0;
  std::int64_t diagonal_numerator = 0;
  std::int64_t offdiagonal_numerator = 0;

  double diagonal_value() const { return double(diagonal_numerator) / double(denominator); }
  double offdiagonal_value() const {
    return double(offdiagonal_numerator) / double(denominator);
  }
  double entry(int i, int j) const;
  // Row sum 2*diag + (2n - 2)*off compared with the denominator in integers.
  bool rows_sum_to_one_exactly() const;
  // min entry >= 1/(2n)^2, compared exactly.
  bool entries_bounded_below() const;
  double min_entry() const { return offdiagonal_value(); }
  BlockCirculant as_block_circulant() const;
  Eigen::MatrixXd full() const { return as_block_circulant().dense(); }
};

LimitingDistribution limiting_distribution(int n);

// ||P_T - Pi|| under the chosen norm. Raw residuals, no clamping.
double distance_to_limit(const AveragedWalkMatrix& avg, NormKind kind = NormKind::induced);

struct ConvergenceSeries {
  std::vector<double> horizons;
  std::vector<double> distances;
  // Distances over the last three horizons are strictly decreasing.
  bool decreasing_tail = false;
};

// Throws ParameterError unless T_list is strictly increasing and positive.
ConvergenceSeries convergence_to_limit(int n, std::span<const double> T_list,
                                       NormKind kind = NormKind::induced);

}  // namespace qwalk
