#pragma once

// Discrete-time simple random walk with transition matrix A/3 on the
// semi-Cayley graph, and the mixing diagnostics built on it.

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qwalk/block_circulant.hpp"
#include "qwalk/norms.hpp"

namespace qwalk {

struct ClassicalWalkState {
  int n = 3;
  long long t = 0;
  Eigen::MatrixXd matrix;  // (A/3)^t, symmetric and doubly stochastic
};

// Dense (A/3)^t by repeated squaring.
ClassicalWalkState classical_power(int n, long long t);

// (A/3)^t from the spectrum: entry(delta, eps) =
// (1/2n) sum_m omega^{m delta} (lp_m^t + eps lm_m^t). O(n^2).
BlockCirculant classical_power_structured(int n, long long t);

// One step v <- (A/3) v on a 2n-vector, O(n).
Eigen::VectorXd classical_step(int n, const Eigen::VectorXd& v);

// Result of a threshold-mixing search. The search is over integer steps for
// the classical walk and over real horizons T for the averaged quantum walk.
struct MixingReport {
  double threshold_time = 0.0;
  double distance_at_threshold = 0.0;
  // Largest probed point below threshold_time and its distance (> target),
  // or (-1, NaN) when threshold_time is the first probe.
  double prior_point = -1.0;
  double distance_at_prior = 0.0;
  // Every probe (time, distance) in increasing time order.
  std::vector<std::pair<double, double>> distance_series;
  NormKind norm_kind = NormKind::induced;
  double epsilon = 0.0;
  // The distance stayed <= epsilon on the whole verification horizon.
  bool horizon_verified = false;
  double horizon_end = 0.0;
};

struct MixingSearchOptions {
  double horizon_multiplier = 4.0;  // "for all t >= T" is checked on [T, multiplier * T]
  long long step_cap = 1LL << 32;
};

// Smallest integer t with 1/2 ||(A/3)^t - pi 1^T|| <= epsilon, found by doubling
// then bisection, then checked step by step on [t, multiplier * t]. A horizon
// violation restarts the search above it. Throws ParameterError unless
// 0 < epsilon < 1/2, ConvergenceError past the step cap.
MixingReport classical_mixing_time(int n, double epsilon, NormKind kind = NormKind::induced,
                                   const MixingSearchOptions& options = {});

// d((A/3)^(a+b)) <= d((A/3)^a) d((A/3)^b) + 1e-10 on dense matrices.
bool submultiplicativity_check(int n, long long a, long long b);

struct ClassicalSeriesRow {
  long long t = 0;
  double half_induced_distance = 0.0;
  double pairwise_column_distance = 0.0;
};

// Rows t = 0..t_max by exact stepping of one column.
std::vector<ClassicalSeriesRow> classical_series(int n, long long t_max);

}  // namespace qwalk
