#pragma once

// Inverse eigengap sums of A/3 and the bounds built from them: the quantum
// mixing bound (1/(nT)) sum_{lambda_j != lambda_k} 1/|lambda_j - lambda_k|,
// its split into cross-branch and within-branch pieces, the four quadrant
// sums of the cross piece, the f(n) envelope for the third quadrant, and the
// threshold measurements that the bounds are compared against.
//
// All logarithms are natural.

#include <string>
#include <vector>

#include "qwalk/classical.hpp"

namespace qwalk {

// Inclusive index ranges. c1 = [0, (n-1)/2], c2 = [n, (3n-1)/2],
// c1p = [(n+1)/2, n-1], c2p = [(3n+1)/2, 2n-1].
struct IndexRange {
  int first = 0;
  int last = -1;
  int size() const { return last - first + 1; }
  bool contains(int j) const { return j >= first && j <= last; }
};

struct IndexSets {
  int n = 3;
  IndexRange c1, c2, c1p, c2p;
};

IndexSets index_sets(int n);

inline constexpr int kBruteForceCap = 2001;

// sum over ordered pairs (j, k) in [0, 2n)^2 with lambda_j != lambda_k (decided
// symbolically) of 1/|lambda_j - lambda_k|. Throws CapExceeded for n > cap.
double eigengap_inverse_sum_bruteforce(int n, int cap = kBruteForceCap);

struct DecomposedSum {
  double cross = 0.0;      // sum_{j in C1, k in C2} 1/|lambda_j - lambda_k|
  double within_c1 = 0.0;  // sum_{j, k in C1, lambda_j != lambda_k}
  double within_c2 = 0.0;
  double total = 0.0;      // 8 cross + 4 within_c1 + 4 within_c2
  // The same pieces weighted by the true multiplicities (1 for mode 0, 2
  // otherwise). Equals the brute-force sum; `total` is an upper bound on it
  // because it counts mode 0 twice.
  double weighted_total = 0.0;
};

DecomposedSum decomposed_sum(int n);

// Quadrants of (3/2) sum_{j, k in C1} 1/|cos(2 pi j/n) - cos(2 pi k/n) + 1|,
// split at floor(n/4) / ceil(n/4). Su3 has j in the upper half, k in the lower.
struct SuSums {
  double su1 = 0.0, su2 = 0.0, su3 = 0.0, su4 = 0.0;
  double cross_total = 0.0;  // the undivided (3/2) double sum
  // Su3 without the 3/2 prefactor: the quantity f(n) is constructed to bound.
  double su3_unscaled() const { return su3 / 1.5; }
};

SuSums su_sums(int n);

struct Case5Sums {
  double c1 = 0.0;
  double c2 = 0.0;
  double bound = 0.0;  // ((8n/pi) ln n)^2
};

Case5Sums case5_sums(int n);

// (1/(nT)) * eigengap_inverse_sum_bruteforce(n).
double quantum_bound_rhs(int n, double T);

// One summand of f(n). alpha = arccos(1 - sin((2 pi/n)(b + c))),
// N = floor(n alpha / (2 pi)), lower = alpha - (2 pi/n) N,
// upper = (2 pi/n)(N + 1) - alpha.
struct ConjectureTerm {
  int b = 0;
  double alpha = 0.0;
  int big_n = 0;
  double lower_gap = 0.0;
  double upper_gap = 0.0;
  double value = 0.0;
};

struct ConjectureParams {
  int n = 5;
  int residue = 1;      // n mod 4
  int p = 1;
  double offset = 0.75; // 3/4 for n = 4p+1, 1/4 for n = 4p+3
  int b_last = 0;       // b runs over [0, b_last]: p-1 or p
};

// Throws DomainError for n < 5 or even n.
ConjectureParams conjecture_params(int n);

struct ConjectureResult {
  ConjectureParams params;
  std::vector<ConjectureTerm> terms;
  double total = 0.0;
};

// f(n) = sum_b f_alpha(b). A nonpositive gap throws ConvergenceError naming b.
ConjectureResult conjecture_f(int n);

// 100 n^2 (ln n)^power.
double conjecture_envelope(int n, int log_power);

// 4800 n (ln n)^5.
double theorem2_horizon(int n);

// Smallest T on a doubling + bisection grid (resolution 1 in T) with
// ||P_T - Pi||_1 <= 1/2e, using the exact averaged matrix.
MixingReport quantum_mixing_threshold(int n, NormKind kind = NormKind::induced);

struct Theorem2Budget {
  int n = 0;
  double horizon = 0.0;        // 4800 n (ln n)^5
  double threshold = 0.0;      // 1/2e
  // (1/(nT)) (8 (Su1 + Su2 + (3/2) f(n) + Su4) + 4 C1 + 4 C2)
  double measured_value = 0.0;
  // Same chain with the analytic bounds substituted.
  double analytic_value = 0.0;
  // 1/6 + 1/(10 (ln n)^3)
  double collapsed_value = 0.0;
  // Exact ||P_T - Pi||_1 at the horizon.
  double actual_distance = 0.0;

  bool measured_pass() const { return measured_value <= threshold; }
  bool analytic_pass() const { return analytic_value <= threshold; }
  bool collapses() const { return analytic_value <= collapsed_value; }
  bool pass() const { return measured_pass() && analytic_pass() && actual_distance <= threshold; }
};

// Requires odd n >= 100.
Theorem2Budget theorem2_budget_check(int n);

struct BoundFlag {
  std::string name;
  double value = 0.0;
  double bound = 0.0;
  bool pass() const { return value <= bound; }
};

struct BoundsReport {
  int n = 0;
  double total_sum = 0.0;
  DecomposedSum decomposition;
  double decomposition_relative_gap = 0.0;  // (total - brute) / brute
  SuSums su;
  Case5Sums case5;
  double f_n = 0.0;  // NaN when n < 5
  std::vector<BoundFlag> flags;
  bool all_pass() const;
};

BoundsReport bounds_report(int n);

}  // namespace qwalk
