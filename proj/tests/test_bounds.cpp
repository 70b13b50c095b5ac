#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "qwalk/bounds.hpp"
#include "qwalk/ctqw.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/spectral.hpp"

using namespace qwalk;

TEST_CASE("index sets") {
  for (int n : {3, 5, 11}) {
    const IndexSets s = index_sets(n);
    CHECK(s.c1.size() == (n + 1) / 2);
    CHECK(s.c1p.size() == (n - 1) / 2);
    CHECK(s.c1.first == 0);
    CHECK(s.c1p.last == n - 1);
    CHECK(s.c1.last + 1 == s.c1p.first);
    CHECK(s.c2.first == n);
    CHECK(s.c2p.last == 2 * n - 1);
    const Spectrum spec(n);
    for (int j = s.c1p.first; j <= s.c1p.last; ++j) {
      CHECK(spec.eigenvalue(j, Branch::plus) == spec.eigenvalue(n - j, Branch::plus));
      CHECK(s.c1.contains(n - j));
    }
  }
}

TEST_CASE("brute-force eigengap sum") {
  // n = 3: spectrum {1, 0, 0, 1/3, -2/3, -2/3}, summed by hand pair by pair.
  // Value pairs weighted by multiplicity: (1,0) (1,1/3) (1,-2/3) (0,1/3) (0,-2/3) (1/3,-2/3).
  const double hand = 2 * (2.0 / 1 + 1.0 / (2.0 / 3) + 2.0 / (5.0 / 3) + 2.0 / (1.0 / 3) +
                           4.0 / (2.0 / 3) + 2.0 / 1);
  CHECK(std::abs(eigengap_inverse_sum_bruteforce(3) - hand) <= 1e-12);
  CHECK(std::abs(hand - 37.4) <= 1e-12);
  for (int n : {3, 5, 7, 15, 31, 51}) {
    const double ref = oracle::eigengap_sum_numeric(n);
    CHECK(std::abs(eigengap_inverse_sum_bruteforce(n) - ref) <= 1e-9 * ref);
  }
  CHECK_THROWS_AS(eigengap_inverse_sum_bruteforce(21, 19), CapExceeded);
  for (int n = 5; n <= 401; n += 12) {
    const double L = std::log(static_cast<double>(n));
    CHECK(eigengap_inverse_sum_bruteforce(n) <= 800.0 * n * std::pow(L, 5));
  }
}

TEST_CASE("decomposition with coefficients 8/4/4 over-counts mode 0") {
  for (int n = 5; n <= 201; n += 2) {
    const DecomposedSum d = decomposed_sum(n);
    const double brute = eigengap_inverse_sum_bruteforce(n);
    CHECK(std::abs(d.weighted_total - brute) <= 1e-10 * brute);
    CHECK(d.total >= brute);
    CHECK(d.total - brute > 1e-6 * brute);
    CHECK(d.total == 8 * d.cross + 4 * d.within_c1 + 4 * d.within_c2);
  }
}

TEST_CASE("cross term equals the cosine form") {
  for (int n : {5, 9, 101}) {
    const DecomposedSum d = decomposed_sum(n);
    const SuSums s = su_sums(n);
    double direct = 0;
    for (int j = 0; j <= (n - 1) / 2; ++j) {
      for (int k = 0; k <= (n - 1) / 2; ++k) {
        direct += 1.5 / std::abs(std::cos(2 * std::numbers::pi * j / n) -
                                 std::cos(2 * std::numbers::pi * k / n) + 1);
      }
    }
    CHECK(std::abs(d.cross - direct) <= 1e-10 * direct);
    CHECK(std::abs(s.cross_total - direct) <= 1e-10 * direct);
  }
}

TEST_CASE("quadrants partition the cross sum") {
  for (int n = 5; n <= 401; n += 2) {
    const SuSums s = su_sums(n);
    CHECK(std::abs(s.su1 + s.su2 + s.su3 + s.su4 - s.cross_total) <= 1e-9 * s.cross_total);
    CHECK(s.su3_unscaled() * 1.5 == doctest::Approx(s.su3));
  }
}

TEST_CASE("within-branch sums") {
  // n = 5: three distinct plus-branch eigenvalues in C1.
  const double l0 = eigenvalue(5, 0, Branch::plus), l1 = eigenvalue(5, 1, Branch::plus),
               l2 = eigenvalue(5, 2, Branch::plus);
  const double direct = 2 * (1 / std::abs(l0 - l1) + 1 / std::abs(l0 - l2) + 1 / std::abs(l1 - l2));
  const Case5Sums c = case5_sums(5);
  CHECK(std::abs(c.c1 - direct) <= 1e-12);
  CHECK(c.c1 == decomposed_sum(5).within_c1);
  for (int n = 5; n <= 301; n += 2) {
    const Case5Sums s = case5_sums(n);
    CHECK(s.c1 <= s.bound);
    CHECK(s.c2 <= s.bound);
    CHECK(std::abs(s.c1 - s.c2) <= 1e-9 * s.c1);
  }
}

TEST_CASE("analytic quadrant bounds") {
  for (int n = 5; n <= 301; n += 2) {
    const SuSums s = su_sums(n);
    const double nn = n, L = std::log(nn);
    CHECK(s.su1 <= 3.0 / 8.0 * nn * nn * L);
    CHECK(s.su2 <= 3.0 / 32.0 * nn * nn);
    CHECK(s.su4 <= 3.0 / 32.0 * nn * nn * L);
  }
}

TEST_CASE("f(n)") {
  const ConjectureResult f5 = conjecture_f(5);
  CHECK(f5.terms.size() == 1);
  CHECK(f5.params.p == 1);
  CHECK(std::abs(f5.total - oracle::conjecture_f_high_precision(5)) <= 1e-10);
  CHECK(std::abs(f5.total - 14.4105210437) <= 1e-9);
  CHECK(conjecture_f(7).terms.size() == 2);
  for (int n : {9, 11, 101, 203, 1999, 2001}) {
    const double hp = oracle::conjecture_f_high_precision(n);
    CHECK(std::abs(conjecture_f(n).total - hp) <= 1e-10 * hp);
  }
  for (int n = 5; n <= 999; n += 2) {
    const ConjectureResult f = conjecture_f(n);
    const ConjectureParams& p = f.params;
    CHECK(static_cast<int>(f.terms.size()) == p.b_last + 1);
    for (const auto& t : f.terms) {
      CHECK(t.alpha > 0);
      CHECK(t.alpha < std::numbers::pi / 2);
      CHECK(t.big_n >= 0);
      CHECK(t.big_n <= p.p);
      CHECK(t.lower_gap > 0);
      CHECK(t.upper_gap > 0);
    }
  }
  CHECK_THROWS_AS(conjecture_f(3), DomainError);
  CHECK_THROWS_AS(conjecture_f(8), DomainError);
}

TEST_CASE("quantum bound") {
  for (int n : {5, 11, 21}) {
    for (double T : {1e2, 1e3, 1e4}) {
      CHECK(distance_to_limit(averaged_matrix(n, T)) <= quantum_bound_rhs(n, T));
    }
    CHECK(quantum_bound_rhs(n, 200.0) == doctest::Approx(quantum_bound_rhs(n, 100.0) / 2));
  }
}

TEST_CASE("quantum mixing threshold search contract") {
  const double target = 1.0 / (2.0 * std::numbers::e);
  for (int n : {5, 11, 21}) {
    const MixingReport r = quantum_mixing_threshold(n);
    CHECK(r.distance_at_threshold <= target);
    CHECK(r.prior_point > 0);
    CHECK(r.distance_at_prior > target);
    CHECK(r.threshold_time - r.prior_point <= 1.0);
    CHECK(distance_to_limit(averaged_matrix(n, r.threshold_time)) == r.distance_at_threshold);
  }
}

TEST_CASE("horizon budget") {
  const Theorem2Budget b = theorem2_budget_check(101);
  CHECK(b.measured_pass());
  CHECK(b.analytic_pass());
  CHECK(b.collapses());
  CHECK(b.actual_distance <= b.threshold);
  CHECK(b.pass());
  CHECK_THROWS_AS(theorem2_budget_check(99), DomainError);
}

TEST_CASE("bounds report") {
  const BoundsReport r = bounds_report(11);
  CHECK(r.all_pass());
  CHECK(r.flags.size() == 8);
  CHECK(r.decomposition_relative_gap > 0);
  CHECK(std::isnan(bounds_report(3).f_n));
}
