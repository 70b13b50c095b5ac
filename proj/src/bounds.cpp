#include "qwalk/bounds.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <string>

#include "qwalk/ctqw.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/parallel.hpp"
#include "qwalk/spectral.hpp"

namespace qwalk {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> cosine_table(int n, int count) {
  std::vector<double> c(count);
  for (int m = 0; m < count; ++m) c[m] = mode_cosine(n, m);
  return c;
}

// 1 + c_plus - c_minus, the scaled cross-branch gap; rejects the guard band.
double cross_gap(int n, double c_plus, double c_minus) {
  const double g = 1.0 + c_plus - c_minus;
  if (std::abs(g) < kDegeneracyGuard) {
    throw ConvergenceError("cross-branch eigenvalue gap inside guard band at n=" +
                           std::to_string(n));
  }
  return g;
}

}  // namespace

IndexSets index_sets(int n) {
  require_odd_order(n);
  const int h = (n - 1) / 2;
  IndexSets s;
  s.n = n;
  s.c1 = {0, h};
  s.c2 = {n, n + h};
  s.c1p = {h + 1, n - 1};
  s.c2p = {n + h + 1, 2 * n - 1};
  return s;
}

double eigengap_inverse_sum_bruteforce(int n, int cap) {
  require_odd_order(n);
  if (n > cap) {
    throw CapExceeded("brute-force eigengap sum limited to n <= " + std::to_string(cap));
  }
  const Spectrum spec(n);
  const std::vector<double> lambda = spec.eigenvalues();
  return parallel_sum(static_cast<std::size_t>(2 * n), [&](std::size_t ji) {
    const int j = static_cast<int>(ji);
    const EigenIndex a = EigenIndex::from_flat(n, j);
    CompensatedSum row;
    for (int k = 0; k < 2 * n; ++k) {
      if (same_eigenvalue(n, a, EigenIndex::from_flat(n, k))) continue;
      row.add(1.0 / std::abs(lambda[j] - lambda[k]));
    }
    return row.value();
  });
}

DecomposedSum decomposed_sum(int n) {
  require_odd_order(n);
  const int h = (n - 1) / 2;
  const Spectrum spec(n);
  DecomposedSum out;
  CompensatedSum cross, w1, w2, weighted;
  for (int j = 0; j <= h; ++j) {
    const double wj = j == 0 ? 1.0 : 2.0;
    for (int k = 0; k <= h; ++k) {
      const double wk = k == 0 ? 1.0 : 2.0;
      const double lp_j = spec.eigenvalue(j, Branch::plus);
      const double lm_j = spec.eigenvalue(j, Branch::minus);
      cross_gap(n, mode_cosine(n, j), mode_cosine(n, k));
      const double c = 1.0 / std::abs(lp_j - spec.eigenvalue(k, Branch::minus));
      cross.add(c);
      weighted.add(2.0 * wj * wk * c);
      if (j != k) {
        const double a = 1.0 / std::abs(lp_j - spec.eigenvalue(k, Branch::plus));
        const double b = 1.0 / std::abs(lm_j - spec.eigenvalue(k, Branch::minus));
        w1.add(a);
        w2.add(b);
        weighted.add(wj * wk * (a + b));
      }
    }
  }
  out.cross = cross.value();
  out.within_c1 = w1.value();
  out.within_c2 = w2.value();
  out.total = 8.0 * out.cross + 4.0 * out.within_c1 + 4.0 * out.within_c2;
  out.weighted_total = weighted.value();
  return out;
}

SuSums su_sums(int n) {
  require_odd_order(n);
  const int h = (n - 1) / 2;
  const int low_last = n / 4;
  const std::vector<double> c = cosine_table(n, h + 1);
  // Per-row quadrant partials, combined in row order.
  std::vector<double> q1(h + 1), q2(h + 1), q3(h + 1), q4(h + 1), whole(h + 1);
  parallel_for(static_cast<std::size_t>(h + 1), [&](std::size_t ji) {
    const int j = static_cast<int>(ji);
    CompensatedSum low, high, all;
    for (int k = 0; k <= h; ++k) {
      const double term = 1.5 / std::abs(cross_gap(n, c[j], c[k]));
      all.add(term);
      (k <= low_last ? low : high).add(term);
    }
    whole[j] = all.value();
    if (j <= low_last) {
      q1[j] = low.value();
      q2[j] = high.value();
    } else {
      q3[j] = low.value();
      q4[j] = high.value();
    }
  });
  SuSums s;
  s.su1 = compensated_total(q1);
  s.su2 = compensated_total(q2);
  s.su3 = compensated_total(q3);
  s.su4 = compensated_total(q4);
  s.cross_total = compensated_total(whole);
  return s;
}

Case5Sums case5_sums(int n) {
  const DecomposedSum d = decomposed_sum(n);
  const double root = 8.0 * n / kPi * std::log(static_cast<double>(n));
  return {d.within_c1, d.within_c2, root * root};
}

double quantum_bound_rhs(int n, double T) {
  if (!(T > 0.0)) throw ParameterError("T must be positive");
  return eigengap_inverse_sum_bruteforce(n) / (static_cast<double>(n) * T);
}

ConjectureParams conjecture_params(int n) {
  require_odd_order(n);
  if (n < 5) throw DomainError("the f(n) envelope is defined for odd n >= 5");
  ConjectureParams p;
  p.n = n;
  p.residue = n % 4;
  p.p = (n - p.residue) / 4;
  p.offset = p.residue == 1 ? 0.75 : 0.25;
  p.b_last = p.residue == 1 ? p.p - 1 : p.p;
  return p;
}

ConjectureResult conjecture_f(int n) {
  ConjectureResult out;
  out.params = conjecture_params(n);
  const double step = 2.0 * kPi / n;
  CompensatedSum total;
  for (int b = 0; b <= out.params.b_last; ++b) {
    ConjectureTerm term;
    term.b = b;
    term.alpha = std::acos(1.0 - std::sin(step * (b + out.params.offset)));
    term.big_n = static_cast<int>(std::floor(term.alpha / step));
    term.lower_gap = term.alpha - step * term.big_n;
    term.upper_gap = step * (term.big_n + 1) - term.alpha;
    if (!(term.lower_gap > 0.0) || !(term.upper_gap > 0.0)) {
      throw ConvergenceError("f(n) term undefined at n=" + std::to_string(n) +
                             ", b=" + std::to_string(b) + ": alpha sits on the grid");
    }
    const double a = term.alpha;
    term.value =
        kPi / (2.0 * a) * (1.0 / a + 1.0 / term.lower_gap + 1.0 / term.upper_gap) +
        n / (4.0 * a) * std::log((kPi * kPi / 2.0) / (term.lower_gap * term.upper_gap));
    total.add(term.value);
    out.terms.push_back(term);
  }
  out.total = total.value();
  return out;
}

double conjecture_envelope(int n, int log_power) {
  return 100.0 * n * static_cast<double>(n) * std::pow(std::log(static_cast<double>(n)), log_power);
}

double theorem2_horizon(int n) {
  return 4800.0 * n * std::pow(std::log(static_cast<double>(n)), 5);
}

MixingReport quantum_mixing_threshold(int n, NormKind kind) {
  require_odd_order(n);
  const double target = 1.0 / (2.0 * std::numbers::e);
  std::map<double, double> probes;
  auto dist = [&](double T) {
    auto it = probes.find(T);
    if (it != probes.end()) return it->second;
    const double d = distance_to_limit(averaged_matrix(n, T), kind);
    probes.emplace(T, d);
    return d;
  };

  double lo = 0.0, hi = 1.0;
  while (dist(hi) > target) {
    lo = hi;
    hi *= 2.0;
    if (hi > 0x1p40) throw ConvergenceError("averaged walk did not reach 1/2e by T = 2^40");
  }
  if (lo > 0.0) {
    while (hi - lo > 1.0) {
      const double mid = 0.5 * (lo + hi);
      (dist(mid) <= target ? hi : lo) = mid;
    }
  }

  MixingReport report;
  report.norm_kind = kind;
  report.epsilon = target;
  report.threshold_time = hi;
  report.distance_at_threshold = dist(hi);
  report.prior_point = -1.0;
  report.distance_at_prior = std::numeric_limits<double>::quiet_NaN();
  for (const auto& [T, d] : probes) {
    report.distance_series.emplace_back(T, d);
    if (T < hi) {
      report.prior_point = T;
      report.distance_at_prior = d;
    }
  }
  return report;
}

Theorem2Budget theorem2_budget_check(int n) {
  require_odd_order(n);
  if (n < 100) throw DomainError("the horizon budget is stated for n >= 100");
  Theorem2Budget out;
  out.n = n;
  out.horizon = theorem2_horizon(n);
  out.threshold = 1.0 / (2.0 * std::numbers::e);
  const double nn = static_cast<double>(n);
  const double L = std::log(nn);
  const double scale = 1.0 / (nn * out.horizon);

  const SuSums su = su_sums(n);
  const Case5Sums c5 = case5_sums(n);
  const double f = conjecture_f(n).total;
  out.measured_value =
      scale * (8.0 * (su.su1 + su.su2 + 1.5 * f + su.su4) + 4.0 * c5.c1 + 4.0 * c5.c2);

  const double n2 = nn * nn;
  const double su_bounds = 3.0 / 8.0 * n2 * L + 3.0 / 32.0 * n2 + 100.0 * n2 * std::pow(L, 5) +
                           3.0 / 32.0 * n2 * L;
  out.analytic_value = scale * (8.0 * su_bounds + 8.0 * c5.bound);
  out.collapsed_value = 1.0 / 6.0 + 1.0 / (10.0 * L * L * L);
  out.actual_distance = distance_to_limit(averaged_matrix(n, out.horizon));
  return out;
}

bool BoundsReport::all_pass() const {
  for (const auto& f : flags) {
    if (!f.pass()) return false;
  }
  return true;
}

BoundsReport bounds_report(int n) {
  require_odd_order(n);
  BoundsReport r;
  r.n = n;
  r.total_sum = eigengap_inverse_sum_bruteforce(n);
  r.decomposition = decomposed_sum(n);
  r.decomposition_relative_gap = (r.decomposition.total - r.total_sum) / r.total_sum;
  r.su = su_sums(n);
  r.case5 = case5_sums(n);
  r.f_n = std::numeric_limits<double>::quiet_NaN();
  r.flags.push_back({"brute_le_decomposition", r.total_sum, r.decomposition.total});
  if (n >= 5) {
    const double nn = static_cast<double>(n);
    const double L = std::log(nn);
    r.f_n = conjecture_f(n).total;
    r.flags.push_back({"su1", r.su.su1, 3.0 / 8.0 * nn * nn * L});
    r.flags.push_back({"su2", r.su.su2, 3.0 / 32.0 * nn * nn});
    r.flags.push_back({"su4", r.su.su4, 3.0 / 32.0 * nn * nn * L});
    r.flags.push_back({"case5_c1", r.case5.c1, r.case5.bound});
    r.flags.push_back({"case5_c2", r.case5.c2, r.case5.bound});
    r.flags.push_back({"su3_unscaled_le_f", r.su.su3_unscaled(), r.f_n});
    r.flags.push_back({"f_le_100n2ln5", r.f_n, conjecture_envelope(n, 5)});
  }
  return r;
}

}  // namespace qwalk
