#include "qwalk/classical.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "qwalk/errors.hpp"
#include "qwalk/group.hpp"
#include "qwalk/parallel.hpp"
#include "qwalk/spectral.hpp"

namespace qwalk {

namespace {

void require_steps(long long t) {
  if (t < 0) throw ParameterError("step count must be nonnegative");
}

void require_epsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 0.5)) {
    throw ParameterError("epsilon must lie in (0, 1/2), got " + std::to_string(epsilon));
  }
}

}  // namespace

ClassicalWalkState classical_power(int n, long long t) {
  require_odd_order(n);
  require_steps(t);
  Eigen::MatrixXd result = Eigen::MatrixXd::Identity(2 * n, 2 * n);
  Eigen::MatrixXd base = normalized_adjacency(n);
  for (long long e = t; e > 0; e >>= 1) {
    if (e & 1) result = result * base;
    if (e > 1) base = base * base;
  }
  return {n, t, std::move(result)};
}

BlockCirculant classical_power_structured(int n, long long t) {
  require_odd_order(n);
  require_steps(t);
  std::vector<double> lp(n), lm(n);
  for (int m = 0; m < n; ++m) {
    lp[m] = std::pow(eigenvalue(n, m, Branch::plus), static_cast<double>(t));
    lm[m] = std::pow(eigenvalue(n, m, Branch::minus), static_cast<double>(t));
  }
  std::vector<double> same(n), cross(n);
  for (int delta = 0; delta < n; ++delta) {
    CompensatedSum sp, sm;
    for (int m = 0; m < n; ++m) {
      const double w = unit_root(n, static_cast<long long>(m) * delta).real();
      sp.add(w * lp[m]);
      sm.add(w * lm[m]);
    }
    same[delta] = (sp.value() + sm.value()) / (2.0 * n);
    cross[delta] = (sp.value() - sm.value()) / (2.0 * n);
  }
  return {n, std::move(same), std::move(cross)};
}

Eigen::VectorXd classical_step(int n, const Eigen::VectorXd& v) {
  Eigen::VectorXd out(2 * n);
  for (int i = 0; i < 2 * n; ++i) {
    const auto nb = semi_cayley_neighbors(n, i);
    out(i) = (v(nb[0]) + v(nb[1]) + v(nb[2])) / 3.0;
  }
  return out;
}

MixingReport classical_mixing_time(int n, double epsilon, NormKind kind,
                                   const MixingSearchOptions& options) {
  require_odd_order(n);
  require_epsilon(epsilon);
  const BlockCirculant uniform = uniform_block_circulant(n);
  std::map<long long, double> probes;
  auto half_distance = [&](long long t) {
    auto it = probes.find(t);
    if (it != probes.end()) return it->second;
    const double d = 0.5 * distance(classical_power_structured(n, t), uniform, kind);
    probes.emplace(t, d);
    return d;
  };

  MixingReport report;
  report.norm_kind = kind;
  report.epsilon = epsilon;

  long long floor_step = 0;  // every t <= floor_step is known to violate the target
  for (;;) {
    // Doubling from just above the known-bad region.
    long long lo = floor_step, hi = std::max<long long>(1, floor_step);
    if (half_distance(lo) <= epsilon && lo == 0) {
      hi = 0;
    } else {
      while (half_distance(hi) > epsilon) {
        lo = hi;
        hi *= 2;
        if (hi > options.step_cap) {
          throw ConvergenceError("classical walk did not mix within the step cap");
        }
      }
      while (hi - lo > 1) {
        const long long mid = lo + (hi - lo) / 2;
        (half_distance(mid) <= epsilon ? hi : lo) = mid;
      }
    }

    // Exact stepping over the verification horizon.
    const long long horizon =
        static_cast<long long>(std::ceil(options.horizon_multiplier * static_cast<double>(hi)));
    Eigen::VectorXd column = classical_power_structured(n, hi).column(0);
    long long violation = -1;
    for (long long t = hi + 1; t <= horizon; ++t) {
      column = classical_step(n, column);
      const double d =
          0.5 * distance(BlockCirculant::from_column(n, column), uniform, kind);
      if (d > epsilon) {
        violation = t;
        break;
      }
    }
    if (violation >= 0) {
      floor_step = violation;
      continue;
    }
    report.threshold_time = static_cast<double>(hi);
    report.distance_at_threshold = half_distance(hi);
    report.horizon_verified = true;
    report.horizon_end = static_cast<double>(horizon);
    break;
  }

  report.prior_point = -1.0;
  report.distance_at_prior = std::numeric_limits<double>::quiet_NaN();
  for (const auto& [t, d] : probes) {
    report.distance_series.emplace_back(static_cast<double>(t), d);
    if (static_cast<double>(t) < report.threshold_time) {
      report.prior_point = static_cast<double>(t);
      report.distance_at_prior = d;
    }
  }
  return report;
}

bool submultiplicativity_check(int n, long long a, long long b) {
  require_steps(a);
  require_steps(b);
  const double lhs = max_pairwise_column_distance(classical_power(n, a + b).matrix);
  const double da = max_pairwise_column_distance(classical_power(n, a).matrix);
  const double db = max_pairwise_column_distance(classical_power(n, b).matrix);
  return lhs <= da * db + 1e-10;
}

std::vector<ClassicalSeriesRow> classical_series(int n, long long t_max) {
  require_odd_order(n);
  require_steps(t_max);
  const BlockCirculant uniform = uniform_block_circulant(n);
  Eigen::VectorXd column = Eigen::VectorXd::Zero(2 * n);
  column(0) = 1.0;
  std::vector<ClassicalSeriesRow> rows;
  rows.reserve(static_cast<std::size_t>(t_max + 1));
  for (long long t = 0; t <= t_max; ++t) {
    if (t > 0) column = classical_step(n, column);
    const BlockCirculant state = BlockCirculant::from_column(n, column);
    rows.push_back({t, 0.5 * distance(state, uniform, NormKind::induced),
                    max_pairwise_column_distance(state)});
  }
  return rows;
}

}  // namespace qwalk
