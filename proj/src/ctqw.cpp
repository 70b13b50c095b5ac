#include "qwalk/ctqw.hpp"

#include <cmath>
#include <string>

#include "qwalk/errors.hpp"
#include "qwalk/parallel.hpp"

namespace qwalk {

namespace {

Complex phase(double angle) { return {std::cos(angle), std::sin(angle)}; }

void require_time(double t) {
  if (!std::isfinite(t) || t < 0.0) {
    throw ParameterError("time must be finite and nonnegative, got " + std::to_string(t));
  }
}

void require_horizon(double T) {
  if (!std::isfinite(T) || !(T > 0.0)) {
    throw ParameterError("averaging horizon T must be finite and positive, got " +
                         std::to_string(T));
  }
}

void require_vertex(int n, const VertexIndex& v) {
  if (v.n() != n) throw ParameterError("vertex belongs to a different order");
}

int residue_gap(int n, const VertexIndex& from, const VertexIndex& to) {
  return ((to.residue() - from.residue()) % n + n) % n;
}

// S_plus(delta), S_minus(delta) = sum_m omega^{m delta} exp(i lambda_m t) for all delta.
void fourier_phases(int n, double t, std::vector<Complex>& plus, std::vector<Complex>& minus) {
  std::vector<Complex> roots(n), ep(n), em(n);
  for (int k = 0; k < n; ++k) roots[k] = unit_root(n, k);
  for (int m = 0; m < n; ++m) {
    ep[m] = phase(eigenvalue(n, m, Branch::plus) * t);
    em[m] = phase(eigenvalue(n, m, Branch::minus) * t);
  }
  plus.assign(n, Complex{});
  minus.assign(n, Complex{});
  for (int delta = 0; delta < n; ++delta) {
    Complex sp{}, sm{};
    for (int m = 0; m < n; ++m) {
      const Complex w = roots[(static_cast<long long>(m) * delta) % n];
      sp += w * ep[m];
      sm += w * em[m];
    }
    plus[delta] = sp;
    minus[delta] = sm;
  }
}

}  // namespace

void WalkParams::validate() const {
  require_odd_order(n);
  require_time(t);
  require_horizon(T);
}

Complex amplitude(int n, const VertexIndex& from, const VertexIndex& to, double t) {
  require_odd_order(n);
  require_vertex(n, from);
  require_vertex(n, to);
  require_time(t);
  const int delta = residue_gap(n, from, to);
  const double eps = from.block() == to.block() ? 1.0 : -1.0;
  Complex sum{};
  for (int m = 0; m < n; ++m) {
    const Complex w = unit_root(n, static_cast<long long>(m) * delta);
    sum += w * (phase(eigenvalue(n, m, Branch::plus) * t) +
                eps * phase(eigenvalue(n, m, Branch::minus) * t));
  }
  return sum / (2.0 * n);
}

double probability(int n, const VertexIndex& from, const VertexIndex& to, double t) {
  return std::norm(amplitude(n, from, to, t));
}

std::vector<double> transition_row(int n, const VertexIndex& from, double t) {
  require_odd_order(n);
  require_vertex(n, from);
  require_time(t);
  std::vector<Complex> sp, sm;
  fourier_phases(n, t, sp, sm);
  std::vector<double> row(2 * n);
  for (int j = 0; j < 2 * n; ++j) {
    const VertexIndex to(n, j);
    const int delta = residue_gap(n, from, to);
    const Complex a = to.block() == from.block() ? sp[delta] + sm[delta] : sp[delta] - sm[delta];
    row[j] = std::norm(a / (2.0 * n));
  }
  return row;
}

BlockCirculant instantaneous_matrix(int n, double t) {
  require_odd_order(n);
  require_time(t);
  std::vector<Complex> sp, sm;
  fourier_phases(n, t, sp, sm);
  std::vector<double> same(n), cross(n);
  for (int delta = 0; delta < n; ++delta) {
    same[delta] = std::norm((sp[delta] + sm[delta]) / (2.0 * n));
    cross[delta] = std::norm((sp[delta] - sm[delta]) / (2.0 * n));
  }
  return {n, std::move(same), std::move(cross)};
}

Eigen::MatrixXcd propagator_oracle(int n, double t, int cap) {
  require_odd_order(n);
  require_time(t);
  if (n > cap) {
    throw CapExceeded("propagator oracle limited to n <= " + std::to_string(cap));
  }
  const Spectrum spec(n);
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  for (Branch b : {Branch::plus, Branch::minus}) {
    for (int m = 0; m < n; ++m) {
      const Eigen::VectorXcd v = spec.eigenvector(m, b);
      u.noalias() += phase(spec.eigenvalue(m, b) * t) * (v * v.adjoint());
    }
  }
  return u;
}

Complex averaging_kernel(double gap, double T) {
  if (gap == 0.0) return {1.0, 0.0};
  const double h = 0.5 * gap * T;
  return phase(h) * (std::sin(h) / h);
}

double averaged_entry(int n, int delta, int eps, double T) {
  require_odd_order(n);
  require_horizon(T);
  if (delta < 0 || delta >= n) throw ParameterError("delta outside [0, n)");
  if (eps != 1 && eps != -1) throw ParameterError("eps must be +1 or -1");
  const Spectrum spec(n);
  CompensatedSum re, im;
  for (Branch s : {Branch::plus, Branch::minus}) {
    for (Branch s2 : {Branch::plus, Branch::minus}) {
      const double sign = (s == Branch::minus ? eps : 1) * (s2 == Branch::minus ? eps : 1);
      for (int m = 0; m < n; ++m) {
        for (int m2 = 0; m2 < n; ++m2) {
          const EigenIndex a{m, s}, b{m2, s2};
          const double gap =
              same_eigenvalue(n, a, b) ? 0.0 : spec.eigenvalue(a) - spec.eigenvalue(b);
          const Complex term = sign * unit_root(n, static_cast<long long>(m - m2) * delta) *
                               averaging_kernel(gap, T);
          re.add(term.real());
          im.add(term.imag());
        }
      }
    }
  }
  const double scale = 1.0 / (4.0 * n * n);
  if (std::abs(im.value() * scale) > 1e-9) {
    throw ConvergenceError("time-averaged entry has a non-negligible imaginary part");
  }
  return re.value() * scale;
}

AveragedWalkMatrix averaged_matrix(int n, double T) {
  require_odd_order(n);
  require_horizon(T);
  std::vector<double> cosine(n);
  for (int m = 0; m < n; ++m) cosine[m] = mode_cosine(n, m);

  // For each mode difference d = m - m2 (mod n): same-branch and cross-branch
  // kernel sums. Same-branch gaps vanish exactly when m2 is m or n - m.
  std::vector<Complex> same_sum(n), cross_sum(n);
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t di) {
    const int d = static_cast<int>(di);
    CompensatedSum sr, si, cr, ci;
    for (int m = 0; m < n; ++m) {
      const int m2 = ((m - d) % n + n) % n;
      const double diff = cosine[m] - cosine[m2];
      const bool degenerate = (m == m2) || ((m + m2) % n == 0);
      // lp_m - lp_m2 and lm_m - lm_m2 are both 2 diff / 3.
      const Complex within = degenerate ? Complex{1.0, 0.0} : averaging_kernel(2.0 * diff / 3.0, T);
      // lp_m - lm_m2 = 2(1 + diff)/3 and lm_m - lp_m2 = 2(diff - 1)/3.
      if (std::abs(1.0 + diff) < kDegeneracyGuard || std::abs(diff - 1.0) < kDegeneracyGuard) {
        throw ConvergenceError("cross-branch eigenvalue gap inside guard band at n=" +
                               std::to_string(n));
      }
      const Complex across = averaging_kernel(2.0 * (1.0 + diff) / 3.0, T) +
                             averaging_kernel(2.0 * (diff - 1.0) / 3.0, T);
      sr.add(2.0 * within.real());
      si.add(2.0 * within.imag());
      cr.add(across.real());
      ci.add(across.imag());
    }
    same_sum[d] = {sr.value(), si.value()};
    cross_sum[d] = {cr.value(), ci.value()};
  });

  const double scale = 1.0 / (4.0 * n * n);
  std::vector<double> same(n), cross(n);
  for (int delta = 0; delta < n; ++delta) {
    CompensatedSum plus, minus;
    for (int d = 0; d < n; ++d) {
      const Complex w = unit_root(n, static_cast<long long>(d) * delta);
      plus.add((w * (same_sum[d] + cross_sum[d])).real());
      minus.add((w * (same_sum[d] - cross_sum[d])).real());
    }
    same[delta] = plus.value() * scale;
    cross[delta] = minus.value() * scale;
  }
  return {T, BlockCirculant(n, std::move(same), std::move(cross))};
}

double LimitingDistribution::entry(int i, int j) const {
  const int delta = ((j % n) - (i % n) + n) % n;
  return delta == 0 ? diagonal_value() : offdiagonal_value();
}

bool LimitingDistribution::rows_sum_to_one_exactly() const {
  return 2 * diagonal_numerator + (2 * std::int64_t{n} - 2) * offdiagonal_numerator ==
         denominator;
}

bool LimitingDistribution::entries_bounded_below() const {
  const std::int64_t states_sq = 4 * std::int64_t{n} * n;
  return offdiagonal_numerator * states_sq >= denominator &&
         diagonal_numerator * states_sq >= denominator;
}

BlockCirculant LimitingDistribution::as_block_circulant() const {
  std::vector<double> values(n, offdiagonal_value());
  values[0] = diagonal_value();
  return {n, values, values};
}

LimitingDistribution limiting_distribution(int n) {
  require_odd_order(n);
  LimitingDistribution pi;
  pi.n = n;
  pi.denominator = 2 * std::int64_t{n} * n;
  // 1/2n + (n-1)/2n^2 and 1/2n - 1/2n^2 over the common denominator 2n^2.
  pi.diagonal_numerator = std::int64_t{n} + (n - 1);
  pi.offdiagonal_numerator = std::int64_t{n} - 1;
  return pi;
}

double distance_to_limit(const AveragedWalkMatrix& avg, NormKind kind) {
  return distance(avg.values(), limiting_distribution(avg.n()).as_block_circulant(), kind);
}

ConvergenceSeries convergence_to_limit(int n, std::span<const double> T_list, NormKind kind) {
  ConvergenceSeries out;
  double previous = 0.0;
  for (double T : T_list) {
    require_horizon(T);
    if (!out.horizons.empty() && !(T > previous)) {
      throw ParameterError("T_list must be strictly increasing");
    }
    previous = T;
    out.horizons.push_back(T);
    out.distances.push_back(distance_to_limit(averaged_matrix(n, T), kind));
  }
  const auto& d = out.distances;
  const std::size_t k = d.size();
  out.decreasing_tail = k >= 3 && d[k - 1] < d[k - 2] && d[k - 2] < d[k - 3];
  return out;
}

}  // namespace qwalk
