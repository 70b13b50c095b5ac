#include "qwalk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

void require_mode(int n, int m) {
  if (m < 0 || m >= n) {
    throw ParameterError("Fourier mode " + std::to_string(m) + " outside [0, " +
                         std::to_string(n) + ")");
  }
}

}  // namespace

EigenIndex EigenIndex::from_flat(int n, int j) {
  if (j < 0 || j >= 2 * n) throw ParameterError("eigen index out of range");
  return j < n ? EigenIndex{j, Branch::plus} : EigenIndex{j - n, Branch::minus};
}

Complex unit_root(int n, long long k) {
  long long r = k % n;
  if (r < 0) r += n;
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / n;
  return {std::cos(angle), std::sin(angle)};
}

double mode_cosine(int n, int m) {
  const int folded = std::min(m, n - m);
  return std::cos(2.0 * std::numbers::pi * folded / n);
}

double eigenvalue(int n, int m, Branch branch) {
  require_odd_order(n);
  require_mode(n, m);
  const double c = 2.0 * mode_cosine(n, m);
  return branch == Branch::plus ? (1.0 + c) / 3.0 : (c - 1.0) / 3.0;
}

Complex eigenvector_component(int n, int m, Branch branch, const VertexIndex& i) {
  require_odd_order(n);
  require_mode(n, m);
  if (i.n() != n) throw ParameterError("vertex belongs to a different order");
  const double sign = (branch == Branch::minus && i.block() == 1) ? -1.0 : 1.0;
  return sign / std::sqrt(2.0 * n) * unit_root(n, static_cast<long long>(i.residue()) * m);
}

double second_largest_eigenvalue(int n) { return eigenvalue(n, 1, Branch::plus); }

ClassicalLowerBound classical_lower_bound(int n, double epsilon) {
  require_odd_order(n);
  if (!(epsilon > 0.0 && epsilon < 0.5)) {
    throw ParameterError("epsilon must lie in (0, 1/2), got " + std::to_string(epsilon));
  }
  const double log_term = std::log(1.0 / (2.0 * epsilon));
  const double lambda2 = second_largest_eigenvalue(n);
  const double pi2 = std::numbers::pi * std::numbers::pi;
  ClassicalLowerBound out;
  out.exact = std::max(0.0, (1.0 / (1.0 - lambda2) - 1.0) * log_term);
  out.relaxed = std::max(0.0, (3.0 * n * n / (4.0 * pi2) - 1.0) * log_term);
  return out;
}

bool same_eigenvalue(int n, EigenIndex a, EigenIndex b) {
  if (a.branch == b.branch) {
    return a.m == b.m || (a.m + b.m) % n == 0;
  }
  const EigenIndex& p = a.branch == Branch::plus ? a : b;
  const EigenIndex& q = a.branch == Branch::plus ? b : a;
  const double residual = std::abs(mode_cosine(n, q.m) - mode_cosine(n, p.m) - 1.0);
  if (residual < kDegeneracyGuard) {
    throw ConvergenceError("cross-branch eigenvalue gap inside guard band at n=" +
                           std::to_string(n) + ", modes " + std::to_string(p.m) + "/" +
                           std::to_string(q.m));
  }
  return false;
}

Spectrum::Spectrum(int n) : n_(n) {
  require_odd_order(n);
  plus_.resize(n);
  minus_.resize(n);
  for (int m = 0; m < n; ++m) {
    plus_[m] = qwalk::eigenvalue(n, m, Branch::plus);
    minus_[m] = qwalk::eigenvalue(n, m, Branch::minus);
  }
}

Complex Spectrum::eigenvector_component(int m, Branch branch, const VertexIndex& i) const {
  return qwalk::eigenvector_component(n_, m, branch, i);
}

Eigen::VectorXcd Spectrum::eigenvector(int m, Branch branch) const {
  Eigen::VectorXcd v(2 * n_);
  for (int i = 0; i < 2 * n_; ++i) v(i) = eigenvector_component(m, branch, VertexIndex(n_, i));
  return v;
}

std::vector<double> Spectrum::eigenvalues() const {
  std::vector<double> out(plus_);
  out.insert(out.end(), minus_.begin(), minus_.end());
  return out;
}

}  // namespace qwalk
