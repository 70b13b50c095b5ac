#pragma once

// Independent reference implementations used only by the tests. None of these
// call into the closed forms they are compared against.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "qwalk/group.hpp"

namespace oracle {

// Action of b^s a^r on the vertices of the n-gon: a: k -> k+1, b: k -> -k.
// Faithful for n >= 3, so group identities can be checked as permutation identities.
inline std::vector<int> permutation(const qwalk::DihedralElement& x) {
  const int n = x.n();
  std::vector<int> p(n);
  for (int k = 0; k < n; ++k) {
    const int rotated = (k + x.r()) % n;
    p[k] = x.s() ? (n - rotated) % n : rotated;
  }
  return p;
}

inline std::vector<int> compose(const std::vector<int>& f, const std::vector<int>& g) {
  std::vector<int> h(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) h[k] = f[g[k]];
  return h;
}

// Adjacency written out from the circulant blocks W + W^{n-1} and I.
inline Eigen::MatrixXd block_adjacency(int n) {
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
  for (int r = 0; r < n; ++r) {
    w(r, (r + 1) % n) = 1;
    w(r, (r + n - 1) % n) = 1;
  }
  Eigen::MatrixXd a(2 * n, 2 * n);
  a << w, Eigen::MatrixXd::Identity(n, n), Eigen::MatrixXd::Identity(n, n), w;
  return a;
}

// Numerical eigendecomposition of A/3.
struct NumericSpectrum {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;

  explicit NumericSpectrum(int n) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(block_adjacency(n) / 3.0);
    values = es.eigenvalues();
    vectors = es.eigenvectors();
  }

  Eigen::MatrixXcd propagator(double t) const {
    Eigen::VectorXcd phases(values.size());
    for (Eigen::Index k = 0; k < values.size(); ++k) {
      phases[k] = std::polar(1.0, values[k] * t);
    }
    return vectors.cast<std::complex<double>>() * phases.asDiagonal() * vectors.transpose();
  }

  double probability(int from, int to, double t) const {
    std::complex<double> amp = 0;
    for (Eigen::Index k = 0; k < values.size(); ++k) {
      amp += std::polar(1.0, values[k] * t) * vectors(to, k) * vectors(from, k);
    }
    return std::norm(amp);
  }
};

// exp(i t A/3) by scaling and squaring (Eigen's MatrixFunctions module).
inline Eigen::MatrixXcd propagator_expm(int n, double t) {
  const Eigen::MatrixXcd a = block_adjacency(n).cast<std::complex<double>>() / 3.0;
  return (std::complex<double>(0.0, t) * a).exp();
}

// (1/T) int_0^T P_t(from, to) dt by adaptive Gauss-Kronrod quadrature.
inline double averaged_by_quadrature(const NumericSpectrum& s, int from, int to, double T) {
  auto f = [&](double t) { return s.probability(from, to, t); };
  const double integral =
      boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, T, 20, 1e-13);
  return integral / T;
}

// Sum of 1/|lambda_j - lambda_k| over numerically distinct eigenvalue pairs.
inline double eigengap_sum_numeric(int n) {
  const NumericSpectrum s(n);
  double total = 0.0;
  for (Eigen::Index j = 0; j < s.values.size(); ++j) {
    for (Eigen::Index k = 0; k < s.values.size(); ++k) {
      const double gap = std::abs(s.values[j] - s.values[k]);
      if (gap > 1e-8) total += 1.0 / gap;
    }
  }
  return total;
}

// f(n) in 50-digit arithmetic.
inline double conjecture_f_high_precision(int n) {
  using Real = boost::multiprecision::cpp_bin_float_50;
  const Real pi = boost::math::constants::pi<Real>();
  const int residue = n % 4;
  const int p = (n - residue) / 4;
  const Real c = residue == 1 ? Real(3) / 4 : Real(1) / 4;
  const int b_last = residue == 1 ? p - 1 : p;
  const Real step = 2 * pi / n;
  Real total = 0;
  for (int b = 0; b <= b_last; ++b) {
    const Real alpha = acos(1 - sin(step * (b + c)));
    const Real big_n = floor(alpha / step);
    const Real lo = alpha - step * big_n;
    const Real hi = step * (big_n + 1) - alpha;
    total += pi / (2 * alpha) * (1 / alpha + 1 / lo + 1 / hi) +
             Real(n) / (4 * alpha) * log((pi * pi / 2) / (lo * hi));
  }
  return static_cast<double>(total);
}

// Threshold mixing time of A/3 by plain powering: the first t with
// (1/2)||(A/3)^t - U||_1 <= eps, scanned one step at a time.
inline long long classical_tau_scan(int n, double eps) {
  const Eigen::MatrixXd a = block_adjacency(n) / 3.0;
  const Eigen::MatrixXd u = Eigen::MatrixXd::Constant(2 * n, 2 * n, 1.0 / (2 * n));
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(2 * n, 2 * n);
  for (long long t = 0;; ++t) {
    const double d = 0.5 * (m - u).cwiseAbs().colwise().sum().maxCoeff();
    if (d <= eps) return t;
    m = a * m;
  }
}

}  // namespace oracle
