#pragma once

// Closed-form eigendecomposition of the normalized adjacency A/3 of the
// semi-Cayley graph. Fourier mode m of the n-cycle combines with a block sign:
//
//   branch plus:   lambda = (1 + 2 cos(2 pi m / n)) / 3,  vector [v_m;  v_m] / sqrt(2)
//   branch minus:  lambda = (2 cos(2 pi m / n) - 1) / 3,  vector [v_m; -v_m] / sqrt(2)
//
// with v_m(r) = omega^{r m} / sqrt(n), omega = exp(2 pi i / n). The vectors are
// unit-norm, so every vertex overlap has modulus 1 / sqrt(2n).

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "qwalk/group.hpp"

namespace qwalk {

using Complex = std::complex<double>;

enum class Branch { plus, minus };

// (m, branch) <-> flat index j in [0, 2n): j = m for plus, m + n for minus.
struct EigenIndex {
  int m = 0;
  Branch branch = Branch::plus;

  int flat(int n) const { return branch == Branch::plus ? m : m + n; }
  static EigenIndex from_flat(int n, int j);

  bool operator==(const EigenIndex&) const = default;
};

// omega^k with k reduced mod n before the angle is formed.
Complex unit_root(int n, long long k);

// cos(2 pi m / n), evaluated on min(m, n - m) so that modes m and n - m agree bitwise.
double mode_cosine(int n, int m);

double eigenvalue(int n, int m, Branch branch);
Complex eigenvector_component(int n, int m, Branch branch, const VertexIndex& i);

// (1 + 2 cos(2 pi / n)) / 3.
double second_largest_eigenvalue(int n);

struct ClassicalLowerBound {
  double exact = 0.0;    // max(0, (1/(1 - lambda_2) - 1) ln(1/(2 eps)))
  double relaxed = 0.0;  // max(0, (3 n^2 / (4 pi^2) - 1) ln(1/(2 eps)))
};

// Throws ParameterError unless 0 < epsilon < 1/2.
ClassicalLowerBound classical_lower_bound(int n, double epsilon);

// Exact eigenvalue coincidence. Within a branch the eigenvalues of m and m'
// agree iff m' is m or n - m. Across branches lambda_plus(m) = lambda_minus(m')
// iff cos(2 pi m'/n) - cos(2 pi m/n) = 1; this never holds for odd n, and a
// residual within the guard band throws ConvergenceError rather than guess.
bool same_eigenvalue(int n, EigenIndex a, EigenIndex b);

inline constexpr double kDegeneracyGuard = 1e-12;

// Tabulated spectrum for one n.
class Spectrum {
 public:
  explicit Spectrum(int n);

  int n() const { return n_; }
  int size() const { return 2 * n_; }
  double eigenvalue(int m, Branch branch) const {
    return branch == Branch::plus ? plus_[m] : minus_[m];
  }
  double eigenvalue(EigenIndex e) const { return eigenvalue(e.m, e.branch); }
  Complex omega() const { return unit_root(n_, 1); }
  Complex eigenvector_component(int m, Branch branch, const VertexIndex& i) const;
  Eigen::VectorXcd eigenvector(int m, Branch branch) const;
  // All 2n eigenvalues in flat-index order.
  std::vector<double> eigenvalues() const;

 private:
  int n_;
  std::vector<double> plus_;
  std::vector<double> minus_;
};

}  // namespace qwalk
