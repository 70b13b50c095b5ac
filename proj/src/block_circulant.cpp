#include "qwalk/block_circulant.hpp"

#include <algorithm>
#include <cmath>

#include "qwalk/errors.hpp"
#include "qwalk/parallel.hpp"

namespace qwalk {

BlockCirculant::BlockCirculant(int n, std::vector<double> same_block,
                               std::vector<double> cross_block)
    : n_(n), same_(std::move(same_block)), cross_(std::move(cross_block)) {
  require_odd_order(n);
  if (static_cast<int>(same_.size()) != n || static_cast<int>(cross_.size()) != n) {
    throw ParameterError("block-circulant tables must have n entries each");
  }
}

BlockCirculant BlockCirculant::from_column(int n, const Eigen::VectorXd& column0) {
  if (column0.size() != 2 * n) throw ParameterError("column length must be 2n");
  // Row i of column 0 has delta = (0 - residue(i)) mod n.
  std::vector<double> same(n), cross(n);
  for (int delta = 0; delta < n; ++delta) {
    const int r = (n - delta) % n;
    same[delta] = column0(r);
    cross[delta] = column0(n + r);
  }
  return {n, std::move(same), std::move(cross)};
}

double BlockCirculant::value(int delta, int eps) const {
  if (delta < 0 || delta >= n_) throw ParameterError("delta out of range");
  if (eps == 1) return same_[delta];
  if (eps == -1) return cross_[delta];
  throw ParameterError("eps must be +1 or -1");
}

double BlockCirculant::entry(int i, int j) const {
  const int delta = ((j % n_) - (i % n_) + n_) % n_;
  return (i / n_ == j / n_) ? same_[delta] : cross_[delta];
}

Eigen::VectorXd BlockCirculant::column(int j) const {
  Eigen::VectorXd c(size());
  for (int i = 0; i < size(); ++i) c(i) = entry(i, j);
  return c;
}

Eigen::MatrixXd BlockCirculant::dense() const {
  Eigen::MatrixXd m(size(), size());
  for (int i = 0; i < size(); ++i) {
    for (int j = 0; j < size(); ++j) m(i, j) = entry(i, j);
  }
  return m;
}

double distance(const BlockCirculant& a, const BlockCirculant& b, NormKind kind) {
  if (a.n() != b.n()) throw ParameterError("block-circulant orders differ");
  CompensatedSum column;
  for (int delta = 0; delta < a.n(); ++delta) {
    column.add(std::abs(a.same_block()[delta] - b.same_block()[delta]));
    column.add(std::abs(a.cross_block()[delta] - b.cross_block()[delta]));
  }
  return kind == NormKind::induced ? column.value() : a.size() * column.value();
}

BlockCirculant uniform_block_circulant(int n) {
  const double u = 1.0 / (2.0 * n);
  return {n, std::vector<double>(n, u), std::vector<double>(n, u)};
}

double max_pairwise_column_distance(const BlockCirculant& m) {
  // Column j is a permutation of column 0, so pairs (0, j) cover every distance.
  const Eigen::VectorXd c0 = m.column(0);
  double best = 0.0;
  for (int j = 1; j < m.size(); ++j) {
    best = std::max(best, 0.5 * (c0 - m.column(j)).cwiseAbs().sum());
  }
  return best;
}

}  // namespace qwalk
