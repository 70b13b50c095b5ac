#pragma once

// A 2n x 2n matrix whose entry (i, j) depends only on
// delta = (residue(j) - residue(i)) mod n and on whether i and j share a block
// (eps = +1) or not (eps = -1). Every power of A/3, every P_t and every
// time average has this shape, so 2n numbers describe the whole matrix and
// all of its columns are permutations of one another.

#include <vector>

#include <Eigen/Dense>

#include "qwalk/norms.hpp"

namespace qwalk {

class BlockCirculant {
 public:
  BlockCirculant(int n, std::vector<double> same_block, std::vector<double> cross_block);

  // Reads the structure off column 0 of a dense 2n-vector.
  static BlockCirculant from_column(int n, const Eigen::VectorXd& column0);

  int n() const { return n_; }
  int size() const { return 2 * n_; }
  // eps must be +1 or -1.
  double value(int delta, int eps) const;
  double entry(int i, int j) const;
  Eigen::VectorXd column(int j) const;
  Eigen::MatrixXd dense() const;

  const std::vector<double>& same_block() const { return same_; }
  const std::vector<double>& cross_block() const { return cross_; }

 private:
  int n_;
  std::vector<double> same_;
  std::vector<double> cross_;
};

// Distance between two block-circulant matrices of equal n. Each column holds
// every (delta, eps) pair exactly once, so the induced norm is one column sum
// and the entrywise norm is 2n times it.
double distance(const BlockCirculant& a, const BlockCirculant& b, NormKind kind);

// Uniform stationary matrix 1/(2n) everywhere.
BlockCirculant uniform_block_circulant(int n);

// d(M) evaluated in O(n^2) using the column permutation structure.
double max_pairwise_column_distance(const BlockCirculant& m);

}  // namespace qwalk
