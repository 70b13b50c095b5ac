#include "qwalk/norms.hpp"

#include <algorithm>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

void require_same_shape(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ParameterError("matrix shapes differ");
  }
}

}  // namespace

std::string_view to_string(NormKind kind) {
  return kind == NormKind::induced ? "induced" : "entrywise";
}

NormKind parse_norm_kind(std::string_view text) {
  if (text == "induced") return NormKind::induced;
  if (text == "entrywise") return NormKind::entrywise;
  throw ParameterError("unknown norm kind: " + std::string(text));
}

double induced_one_norm_distance(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  require_same_shape(a, b);
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().colwise().sum().maxCoeff();
}

double entrywise_one_norm_distance(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  require_same_shape(a, b);
  return (a - b).cwiseAbs().sum();
}

double matrix_distance(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, NormKind kind) {
  return kind == NormKind::induced ? induced_one_norm_distance(a, b)
                                   : entrywise_one_norm_distance(a, b);
}

double max_pairwise_column_distance(const Eigen::MatrixXd& m) {
  double best = 0.0;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index k = j + 1; k < m.cols(); ++k) {
      best = std::max(best, 0.5 * (m.col(j) - m.col(k)).cwiseAbs().sum());
    }
  }
  return best;
}

Eigen::MatrixXd uniform_matrix(int size) {
  return Eigen::MatrixXd::Constant(size, size, 1.0 / size);
}

}  // namespace qwalk
