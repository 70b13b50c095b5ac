#pragma once

#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace qwalk {

// Matrix 1-norm used for mixing distances. The default is the induced norm
// (maximum absolute column sum); the entrywise sum is kept for sensitivity runs.
enum class NormKind { induced, entrywise };

std::string_view to_string(NormKind kind);
NormKind parse_norm_kind(std::string_view text);

// Shapes must match; ParameterError otherwise.
double induced_one_norm_distance(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);
double entrywise_one_norm_distance(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);
double matrix_distance(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, NormKind kind);

// max over column pairs (j, j') of 1/2 ||M(., j) - M(., j')||_1.
double max_pairwise_column_distance(const Eigen::MatrixXd& m);

// Matrix with every column equal to the uniform distribution on size states.
Eigen::MatrixXd uniform_matrix(int size);

}  // namespace qwalk
