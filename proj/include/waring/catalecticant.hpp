#pragma once

#include <Eigen/Dense>
#include <vector>

#include "waring/binary_form.hpp"

namespace waring {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr double default_rank_tol = 1e-8;

/// Result of a singular-value rank decision.
struct RankReport {
    int numerical_rank = 0;
    std::vector<double> singular_values; // descending
    double tolerance_used = 0.0;         // absolute cutoff applied to the singular values
    std::vector<ComplexVector> kernel_basis; // orthonormal right null space
};

/// The r-th catalecticant of p: the (N-r+1) x (r+1) Hankel matrix with
/// 0-based entry (i, j) = a_(i+j) in the binomial convention.
ComplexMatrix catalecticant(const BinaryForm& p, int r);

/// Rank decision via SVD: rank = #{sigma_i > rel_tol * sigma_max}, kernel =
/// trailing right singular vectors. Rank 0 when sigma_max = 0.
RankReport numerical_rank(const ComplexMatrix& m, double rel_tol = default_rank_tol);

} // namespace waring
