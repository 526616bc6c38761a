#include "waring/catalecticant.hpp"

#include <Eigen/SVD>

#include "waring/errors.hpp"

namespace waring {

ComplexMatrix catalecticant(const BinaryForm& p, int r) {
    const int n = p.degree();
    if (r < 0 || r > n) throw InputError("catalecticant order r must satisfy 0 <= r <= N");
    ComplexMatrix m(n - r + 1, r + 1);
    const auto& a = p.binomial_coeffs();
    for (int i = 0; i <= n - r; ++i)
        for (int j = 0; j <= r; ++j)
            m(i, j) = a[static_cast<std::size_t>(i + j)];
    return m;
}

RankReport numerical_rank(const ComplexMatrix& m, double rel_tol) {
    if (m.size() == 0) throw InputError("numerical_rank of an empty matrix");
    if (rel_tol <= 0.0) throw InputError("rank tolerance must be positive");

    Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeFullV);
    if (svd.info() != Eigen::Success) throw NumericalError("SVD did not converge");

    RankReport report;
    const auto& sigma = svd.singularValues();
    report.singular_values.assign(sigma.data(), sigma.data() + sigma.size());

    const double sigma_max = sigma.size() > 0 ? sigma(0) : 0.0;
    report.tolerance_used = rel_tol * sigma_max;

    int rank = 0;
    if (sigma_max > 0.0)
        for (Eigen::Index i = 0; i < sigma.size(); ++i)
            if (sigma(i) > report.tolerance_used) ++rank;
    report.numerical_rank = rank;

    const auto& v = svd.matrixV();
    for (Eigen::Index j = rank; j < v.cols(); ++j)
        report.kernel_basis.push_back(v.col(j));
    return report;
}

} // namespace waring
