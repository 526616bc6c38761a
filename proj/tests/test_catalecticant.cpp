#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "test_support.hpp"
#include "waring/catalecticant.hpp"
#include "waring/errors.hpp"
#include "waring/states.hpp"

using namespace waring;

TEST_CASE("catalecticant of xy and x^3") {
    const BinaryForm xy = BinaryForm::from_monomial_coeffs({0.0, 1.0, 0.0});
    const ComplexMatrix c1 = catalecticant(xy, 1);
    REQUIRE(c1.rows() == 2);
    REQUIRE(c1.cols() == 2);
    CHECK(c1(0, 0) == Complex(0.0));
    CHECK(c1(0, 1) == Complex(0.5));
    CHECK(c1(1, 0) == Complex(0.5));
    CHECK(c1(1, 1) == Complex(0.0));

    const BinaryForm x3 = BinaryForm::from_monomial_coeffs({0.0, 0.0, 0.0, 1.0});
    const ComplexMatrix m = catalecticant(x3, 1);
    REQUIRE(m.rows() == 3);
    REQUIRE(m.cols() == 2);
    CHECK(m(2, 1) == Complex(1.0));
    CHECK(m.cwiseAbs().sum() == doctest::Approx(1.0));

    CHECK_THROWS_AS((void)catalecticant(xy, 3), InputError);
    CHECK_THROWS_AS((void)catalecticant(xy, -1), InputError);
}

TEST_CASE("SSS catalecticant entries match the closed form") {
    const int n = 10;
    const int r = 4;
    const long long p = 1, q = 3;
    const BinaryForm f = state_to_form(spin_squeezed_state(SqueezingParameter::rational(p, q), n));
    const ComplexMatrix c = catalecticant(f, r);
    const double mu = 2.0 * std::numbers::pi * static_cast<double>(p) / static_cast<double>(q);
    const double norm = std::sqrt(std::pow(2.0, n) * detail::factorial(n));
    for (int k = 1; k <= n - r + 1; ++k)
        for (int j = 1; j <= r + 1; ++j) {
            const double arg = k + j - 2 - static_cast<double>(n) / 2.0;
            const Complex expected = std::polar(1.0 / norm, -mu / 2.0 * arg * arg);
            CHECK(std::abs(c(k - 1, j - 1) - expected) < 1e-14);
        }
}

TEST_CASE("Hankel structure and shape for all r") {
    std::mt19937_64 rng(31);
    const int n = 9;
    const BinaryForm p = testing::random_form(rng, n);
    for (int r = 0; r <= n; ++r) {
        const ComplexMatrix c = catalecticant(p, r);
        REQUIRE(c.rows() == n - r + 1);
        REQUIRE(c.cols() == r + 1);
        for (int i = 0; i < c.rows(); ++i)
            for (int j = 0; j < c.cols(); ++j)
                for (int i2 = 0; i2 < c.rows(); ++i2)
                    for (int j2 = 0; j2 < c.cols(); ++j2)
                        if (i + j == i2 + j2) CHECK(c(i, j) == c(i2, j2));
    }
}

TEST_CASE("numerical_rank on the spec matrices") {
    ComplexMatrix a(2, 2);
    a << 0.0, 0.5, 0.5, 0.0;
    const RankReport ra = numerical_rank(a);
    CHECK(ra.numerical_rank == 2);
    CHECK(ra.kernel_basis.empty());
    CHECK(ra.singular_values.size() == 2);
    CHECK(ra.singular_values[0] >= ra.singular_values[1]);

    ComplexMatrix b(3, 2);
    b << 0.0, 0.0, 0.0, 0.0, 0.0, 1.0;
    const RankReport rb = numerical_rank(b);
    CHECK(rb.numerical_rank == 1);
    REQUIRE(rb.kernel_basis.size() == 1);
    CHECK(std::abs(std::abs(rb.kernel_basis[0](0)) - 1.0) < 1e-12);
    CHECK(std::abs(rb.kernel_basis[0](1)) < 1e-12);
}

TEST_CASE("SSS kernel vector at level q") {
    // C_(N-q,q) of SSS(2 pi p / q) has rank q and the null vector
    // (1, 0, ..., 0, -e^(i pi p q) e^(-i pi p N)).
    for (const auto& [p, q, n] : {std::tuple<long long, long long, int>{1, 3, 13},
                                  {1, 2, 8},
                                  {2, 5, 12}}) {
        const BinaryForm f = state_to_form(spin_squeezed_state(SqueezingParameter::rational(p, q), n));
        const ComplexMatrix c = catalecticant(f.normalized(), static_cast<int>(q));
        const RankReport report = numerical_rank(c);
        CHECK(report.numerical_rank == static_cast<int>(q));

        ComplexVector u = ComplexVector::Zero(q + 1);
        u(0) = Complex(1.0);
        u(q) = -std::polar(1.0, std::numbers::pi * static_cast<double>(p) * static_cast<double>(q - n));
        CHECK((c * u).norm() < 1e-12 * c.norm() * u.norm());
    }
}

TEST_CASE("kernel vectors annihilate the matrix") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 8);
        const BinaryForm p = testing::random_form(rng, n);
        const int r = 1 + static_cast<int>(rng() % n);
        const ComplexMatrix c = catalecticant(p.normalized(), r);
        const RankReport report = numerical_rank(c);
        const double sigma_max = report.singular_values.front();
        for (const ComplexVector& v : report.kernel_basis) {
            CHECK(std::abs(v.norm() - 1.0) < 1e-10);
            CHECK((c * v).norm() <= 10.0 * report.tolerance_used * v.norm() + 1e-14 * sigma_max);
        }
        CHECK(report.numerical_rank + static_cast<int>(report.kernel_basis.size()) == c.cols());
    }
}

TEST_CASE("rank is scale invariant") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 8);
        const BinaryForm p = testing::random_form(rng, n);
        const Complex scale = testing::random_complex(rng) * 1e6;
        const int r = 1 + static_cast<int>(rng() % n);
        const int rank_p = numerical_rank(catalecticant(p.normalized(), r)).numerical_rank;
        const int rank_s = numerical_rank(catalecticant((p * scale).normalized(), r)).numerical_rank;
        CHECK(rank_p == rank_s);
    }
}

TEST_CASE("numerical_rank rejects bad input") {
    CHECK_THROWS_AS((void)numerical_rank(ComplexMatrix(), 1e-8), InputError);
    ComplexMatrix a(1, 1);
    a << 1.0;
    CHECK_THROWS_AS((void)numerical_rank(a, 0.0), InputError);
    CHECK(numerical_rank(ComplexMatrix::Zero(3, 2)).numerical_rank == 0);
}
