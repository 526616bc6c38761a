#include <doctest.h>

#include <cmath>
#include <random>

#include "test_support.hpp"
#include "waring/binary_form.hpp"
#include "waring/errors.hpp"

using namespace waring;

namespace {

double coeff_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    REQUIRE(a.size() == b.size());
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
    return std::sqrt(s);
}

} // namespace

TEST_CASE("from_monomial_coeffs divides by binomials") {
    // xy: monomial (0, 1, 0) -> binomial (0, 1/2, 0)
    const BinaryForm xy = BinaryForm::from_monomial_coeffs({0.0, 1.0, 0.0});
    CHECK(xy.binomial_coeff(0) == Complex(0.0));
    CHECK(xy.binomial_coeff(1) == Complex(0.5));
    CHECK(xy.binomial_coeff(2) == Complex(0.0));

    // x^3: C(3,3) = 1, untouched
    const BinaryForm x3 = BinaryForm::from_monomial_coeffs({0.0, 0.0, 0.0, 1.0});
    CHECK(x3.binomial_coeff(3) == Complex(1.0));

    const BinaryForm zero = BinaryForm::from_monomial_coeffs({0.0, 0.0, 0.0});
    CHECK(zero.is_zero());
}

TEST_CASE("convention round trip is the identity") {
    std::mt19937_64 rng(7);
    for (int n = 0; n <= 15; ++n) {
        const BinaryForm p = testing::random_form(rng, n);
        const BinaryForm back = BinaryForm::from_monomial_coeffs(p.monomial_coeffs());
        CHECK(form_distance(p, back) < 1e-14);
    }
}

TEST_CASE("state_to_form basic examples") {
    // N=1, c=(1,0): one particle up, the form x.
    const BinaryForm x = state_to_form(ManyBodyState(1, {1.0, 0.0}));
    CHECK(std::abs(x.monomial_coeff(1) - 1.0) < 1e-15);
    CHECK(std::abs(x.monomial_coeff(0)) < 1e-15);

    // N=2, c=(0,1,0): coefficient of xy is 1/sqrt(1!1!) = 1.
    const BinaryForm f = state_to_form(ManyBodyState(2, {0.0, 1.0, 0.0}));
    CHECK(std::abs(f.monomial_coeff(1) - 1.0) < 1e-15);
}

TEST_CASE("isomorphism round trip, N up to 20") {
    std::mt19937_64 rng(11);
    for (int n = 1; n <= 20; ++n) {
        const ManyBodyState s = testing::random_state(rng, n);
        const ManyBodyState back = form_to_state(state_to_form(s));
        double err = 0.0;
        for (int k = 0; k <= n; ++k) err = std::max(err, std::abs(back.amplitude(k) - s.amplitude(k)));
        CHECK(err < 1e-12 * s.norm());
    }
}

TEST_CASE("state_to_form is linear") {
    std::mt19937_64 rng(13);
    const int n = 9;
    const ManyBodyState s1 = testing::random_state(rng, n);
    const ManyBodyState s2 = testing::random_state(rng, n);
    std::vector<Complex> sum(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) sum[static_cast<std::size_t>(k)] = s1.amplitude(k) + s2.amplitude(k);
    const BinaryForm lhs = state_to_form(ManyBodyState(n, sum));
    const BinaryForm rhs = state_to_form(s1) + state_to_form(s2);
    CHECK(form_distance(lhs, rhs) < 1e-14);
}

TEST_CASE("expand_linear_power examples") {
    const BinaryForm x4 = expand_linear_power(LinearForm(1.0, 0.0), 4);
    CHECK(coeff_distance(x4.binomial_coeffs(), {0.0, 0.0, 0.0, 0.0, 1.0}) == 0.0);

    const BinaryForm sq = expand_linear_power(LinearForm(1.0, 1.0), 2);
    CHECK(coeff_distance(sq.binomial_coeffs(), {1.0, 1.0, 1.0}) == 0.0);
    // x^2 + 2xy + y^2 in the monomial convention
    CHECK(coeff_distance(sq.monomial_coeffs(), {1.0, 2.0, 1.0}) == 0.0);

    const BinaryForm diff = expand_linear_power(LinearForm(1.0, -1.0), 2);
    CHECK(coeff_distance(diff.binomial_coeffs(), {1.0, -1.0, 1.0}) == 0.0);
}

TEST_CASE("expand_linear_power agrees pointwise with (ax+by)^N") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        const Complex a = testing::random_complex(rng);
        const Complex b = testing::random_complex(rng);
        const int n = 1 + static_cast<int>(rng() % 12);
        const BinaryForm p = expand_linear_power(LinearForm(a, b), n);
        for (int pt = 0; pt < 10; ++pt) {
            const Complex x = testing::random_complex(rng);
            const Complex y = testing::random_complex(rng);
            const Complex direct = std::pow(a * x + b * y, n);
            const Complex via = p.evaluate(x, y);
            CHECK(std::abs(direct - via) <= 1e-12 * std::max(1.0, std::abs(direct)));
        }
    }
}

TEST_CASE("form_distance") {
    const BinaryForm xy = BinaryForm::from_monomial_coeffs({0.0, 1.0, 0.0});
    CHECK(form_distance(xy, xy) == 0.0);

    const BinaryForm zero2 = BinaryForm::from_monomial_coeffs({0.0, 0.0, 0.0});
    CHECK(form_distance(xy, zero2) == doctest::Approx(1.0));

    const BinaryForm scaled = xy * Complex(1.0 + 1e-9);
    CHECK(form_distance(xy, scaled) == doctest::Approx(1e-9).epsilon(1e-3));

    const BinaryForm x = BinaryForm::from_monomial_coeffs({0.0, 1.0});
    CHECK_THROWS_AS((void)form_distance(xy, x), InputError);
}

TEST_CASE("linear form canonical scaling") {
    const LinearForm f = LinearForm(Complex(0.0, 2.0), Complex(1.0, 0.0)).canonical();
    CHECK(std::abs(f.alpha - Complex(1.0)) < 1e-15);
    CHECK(std::abs(std::abs(f.beta) - 0.5) < 1e-15);
    CHECK_THROWS_AS(LinearForm(0.0, 0.0), InputError);
}

TEST_CASE("substitute_linear matches pointwise evaluation") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 8; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 9);
        const BinaryForm p = testing::random_form(rng, n);
        const Complex a = testing::random_complex(rng), b = testing::random_complex(rng);
        const Complex c = testing::random_complex(rng), d = testing::random_complex(rng);
        const BinaryForm q = substitute_linear(p, a, b, c, d);
        for (int pt = 0; pt < 5; ++pt) {
            const Complex x = testing::random_complex(rng);
            const Complex y = testing::random_complex(rng);
            const Complex lhs = q.evaluate(x, y);
            const Complex rhs = p.evaluate(a * x + b * y, c * x + d * y);
            CHECK(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, std::abs(rhs)));
        }
    }
}

TEST_CASE("normalized rejects the zero form") {
    CHECK_THROWS_AS(BinaryForm().normalized(), InputError);
}
