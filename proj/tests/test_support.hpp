#pragma once

#include <random>
#include <vector>

#include "waring/binary_form.hpp"
#include "waring/oracle.hpp"

namespace waring::testing {

inline Complex random_complex(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    return Complex(gauss(rng), gauss(rng));
}

inline BinaryForm random_form(std::mt19937_64& rng, int degree) {
    std::vector<Complex> a(static_cast<std::size_t>(degree) + 1);
    for (Complex& c : a) c = random_complex(rng);
    return BinaryForm::from_binomial_coeffs(std::move(a));
}

inline ManyBodyState random_state(std::mt19937_64& rng, int particles) {
    std::vector<Complex> c(static_cast<std::size_t>(particles) + 1);
    for (Complex& e : c) e = random_complex(rng);
    return ManyBodyState(particles, std::move(c));
}

/// Gaussian-rational form with numerators in [-10, 10], denominators in [1, 10].
inline oracle::ExactForm random_rational_form(std::mt19937_64& rng, int degree) {
    std::uniform_int_distribution<int> num(-10, 10);
    std::uniform_int_distribution<int> den(1, 10);
    for (;;) {
        std::vector<oracle::ExactScalar> a(static_cast<std::size_t>(degree) + 1);
        bool nonzero = false;
        for (oracle::ExactScalar& c : a) {
            c = oracle::ExactScalar(oracle::Rational(num(rng), den(rng)),
                                    oracle::Rational(num(rng), den(rng)));
            nonzero = nonzero || !c.is_zero();
        }
        if (nonzero) return oracle::ExactForm(std::move(a));
    }
}

inline oracle::ExactScalar random_rational_scalar(std::mt19937_64& rng, int max_mag = 10) {
    std::uniform_int_distribution<int> num(-max_mag, max_mag);
    std::uniform_int_distribution<int> den(1, max_mag);
    return oracle::ExactScalar(oracle::Rational(num(rng), den(rng)),
                               oracle::Rational(num(rng), den(rng)));
}

} // namespace waring::testing
