#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

#include "waring/binary_form.hpp"
#include "waring/errors.hpp"

namespace waring::oracle {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Gaussian rational a + b*i with exact arithmetic and decidable equality.
struct ExactScalar {
    Rational re;
    Rational im;

    ExactScalar() = default;
    ExactScalar(Rational r, Rational i = Rational(0)) : re(std::move(r)), im(std::move(i)) {}
    explicit ExactScalar(long r) : re(r) {}

    bool is_zero() const { return re == 0 && im == 0; }

    ExactScalar operator+(const ExactScalar& o) const { return {re + o.re, im + o.im}; }
    ExactScalar operator-(const ExactScalar& o) const { return {re - o.re, im - o.im}; }
    ExactScalar operator*(const ExactScalar& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    ExactScalar operator/(const ExactScalar& o) const;
    bool operator==(const ExactScalar& o) const { return re == o.re && im == o.im; }

    Complex to_complex() const {
        return Complex(static_cast<double>(re), static_cast<double>(im));
    }
};

using ExactMatrix = std::vector<std::vector<ExactScalar>>; // row-major, rectangular

/// Degree-N form with exact binomial-convention coefficients a_0..a_N.
class ExactForm {
public:
    explicit ExactForm(std::vector<ExactScalar> binomial_coeffs);

    static ExactForm from_monomial_coeffs(const std::vector<ExactScalar>& m);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<ExactScalar>& binomial_coeffs() const { return coeffs_; }
    std::vector<ExactScalar> monomial_coeffs() const;
    bool is_zero() const;

    /// Rounded to the floating-point form (for oracle/float comparisons).
    BinaryForm to_binary_form() const;

private:
    std::vector<ExactScalar> coeffs_;
};

/// Exact binomial coefficient.
Integer exact_binomial(int n, int k);

/// Exact rank by fraction-free (Bareiss) elimination over Gaussian integers
/// after clearing row denominators. Throws NumericalError if intermediate
/// integers exceed max_bits.
int exact_rank(const ExactMatrix& m, std::size_t max_bits = 1u << 20);

/// Exact catalecticant of p, entries a_(i+j).
ExactMatrix exact_catalecticant(const ExactForm& p, int r);

/// Minimal r with exact_rank(C_(N-r,r)(p)) <= r.
int exact_border_rank(const ExactForm& p);

/// True iff q has no repeated projective root: gcd(q, q') constant after
/// dehomogenizing, with the root at infinity handled by counting vanishing
/// leading coefficients.
bool exact_square_free(const ExactForm& q);

/// sr = sbr when some exact kernel element of the level-sbr catalecticant is
/// square-free (basis vectors first, then seeded random small-integer
/// combinations), otherwise N - sbr + 2.
int exact_symmetric_rank(const ExactForm& p, std::uint64_t seed = 20240101, int max_tries = 32);

} // namespace waring::oracle
