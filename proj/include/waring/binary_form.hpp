#pragma once

#include <complex>
#include <vector>

#include "waring/errors.hpp"

namespace waring {

using Complex = std::complex<double>;

namespace detail {

/// n! as a double. Exact for n <= 22, correctly rounded from the table up to
/// n = 170; above that double overflows and callers must work in log space.
double factorial(int n);

/// log(n!) for any n >= 0.
double log_factorial(int n);

/// Binomial coefficient C(n, k) as a double (0 when k is out of range).
double binomial(int n, int k);

/// z^n by binary powering. Keeps the relative error at O(log n) ulps, which
/// matters when decomposition residuals are checked near 1e-12.
template <typename T>
std::complex<T> ipow(std::complex<T> z, int n) {
    std::complex<T> acc(T(1), T(0));
    while (n > 0) {
        if (n & 1) acc *= z;
        z *= z;
        n >>= 1;
    }
    return acc;
}

} // namespace detail

/// Degree-N homogeneous polynomial in two complex variables, stored in the
/// binomial convention p(x,y) = sum_i C(N,i) a_i x^i y^(N-i). Index i is the
/// power of x. Monomial-convention coefficients (m_i = C(N,i) a_i) are used
/// at every I/O boundary.
class BinaryForm {
public:
    /// Zero form of degree 0.
    BinaryForm() : coeffs_(1, Complex(0.0)) {}

    static BinaryForm from_binomial_coeffs(std::vector<Complex> a);
    static BinaryForm from_monomial_coeffs(const std::vector<Complex>& m);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<Complex>& binomial_coeffs() const { return coeffs_; }
    std::vector<Complex> monomial_coeffs() const;

    Complex binomial_coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
    Complex monomial_coeff(int i) const;

    bool is_zero() const;

    /// Euclidean norm of the monomial coefficient vector.
    double monomial_norm() const;
    /// Euclidean norm of the binomial coefficient vector.
    double binomial_norm() const;

    /// Same form scaled to unit binomial-coefficient norm.
    BinaryForm normalized() const;

    Complex evaluate(Complex x, Complex y) const;

    BinaryForm operator+(const BinaryForm& other) const;
    BinaryForm operator-(const BinaryForm& other) const;
    BinaryForm operator*(Complex scalar) const;

private:
    explicit BinaryForm(std::vector<Complex> binomial) : coeffs_(std::move(binomial)) {}
    std::vector<Complex> coeffs_; // a_0 .. a_N, binomial convention
};

/// State of N two-level bosons: amplitudes c_0..c_N over unit-norm Fock
/// states, c_k multiplying the state with N-k particles up and k down.
class ManyBodyState {
public:
    ManyBodyState(int particles, std::vector<Complex> amplitudes);

    int particles() const { return static_cast<int>(amplitudes_.size()) - 1; }
    const std::vector<Complex>& amplitudes() const { return amplitudes_; }
    Complex amplitude(int k) const { return amplitudes_.at(static_cast<std::size_t>(k)); }

    double norm() const;
    bool is_normalized(double tol = 1e-12) const;

private:
    std::vector<Complex> amplitudes_;
};

/// alpha*x + beta*y with (alpha, beta) != (0, 0).
struct LinearForm {
    Complex alpha;
    Complex beta;

    LinearForm(Complex a, Complex b);

    /// Rescaled so max(|alpha|, |beta|) = 1 with the larger entry
    /// real-positive (ties resolved toward alpha).
    LinearForm canonical() const;
};

BinaryForm state_to_form(const ManyBodyState& s);
ManyBodyState form_to_state(const BinaryForm& p);

/// (alpha*x + beta*y)^N, i.e. binomial coefficients a_i = alpha^i beta^(N-i).
BinaryForm expand_linear_power(const LinearForm& l, int n);

/// Euclidean norm of the monomial-coefficient difference, relative to the
/// norm of p's monomial coefficients (absolute when p is the zero form).
double form_distance(const BinaryForm& p, const BinaryForm& q);

/// p(a*x + b*y, c*x + d*y): composition with a linear change of variables.
BinaryForm substitute_linear(const BinaryForm& p, Complex a, Complex b, Complex c, Complex d);

} // namespace waring
