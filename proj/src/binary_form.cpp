#include "waring/binary_form.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>

namespace waring {
namespace detail {

namespace {

// 170! is the largest factorial below DBL_MAX.
constexpr int max_double_factorial = 170;

const std::array<double, max_double_factorial + 1>& factorial_table() {
    static const auto table = [] {
        std::array<double, max_double_factorial + 1> t{};
        t[0] = 1.0;
        for (int n = 1; n <= max_double_factorial; ++n) t[n] = t[n - 1] * static_cast<double>(n);
        return t;
    }();
    return table;
}

} // namespace

double factorial(int n) {
    if (n < 0) throw InputError("factorial of negative integer");
    if (n > max_double_factorial) throw InputError("factorial overflows double; use log_factorial");
    return factorial_table()[static_cast<std::size_t>(n)];
}

double log_factorial(int n) {
    if (n < 0) throw InputError("log_factorial of negative integer");
    if (n <= max_double_factorial) return std::log(factorial_table()[static_cast<std::size_t>(n)]);
    return std::lgamma(static_cast<double>(n) + 1.0);
}

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    double acc = 1.0;
    for (int i = 1; i <= k; ++i) acc = acc * static_cast<double>(n - k + i) / static_cast<double>(i);
    // The multiplicative loop stays exact while intermediate products fit in
    // 53 bits; round to the nearest integer in that regime.
    return acc < 9.007199254740992e15 ? std::round(acc) : acc;
}

// sqrt(i! * j!) with the pair handled in log space once either factor
// overflows double. The isomorphism only ever needs this combined value.
double sqrt_fact_product(int i, int j) {
    if (i <= max_double_factorial && j <= max_double_factorial)
        return std::sqrt(factorial(i)) * std::sqrt(factorial(j));
    return std::exp(0.5 * (log_factorial(i) + log_factorial(j)));
}

} // namespace detail

BinaryForm BinaryForm::from_binomial_coeffs(std::vector<Complex> a) {
    if (a.empty()) throw InputError("a binary form needs at least one coefficient");
    return BinaryForm(std::move(a));
}

BinaryForm BinaryForm::from_monomial_coeffs(const std::vector<Complex>& m) {
    if (m.empty()) throw InputError("a binary form needs at least one coefficient");
    const int n = static_cast<int>(m.size()) - 1;
    std::vector<Complex> a(m.size());
    for (int i = 0; i <= n; ++i) a[static_cast<std::size_t>(i)] = m[static_cast<std::size_t>(i)] / detail::binomial(n, i);
    return BinaryForm(std::move(a));
}

std::vector<Complex> BinaryForm::monomial_coeffs() const {
    const int n = degree();
    std::vector<Complex> m(coeffs_.size());
    for (int i = 0; i <= n; ++i) m[static_cast<std::size_t>(i)] = coeffs_[static_cast<std::size_t>(i)] * detail::binomial(n, i);
    return m;
}

Complex BinaryForm::monomial_coeff(int i) const {
    return coeffs_.at(static_cast<std::size_t>(i)) * detail::binomial(degree(), i);
}

bool BinaryForm::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](Complex c) { return c == Complex(0.0); });
}

double BinaryForm::monomial_norm() const {
    double s = 0.0;
    for (const Complex& m : monomial_coeffs()) s += std::norm(m);
    return std::sqrt(s);
}

double BinaryForm::binomial_norm() const {
    double s = 0.0;
    for (const Complex& a : coeffs_) s += std::norm(a);
    return std::sqrt(s);
}

BinaryForm BinaryForm::normalized() const {
    const double n = binomial_norm();
    if (n == 0.0) throw InputError("cannot normalize the zero form");
    return *this * Complex(1.0 / n);
}

Complex BinaryForm::evaluate(Complex x, Complex y) const {
    const int n = degree();
    Complex acc(0.0);
    for (int i = 0; i <= n; ++i)
        acc += monomial_coeff(i) * detail::ipow(x, i) * detail::ipow(y, n - i);
    return acc;
}

BinaryForm BinaryForm::operator+(const BinaryForm& other) const {
    if (degree() != other.degree()) throw InputError("degree mismatch in form addition");
    std::vector<Complex> a(coeffs_);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += other.coeffs_[i];
    return BinaryForm(std::move(a));
}

BinaryForm BinaryForm::operator-(const BinaryForm& other) const {
    return *this + (other * Complex(-1.0));
}

BinaryForm BinaryForm::operator*(Complex scalar) const {
    std::vector<Complex> a(coeffs_);
    for (Complex& c : a) c *= scalar;
    return BinaryForm(std::move(a));
}

ManyBodyState::ManyBodyState(int particles, std::vector<Complex> amplitudes)
    : amplitudes_(std::move(amplitudes)) {
    if (particles < 0) throw InputError("particle number must be non-negative");
    if (amplitudes_.size() != static_cast<std::size_t>(particles) + 1)
        throw InputError("a state of N particles needs exactly N+1 amplitudes");
}

double ManyBodyState::norm() const {
    double s = 0.0;
    for (const Complex& c : amplitudes_) s += std::norm(c);
    return std::sqrt(s);
}

bool ManyBodyState::is_normalized(double tol) const {
    double s = 0.0;
    for (const Complex& c : amplitudes_) s += std::norm(c);
    return std::abs(s - 1.0) <= tol;
}

LinearForm::LinearForm(Complex a, Complex b) : alpha(a), beta(b) {
    if (alpha == Complex(0.0) && beta == Complex(0.0))
        throw InputError("linear form must be nonzero");
}

LinearForm LinearForm::canonical() const {
    const Complex larger = std::abs(alpha) >= std::abs(beta) ? alpha : beta;
    const Complex scale = Complex(1.0) / larger;
    return LinearForm(alpha * scale, beta * scale);
}

BinaryForm state_to_form(const ManyBodyState& s) {
    const int n = s.particles();
    // Monomial coefficient of x^(N-k) y^k is c_k / sqrt((N-k)! k!): the state
    // sum_k c_k |N-k,k> written over unnormalized creation-operator monomials.
    std::vector<Complex> m(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        m[static_cast<std::size_t>(n - k)] = s.amplitude(k) / detail::sqrt_fact_product(n - k, k);
    return BinaryForm::from_monomial_coeffs(m);
}

ManyBodyState form_to_state(const BinaryForm& p) {
    const int n = p.degree();
    std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
    const auto m = p.monomial_coeffs();
    for (int k = 0; k <= n; ++k)
        c[static_cast<std::size_t>(k)] = m[static_cast<std::size_t>(n - k)] * detail::sqrt_fact_product(n - k, k);
    return ManyBodyState(n, std::move(c));
}

BinaryForm expand_linear_power(const LinearForm& l, int n) {
    if (n < 0) throw InputError("negative power of a linear form");
    std::vector<Complex> a(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        a[static_cast<std::size_t>(i)] = detail::ipow(l.alpha, i) * detail::ipow(l.beta, n - i);
    return BinaryForm::from_binomial_coeffs(std::move(a));
}

double form_distance(const BinaryForm& p, const BinaryForm& q) {
    if (p.degree() != q.degree()) throw InputError("degree mismatch in form_distance");
    const auto mp = p.monomial_coeffs();
    const auto mq = q.monomial_coeffs();
    double diff = 0.0, ref = 0.0;
    for (std::size_t i = 0; i < mp.size(); ++i) {
        diff += std::norm(mp[i] - mq[i]);
        ref += std::norm(mp[i]);
    }
    diff = std::sqrt(diff);
    ref = std::sqrt(ref);
    return ref == 0.0 ? diff : diff / ref;
}

BinaryForm substitute_linear(const BinaryForm& p, Complex a, Complex b, Complex c, Complex d) {
    const int n = p.degree();
    const auto m = p.monomial_coeffs();

    // powu[i] / powv[i]: monomial coefficients of (a x + b y)^i and
    // (c x + d y)^i, built by convolution with the degree-1 factors.
    std::vector<std::vector<Complex>> powu(static_cast<std::size_t>(n) + 1), powv(static_cast<std::size_t>(n) + 1);
    powu[0] = {Complex(1.0)};
    powv[0] = {Complex(1.0)};
    for (int i = 1; i <= n; ++i) {
        const auto& pu = powu[static_cast<std::size_t>(i - 1)];
        const auto& pv = powv[static_cast<std::size_t>(i - 1)];
        std::vector<Complex> nu(static_cast<std::size_t>(i) + 1, Complex(0.0));
        std::vector<Complex> nv(static_cast<std::size_t>(i) + 1, Complex(0.0));
        for (int j = 0; j < i; ++j) {
            nu[static_cast<std::size_t>(j + 1)] += pu[static_cast<std::size_t>(j)] * a;
            nu[static_cast<std::size_t>(j)] += pu[static_cast<std::size_t>(j)] * b;
            nv[static_cast<std::size_t>(j + 1)] += pv[static_cast<std::size_t>(j)] * c;
            nv[static_cast<std::size_t>(j)] += pv[static_cast<std::size_t>(j)] * d;
        }
        powu[static_cast<std::size_t>(i)] = std::move(nu);
        powv[static_cast<std::size_t>(i)] = std::move(nv);
    }

    std::vector<Complex> out(static_cast<std::size_t>(n) + 1, Complex(0.0));
    for (int i = 0; i <= n; ++i) {
        const Complex mi = m[static_cast<std::size_t>(i)];
        if (mi == Complex(0.0)) continue;
        const auto& pu = powu[static_cast<std::size_t>(i)];
        const auto& pv = powv[static_cast<std::size_t>(n - i)];
        for (int j = 0; j <= i; ++j)
            for (int k = 0; k <= n - i; ++k)
                out[static_cast<std::size_t>(j + k)] += mi * pu[static_cast<std::size_t>(j)] * pv[static_cast<std::size_t>(k)];
    }
    return BinaryForm::from_monomial_coeffs(out);
}

} // namespace waring
