#include "waring/states.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>
#include <numbers>
#include <numeric>

#include "waring/errors.hpp"

namespace waring {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

Complex unit_phase(double angle) { return std::polar(1.0, angle); }

/// e^(i pi num / den) with the angle reduced in integer arithmetic first.
Complex exact_pi_phase(long long num, long long den) {
    const long long period = 2 * den;
    long long r = num % period;
    if (r < 0) r += period;
    return std::polar(1.0, std::numbers::pi * static_cast<double>(r) / static_cast<double>(den));
}

} // namespace

SqueezingParameter SqueezingParameter::rational(long long p, long long q) {
    if (q <= 0) throw InputError("squeezing denominator must be positive");
    p %= q;
    if (p < 0) p += q;
    const long long g = std::gcd(p, q);
    SqueezingParameter out;
    out.rational_ = true;
    out.p_ = p / g;
    out.q_ = q / g;
    out.mu_ = two_pi * static_cast<double>(out.p_) / static_cast<double>(out.q_);
    return out;
}

SqueezingParameter SqueezingParameter::real(double mu) {
    SqueezingParameter out;
    out.rational_ = false;
    out.mu_ = mu;
    return out;
}

double SqueezingParameter::value() const { return mu_; }

ManyBodyState coherent_spin_state(double theta, double phi, int n) {
    if (n < 1) throw InputError("coherent spin state needs N >= 1");
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    std::vector<Complex> amp(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        amp[static_cast<std::size_t>(k)] = std::sqrt(detail::binomial(n, k)) *
                                           detail::ipow(Complex(c), n - k) *
                                           detail::ipow(s * unit_phase(phi), k);
    return ManyBodyState(n, std::move(amp));
}

ManyBodyState spin_squeezed_state(const SqueezingParameter& mu, int n) {
    if (n < 1) throw InputError("spin squeezed state needs N >= 1");
    std::vector<Complex> amp(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        const double mag = std::sqrt(detail::binomial(n, k) / std::pow(2.0, n));
        Complex phase;
        if (mu.is_rational()) {
            // mu (k - N/2)^2 / 2 = pi p (2k - N)^2 / (4 q); reduce the integer
            // numerator modulo the period so rational mu stays exactly periodic.
            const long long m = 2LL * k - n;
            phase = exact_pi_phase(-mu.p() * m * m, 4 * mu.q());
        } else {
            const double d = static_cast<double>(k) - static_cast<double>(n) / 2.0;
            phase = unit_phase(-mu.value() * d * d / 2.0);
        }
        amp[static_cast<std::size_t>(k)] = mag * phase;
    }
    return ManyBodyState(n, std::move(amp));
}

ManyBodyState fock_state(int n, int k) {
    if (n < 1) throw InputError("Fock state needs N >= 1");
    if (k < 0 || k > n) throw InputError("Fock occupation k must satisfy 0 <= k <= N");
    std::vector<Complex> amp(static_cast<std::size_t>(n) + 1, Complex(0.0));
    amp[static_cast<std::size_t>(k)] = Complex(1.0);
    return ManyBodyState(n, std::move(amp));
}

RankPrediction predict_sss_ranks(long long p, long long q, int n) {
    if (q < 1) throw InputError("squeezing denominator must be positive");
    if (std::gcd(p, q) != 1) throw InputError("p and q must be coprime");
    RankPrediction out;
    out.g_n = generic_rank(n);
    out.sbr = static_cast<int>(std::min<long long>(q, out.g_n));
    out.sr = out.sbr;
    return out;
}

std::vector<CssTerm> predict_sss_decomposition(long long p, long long q, int n) {
    const RankPrediction ranks = predict_sss_ranks(p, q, n);
    if (q > ranks.g_n)
        throw InputError("no closed-form cat decomposition for q > g_N; use decompose");

    const bool shifted = (p % 2 != 0) && ((q + n) % 2 != 0);
    const double phi0 = shifted ? std::numbers::pi / static_cast<double>(q) : 0.0;

    std::vector<double> phases(static_cast<std::size_t>(q));
    for (long long j = 0; j < q; ++j)
        phases[static_cast<std::size_t>(j)] = phi0 + two_pi * static_cast<double>(j) / static_cast<double>(q);

    // Weights solve |SSS> = sum_j w_j |coh: pi/2, phi_j> in amplitude space.
    const ManyBodyState target = spin_squeezed_state(SqueezingParameter::rational(p, q), n);
    ComplexMatrix a(n + 1, static_cast<int>(q));
    for (long long j = 0; j < q; ++j) {
        const ManyBodyState css = coherent_spin_state(std::numbers::pi / 2.0, phases[static_cast<std::size_t>(j)], n);
        for (int k = 0; k <= n; ++k) a(k, static_cast<int>(j)) = css.amplitude(k);
    }
    ComplexVector b(n + 1);
    for (int k = 0; k <= n; ++k) b(k) = target.amplitude(k);

    Eigen::JacobiSVD<ComplexMatrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (svd.info() != Eigen::Success) throw NumericalError("SVD failed in the cat-state weight solve");
    const ComplexVector w = svd.solve(b);

    std::vector<CssTerm> out;
    out.reserve(static_cast<std::size_t>(q));
    for (long long j = 0; j < q; ++j)
        out.push_back(CssTerm{w(static_cast<int>(j)), std::numbers::pi / 2.0, phases[static_cast<std::size_t>(j)]});
    return out;
}

std::vector<CssTerm> decomposition_to_css_terms(const Decomposition& dec, int n) {
    std::vector<CssTerm> out;
    out.reserve(dec.terms.size());
    for (const DecompositionTerm& t : dec.terms) {
        const double am = std::abs(t.form.alpha);
        const double bm = std::abs(t.form.beta);
        const double scale = std::hypot(am, bm);
        const double theta = 2.0 * std::atan2(bm, am);
        double phi, chi;
        if (am > 0.0) {
            chi = std::arg(t.form.alpha);
            phi = std::arg(t.form.beta) - chi;
        } else {
            phi = 0.0;
            chi = std::arg(t.form.beta);
        }
        if (phi < 0.0) phi += two_pi;
        // lambda (alpha x + beta y)^N = weight * sqrt(N!)^-1-normalized CSS:
        // the unit form to the N-th power maps to sqrt(N!) |coh: theta, phi>.
        const Complex weight = t.lambda * std::pow(scale, n) * unit_phase(n * chi) *
                               std::sqrt(detail::factorial(n));
        out.push_back(CssTerm{weight, theta, phi});
    }
    return out;
}

Decomposition fock_exact_decomposition(int n, int k) {
    if (k < 1 || 2 * k > n) throw InputError("fock_exact_decomposition needs 1 <= k <= N/2");
    const int m = n - k + 1;
    const double scale = 1.0 / (static_cast<double>(m) * detail::binomial(n, k));

    Decomposition dec;
    dec.sr = m;
    dec.sbr = k + 1;
    dec.condition_number = 1.0;
    for (int j = 0; j < m; ++j) {
        // Phases are exact multiples of 2*pi/M, reduced in integer arithmetic.
        const long long rw = static_cast<long long>(j) % m;
        const long long rl = (static_cast<long long>(-j) * k % m + m) % m;
        const Complex omega_j = unit_phase(two_pi * static_cast<double>(rw) / static_cast<double>(m));
        const Complex lambda = scale * unit_phase(two_pi * static_cast<double>(rl) / static_cast<double>(m));
        dec.terms.push_back(DecompositionTerm{lambda, LinearForm(Complex(1.0), omega_j)});
        dec.kernel_poly_roots.push_back(RootCluster{ProjectiveRoot{omega_j, Complex(1.0)}.canonical(), 1});
    }

    std::vector<Complex> target(static_cast<std::size_t>(n) + 1, Complex(0.0));
    target[static_cast<std::size_t>(n - k)] = Complex(1.0);
    dec.residual = decomposition_residual(BinaryForm::from_monomial_coeffs(target), dec.terms);
    return dec;
}

FockLimitDecomposition fock_limit_decomposition(int n, int k, double eps) {
    if (k < 1 || 2 * k > n) throw InputError("fock_limit_decomposition needs 1 <= k <= N/2");
    if (!(eps > 0.0) || eps >= 1.0) throw InputError("eps must lie in (0, 1)");

    const double scale = 1.0 / (static_cast<double>(k) * detail::binomial(n, k) * std::pow(eps, k));
    FockLimitDecomposition out;
    for (int j = 0; j < k; ++j) {
        const Complex dir = eps * unit_phase(two_pi * static_cast<double>(j) / static_cast<double>(k));
        out.terms.push_back(DecompositionTerm{Complex(scale), LinearForm(Complex(1.0), dir)});
    }
    out.terms.push_back(DecompositionTerm{Complex(-static_cast<double>(k) * scale),
                                          LinearForm(Complex(1.0), Complex(0.0))});

    std::vector<Complex> m(static_cast<std::size_t>(n) + 1, Complex(0.0));
    for (const DecompositionTerm& t : out.terms) {
        const auto mono = expand_linear_power(t.form, n).monomial_coeffs();
        for (int i = 0; i <= n; ++i) m[static_cast<std::size_t>(i)] += t.lambda * mono[static_cast<std::size_t>(i)];
    }
    out.approximant = BinaryForm::from_monomial_coeffs(m);

    std::vector<Complex> target(static_cast<std::size_t>(n) + 1, Complex(0.0));
    target[static_cast<std::size_t>(n - k)] = Complex(1.0);
    out.error = form_distance(BinaryForm::from_monomial_coeffs(target), out.approximant);
    return out;
}

} // namespace waring
