#pragma once

#include <cstdint>
#include <vector>

#include "waring/binary_form.hpp"
#include "waring/sylvester.hpp"

namespace waring {

/// One-axis-twisting squeezing strength. Rational multiples of 2*pi are kept
/// as a reduced fraction p/q in [0, 1) so the twist phases can be reduced
/// exactly, independent of floating-point rounding of 2*pi*p/q.
class SqueezingParameter {
public:
    static SqueezingParameter rational(long long p, long long q);
    static SqueezingParameter real(double mu);

    bool is_rational() const { return rational_; }
    long long p() const { return p_; }
    long long q() const { return q_; }
    double value() const; // mu in radians

private:
    SqueezingParameter() = default;
    bool rational_ = false;
    long long p_ = 0;
    long long q_ = 1;
    double mu_ = 0.0;
};

/// Generic symmetric rank of a degree-N binary form.
inline int generic_rank(int n) { return (n + 2) / 2; } // ceil((N+1)/2)

struct RankPrediction {
    int sbr = 0;
    int sr = 0;
    int g_n = 0;
};

/// Coherent spin state |coh: theta, phi>: all N atoms share the Bloch-sphere
/// direction (theta, phi). Amplitudes c_k = sqrt(C(N,k)) cos(theta/2)^(N-k)
/// (e^(i phi) sin(theta/2))^k.
ManyBodyState coherent_spin_state(double theta, double phi, int n);

/// Spin squeezed state exp(-i mu Sz^2 / 2) |coh: pi/2, 0>.
ManyBodyState spin_squeezed_state(const SqueezingParameter& mu, int n);

/// |N-k, k>: exactly k particles down.
ManyBodyState fock_state(int n, int k);

/// Closed-form ranks of the spin squeezed state at mu = 2*pi*p/q:
/// sbr = sr = min(q, g_N). Requires coprime p, q.
RankPrediction predict_sss_ranks(long long p, long long q, int n);

struct CssTerm {
    Complex weight;
    double theta = 0.0;
    double phi = 0.0;
};

/// Cat-state prediction for mu = 2*pi*p/q with q <= g_N: q equatorial
/// coherent states at phases phi_0 + 2*pi*j/q, where phi_0 = pi/q iff both p
/// and q+N are odd (else 0). The weights come from the linear solve; the
/// closed form fixes only their magnitude 1/sqrt(q).
std::vector<CssTerm> predict_sss_decomposition(long long p, long long q, int n);

/// View a rank decomposition of state_to_form(s) as a sum of coherent spin
/// states: each lambda (alpha x + beta y)^N becomes weight * |coh:theta,phi>.
std::vector<CssTerm> decomposition_to_css_terms(const Decomposition& dec, int n);

/// Exact decomposition of the monomial x^(N-k) y^k into M = N-k+1 powers:
/// x^(N-k) y^k = (1/(M C(N,k))) sum_j w^(-jk) (x + w^j y)^N, w = e^(2 pi i/M).
/// All monomials other than k cancel by destructive interference.
Decomposition fock_exact_decomposition(int n, int k);

struct FockLimitDecomposition {
    std::vector<DecompositionTerm> terms; // k+1 rank-one terms
    BinaryForm approximant;               // their sum
    double error = 0.0;                   // relative distance to x^(N-k) y^k, O(eps^k)
};

/// Border-rank approximant (1/(k C(N,k) eps^k)) [sum_{j<k} (x + eps w^j y)^N
/// - k x^N] with w = e^(2 pi i/k); tends to x^(N-k) y^k as eps -> 0.
FockLimitDecomposition fock_limit_decomposition(int n, int k, double eps);

} // namespace waring
