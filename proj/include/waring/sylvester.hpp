#pragma once

#include <cstdint>
#include <vector>

#include "waring/binary_form.hpp"
#include "waring/catalecticant.hpp"

namespace waring {

struct SylvesterOptions {
    double rank_tol = default_rank_tol; // relative SVD rank cutoff
    double root_tol = 1e-6;             // chordal separation below which roots coincide
    double residual_tol = 1e-8;         // relative re-expansion residual for success
    double deflate_tol = 1e-9;          // relative size below which boundary coefficients vanish
    double condition_limit = 1e12;      // weight solves above this are rejected
    std::uint64_t seed = 20240101;      // kernel-search RNG seed
    int max_kernel_tries = 32;          // random kernel combinations per level
};

/// Point (t0 : t1) on the projective line.
struct ProjectiveRoot {
    Complex t0;
    Complex t1;

    /// Scaled to |(t0,t1)| = 1 with the first entry of magnitude above
    /// root_tol made real-positive.
    ProjectiveRoot canonical() const;
};

/// Scale-invariant distance on the projective line; ranges over [0, 1] and
/// treats the point at infinity like any other.
double chordal_distance(const ProjectiveRoot& a, const ProjectiveRoot& b);

struct RootCluster {
    ProjectiveRoot root;
    int multiplicity = 1;
};

/// All degree-many projective roots of q, grouped by multiplicity. Finite
/// roots come from the eigenvalues of the balanced companion matrix of the
/// dehomogenized polynomial; vanishing leading (trailing stored) monomial
/// coefficients contribute the root (1:0) at infinity. Roots closer than
/// root_tol in the chordal metric are merged.
std::vector<RootCluster> roots_of_binary_form(const BinaryForm& q, const SylvesterOptions& opt = {});

struct SquareFreeReport {
    bool square_free = true;
    double min_separation = 0.0; // min pairwise chordal distance (inf for degree <= 1)
};

/// True iff all roots are simple at opt.root_tol.
SquareFreeReport is_square_free(const BinaryForm& q, const SylvesterOptions& opt = {});

/// Degree-r form q(t0,t1) = sum_j u_j t0^(r-j) t1^j built from a kernel
/// vector of the r-th catalecticant.
BinaryForm kernel_polynomial(const ComplexVector& u);

/// Smallest r >= 1 with rank(catalecticant(p, r)) <= r; never exceeds
/// ceil((N+1)/2). Degree-0 forms return 1 by convention.
int border_rank(const BinaryForm& p, const SylvesterOptions& opt = {});

struct SymmetricRankResult {
    int sr = 0;
    int sbr = 0;
    BinaryForm kernel_poly;       // certified square-free witness when sr == sbr,
                                  // otherwise the repeated-root kernel element
    double min_root_separation = 0.0;
};

/// sbr from the catalecticant ladder; sr = sbr when some kernel element at
/// level sbr has simple roots, otherwise N - sbr + 2.
SymmetricRankResult symmetric_rank(const BinaryForm& p, const SylvesterOptions& opt = {});

struct DecompositionTerm {
    Complex lambda;
    LinearForm form;
};

struct Decomposition {
    std::vector<DecompositionTerm> terms; // terms.size() == sr
    int sr = 0;
    int sbr = 0;
    double residual = 0.0;
    double condition_number = 0.0; // of the weight solve
    std::vector<RootCluster> kernel_poly_roots;
};

/// p = sum_k lambda_k (alpha_k x + beta_k y)^N with sr terms; the linear
/// forms come from the simple roots of a kernel polynomial (re-derived at
/// level sr when sr > sbr) and the weights from a least-squares solve.
Decomposition decompose(const BinaryForm& p, const SylvesterOptions& opt = {});

struct GeneralizedTerm {
    LinearForm form;
    int power = 0;        // N - (s_k - 1)
    BinaryForm cofactor;  // degree s_k - 1, absorbs the scalar weight
};

struct GeneralizedDecomposition {
    std::vector<GeneralizedTerm> terms;
    int sr = 0;
    int sbr = 0;
    double residual = 0.0;
};

/// p = sum_k (alpha_k x + beta_k y)^(N-(s_k-1)) F_k with the multiplicities
/// s_k read off the clustered roots of the level-sbr kernel polynomial and
/// sum_k s_k = sbr. Distinct-root inputs reduce to the ordinary decomposition.
GeneralizedDecomposition generalized_decompose(const BinaryForm& p, const SylvesterOptions& opt = {});

/// Relative re-expansion residual of sum_k lambda_k (alpha_k x + beta_k y)^N
/// against p, accumulated in extended precision.
double decomposition_residual(const BinaryForm& p, const std::vector<DecompositionTerm>& terms);

} // namespace waring
