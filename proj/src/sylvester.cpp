#include "waring/sylvester.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

#include "waring/errors.hpp"

namespace waring {

namespace {

// Certified-distinct requires clearing the coincidence tolerance by this
// factor; separations inside (root_tol, margin*root_tol] are reported as
// indeterminate rather than silently branched on.
constexpr double certification_margin = 16.0;

// Parlett-Reinsch balancing, diagonal included. Companion matrices of badly
// scaled polynomials otherwise lose all accuracy in their small eigenvalues.
void balance_matrix(ComplexMatrix& m) {
    const double gamma = 0.9;
    const Eigen::Index n = m.rows();
    bool changed;
    do {
        changed = false;
        for (Eigen::Index i = 0; i < n; ++i) {
            const double row_norm = m.row(i).lpNorm<1>();
            const double col_norm = m.col(i).lpNorm<1>();
            if (row_norm == 0.0 || col_norm == 0.0) continue;
            int exponent = 0;
            std::frexp(row_norm / col_norm, &exponent);
            exponent /= 2;
            if (exponent == 0) continue;
            const double scaled_col = std::ldexp(col_norm, exponent);
            const double scaled_row = std::ldexp(row_norm, -exponent);
            if (scaled_col + scaled_row < gamma * (col_norm + row_norm)) {
                m.row(i) *= std::ldexp(1.0, -exponent);
                m.col(i) *= std::ldexp(1.0, exponent);
                changed = true;
            }
        }
    } while (changed);
}

std::vector<ProjectiveRoot> raw_projective_roots(const BinaryForm& q, const SylvesterOptions& opt) {
    const int d = q.degree();
    if (q.is_zero()) throw InputError("roots of the zero form are undefined");
    if (d < 1) throw InputError("roots require degree >= 1");

    const auto m = q.monomial_coeffs();
    double scale = 0.0;
    for (const Complex& c : m) scale = std::max(scale, std::abs(c));
    const double cut = opt.deflate_tol * scale;

    // Vanishing top coefficients are roots at (1:0); vanishing bottom
    // coefficients are roots at (0:1). Peeling them off exactly keeps the
    // companion matrix away from its worst conditioning.
    int hi = 0;
    while (hi < d && std::abs(m[static_cast<std::size_t>(d - hi)]) <= cut) ++hi;
    int lo = 0;
    while (lo < d - hi && std::abs(m[static_cast<std::size_t>(lo)]) <= cut) ++lo;

    std::vector<ProjectiveRoot> roots;
    roots.reserve(static_cast<std::size_t>(d));
    for (int i = 0; i < hi; ++i) roots.push_back(ProjectiveRoot{Complex(1.0), Complex(0.0)});
    for (int i = 0; i < lo; ++i) roots.push_back(ProjectiveRoot{Complex(0.0), Complex(1.0)});

    const int dp = d - hi - lo;
    if (dp >= 1) {
        const Complex lead = m[static_cast<std::size_t>(d - hi)];
        ComplexMatrix companion = ComplexMatrix::Zero(dp, dp);
        for (int i = 0; i < dp; ++i) {
            companion(i, dp - 1) = -m[static_cast<std::size_t>(lo + i)] / lead;
            if (i > 0) companion(i, i - 1) = Complex(1.0);
        }
        balance_matrix(companion);
        Eigen::ComplexEigenSolver<ComplexMatrix> eig(companion, /*computeEigenvectors=*/false);
        if (eig.info() != Eigen::Success) throw NumericalError("companion eigenvalue iteration failed");
        for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i) {
            const Complex t = eig.eigenvalues()(i);
            const double s = std::sqrt(1.0 + std::norm(t));
            roots.push_back(ProjectiveRoot{t / s, Complex(1.0 / s)});
        }
    }
    return roots;
}

struct ClusterAccumulator {
    Eigen::Matrix2cd scatter = Eigen::Matrix2cd::Zero();
    int count = 0;
};

ProjectiveRoot cluster_mean(const ClusterAccumulator& acc) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> eig(acc.scatter);
    const Eigen::Vector2cd v = eig.eigenvectors().col(1); // largest eigenvalue
    return ProjectiveRoot{v(0), v(1)}.canonical();
}

std::vector<RootCluster> cluster_roots(const std::vector<ProjectiveRoot>& raw, double radius) {
    const std::size_t n = raw.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    const auto find = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (chordal_distance(raw[i], raw[j]) <= radius) parent[find(i)] = find(j);

    std::vector<ClusterAccumulator> accs(n);
    for (std::size_t i = 0; i < n; ++i) {
        Eigen::Vector2cd v;
        v << raw[i].t0, raw[i].t1;
        auto& acc = accs[find(i)];
        acc.scatter += v * v.adjoint();
        acc.count += 1;
    }

    std::vector<RootCluster> clusters;
    for (std::size_t i = 0; i < n; ++i)
        if (accs[i].count > 0)
            clusters.push_back(RootCluster{cluster_mean(accs[i]), accs[i].count});

    std::sort(clusters.begin(), clusters.end(), [](const RootCluster& a, const RootCluster& b) {
        const auto key = [](const RootCluster& c) {
            return std::array<double, 4>{c.root.t0.real(), c.root.t0.imag(), c.root.t1.real(), c.root.t1.imag()};
        };
        return key(a) < key(b);
    });
    return clusters;
}

double min_pairwise_separation(const std::vector<ProjectiveRoot>& raw) {
    if (raw.size() < 2) return std::numeric_limits<double>::infinity();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < raw.size(); ++i)
        for (std::size_t j = i + 1; j < raw.size(); ++j)
            best = std::min(best, chordal_distance(raw[i], raw[j]));
    return best;
}

// A root (t0:t1) of the kernel polynomial corresponds to the apolar operator
// factor t1*dx - t0*dy (up to scale), which annihilates exactly the powers of
// t1*x + t0*y. Hence the coordinate swap from root to linear form.
LinearForm root_to_linear_form(const ProjectiveRoot& r) {
    return LinearForm(r.t1, r.t0).canonical();
}

struct KernelCandidate {
    BinaryForm poly;
    double separation = 0.0;
};

// Kernel elements of the level-r catalecticant, as kernel polynomials with
// their minimum root separation: the orthonormal SVD basis first, then random
// unit combinations when the null space has dimension > 1.
std::vector<KernelCandidate> kernel_candidates(const RankReport& report, const SylvesterOptions& opt) {
    std::vector<KernelCandidate> out;
    for (const ComplexVector& u : report.kernel_basis) {
        BinaryForm q = kernel_polynomial(u);
        out.push_back(KernelCandidate{q, is_square_free(q, opt).min_separation});
    }
    if (report.kernel_basis.size() > 1) {
        std::mt19937_64 rng(opt.seed);
        std::normal_distribution<double> gauss(0.0, 1.0);
        for (int t = 0; t < opt.max_kernel_tries; ++t) {
            ComplexVector u = ComplexVector::Zero(report.kernel_basis.front().size());
            for (const ComplexVector& b : report.kernel_basis) u += Complex(gauss(rng), gauss(rng)) * b;
            if (u.norm() == 0.0) continue;
            u /= u.norm();
            BinaryForm q = kernel_polynomial(u);
            out.push_back(KernelCandidate{q, is_square_free(q, opt).min_separation});
        }
    }
    return out;
}

const KernelCandidate* best_candidate(const std::vector<KernelCandidate>& candidates) {
    const KernelCandidate* best = nullptr;
    for (const KernelCandidate& c : candidates)
        if (best == nullptr || c.separation > best->separation) best = &c;
    return best;
}

std::vector<DecompositionTerm> solve_weights(const BinaryForm& p,
                                             const std::vector<RootCluster>& roots,
                                             const SylvesterOptions& opt,
                                             double* condition_out) {
    const int n = p.degree();
    const int r = static_cast<int>(roots.size());
    ComplexMatrix a(n + 1, r);
    std::vector<LinearForm> forms;
    forms.reserve(static_cast<std::size_t>(r));
    for (int k = 0; k < r; ++k) {
        const LinearForm f = root_to_linear_form(roots[static_cast<std::size_t>(k)].root);
        forms.push_back(f);
        const auto col = expand_linear_power(f, n).binomial_coeffs();
        for (int i = 0; i <= n; ++i) a(i, k) = col[static_cast<std::size_t>(i)];
    }
    ComplexVector b(n + 1);
    const auto& pa = p.binomial_coeffs();
    for (int i = 0; i <= n; ++i) b(i) = pa[static_cast<std::size_t>(i)];

    Eigen::JacobiSVD<ComplexMatrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (svd.info() != Eigen::Success) throw NumericalError("SVD failed in the weight solve");
    const double sigma_min = svd.singularValues()(svd.singularValues().size() - 1);
    const double cond = sigma_min > 0.0 ? svd.singularValues()(0) / sigma_min
                                        : std::numeric_limits<double>::infinity();
    if (condition_out != nullptr) *condition_out = cond;
    if (!(cond < opt.condition_limit)) {
        std::ostringstream msg;
        msg << "weight solve is ill-conditioned (condition number " << cond << ")";
        throw NumericalError(msg.str());
    }
    const ComplexVector lambda = svd.solve(b);

    std::vector<DecompositionTerm> terms;
    terms.reserve(static_cast<std::size_t>(r));
    for (int k = 0; k < r; ++k) terms.push_back(DecompositionTerm{lambda(k), forms[static_cast<std::size_t>(k)]});
    return terms;
}

} // namespace

ProjectiveRoot ProjectiveRoot::canonical() const {
    const double norm = std::sqrt(std::norm(t0) + std::norm(t1));
    if (norm == 0.0) throw InputError("projective point must be nonzero");
    const Complex anchor = std::abs(t0) > 1e-14 * norm ? t0 : t1;
    const Complex phase = std::abs(anchor) / anchor;
    return ProjectiveRoot{t0 * phase / norm, t1 * phase / norm};
}

double chordal_distance(const ProjectiveRoot& a, const ProjectiveRoot& b) {
    const double na = std::sqrt(std::norm(a.t0) + std::norm(a.t1));
    const double nb = std::sqrt(std::norm(b.t0) + std::norm(b.t1));
    if (na == 0.0 || nb == 0.0) throw InputError("projective point must be nonzero");
    return std::abs(a.t0 * b.t1 - a.t1 * b.t0) / (na * nb);
}

std::vector<RootCluster> roots_of_binary_form(const BinaryForm& q, const SylvesterOptions& opt) {
    return cluster_roots(raw_projective_roots(q, opt), opt.root_tol);
}

SquareFreeReport is_square_free(const BinaryForm& q, const SylvesterOptions& opt) {
    const double sep = min_pairwise_separation(raw_projective_roots(q, opt));
    return SquareFreeReport{sep > opt.root_tol, sep};
}

BinaryForm kernel_polynomial(const ComplexVector& u) {
    const int r = static_cast<int>(u.size()) - 1;
    if (r < 0) throw InputError("empty kernel vector");
    // q(t0,t1) = sum_j u_j t0^(r-j) t1^j; stored index is the power of t0.
    std::vector<Complex> m(static_cast<std::size_t>(r) + 1);
    for (int j = 0; j <= r; ++j) m[static_cast<std::size_t>(r - j)] = u(j);
    return BinaryForm::from_monomial_coeffs(m);
}

int border_rank(const BinaryForm& p, const SylvesterOptions& opt) {
    if (p.is_zero()) throw InputError("the zero form has no border rank");
    const int n = p.degree();
    if (n == 0) return 1;
    const BinaryForm phat = p.normalized();
    for (int r = 1; r <= n; ++r)
        if (numerical_rank(catalecticant(phat, r), opt.rank_tol).numerical_rank <= r) return r;
    throw NumericalError("catalecticant ladder did not terminate"); // unreachable: rank <= min(dims)
}

SymmetricRankResult symmetric_rank(const BinaryForm& p, const SylvesterOptions& opt) {
    if (p.is_zero()) throw InputError("the zero form has no symmetric rank");
    const int n = p.degree();
    if (n == 0)
        return SymmetricRankResult{1, 1, BinaryForm::from_binomial_coeffs({Complex(1.0)}),
                                   std::numeric_limits<double>::infinity()};

    const int sbr = border_rank(p, opt);
    const RankReport report = numerical_rank(catalecticant(p.normalized(), sbr), opt.rank_tol);
    if (report.kernel_basis.empty())
        throw NumericalError("catalecticant kernel is empty at the border rank level");

    const auto candidates = kernel_candidates(report, opt);
    const KernelCandidate* best = best_candidate(candidates);

    if (best->separation > certification_margin * opt.root_tol)
        return SymmetricRankResult{sbr, sbr, best->poly, best->separation};
    if (best->separation <= opt.root_tol)
        return SymmetricRankResult{n - sbr + 2, sbr, candidates.front().poly, best->separation};

    std::ostringstream msg;
    msg << "root certification indeterminate at tolerance: min pairwise chordal separation "
        << best->separation << " against root_tol " << opt.root_tol;
    throw NumericalError(msg.str());
}

Decomposition decompose(const BinaryForm& p, const SylvesterOptions& opt) {
    if (p.is_zero()) throw InputError("the zero form has no decomposition");
    const int n = p.degree();

    Decomposition dec;
    if (n == 0) {
        dec.sr = dec.sbr = 1;
        dec.terms.push_back(DecompositionTerm{p.binomial_coeff(0), LinearForm(Complex(1.0), Complex(0.0))});
        dec.residual = 0.0;
        dec.condition_number = 1.0;
        return dec;
    }

    const SymmetricRankResult ranks = symmetric_rank(p, opt);
    dec.sr = ranks.sr;
    dec.sbr = ranks.sbr;

    if (ranks.sr == ranks.sbr) {
        dec.kernel_poly_roots = roots_of_binary_form(ranks.kernel_poly, opt);
    } else {
        // Re-derive the kernel at level sr; there the null space is large and
        // generic elements have simple roots.
        const RankReport report = numerical_rank(catalecticant(p.normalized(), ranks.sr), opt.rank_tol);
        const auto candidates = kernel_candidates(report, opt);
        const KernelCandidate* best = best_candidate(candidates);
        if (best == nullptr || best->separation <= certification_margin * opt.root_tol) {
            std::ostringstream msg;
            msg << "no simple-root kernel element found at level " << ranks.sr
                << " after " << opt.max_kernel_tries << " random combinations";
            throw NumericalError(msg.str());
        }
        dec.kernel_poly_roots = roots_of_binary_form(best->poly, opt);
    }

    dec.terms = solve_weights(p, dec.kernel_poly_roots, opt, &dec.condition_number);
    dec.residual = decomposition_residual(p, dec.terms);
    if (!(dec.residual <= opt.residual_tol)) {
        std::ostringstream msg;
        msg << "decomposition residual " << dec.residual << " exceeds tolerance " << opt.residual_tol;
        throw NumericalError(msg.str());
    }
    return dec;
}

GeneralizedDecomposition generalized_decompose(const BinaryForm& p, const SylvesterOptions& opt) {
    if (p.is_zero()) throw InputError("the zero form has no decomposition");
    const int n = p.degree();

    GeneralizedDecomposition gen;
    const SymmetricRankResult ranks = symmetric_rank(p, opt);
    if (n == 0 || ranks.sr == ranks.sbr) {
        const Decomposition dec = decompose(p, opt);
        gen.sr = dec.sr;
        gen.sbr = dec.sbr;
        gen.residual = dec.residual;
        for (const DecompositionTerm& t : dec.terms)
            gen.terms.push_back(GeneralizedTerm{t.form, n, BinaryForm::from_binomial_coeffs({t.lambda})});
        return gen;
    }

    gen.sr = ranks.sr;
    gen.sbr = ranks.sbr;

    const RankReport report = numerical_rank(catalecticant(p.normalized(), ranks.sbr), opt.rank_tol);
    const auto& pm = p.monomial_coeffs();

    // Escalating cluster radii: eigenvalues of an s-fold root split by about
    // eps^(1/s), so a repeated root can look like a tight simple cluster.
    const double radii[] = {opt.root_tol, 1e-5, 1e-4};
    std::string last_failure = "no kernel element produced a consistent clustering";
    for (const ComplexVector& u : report.kernel_basis) {
        const auto raw = raw_projective_roots(kernel_polynomial(u), opt);
        for (const double radius : radii) {
            const auto clusters = cluster_roots(raw, radius);
            const int total = std::accumulate(clusters.begin(), clusters.end(), 0,
                                              [](int acc, const RootCluster& c) { return acc + c.multiplicity; });
            if (total != ranks.sbr) continue;

            // Unknowns: the cofactor coefficients, s_k per cluster.
            std::vector<GeneralizedTerm> terms;
            ComplexMatrix a(n + 1, ranks.sbr);
            int col = 0;
            for (const RootCluster& c : clusters) {
                const LinearForm f = root_to_linear_form(c.root);
                const int power = n - (c.multiplicity - 1);
                terms.push_back(GeneralizedTerm{f, power, BinaryForm()});
                const auto base = expand_linear_power(f, power).monomial_coeffs();
                for (int t = 0; t < c.multiplicity; ++t) {
                    // Column of (alpha x + beta y)^power * x^t y^(s-1-t).
                    a.col(col).setZero();
                    for (int i = 0; i <= power; ++i) a(i + t, col) = base[static_cast<std::size_t>(i)];
                    ++col;
                }
            }

            ComplexVector b(n + 1);
            for (int i = 0; i <= n; ++i) b(i) = pm[static_cast<std::size_t>(i)];
            Eigen::JacobiSVD<ComplexMatrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
            if (svd.info() != Eigen::Success) continue;
            const ComplexVector x = svd.solve(b);

            BinaryForm expanded = BinaryForm::from_monomial_coeffs(std::vector<Complex>(static_cast<std::size_t>(n) + 1, Complex(0.0)));
            col = 0;
            for (std::size_t k = 0; k < clusters.size(); ++k) {
                const int s = clusters[k].multiplicity;
                std::vector<Complex> cof(static_cast<std::size_t>(s), Complex(0.0));
                for (int t = 0; t < s; ++t) cof[static_cast<std::size_t>(t)] = x(col++);
                terms[k].cofactor = BinaryForm::from_monomial_coeffs(cof);

                const auto base = expand_linear_power(terms[k].form, terms[k].power).monomial_coeffs();
                std::vector<Complex> add(static_cast<std::size_t>(n) + 1, Complex(0.0));
                for (int t = 0; t < s; ++t)
                    for (int i = 0; i <= terms[k].power; ++i)
                        add[static_cast<std::size_t>(i + t)] += cof[static_cast<std::size_t>(t)] * base[static_cast<std::size_t>(i)];
                expanded = expanded + BinaryForm::from_monomial_coeffs(add);
            }

            const double residual = form_distance(p, expanded);
            if (residual <= opt.residual_tol) {
                gen.terms = std::move(terms);
                gen.residual = residual;
                return gen;
            }
            std::ostringstream msg;
            msg << "generalized re-expansion residual " << residual << " at cluster radius " << radius;
            last_failure = msg.str();
        }
    }
    throw NumericalError("root clustering ambiguous at tolerance: " + last_failure);
}

double decomposition_residual(const BinaryForm& p, const std::vector<DecompositionTerm>& terms) {
    using CLD = std::complex<long double>;
    const int n = p.degree();

    std::vector<CLD> acc(static_cast<std::size_t>(n) + 1, CLD(0.0L));
    for (const DecompositionTerm& t : terms) {
        const CLD lambda(t.lambda.real(), t.lambda.imag());
        const CLD alpha(t.form.alpha.real(), t.form.alpha.imag());
        const CLD beta(t.form.beta.real(), t.form.beta.imag());
        for (int i = 0; i <= n; ++i)
            acc[static_cast<std::size_t>(i)] += lambda * detail::ipow(alpha, i) * detail::ipow(beta, n - i);
    }

    long double binom = 1.0L;
    long double diff = 0.0L, ref = 0.0L;
    const auto& pa = p.binomial_coeffs();
    for (int i = 0; i <= n; ++i) {
        if (i > 0) binom = binom * static_cast<long double>(n - i + 1) / static_cast<long double>(i);
        const CLD target(pa[static_cast<std::size_t>(i)].real(), pa[static_cast<std::size_t>(i)].imag());
        const CLD d = (acc[static_cast<std::size_t>(i)] - target) * binom;
        const CLD r = target * binom;
        diff += std::norm(d);
        ref += std::norm(r);
    }
    const long double rel = ref > 0.0L ? std::sqrt(diff) / std::sqrt(ref) : std::sqrt(diff);
    return static_cast<double>(rel);
}

} // namespace waring
