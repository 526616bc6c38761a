#include "waring/oracle.hpp"

#include <algorithm>
#include <random>
#include <utility>

namespace waring::oracle {

namespace {

struct GaussianInt {
    Integer re;
    Integer im;

    bool is_zero() const { return re == 0 && im == 0; }

    GaussianInt operator*(const GaussianInt& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussianInt operator-(const GaussianInt& o) const { return {re - o.re, im - o.im}; }

    // Exact division; inside Bareiss the quotient is guaranteed integral.
    GaussianInt divide_exact(const GaussianInt& o) const {
        const Integer n = o.re * o.re + o.im * o.im;
        return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
    }
};

std::size_t bits(const GaussianInt& g) {
    const Integer a = abs(g.re), b = abs(g.im);
    std::size_t m = 0;
    if (a != 0) m = std::max<std::size_t>(m, msb(a) + 1);
    if (b != 0) m = std::max<std::size_t>(m, msb(b) + 1);
    return m;
}

// Clear denominators row by row; scaling a row by a nonzero rational keeps
// the rank.
std::vector<std::vector<GaussianInt>> to_gaussian_integer_rows(const ExactMatrix& m) {
    std::vector<std::vector<GaussianInt>> rows;
    rows.reserve(m.size());
    for (const auto& row : m) {
        Integer l = 1;
        for (const ExactScalar& e : row) {
            l = lcm(l, denominator(e.re));
            l = lcm(l, denominator(e.im));
        }
        std::vector<GaussianInt> out;
        out.reserve(row.size());
        for (const ExactScalar& e : row) {
            const Rational sr = e.re * l;
            const Rational si = e.im * l;
            out.push_back(GaussianInt{numerator(sr), numerator(si)});
        }
        rows.push_back(std::move(out));
    }
    return rows;
}

// Reduced row echelon form over the Gaussian rationals; returns pivot columns.
std::vector<int> rref(ExactMatrix& m) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows > 0 ? static_cast<int>(m.front().size()) : 0;
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int pivot = -1;
        for (int i = row; i < rows; ++i)
            if (!m[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)].is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(row)]);
        const ExactScalar inv = ExactScalar(1) / m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
        for (int j = col; j < cols; ++j)
            m[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] =
                m[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] * inv;
        for (int i = 0; i < rows; ++i) {
            if (i == row) continue;
            const ExactScalar f = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
            if (f.is_zero()) continue;
            for (int j = col; j < cols; ++j)
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                    f * m[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

// Null-space basis of the exact catalecticant via RREF and free variables.
std::vector<std::vector<ExactScalar>> exact_kernel_basis(ExactMatrix m) {
    const int cols = m.empty() ? 0 : static_cast<int>(m.front().size());
    const std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;

    std::vector<std::vector<ExactScalar>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<ExactScalar> v(static_cast<std::size_t>(cols));
        v[static_cast<std::size_t>(free)] = ExactScalar(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<std::size_t>(pivots[r])] =
                ExactScalar(0) - m[r][static_cast<std::size_t>(free)];
        basis.push_back(std::move(v));
    }
    return basis;
}

using ExactPoly = std::vector<ExactScalar>; // coefficient of t^i at index i

int poly_degree(const ExactPoly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (!f[static_cast<std::size_t>(i)].is_zero()) return i;
    return -1;
}

ExactPoly poly_trim(ExactPoly f) {
    f.resize(static_cast<std::size_t>(poly_degree(f) + 1));
    return f;
}

ExactPoly poly_derivative(const ExactPoly& f) {
    if (f.size() <= 1) return {};
    ExactPoly d(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i)
        d[i - 1] = f[i] * ExactScalar(Rational(static_cast<long>(i)));
    return d;
}

ExactPoly poly_remainder(ExactPoly a, const ExactPoly& b) {
    const int db = poly_degree(b);
    int da = poly_degree(a);
    const ExactScalar inv_lead = ExactScalar(1) / b[static_cast<std::size_t>(db)];
    while (da >= db && da >= 0) {
        const ExactScalar q = a[static_cast<std::size_t>(da)] * inv_lead;
        for (int i = 0; i <= db; ++i)
            a[static_cast<std::size_t>(da - db + i)] =
                a[static_cast<std::size_t>(da - db + i)] - q * b[static_cast<std::size_t>(i)];
        a[static_cast<std::size_t>(da)] = ExactScalar(0); // cancel exactly
        da = poly_degree(a);
    }
    return poly_trim(std::move(a));
}

int gcd_degree(ExactPoly a, ExactPoly b) {
    a = poly_trim(std::move(a));
    b = poly_trim(std::move(b));
    if (poly_degree(a) < poly_degree(b)) std::swap(a, b);
    while (poly_degree(b) >= 0) {
        ExactPoly r = poly_remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_degree(a);
}

bool square_free_from_monomial(const std::vector<ExactScalar>& m) {
    const int d = static_cast<int>(m.size()) - 1;
    int lead_zeros = 0;
    while (lead_zeros < d && m[static_cast<std::size_t>(d - lead_zeros)].is_zero()) ++lead_zeros;
    if (lead_zeros >= 2) return false; // (1:0) is at least a double root

    ExactPoly f(m.begin(), m.end() - lead_zeros);
    f = poly_trim(std::move(f));
    if (poly_degree(f) <= 0) return true; // only the simple infinity root, if any
    return gcd_degree(f, poly_derivative(f)) == 0;
}

} // namespace

ExactScalar ExactScalar::operator/(const ExactScalar& o) const {
    if (o.is_zero()) throw InputError("division by zero ExactScalar");
    const Rational n = o.re * o.re + o.im * o.im;
    return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
}

ExactForm::ExactForm(std::vector<ExactScalar> binomial_coeffs) : coeffs_(std::move(binomial_coeffs)) {
    if (coeffs_.empty()) throw InputError("a binary form needs at least one coefficient");
}

ExactForm ExactForm::from_monomial_coeffs(const std::vector<ExactScalar>& m) {
    const int n = static_cast<int>(m.size()) - 1;
    std::vector<ExactScalar> a(m.size());
    for (int i = 0; i <= n; ++i) {
        const ExactScalar binom(Rational(exact_binomial(n, i)));
        a[static_cast<std::size_t>(i)] = m[static_cast<std::size_t>(i)] / binom;
    }
    return ExactForm(std::move(a));
}

std::vector<ExactScalar> ExactForm::monomial_coeffs() const {
    const int n = degree();
    std::vector<ExactScalar> m(coeffs_.size());
    for (int i = 0; i <= n; ++i)
        m[static_cast<std::size_t>(i)] = coeffs_[static_cast<std::size_t>(i)] * ExactScalar(Rational(exact_binomial(n, i)));
    return m;
}

bool ExactForm::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const ExactScalar& c) { return c.is_zero(); });
}

BinaryForm ExactForm::to_binary_form() const {
    std::vector<Complex> a;
    a.reserve(coeffs_.size());
    for (const ExactScalar& c : coeffs_) a.push_back(c.to_complex());
    return BinaryForm::from_binomial_coeffs(std::move(a));
}

Integer exact_binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Integer acc = 1;
    for (int i = 1; i <= k; ++i) acc = acc * (n - k + i) / i;
    return acc;
}

int exact_rank(const ExactMatrix& m, std::size_t max_bits) {
    if (m.empty() || m.front().empty()) throw InputError("exact_rank of an empty matrix");
    auto a = to_gaussian_integer_rows(m);
    const int rows = static_cast<int>(a.size());
    const int cols = static_cast<int>(a.front().size());

    GaussianInt prev_pivot{1, 0};
    int rank = 0;
    for (int step = 0; step < std::min(rows, cols); ++step) {
        int pr = -1, pc = -1;
        for (int i = rank; i < rows && pr < 0; ++i)
            for (int j = rank; j < cols; ++j)
                if (!a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].is_zero()) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr < 0) break;
        std::swap(a[static_cast<std::size_t>(pr)], a[static_cast<std::size_t>(rank)]);
        for (auto& row : a) std::swap(row[static_cast<std::size_t>(pc)], row[static_cast<std::size_t>(rank)]);

        const GaussianInt pivot = a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(rank)];
        for (int i = rank + 1; i < rows; ++i) {
            for (int j = rank + 1; j < cols; ++j) {
                GaussianInt v = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * pivot -
                                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(rank)] *
                                    a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)];
                v = v.divide_exact(prev_pivot);
                if (bits(v) > max_bits)
                    throw NumericalError("exact_rank exceeded the Bareiss bit-length cap");
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(v);
            }
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(rank)] = GaussianInt{0, 0};
        }
        prev_pivot = pivot;
        ++rank;
    }
    return rank;
}

ExactMatrix exact_catalecticant(const ExactForm& p, int r) {
    const int n = p.degree();
    if (r < 0 || r > n) throw InputError("catalecticant order r must satisfy 0 <= r <= N");
    const auto& a = p.binomial_coeffs();
    ExactMatrix m(static_cast<std::size_t>(n - r + 1), std::vector<ExactScalar>(static_cast<std::size_t>(r + 1)));
    for (int i = 0; i <= n - r; ++i)
        for (int j = 0; j <= r; ++j)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(i + j)];
    return m;
}

int exact_border_rank(const ExactForm& p) {
    if (p.is_zero()) throw InputError("the zero form has no border rank");
    const int n = p.degree();
    if (n == 0) return 1;
    for (int r = 1; r <= n; ++r)
        if (exact_rank(exact_catalecticant(p, r)) <= r) return r;
    throw NumericalError("exact catalecticant ladder did not terminate"); // unreachable
}

bool exact_square_free(const ExactForm& q) {
    if (q.is_zero()) throw InputError("square-freeness of the zero form is undefined");
    if (q.degree() < 1) return true;
    return square_free_from_monomial(q.monomial_coeffs());
}

int exact_symmetric_rank(const ExactForm& p, std::uint64_t seed, int max_tries) {
    if (p.is_zero()) throw InputError("the zero form has no symmetric rank");
    const int n = p.degree();
    if (n == 0) return 1;

    const int sbr = exact_border_rank(p);
    const auto basis = exact_kernel_basis(exact_catalecticant(p, sbr));
    if (basis.empty()) throw NumericalError("exact kernel empty at the border rank level");

    const auto vector_to_monomial = [sbr](const std::vector<ExactScalar>& u) {
        // Same convention as the floating path: u_j is the coefficient of
        // t0^(r-j) t1^j.
        std::vector<ExactScalar> m(static_cast<std::size_t>(sbr) + 1);
        for (int j = 0; j <= sbr; ++j) m[static_cast<std::size_t>(sbr - j)] = u[static_cast<std::size_t>(j)];
        return m;
    };

    for (const auto& u : basis)
        if (square_free_from_monomial(vector_to_monomial(u))) return sbr;

    if (basis.size() > 1) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> small(-3, 3);
        for (int t = 0; t < max_tries; ++t) {
            std::vector<ExactScalar> u(basis.front().size());
            bool nonzero = false;
            for (const auto& b : basis) {
                const ExactScalar c(Rational(small(rng)), Rational(small(rng)));
                if (c.is_zero()) continue;
                nonzero = true;
                for (std::size_t i = 0; i < u.size(); ++i) u[i] = u[i] + c * b[i];
            }
            if (!nonzero || std::all_of(u.begin(), u.end(), [](const ExactScalar& e) { return e.is_zero(); }))
                continue;
            if (square_free_from_monomial(vector_to_monomial(u))) return sbr;
        }
    }
    return n - sbr + 2;
}

} // namespace waring::oracle
