#include "waring/sweep.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <numbers>
#include <numeric>
#include <random>
#include <utility>

#include "waring/errors.hpp"

namespace waring {

namespace {

void compute_row(SweepRow& row, const SylvesterOptions& opt) {
    const SqueezingParameter mu = row.rational ? SqueezingParameter::rational(row.p, row.q)
                                               : SqueezingParameter::real(row.mu);
    const BinaryForm form = state_to_form(spin_squeezed_state(mu, row.n));
    const SymmetricRankResult ranks = symmetric_rank(form, opt);
    row.sbr = ranks.sbr;
    row.sr = ranks.sr;
}

} // namespace

std::vector<SweepRow> sweep_grid(const SweepConfig& config) {
    if (config.n < 2) throw InputError("sweep needs N >= 2");
    if (config.q_max < 1) throw InputError("sweep needs q_max >= 1");
    if (config.irrational_samples < 0) throw InputError("irrational sample count must be >= 0");

    std::vector<SweepRow> rows;
    for (long long q = 1; q <= config.q_max; ++q)
        for (long long p = 0; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            if (p == 0 && q != 1) continue; // 0/q reduces to 0/1
            SweepRow row;
            row.rational = true;
            row.p = p;
            row.q = q;
            row.mu = 2.0 * std::numbers::pi * static_cast<double>(p) / static_cast<double>(q);
            row.n = config.n;
            rows.push_back(row);
        }

    std::mt19937_64 rng(config.seed);
    std::uniform_real_distribution<double> uniform(0.0, 2.0 * std::numbers::pi);
    std::vector<double> samples(static_cast<std::size_t>(config.irrational_samples));
    for (double& mu : samples) mu = uniform(rng);
    std::sort(samples.begin(), samples.end());
    for (double mu : samples) {
        SweepRow row;
        row.rational = false;
        row.mu = mu;
        row.n = config.n;
        rows.push_back(row);
    }
    return rows;
}

int sweep_thread_count() {
#ifdef _OPENMP
    int threads = omp_get_max_threads();
    if (const char* cap = std::getenv("WARING_LAB_THREADS")) {
        char* end = nullptr;
        const long parsed = std::strtol(cap, &end, 10);
        if (end != cap && parsed >= 1) threads = std::min<long>(threads, parsed);
    }
    return threads;
#else
    return 1;
#endif
}

std::vector<SweepRow> sweep_rows_serial(const SweepConfig& config) {
    std::vector<SweepRow> rows = sweep_grid(config);
    for (SweepRow& row : rows) compute_row(row, config.sylvester);
    return rows;
}

std::vector<SweepRow> sweep_rows_parallel(const SweepConfig& config) {
    std::vector<SweepRow> rows = sweep_grid(config);
    const int threads = sweep_thread_count();
    std::exception_ptr failure = nullptr;

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(rows.size()); ++i) {
        try {
            compute_row(rows[static_cast<std::size_t>(i)], config.sylvester);
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
            if (failure == nullptr) failure = std::current_exception();
        }
    }
    if (failure != nullptr) std::rethrow_exception(failure);
    return rows;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
    std::string out = "mu_numerator,mu_denominator,mu_real,N,sbr,sr\n";
    char buf[128];
    for (const SweepRow& row : rows) {
        if (row.rational)
            std::snprintf(buf, sizeof(buf), "%lld,%lld,,%d,%d,%d\n", row.p, row.q, row.n, row.sbr, row.sr);
        else
            std::snprintf(buf, sizeof(buf), ",,%.17g,%d,%d,%d\n", row.mu, row.n, row.sbr, row.sr);
        out += buf;
    }
    return out;
}

} // namespace waring
