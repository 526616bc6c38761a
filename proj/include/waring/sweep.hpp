#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "waring/states.hpp"
#include "waring/sylvester.hpp"

namespace waring {

struct SweepConfig {
    int n = 13;                 // particle number
    int q_max = 9;              // all reduced fractions p/q with q <= q_max
    int irrational_samples = 0; // pseudo-random mu values in (0, 2*pi)
    std::uint64_t seed = 20240101;
    SylvesterOptions sylvester;
};

struct SweepRow {
    bool rational = false;
    long long p = 0;
    long long q = 0;
    double mu = 0.0;
    int n = 0;
    int sbr = 0;
    int sr = 0;
};

/// Row inputs in their deterministic output order: rationals sorted by
/// (q, p), then irrational samples sorted by mu.
std::vector<SweepRow> sweep_grid(const SweepConfig& config);

/// Ranks of the spin squeezed state for every grid row. The parallel kernel
/// distributes rows over OpenMP threads (capped by WARING_LAB_THREADS); the
/// serial path is the reference implementation and produces identical rows.
std::vector<SweepRow> sweep_rows_serial(const SweepConfig& config);
std::vector<SweepRow> sweep_rows_parallel(const SweepConfig& config);

/// Thread count the parallel kernel will use: OpenMP's max, capped by the
/// WARING_LAB_THREADS environment variable when set.
int sweep_thread_count();

/// CSV with header mu_numerator,mu_denominator,mu_real,N,sbr,sr. Rational
/// rows carry the two integer columns and leave mu_real empty; irrational
/// rows do the opposite.
std::string sweep_to_csv(const std::vector<SweepRow>& rows);

} // namespace waring
