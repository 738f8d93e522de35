#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "segarr/arrangement.hpp"

namespace segarr {

// splitmix64 finalizer; the basis of all seed derivation here. Trial i of a
// run with seed s uses trial seed mix64(s + mix64(i + 1)); a degenerate trial
// is resampled with mix64(trial_seed + attempt).
uint64_t mix64(uint64_t z);

struct BuffonConfig {
    int m = 1;
    Rational ell = rat(1, 10);
    long long trials = 1;
    uint64_t seed = 0;
    int mutual_t = 3;  // subset size for the mutual-intersection estimator
};

struct BuffonSummary {
    int m = 0;
    double ell = 0;
    long long trials = 0;
    uint64_t seed = 0;
    int mutual_t = 3;
    double mean_p = 0;
    double var_p = 0;
    double pr_p_zero = 0;
    double mean_complexity = 0;  // mean of n + e + c
    double mean_triangles = 0;   // mean count of mutually intersecting triples
    double mean_mutual_t = 0;
    long long resamples = 0;
};

// m segments of length ell: centers uniform in the unit square, angles
// uniform in [0, pi); endpoints may leave the square. Coordinates snapped to
// denominator 2^40 before exact analysis; trials whose snapped segments
// degenerate (zero length or collinear merge) are resampled with a derived
// sub-seed. Deterministic per (m, ell, trial_seed).
SegmentSet gen_buffon(int m, const Rational& ell, uint64_t trial_seed, int* resamples = nullptr);

BuffonSummary estimate(const BuffonConfig& config);

// Exact number of t-subsets of segments that pairwise intersect; 2 <= t <= 4.
long long count_mutually_intersecting(const SegmentSet& M, int t);

struct ScalingRow {
    int m = 0;
    double ell = 0;
    double mean_p = 0;
    double ratio_p = 0;           // mean_p / (m^2 ell^2)
    double ratio_complexity = 0;  // mean_complexity / (m^2 ell^2 + m)
};

std::vector<ScalingRow> scaling_report(const std::vector<std::pair<int, Rational>>& grid,
                                       long long trials, uint64_t seed);

}  // namespace segarr
