#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cplxinfo/kde.hpp"

namespace cplxinfo {

struct PermTestConfig {
    std::optional<double> beta; // nullopt: reciprocal-median heuristic
    int permutations = 1000;    // >= 100
    std::uint64_t seed = 0;
    double alpha = 0.05; // in (0, 1)
    KdeConfig kde;
    bool discrete_mode = false; // empirical PMFs instead of KDE
};

struct PermTestResult {
    double t_obs = 0.0;
    std::vector<double> t_perm;
    double p_value = 0.0;          // count(t_perm >= t_obs) / K, ties counted
    double p_value_adjusted = 0.0; // (count + 1) / (K + 1)
    double beta_used = 0.0;
    bool reject = false; // p_value < alpha
    std::uint64_t seed = 0;
    double bandwidth_used = 0.0; // NaN in discrete mode
    std::size_t m = 0;
    std::size_t n = 0;
    double elapsed_seconds = 0.0; // wall time; never part of reproducible output
};

// beta = 1 / median(density values at the pooled sample points).
double beta_heuristic(std::span<const double> pooled_density_values);

// Permutation two-sample test with the beta-phase metric as the statistic.
// Densities (observed and every permuted refit) are evaluated on one shared
// grid spanning the pooled sample, with a single pooled bandwidth, so the
// statistic is exchangeable under H0. Permutation k draws its shuffle from
// derive_seed(cfg.seed, k); results are gathered in index order, making the
// output independent of worker count.
PermTestResult perm_test(const SampleSet& x, const SampleSet& y, const PermTestConfig& cfg);

} // namespace cplxinfo
