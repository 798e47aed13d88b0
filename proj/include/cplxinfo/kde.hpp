#pragma once

#include <optional>
#include <span>

#include "cplxinfo/distributions.hpp"

namespace cplxinfo {

struct KdeConfig {
    std::optional<double> bandwidth; // nullopt: Silverman's rule
    int grid_points = 512;           // >= 64
    double grid_padding = 4.0;       // multiples of bandwidth beyond the sample range
};

// Silverman's rule of thumb: 0.9 * min(sd, IQR/1.34) * n^{-1/5}, falling back
// to whichever of sd / IQR is positive when the other vanishes.
double silverman_bandwidth(const SampleSet& s);

// Gaussian-kernel estimate tabulated on a uniform grid spanning the sample
// range padded by grid_padding bandwidths, renormalized so the trapezoid mass
// is exactly 1.
Density fit_kde(const SampleSet& s, const KdeConfig& cfg = {});

// Same fit on an explicit [lo, hi] grid; the permutation machinery uses this
// to keep every refit on one shared axis.
Density fit_kde_on_grid(std::span<const double> values, double bandwidth, double lo, double hi,
                        int grid_points);

} // namespace cplxinfo
