#include "cplxinfo/kde.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace cplxinfo {

namespace {

double std_normal_kernel(double t) {
    return std::exp(-0.5 * t * t) / std::sqrt(2.0 * std::numbers::pi);
}

// Type-7 (linear interpolation) quantile of a sorted vector.
double quantile_sorted(const std::vector<double>& sorted, double q) {
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    if (lo + 1 >= sorted.size()) return sorted.back();
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

} // namespace

double silverman_bandwidth(const SampleSet& s) {
    const std::size_t n = s.values.size();
    if (n < 2) throw ValidationError("bandwidth selection needs at least 2 samples");

    double mean = 0.0;
    for (double v : s.values) mean += v;
    mean /= static_cast<double>(n);
    double ss = 0.0;
    for (double v : s.values) ss += (v - mean) * (v - mean);
    const double sd = std::sqrt(ss / static_cast<double>(n - 1));

    std::vector<double> sorted = s.values;
    std::sort(sorted.begin(), sorted.end());
    const double iqr = quantile_sorted(sorted, 0.75) - quantile_sorted(sorted, 0.25);

    double spread;
    if (sd > 0.0 && iqr > 0.0)
        spread = std::min(sd, iqr / 1.34);
    else if (sd > 0.0)
        spread = sd;
    else if (iqr > 0.0)
        spread = iqr / 1.34;
    else
        throw ValidationError("all samples identical: zero spread");

    return 0.9 * spread * std::pow(static_cast<double>(n), -0.2);
}

Density fit_kde_on_grid(std::span<const double> values, double bandwidth, double lo, double hi,
                        int grid_points) {
    if (values.size() < 2) throw ValidationError("KDE needs at least 2 samples");
    if (!(bandwidth > 0.0)) throw ValidationError("bandwidth must be > 0");
    if (grid_points < 64) throw ValidationError("grid must have at least 64 points");
    if (!(lo < hi)) throw ValidationError("KDE grid range is empty");

    Grid grid;
    grid.points.resize(static_cast<std::size_t>(grid_points));
    grid.values.assign(static_cast<std::size_t>(grid_points), 0.0);
    const double step = (hi - lo) / static_cast<double>(grid_points - 1);
    for (int g = 0; g < grid_points; ++g)
        grid.points[static_cast<std::size_t>(g)] = lo + step * static_cast<double>(g);

    const double scale = 1.0 / (static_cast<double>(values.size()) * bandwidth);
    for (double x : values)
        for (int g = 0; g < grid_points; ++g) {
            const std::size_t gi = static_cast<std::size_t>(g);
            grid.values[gi] += scale * std_normal_kernel((grid.points[gi] - x) / bandwidth);
        }

    // grid truncation loses tail mass; push it back so downstream statistics
    // see a unit measure
    double mass = 0.0;
    for (int g = 0; g + 1 < grid_points; ++g) {
        const std::size_t gi = static_cast<std::size_t>(g);
        mass += 0.5 * (grid.values[gi] + grid.values[gi + 1]) * step;
    }
    if (!(mass > 0.0)) throw ValidationError("KDE mass vanished on the grid");
    for (double& v : grid.values) v /= mass;

    return Density(std::move(grid));
}

Density fit_kde(const SampleSet& s, const KdeConfig& cfg) {
    if (s.values.size() < 2) throw ValidationError("KDE needs at least 2 samples");
    if (cfg.bandwidth && !(*cfg.bandwidth > 0.0))
        throw ValidationError("bandwidth must be > 0");
    if (cfg.grid_points < 64) throw ValidationError("grid must have at least 64 points");

    const double h = cfg.bandwidth ? *cfg.bandwidth : silverman_bandwidth(s);
    const auto [mn, mx] = std::minmax_element(s.values.begin(), s.values.end());
    const double lo = *mn - cfg.grid_padding * h;
    const double hi = *mx + cfg.grid_padding * h;
    return fit_kde_on_grid(s.values, h, lo, hi, cfg.grid_points);
}

} // namespace cplxinfo
