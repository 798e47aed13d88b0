#include "cplxinfo/twosample.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "cplxinfo/comparison.hpp"
#include "cplxinfo/parallel.hpp"

namespace cplxinfo {

namespace {

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    if (n % 2 == 1) return v[n / 2];
    return 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double std_normal_kernel(double t) {
    return std::exp(-0.5 * t * t) / std::sqrt(2.0 * std::numbers::pi);
}

// Builds grid densities for index subsets of the pooled sample from one
// precomputed kernel table, so a permutation refit is a row sum instead of a
// fresh O(n * grid) kernel pass.
class PooledKdeTable {
public:
    PooledKdeTable(const std::vector<double>& pooled, double bandwidth, const KdeConfig& cfg)
        : pooled_(pooled), h_(bandwidth) {
        const auto [mn, mx] = std::minmax_element(pooled.begin(), pooled.end());
        const double lo = *mn - cfg.grid_padding * h_;
        const double hi = *mx + cfg.grid_padding * h_;
        if (!(lo < hi)) throw ValidationError("pooled sample has zero spread");
        const std::size_t g = static_cast<std::size_t>(cfg.grid_points);
        points_.resize(g);
        const double step = (hi - lo) / static_cast<double>(g - 1);
        for (std::size_t i = 0; i < g; ++i) points_[i] = lo + step * static_cast<double>(i);
        rows_.resize(pooled.size());
        for (std::size_t i = 0; i < pooled.size(); ++i) {
            rows_[i].resize(g);
            for (std::size_t j = 0; j < g; ++j)
                rows_[i][j] = std_normal_kernel((points_[j] - pooled[i]) / h_);
        }
    }

    Density density_for(std::span<const std::size_t> indices) const {
        Grid grid;
        grid.points = points_;
        grid.values.assign(points_.size(), 0.0);
        for (std::size_t idx : indices)
            for (std::size_t j = 0; j < points_.size(); ++j) grid.values[j] += rows_[idx][j];
        const double scale = 1.0 / (static_cast<double>(indices.size()) * h_);
        for (double& v : grid.values) v *= scale;
        double mass = 0.0;
        for (std::size_t j = 0; j + 1 < points_.size(); ++j)
            mass += 0.5 * (grid.values[j] + grid.values[j + 1]) * (points_[j + 1] - points_[j]);
        for (double& v : grid.values) v /= mass;
        return Density(std::move(grid));
    }

    // Exact KDE values at the pooled sample points (no grid interpolation).
    std::vector<double> pooled_point_densities() const {
        const double scale = 1.0 / (static_cast<double>(pooled_.size()) * h_);
        std::vector<double> out(pooled_.size(), 0.0);
        for (std::size_t j = 0; j < pooled_.size(); ++j) {
            double acc = 0.0;
            for (double z : pooled_) acc += std_normal_kernel((pooled_[j] - z) / h_);
            out[j] = acc * scale;
        }
        return out;
    }

private:
    const std::vector<double>& pooled_;
    double h_;
    std::vector<double> points_;
    std::vector<std::vector<double>> rows_;
};

DiscretePmf empirical_pmf(const std::vector<double>& pooled,
                          std::span<const std::size_t> indices) {
    std::vector<double> vals;
    vals.reserve(indices.size());
    for (std::size_t idx : indices) vals.push_back(pooled[idx]);
    std::sort(vals.begin(), vals.end());
    std::vector<DiscretePmf::Atom> atoms;
    const double unit = 1.0 / static_cast<double>(vals.size());
    for (std::size_t i = 0; i < vals.size();) {
        std::size_t j = i;
        while (j < vals.size() && vals[j] == vals[i]) ++j;
        atoms.push_back({vals[i], static_cast<double>(j - i) * unit});
        i = j;
    }
    return DiscretePmf::validate(std::move(atoms));
}

} // namespace

double beta_heuristic(std::span<const double> pooled_density_values) {
    if (pooled_density_values.empty())
        throw ValidationError("beta heuristic needs at least one density value");
    const double med = median({pooled_density_values.begin(), pooled_density_values.end()});
    if (!(med > 0.0)) throw ValidationError("median density is not positive");
    return 1.0 / med;
}

PermTestResult perm_test(const SampleSet& x, const SampleSet& y, const PermTestConfig& cfg) {
    const auto t_start = std::chrono::steady_clock::now();

    const std::size_t m = x.values.size();
    const std::size_t n = y.values.size();
    const std::size_t min_size = cfg.discrete_mode ? 1 : 5;
    if (m < min_size || n < min_size)
        throw ValidationError("each sample needs at least " + std::to_string(min_size) +
                              " observations");
    if (cfg.permutations < 100)
        throw ValidationError("p-values need at least 100 permutations");
    if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0)) throw ValidationError("alpha must be in (0, 1)");

    std::vector<double> pooled;
    pooled.reserve(m + n);
    pooled.insert(pooled.end(), x.values.begin(), x.values.end());
    pooled.insert(pooled.end(), y.values.begin(), y.values.end());
    const std::size_t total = pooled.size();

    PermTestResult res;
    res.m = m;
    res.n = n;
    res.seed = cfg.seed;

    std::vector<std::size_t> identity(total);
    std::iota(identity.begin(), identity.end(), 0);

    // statistic for one assignment of pooled indices. Built once, reused by
    // the observed split and every permutation.
    std::function<double(std::span<const std::size_t>, std::span<const std::size_t>)> statistic;
    std::optional<PooledKdeTable> table;

    if (cfg.discrete_mode) {
        res.bandwidth_used = std::numeric_limits<double>::quiet_NaN();
        std::vector<double> pooled_masses(total);
        for (std::size_t j = 0; j < total; ++j) {
            std::size_t count = 0;
            for (double z : pooled)
                if (z == pooled[j]) ++count;
            pooled_masses[j] = static_cast<double>(count) / static_cast<double>(total);
        }
        res.beta_used = cfg.beta ? *cfg.beta : beta_heuristic(pooled_masses);
        statistic = [&pooled, beta = res.beta_used](std::span<const std::size_t> xi,
                                                    std::span<const std::size_t> yi) {
            return cm(Distribution{empirical_pmf(pooled, xi)},
                      Distribution{empirical_pmf(pooled, yi)}, beta)
                .value;
        };
    } else {
        const double h = cfg.kde.bandwidth
                             ? *cfg.kde.bandwidth
                             : silverman_bandwidth(make_sample_set(pooled, "pooled"));
        if (!(h > 0.0)) throw ValidationError("bandwidth must be > 0");
        if (cfg.kde.grid_points < 64) throw ValidationError("grid must have at least 64 points");
        res.bandwidth_used = h;
        table.emplace(pooled, h, cfg.kde);
        res.beta_used = cfg.beta ? *cfg.beta : beta_heuristic(table->pooled_point_densities());
        statistic = [&tbl = *table, beta = res.beta_used](std::span<const std::size_t> xi,
                                                          std::span<const std::size_t> yi) {
            return cm(Distribution{tbl.density_for(xi)}, Distribution{tbl.density_for(yi)}, beta)
                .value;
        };
    }
    if (!(res.beta_used > 0.0)) throw ValidationError("beta must be > 0");

    res.t_obs = statistic({identity.data(), m}, {identity.data() + m, n});

    const std::size_t K = static_cast<std::size_t>(cfg.permutations);
    res.t_perm.assign(K, 0.0);
    parallel_for(K, [&](std::size_t k) {
        Rng rng(derive_seed(cfg.seed, k));
        std::vector<std::size_t> idx = identity;
        for (std::size_t i = total - 1; i > 0; --i)
            std::swap(idx[i], idx[rng.index(i + 1)]);
        res.t_perm[k] = statistic({idx.data(), m}, {idx.data() + m, n});
    });

    std::size_t count = 0;
    for (double t : res.t_perm)
        if (t >= res.t_obs) ++count;
    res.p_value = static_cast<double>(count) / static_cast<double>(K);
    res.p_value_adjusted = static_cast<double>(count + 1) / static_cast<double>(K + 1);
    res.reject = res.p_value < cfg.alpha;

    res.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    return res;
}

} // namespace cplxinfo
