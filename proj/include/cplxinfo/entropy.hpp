#pragma once

#include <cstdint>
#include <optional>

#include "cplxinfo/distributions.hpp"
#include "cplxinfo/quadrature.hpp"

namespace cplxinfo {

enum class CeMethod { ExactSum, Quadrature, MonteCarlo };

// Value reported for single-point (degenerate) PMFs. A point mass is a uniform
// distribution on one point, so the default keeps the maximum; callers that
// want degenerate distributions scored as fully deterministic flip it to Zero.
enum class DegenerateCe { One, Zero };

struct CeEstimate {
    double value = 0.0; // in [0, 1] up to method tolerance
    CeMethod method = CeMethod::ExactSum;
    double beta = 0.0;
    std::optional<std::size_t> n_samples;
    std::optional<double> est_stderr;
    std::optional<std::uint64_t> seed;
};

// |sum_x p(x) e^{i beta p(x)}| by direct complex summation in atom order.
CeEstimate ce_discrete(const DiscretePmf& p, double beta,
                       DegenerateCe degenerate = DegenerateCe::One);

// |integral p(x) e^{i beta p(x)} dx| by oscillation-guarded adaptive Simpson.
CeEstimate ce_quadrature(const Density& d, double beta, const QuadratureOptions& opts = {});

// The complex amplitude before the modulus (shared by the quadrature path).
ComplexAmplitude ce_amplitude(const Density& d, double beta, const QuadratureOptions& opts = {});

// |mean of e^{i beta p(X_k)}| over n seeded draws; est_stderr is the larger
// per-axis standard error of the complex sample mean.
CeEstimate ce_monte_carlo(const Distribution& d, double beta, std::size_t n, std::uint64_t seed);
CeEstimate ce_monte_carlo(const Density& d, double beta, std::size_t n, std::uint64_t seed);
CeEstimate ce_monte_carlo(const DiscretePmf& p, double beta, std::size_t n, std::uint64_t seed);

} // namespace cplxinfo
