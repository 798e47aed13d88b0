#pragma once

#include <complex>
#include <functional>
#include <numbers>
#include <span>

#include "cplxinfo/errors.hpp"

namespace cplxinfo {

struct QuadratureOptions {
    // absolute error budget for the whole integral
    double abs_tol = 1e-8;
    // max phase change (radians) tolerated across an accepted panel interval
    double phase_guard = std::numbers::pi / 8.0;
    int max_depth = 48;
    std::size_t max_evals = 80'000'000;
};

// One integrand sample: the complex value plus up to two phase angles
// (radians) driving its oscillation. Panels are refined until every phase
// changes by less than `phase_guard` between adjacent sample points; without
// this a panel spanning whole oscillation periods looks flat to the Richardson
// error estimate and gets accepted at garbage accuracy. The integrand here
// oscillates in density space, not in x, so panel width must track how fast
// the density itself moves.
struct OscSample {
    std::complex<double> value;
    double phase0 = 0.0;
    double phase1 = 0.0;
};

using OscIntegrand = std::function<OscSample(double)>;

// Adaptive composite Simpson over [breakpoints.front(), breakpoints.back()],
// restarted at each interior breakpoint (integrand kinks/jumps live there).
// Throws QuadratureError when the refinement budget runs out.
std::complex<double> integrate_oscillatory(const OscIntegrand& f,
                                           std::span<const double> breakpoints,
                                           const QuadratureOptions& opts = {});

} // namespace cplxinfo
