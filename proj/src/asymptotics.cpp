#include "cplxinfo/asymptotics.hpp"

#include <cmath>
#include <numbers>

namespace cplxinfo {

AsymptoticCe gaussian_ce_asymptotic(double sigma, double beta) {
    if (!(sigma > 0.0)) throw ValidationError("sigma must be > 0");
    if (!(beta > 0.0)) throw ValidationError("beta must be > 0");
    const double two_pi = 2.0 * std::numbers::pi;
    AsymptoticCe out;
    out.value = std::pow(two_pi, 0.25) * std::sqrt(sigma / beta);
    out.lambda = 1.0 / (std::sqrt(two_pi) * sigma);
    out.regime_ok = out.lambda * beta >= 50.0;
    return out;
}

} // namespace cplxinfo
