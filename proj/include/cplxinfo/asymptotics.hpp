#pragma once

#include "cplxinfo/errors.hpp"

namespace cplxinfo {

// Stationary-phase reference value for the entropy of Normal(0, sigma^2):
// (2 pi)^{1/4} sqrt(sigma / beta), valid as the peak phase lambda * beta grows.
struct AsymptoticCe {
    double value = 0.0;    // (2 pi)^{1/4} sqrt(sigma / beta)
    double lambda = 0.0;   // peak density 1 / (sqrt(2 pi) sigma)
    bool regime_ok = false; // lambda * beta >= 50: asymptotic regime reached
};

AsymptoticCe gaussian_ce_asymptotic(double sigma, double beta);

} // namespace cplxinfo
