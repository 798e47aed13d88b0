#pragma once

#include "cplxinfo/distributions.hpp"
#include "cplxinfo/quadrature.hpp"

namespace cplxinfo {

struct DivergenceResult {
    double value = 0.0;             // -log(amplitude_modulus); +inf when underflowed
    double amplitude_modulus = 0.0; // |integral/sum of p e^{i beta (p - q)}|, in [0, 1]
    double beta = 0.0;
    bool infinite = false;
};

struct MetricResult {
    double value = 0.0; // in [0, 1]
    double beta = 0.0;
};

// Asymmetric divergence -log |integral_{supp p} p(x) e^{i beta (p(x)-q(x))} dx|
// (sum over the atoms of p in the discrete case, q read as 0 off its atoms).
// Note the degenerate direction: when p - q is constant on supp(p) the
// divergence is 0 even for p != q, e.g. uniform(0,1) against uniform(0,2).
DivergenceResult cd(const Distribution& p, const Distribution& q, double beta,
                    const QuadratureOptions& opts = {});

// Metric 1/2 integral |p e^{i beta p} - q e^{i beta q}| over the union of
// supports (union of atom sets for PMFs). beta = 0 gives total variation.
MetricResult cm(const Distribution& p, const Distribution& q, double beta,
                const QuadratureOptions& opts = {});

// Total variation distance; identical code path to cm at beta = 0.
double tv(const Distribution& p, const Distribution& q, const QuadratureOptions& opts = {});

// Assembles a DivergenceResult from the amplitude modulus, flagging +infinity
// when the modulus underflows past 1e-300 instead of emitting a garbage log.
DivergenceResult divergence_from_amplitude(double amplitude_modulus, double beta);

} // namespace cplxinfo
