#include "cplxinfo/entropy.hpp"

#include <cmath>
#include <complex>

namespace cplxinfo {

namespace {

void require_beta_positive(double beta) {
    if (!(beta > 0.0)) throw ValidationError("beta must be > 0");
}

double eval_density_or_mass(const Distribution& d, double x) {
    if (std::holds_alternative<Density>(d)) return std::get<Density>(d).pdf(x);
    return std::get<DiscretePmf>(d).mass_at(x);
}

} // namespace

CeEstimate ce_discrete(const DiscretePmf& p, double beta, DegenerateCe degenerate) {
    require_beta_positive(beta);
    CeEstimate est;
    est.method = CeMethod::ExactSum;
    est.beta = beta;
    if (p.degenerate()) {
        est.value = degenerate == DegenerateCe::One ? 1.0 : 0.0;
        return est;
    }
    ComplexAmplitude sum{0.0, 0.0};
    for (const auto& atom : p.atoms()) sum += atom.mass * std::polar(1.0, beta * atom.mass);
    est.value = std::abs(sum);
    return est;
}

ComplexAmplitude ce_amplitude(const Density& d, double beta, const QuadratureOptions& opts) {
    require_beta_positive(beta);
    const auto integrand = [&](double x) {
        const double p = d.pdf(x);
        return OscSample{p * std::polar(1.0, beta * p), beta * p, 0.0};
    };
    const std::vector<double> breaks = d.segments();
    return integrate_oscillatory(integrand, breaks, opts);
}

CeEstimate ce_quadrature(const Density& d, double beta, const QuadratureOptions& opts) {
    CeEstimate est;
    est.method = CeMethod::Quadrature;
    est.beta = beta;
    est.value = std::abs(ce_amplitude(d, beta, opts));
    return est;
}

namespace {

// Compensated accumulator; keeps the mean of n equal summands exact to a few
// ulp instead of drifting by n * eps.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;
    void add(double v) {
        const double y = v - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

} // namespace

CeEstimate ce_monte_carlo(const Distribution& d, double beta, std::size_t n, std::uint64_t seed) {
    require_beta_positive(beta);
    if (n < 2) throw ValidationError("Monte-Carlo estimator needs n >= 2");

    const SampleSet draws = draw_samples(d, n, seed);
    std::vector<ComplexAmplitude> summands;
    summands.reserve(n);
    for (double x : draws.values)
        summands.push_back(std::polar(1.0, beta * eval_density_or_mass(d, x)));

    KahanSum sum_re, sum_im;
    for (const ComplexAmplitude& s : summands) {
        sum_re.add(s.real());
        sum_im.add(s.imag());
    }
    const ComplexAmplitude mean{sum_re.sum / static_cast<double>(n),
                                sum_im.sum / static_cast<double>(n)};

    double var_re = 0.0, var_im = 0.0;
    for (const ComplexAmplitude& s : summands) {
        const double dr = s.real() - mean.real();
        const double di = s.imag() - mean.imag();
        var_re += dr * dr;
        var_im += di * di;
    }
    const double denom = static_cast<double>(n - 1) * static_cast<double>(n);
    const double stderr_axis = std::sqrt(std::max(var_re, var_im) / denom);

    CeEstimate est;
    est.method = CeMethod::MonteCarlo;
    est.beta = beta;
    est.value = std::abs(mean);
    est.n_samples = n;
    est.est_stderr = stderr_axis;
    est.seed = seed;
    return est;
}

CeEstimate ce_monte_carlo(const Density& d, double beta, std::size_t n, std::uint64_t seed) {
    return ce_monte_carlo(Distribution{d}, beta, n, seed);
}

CeEstimate ce_monte_carlo(const DiscretePmf& p, double beta, std::size_t n, std::uint64_t seed) {
    return ce_monte_carlo(Distribution{p}, beta, n, seed);
}

} // namespace cplxinfo
