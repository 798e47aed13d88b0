#include "cplxinfo/comparison.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

namespace cplxinfo {

namespace {

constexpr double kAmplitudeUnderflow = 1e-300;

void require_same_kind(const Distribution& p, const Distribution& q) {
    if (p.index() != q.index())
        throw ValidationError("cannot compare a PMF with a continuous density");
}

// t e^{i beta t}; the phase-modulated density value.
ComplexAmplitude phase_mod(double t, double beta) { return t * std::polar(1.0, beta * t); }

// Sorted union of two breakpoint lists, optionally clipped to [lo, hi].
std::vector<double> merge_breakpoints(const std::vector<double>& a, const std::vector<double>& b,
                                      double lo, double hi) {
    std::vector<double> out;
    out.reserve(a.size() + b.size());
    for (double v : a)
        if (v >= lo && v <= hi) out.push_back(v);
    for (double v : b)
        if (v >= lo && v <= hi) out.push_back(v);
    out.push_back(lo);
    out.push_back(hi);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Walk the union of two sorted atom lists; fn(point, p_mass, q_mass).
template <typename Fn>
void for_each_union_atom(const DiscretePmf& p, const DiscretePmf& q, Fn&& fn) {
    const auto& pa = p.atoms();
    const auto& qa = q.atoms();
    std::size_t i = 0, j = 0;
    while (i < pa.size() || j < qa.size()) {
        if (j == qa.size() || (i < pa.size() && pa[i].point < qa[j].point)) {
            fn(pa[i].point, pa[i].mass, 0.0);
            ++i;
        } else if (i == pa.size() || qa[j].point < pa[i].point) {
            fn(qa[j].point, 0.0, qa[j].mass);
            ++j;
        } else {
            fn(pa[i].point, pa[i].mass, qa[j].mass);
            ++i;
            ++j;
        }
    }
}

} // namespace

DivergenceResult divergence_from_amplitude(double amplitude_modulus, double beta) {
    DivergenceResult res;
    res.amplitude_modulus = amplitude_modulus;
    res.beta = beta;
    if (amplitude_modulus <= kAmplitudeUnderflow) {
        res.value = std::numeric_limits<double>::infinity();
        res.infinite = true;
    } else {
        res.value = std::max(0.0, -std::log(amplitude_modulus));
    }
    return res;
}

DivergenceResult cd(const Distribution& p, const Distribution& q, double beta,
                    const QuadratureOptions& opts) {
    require_same_kind(p, q);
    if (!(beta > 0.0)) throw ValidationError("beta must be > 0");

    double modulus;
    if (std::holds_alternative<DiscretePmf>(p)) {
        const auto& pp = std::get<DiscretePmf>(p);
        const auto& qq = std::get<DiscretePmf>(q);
        ComplexAmplitude sum{0.0, 0.0};
        for (const auto& atom : pp.atoms())
            sum += atom.mass * std::polar(1.0, beta * (atom.mass - qq.mass_at(atom.point)));
        modulus = std::abs(sum);
    } else {
        const Density& pd = std::get<Density>(p);
        const Density& qd = std::get<Density>(q);
        const std::vector<double> psegs = pd.segments();
        // integrand vanishes off supp(p); q only needs to be evaluable there
        const std::vector<double> breaks =
            merge_breakpoints(psegs, qd.segments(), psegs.front(), psegs.back());
        const auto integrand = [&](double x) {
            const double pv = pd.pdf(x);
            const double diff = pv - qd.pdf(x);
            return OscSample{pv * std::polar(1.0, beta * diff), beta * diff, beta * pv};
        };
        modulus = std::abs(integrate_oscillatory(integrand, breaks, opts));
    }
    return divergence_from_amplitude(modulus, beta);
}

MetricResult cm(const Distribution& p, const Distribution& q, double beta,
                const QuadratureOptions& opts) {
    require_same_kind(p, q);
    if (beta < 0.0) throw ValidationError("beta must be >= 0");

    double value;
    if (std::holds_alternative<DiscretePmf>(p)) {
        const auto& pp = std::get<DiscretePmf>(p);
        const auto& qq = std::get<DiscretePmf>(q);
        double sum = 0.0;
        for_each_union_atom(pp, qq, [&](double, double pm, double qm) {
            sum += std::abs(phase_mod(pm, beta) - phase_mod(qm, beta));
        });
        value = 0.5 * sum;
    } else {
        const Density& pd = std::get<Density>(p);
        const Density& qd = std::get<Density>(q);
        const std::vector<double> ps = pd.segments();
        const std::vector<double> qs = qd.segments();
        const std::vector<double> breaks = merge_breakpoints(
            ps, qs, std::min(ps.front(), qs.front()), std::max(ps.back(), qs.back()));
        const auto integrand = [&](double x) {
            const double pv = pd.pdf(x);
            const double qv = qd.pdf(x);
            const double diff = std::abs(phase_mod(pv, beta) - phase_mod(qv, beta));
            return OscSample{{diff, 0.0}, beta * pv, beta * qv};
        };
        value = 0.5 * integrate_oscillatory(integrand, breaks, opts).real();
    }
    return MetricResult{value, beta};
}

double tv(const Distribution& p, const Distribution& q, const QuadratureOptions& opts) {
    return cm(p, q, 0.0, opts).value;
}

} // namespace cplxinfo
