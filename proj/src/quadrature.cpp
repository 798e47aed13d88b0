#include "cplxinfo/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace cplxinfo {

namespace {

using Complex = std::complex<double>;

struct Worker {
    const OscIntegrand& f;
    const QuadratureOptions& opts;
    std::size_t evals = 0;

    OscSample eval(double x) {
        if (++evals > opts.max_evals)
            throw QuadratureError("quadrature evaluation budget exhausted");
        return f(x);
    }

    static Complex simpson(double h, const OscSample& fa, const OscSample& fm,
                           const OscSample& fb) {
        return (h / 6.0) * (fa.value + 4.0 * fm.value + fb.value);
    }

    bool calm(const OscSample& l, const OscSample& r) const {
        return std::abs(r.phase0 - l.phase0) < opts.phase_guard &&
               std::abs(r.phase1 - l.phase1) < opts.phase_guard;
    }

    Complex adapt(double a, const OscSample& fa, double m, const OscSample& fm, double b,
                  const OscSample& fb, Complex whole, double tol, int depth) {
        const double lm = 0.5 * (a + m);
        const double rm = 0.5 * (m + b);
        const OscSample flm = eval(lm);
        const OscSample frm = eval(rm);
        const Complex left = simpson(m - a, fa, flm, fm);
        const Complex right = simpson(b - m, fm, frm, fb);
        const Complex refined = left + right;
        const Complex delta = refined - whole;

        const bool guard_ok = calm(fa, flm) && calm(flm, fm) && calm(fm, frm) && calm(frm, fb);
        const double min_width = 1e-14 * std::max({1.0, std::abs(a), std::abs(b)});
        if ((guard_ok && std::abs(delta) <= 15.0 * tol) || (b - a) < min_width)
            return refined + delta / 15.0;
        if (depth <= 0)
            throw QuadratureError("quadrature failed to converge within max subdivisions");
        return adapt(a, fa, lm, flm, m, fm, left, 0.5 * tol, depth - 1) +
               adapt(m, fm, rm, frm, b, fb, right, 0.5 * tol, depth - 1);
    }

    Complex segment(double a, double b, double tol) {
        const double m = 0.5 * (a + b);
        const OscSample fa = eval(a);
        const OscSample fm = eval(m);
        const OscSample fb = eval(b);
        const Complex whole = simpson(b - a, fa, fm, fb);
        return adapt(a, fa, m, fm, b, fb, whole, tol, opts.max_depth);
    }
};

} // namespace

Complex integrate_oscillatory(const OscIntegrand& f, std::span<const double> breakpoints,
                              const QuadratureOptions& opts) {
    if (breakpoints.size() < 2)
        throw ValidationError("integration needs at least two breakpoints");

    double total_len = 0.0;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        if (breakpoints[i + 1] < breakpoints[i])
            throw ValidationError("integration breakpoints must be sorted");
        total_len += breakpoints[i + 1] - breakpoints[i];
    }
    if (total_len <= 0.0) return {0.0, 0.0};

    Worker w{f, opts};
    Complex total{0.0, 0.0};
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        const double a = breakpoints[i];
        const double b = breakpoints[i + 1];
        if (a == b) continue;
        total += w.segment(a, b, opts.abs_tol * ((b - a) / total_len));
    }
    return total;
}

} // namespace cplxinfo
