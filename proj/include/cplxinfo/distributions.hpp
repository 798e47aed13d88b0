#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cplxinfo/errors.hpp"
#include "cplxinfo/rng.hpp"

namespace cplxinfo {

// A complex value prior to taking the modulus, e.g. the phase-weighted
// integral of a density or the phased measure of an event.
using ComplexAmplitude = std::complex<double>;

struct SampleSet {
    std::vector<double> values;
    std::string label;
};

// Validates: nonempty, finite values only.
SampleSet make_sample_set(std::vector<double> values, std::string label);

// Finite discrete distribution. Atoms are kept sorted by point with no
// duplicates; masses are nonnegative and sum to 1 within 1e-12.
class DiscretePmf {
public:
    struct Atom {
        double point;
        double mass;
    };

    // Canonicalizes (sorts by point) and validates. Mass sums off by at most
    // 1e-9 are renormalized; larger deviations are rejected as user errors.
    static DiscretePmf validate(std::vector<Atom> atoms);

    const std::vector<Atom>& atoms() const { return atoms_; }

    // 0 when `point` is not an atom (exact comparison).
    double mass_at(double point) const;

    // True when exactly one atom carries positive mass.
    bool degenerate() const;

    double sample(Rng& rng) const;

private:
    explicit DiscretePmf(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {}
    std::vector<Atom> atoms_;
};

class Density;

struct Uniform {
    double a;
    double b;
};

struct Normal {
    double mu;
    double sigma;
};

struct Laplace {
    double mu;
    double b;
};

struct PiecewiseConst {
    std::vector<double> breaks; // strictly increasing, size k+1
    std::vector<double> levels; // nonnegative, size k
};

struct Mixture {
    std::vector<double> weights; // nonnegative, sum 1 within 1e-8
    std::vector<Density> components;
    bool disjoint = false; // components promise pairwise-disjoint supports
};

struct Grid {
    std::vector<double> points; // strictly increasing
    std::vector<double> values; // nonnegative; trapezoid mass 1 within 1e-8
};

// Continuous distribution on the real line: an analytic family or a
// grid-tabulated density (linear interpolation between grid points).
class Density {
public:
    using Variant = std::variant<Uniform, Normal, Laplace, PiecewiseConst, Mixture, Grid>;

    explicit Density(Variant v);

    double pdf(double x) const;
    double cdf(double x) const;

    // Closed support; +-infinity for the unbounded families.
    std::pair<double, double> support() const;

    // Sorted finite breakpoints for numerical integration: unbounded supports
    // are truncated where the tail mass drops below 1e-12 (8.5 sigma for
    // normal, 28 b for Laplace), and every point where the density loses
    // smoothness appears in the list.
    std::vector<double> segments() const;

    double sample(Rng& rng) const;

    const Variant& raw() const { return v_; }

private:
    Variant v_;
};

using Distribution = std::variant<DiscretePmf, Density>;

struct Interval {
    double lo;
    double hi;
};

// A classical distribution rotated by a constant phase: dQ = e^{i theta} dP.
// The total variation of the phased object is the base measure itself.
struct PhasedMeasure {
    Distribution base;
    double theta = 0.0;
};

// Spec-facing operations ------------------------------------------------

DiscretePmf validate_pmf(const std::vector<std::pair<double, double>>& atoms);

double pdf_eval(const Density& d, double x);

SampleSet draw_samples(const Distribution& d, std::size_t n, std::uint64_t seed);
SampleSet draw_samples(const Density& d, std::size_t n, std::uint64_t seed);
SampleSet draw_samples(const DiscretePmf& p, std::size_t n, std::uint64_t seed);

// P(event) under the base measure; intervals are closed.
double event_probability(const Distribution& d, const Interval& event);
double event_probability(const Distribution& d, const std::vector<double>& points);

// e^{i theta} * P(event).
ComplexAmplitude phased_event_measure(const PhasedMeasure& q, const Interval& event);
ComplexAmplitude phased_event_measure(const PhasedMeasure& q, const std::vector<double>& points);

// Short human-readable tag, e.g. "normal(mu=0, sigma=1)".
std::string describe(const Distribution& d);
std::string describe(const Density& d);
std::string describe(const DiscretePmf& p);

} // namespace cplxinfo
