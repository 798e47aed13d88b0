#include "cplxinfo/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

namespace cplxinfo {

namespace {

constexpr double kMassTol = 1e-8;        // density mass must integrate to 1 within this
constexpr double kPmfRenormTol = 1e-9;   // PMF mass sums further off than this are user errors
constexpr double kNormalTailSigmas = 8.5; // two-sided tail mass ~1.9e-17
constexpr double kLaplaceTailScale = 28.0; // two-sided tail mass ~6.9e-13
constexpr double kInf = std::numeric_limits<double>::infinity();

double normal_pdf(double x, double mu, double sigma) {
    const double z = (x - mu) / sigma;
    return std::exp(-0.5 * z * z) / (sigma * std::sqrt(2.0 * std::numbers::pi));
}

double normal_cdf(double x, double mu, double sigma) {
    return 0.5 * std::erfc(-(x - mu) / (sigma * std::numbers::sqrt2));
}

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw ValidationError(std::string(what) + " must be finite");
}

double piecewise_mass(const PiecewiseConst& p) {
    double mass = 0.0;
    for (std::size_t j = 0; j + 1 < p.breaks.size(); ++j)
        mass += p.levels[j] * (p.breaks[j + 1] - p.breaks[j]);
    return mass;
}

double grid_trapezoid_mass(const Grid& g) {
    double mass = 0.0;
    for (std::size_t i = 0; i + 1 < g.points.size(); ++i)
        mass += 0.5 * (g.values[i] + g.values[i + 1]) * (g.points[i + 1] - g.points[i]);
    return mass;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

} // namespace

// SampleSet ---------------------------------------------------------------

SampleSet make_sample_set(std::vector<double> values, std::string label) {
    if (values.empty()) throw ValidationError("sample set '" + label + "' is empty");
    for (double v : values)
        if (!std::isfinite(v))
            throw ValidationError("sample set '" + label + "' contains a non-finite value");
    return SampleSet{std::move(values), std::move(label)};
}

// DiscretePmf -------------------------------------------------------------

DiscretePmf DiscretePmf::validate(std::vector<Atom> atoms) {
    if (atoms.empty()) throw ValidationError("PMF needs at least one atom");
    for (const Atom& a : atoms) {
        require_finite(a.point, "atom point");
        require_finite(a.mass, "atom mass");
        if (a.mass < 0.0) throw ValidationError("negative mass " + fmt(a.mass));
    }
    std::sort(atoms.begin(), atoms.end(),
              [](const Atom& l, const Atom& r) { return l.point < r.point; });
    for (std::size_t i = 0; i + 1 < atoms.size(); ++i)
        if (atoms[i].point == atoms[i + 1].point)
            throw ValidationError("duplicate atom point " + fmt(atoms[i].point));

    double total = 0.0;
    for (const Atom& a : atoms) total += a.mass;
    if (std::abs(total - 1.0) > kPmfRenormTol)
        throw ValidationError("masses sum to " + fmt(total) + ", expected 1");
    for (Atom& a : atoms) a.mass /= total;
    return DiscretePmf(std::move(atoms));
}

double DiscretePmf::mass_at(double point) const {
    auto it = std::lower_bound(atoms_.begin(), atoms_.end(), point,
                               [](const Atom& a, double p) { return a.point < p; });
    if (it != atoms_.end() && it->point == point) return it->mass;
    return 0.0;
}

bool DiscretePmf::degenerate() const {
    std::size_t positive = 0;
    for (const Atom& a : atoms_)
        if (a.mass > 0.0) ++positive;
    return positive == 1;
}

double DiscretePmf::sample(Rng& rng) const {
    const double u = rng.uniform01();
    double cum = 0.0;
    for (const Atom& a : atoms_) {
        cum += a.mass;
        if (u < cum) return a.point;
    }
    return atoms_.back().point;
}

DiscretePmf validate_pmf(const std::vector<std::pair<double, double>>& atoms) {
    std::vector<DiscretePmf::Atom> as;
    as.reserve(atoms.size());
    for (const auto& [point, mass] : atoms) as.push_back({point, mass});
    return DiscretePmf::validate(std::move(as));
}

// Density: validation -----------------------------------------------------

namespace {

struct Validator {
    void operator()(const Uniform& u) const {
        require_finite(u.a, "uniform a");
        require_finite(u.b, "uniform b");
        if (!(u.a < u.b)) throw ValidationError("uniform requires a < b");
    }
    void operator()(const Normal& n) const {
        require_finite(n.mu, "normal mu");
        require_finite(n.sigma, "normal sigma");
        if (!(n.sigma > 0.0)) throw ValidationError("normal requires sigma > 0");
    }
    void operator()(const Laplace& l) const {
        require_finite(l.mu, "laplace mu");
        require_finite(l.b, "laplace b");
        if (!(l.b > 0.0)) throw ValidationError("laplace requires b > 0");
    }
    void operator()(const PiecewiseConst& p) const {
        if (p.breaks.size() < 2) throw ValidationError("piecewise needs at least 2 breakpoints");
        if (p.levels.size() + 1 != p.breaks.size())
            throw ValidationError("piecewise needs one level per segment");
        for (double b : p.breaks) require_finite(b, "piecewise breakpoint");
        for (std::size_t i = 0; i + 1 < p.breaks.size(); ++i)
            if (!(p.breaks[i] < p.breaks[i + 1]))
                throw ValidationError("piecewise breakpoints must be strictly increasing");
        for (double l : p.levels) {
            require_finite(l, "piecewise level");
            if (l < 0.0) throw ValidationError("piecewise levels must be nonnegative");
        }
        const double mass = piecewise_mass(p);
        if (std::abs(mass - 1.0) > kMassTol)
            throw ValidationError("piecewise mass is " + fmt(mass) + ", expected 1");
    }
    void operator()(const Mixture& m) const {
        if (m.components.empty()) throw ValidationError("mixture needs components");
        if (m.weights.size() != m.components.size())
            throw ValidationError("mixture needs one weight per component");
        double total = 0.0;
        for (double w : m.weights) {
            require_finite(w, "mixture weight");
            if (w < 0.0) throw ValidationError("mixture weights must be nonnegative");
            total += w;
        }
        if (std::abs(total - 1.0) > kMassTol)
            throw ValidationError("mixture weights sum to " + fmt(total) + ", expected 1");
        if (m.disjoint) {
            std::vector<std::pair<double, double>> spans;
            spans.reserve(m.components.size());
            for (const Density& c : m.components) spans.push_back(c.support());
            std::sort(spans.begin(), spans.end());
            for (std::size_t i = 0; i + 1 < spans.size(); ++i)
                if (spans[i + 1].first < spans[i].second - 1e-12)
                    throw ValidationError("mixture flagged disjoint but component supports overlap");
        }
    }
    void operator()(const Grid& g) const {
        if (g.points.size() < 2) throw ValidationError("grid needs at least 2 points");
        if (g.values.size() != g.points.size())
            throw ValidationError("grid needs one value per point");
        for (double p : g.points) require_finite(p, "grid point");
        for (std::size_t i = 0; i + 1 < g.points.size(); ++i)
            if (!(g.points[i] < g.points[i + 1]))
                throw ValidationError("grid points must be strictly increasing");
        for (double v : g.values) {
            require_finite(v, "grid value");
            if (v < 0.0) throw ValidationError("grid values must be nonnegative");
        }
        const double mass = grid_trapezoid_mass(g);
        if (std::abs(mass - 1.0) > kMassTol)
            throw ValidationError("grid trapezoid mass is " + fmt(mass) + ", expected 1");
    }
};

} // namespace

Density::Density(Variant v) : v_(std::move(v)) { std::visit(Validator{}, v_); }

// Density: pdf ------------------------------------------------------------

namespace {

struct PdfVisitor {
    double x;
    double operator()(const Uniform& u) const {
        return (x >= u.a && x <= u.b) ? 1.0 / (u.b - u.a) : 0.0;
    }
    double operator()(const Normal& n) const { return normal_pdf(x, n.mu, n.sigma); }
    double operator()(const Laplace& l) const {
        return std::exp(-std::abs(x - l.mu) / l.b) / (2.0 * l.b);
    }
    double operator()(const PiecewiseConst& p) const {
        if (x < p.breaks.front() || x > p.breaks.back()) return 0.0;
        if (x == p.breaks.back()) return p.levels.back();
        const auto it = std::upper_bound(p.breaks.begin(), p.breaks.end(), x);
        return p.levels[static_cast<std::size_t>(it - p.breaks.begin()) - 1];
    }
    double operator()(const Mixture& m) const {
        double v = 0.0;
        for (std::size_t i = 0; i < m.components.size(); ++i)
            v += m.weights[i] * m.components[i].pdf(x);
        return v;
    }
    double operator()(const Grid& g) const {
        if (x < g.points.front() || x > g.points.back()) return 0.0;
        const auto it = std::upper_bound(g.points.begin(), g.points.end(), x);
        if (it == g.points.end()) return g.values.back();
        const std::size_t hi = static_cast<std::size_t>(it - g.points.begin());
        const std::size_t lo = hi - 1;
        const double t = (x - g.points[lo]) / (g.points[hi] - g.points[lo]);
        return g.values[lo] + t * (g.values[hi] - g.values[lo]);
    }
};

} // namespace

double Density::pdf(double x) const { return std::visit(PdfVisitor{x}, v_); }

double pdf_eval(const Density& d, double x) { return d.pdf(x); }

// Density: cdf ------------------------------------------------------------

namespace {

struct CdfVisitor {
    double x;
    double operator()(const Uniform& u) const {
        if (x <= u.a) return 0.0;
        if (x >= u.b) return 1.0;
        return (x - u.a) / (u.b - u.a);
    }
    double operator()(const Normal& n) const { return normal_cdf(x, n.mu, n.sigma); }
    double operator()(const Laplace& l) const {
        if (x < l.mu) return 0.5 * std::exp((x - l.mu) / l.b);
        return 1.0 - 0.5 * std::exp(-(x - l.mu) / l.b);
    }
    double operator()(const PiecewiseConst& p) const {
        if (x <= p.breaks.front()) return 0.0;
        double cum = 0.0;
        for (std::size_t j = 0; j + 1 < p.breaks.size(); ++j) {
            if (x >= p.breaks[j + 1]) {
                cum += p.levels[j] * (p.breaks[j + 1] - p.breaks[j]);
            } else {
                cum += p.levels[j] * (x - p.breaks[j]);
                break;
            }
        }
        return std::min(cum, 1.0);
    }
    double operator()(const Mixture& m) const {
        double v = 0.0;
        for (std::size_t i = 0; i < m.components.size(); ++i)
            v += m.weights[i] * m.components[i].cdf(x);
        return v;
    }
    double operator()(const Grid& g) const {
        if (x <= g.points.front()) return 0.0;
        double cum = 0.0;
        for (std::size_t i = 0; i + 1 < g.points.size(); ++i) {
            const double w = g.points[i + 1] - g.points[i];
            if (x >= g.points[i + 1]) {
                cum += 0.5 * (g.values[i] + g.values[i + 1]) * w;
            } else {
                const double t = x - g.points[i];
                const double slope = (g.values[i + 1] - g.values[i]) / w;
                cum += g.values[i] * t + 0.5 * slope * t * t;
                break;
            }
        }
        return std::min(cum, 1.0);
    }
};

} // namespace

double Density::cdf(double x) const { return std::visit(CdfVisitor{x}, v_); }

// Density: support and integration segments -------------------------------

namespace {

struct SupportVisitor {
    std::pair<double, double> operator()(const Uniform& u) const { return {u.a, u.b}; }
    std::pair<double, double> operator()(const Normal&) const { return {-kInf, kInf}; }
    std::pair<double, double> operator()(const Laplace&) const { return {-kInf, kInf}; }
    std::pair<double, double> operator()(const PiecewiseConst& p) const {
        return {p.breaks.front(), p.breaks.back()};
    }
    std::pair<double, double> operator()(const Mixture& m) const {
        double lo = kInf, hi = -kInf;
        for (const Density& c : m.components) {
            const auto s = c.support();
            lo = std::min(lo, s.first);
            hi = std::max(hi, s.second);
        }
        return {lo, hi};
    }
    std::pair<double, double> operator()(const Grid& g) const {
        return {g.points.front(), g.points.back()};
    }
};

struct SegmentsVisitor {
    std::vector<double> operator()(const Uniform& u) const { return {u.a, u.b}; }
    std::vector<double> operator()(const Normal& n) const {
        const double w = kNormalTailSigmas * n.sigma;
        return {n.mu - w, n.mu, n.mu + w};
    }
    std::vector<double> operator()(const Laplace& l) const {
        const double w = kLaplaceTailScale * l.b;
        return {l.mu - w, l.mu, l.mu + w};
    }
    std::vector<double> operator()(const PiecewiseConst& p) const { return p.breaks; }
    std::vector<double> operator()(const Mixture& m) const {
        std::vector<double> pts;
        for (const Density& c : m.components) {
            const auto s = c.segments();
            pts.insert(pts.end(), s.begin(), s.end());
        }
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        return pts;
    }
    std::vector<double> operator()(const Grid& g) const { return g.points; }
};

} // namespace

std::pair<double, double> Density::support() const { return std::visit(SupportVisitor{}, v_); }

std::vector<double> Density::segments() const { return std::visit(SegmentsVisitor{}, v_); }

// Density: sampling --------------------------------------------------------

namespace {

struct SampleVisitor {
    Rng& rng;
    double operator()(const Uniform& u) const { return rng.uniform(u.a, u.b); }
    double operator()(const Normal& n) const { return rng.normal(n.mu, n.sigma); }
    double operator()(const Laplace& l) const {
        const double u = rng.uniform01_strict();
        if (u <= 0.5) return l.mu + l.b * std::log(2.0 * u);
        return l.mu - l.b * std::log(2.0 * (1.0 - u));
    }
    double operator()(const PiecewiseConst& p) const {
        const double u = rng.uniform01_strict();
        double cum = 0.0;
        for (std::size_t j = 0; j + 1 < p.breaks.size(); ++j) {
            const double seg = p.levels[j] * (p.breaks[j + 1] - p.breaks[j]);
            if (u < cum + seg || j + 2 == p.breaks.size()) {
                if (p.levels[j] <= 0.0) continue;
                const double x = p.breaks[j] + (u - cum) / p.levels[j];
                return std::clamp(x, p.breaks[j], p.breaks[j + 1]);
            }
            cum += seg;
        }
        return p.breaks.back();
    }
    double operator()(const Mixture& m) const {
        const double u = rng.uniform01();
        double cum = 0.0;
        for (std::size_t i = 0; i < m.components.size(); ++i) {
            cum += m.weights[i];
            if (u < cum) return m.components[i].sample(rng);
        }
        return m.components.back().sample(rng);
    }
    double operator()(const Grid& g) const {
        const double u = rng.uniform01_strict();
        double cum = 0.0;
        for (std::size_t i = 0; i + 1 < g.points.size(); ++i) {
            const double w = g.points[i + 1] - g.points[i];
            const double cell = 0.5 * (g.values[i] + g.values[i + 1]) * w;
            if (u < cum + cell || i + 2 == g.points.size()) {
                // density is linear inside the cell; invert the quadratic CDF
                const double m = u - cum;
                const double v0 = g.values[i];
                const double a = 0.5 * (g.values[i + 1] - v0) / w;
                double t;
                if (std::abs(a) < 1e-300) {
                    t = v0 > 0.0 ? m / v0 : w;
                } else {
                    const double disc = v0 * v0 + 4.0 * a * m;
                    t = (-v0 + std::sqrt(std::max(disc, 0.0))) / (2.0 * a);
                }
                return std::clamp(g.points[i] + t, g.points[i], g.points[i + 1]);
            }
            cum += cell;
        }
        return g.points.back();
    }
};

} // namespace

double Density::sample(Rng& rng) const { return std::visit(SampleVisitor{rng}, v_); }

SampleSet draw_samples(const Distribution& d, std::size_t n, std::uint64_t seed) {
    if (n < 1) throw ValidationError("sample count must be at least 1");
    Rng rng(seed);
    std::vector<double> values;
    values.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (std::holds_alternative<Density>(d))
            values.push_back(std::get<Density>(d).sample(rng));
        else
            values.push_back(std::get<DiscretePmf>(d).sample(rng));
    }
    return make_sample_set(std::move(values), describe(d) + " seed=" + std::to_string(seed));
}

SampleSet draw_samples(const Density& d, std::size_t n, std::uint64_t seed) {
    return draw_samples(Distribution{d}, n, seed);
}

SampleSet draw_samples(const DiscretePmf& p, std::size_t n, std::uint64_t seed) {
    return draw_samples(Distribution{p}, n, seed);
}

// Phased measures -----------------------------------------------------------

double event_probability(const Distribution& d, const Interval& event) {
    if (event.lo > event.hi)
        throw ValidationError("malformed interval: lo > hi");
    if (std::holds_alternative<Density>(d)) {
        const Density& dens = std::get<Density>(d);
        return std::max(0.0, dens.cdf(event.hi) - dens.cdf(event.lo));
    }
    const DiscretePmf& pmf = std::get<DiscretePmf>(d);
    double p = 0.0;
    for (const auto& a : pmf.atoms())
        if (a.point >= event.lo && a.point <= event.hi) p += a.mass;
    return p;
}

double event_probability(const Distribution& d, const std::vector<double>& points) {
    if (std::holds_alternative<Density>(d)) return 0.0; // point sets are null sets
    const DiscretePmf& pmf = std::get<DiscretePmf>(d);
    double p = 0.0;
    for (double pt : points) p += pmf.mass_at(pt);
    return p;
}

ComplexAmplitude phased_event_measure(const PhasedMeasure& q, const Interval& event) {
    return std::polar(event_probability(q.base, event), q.theta);
}

ComplexAmplitude phased_event_measure(const PhasedMeasure& q, const std::vector<double>& points) {
    return std::polar(event_probability(q.base, points), q.theta);
}

// Descriptions ---------------------------------------------------------------

namespace {

struct DescribeVisitor {
    std::string operator()(const Uniform& u) const {
        return "uniform(a=" + fmt(u.a) + ", b=" + fmt(u.b) + ")";
    }
    std::string operator()(const Normal& n) const {
        return "normal(mu=" + fmt(n.mu) + ", sigma=" + fmt(n.sigma) + ")";
    }
    std::string operator()(const Laplace& l) const {
        return "laplace(mu=" + fmt(l.mu) + ", b=" + fmt(l.b) + ")";
    }
    std::string operator()(const PiecewiseConst& p) const {
        return "piecewise(" + std::to_string(p.levels.size()) + " segments on [" +
               fmt(p.breaks.front()) + ", " + fmt(p.breaks.back()) + "])";
    }
    std::string operator()(const Mixture& m) const {
        return "mixture(" + std::to_string(m.components.size()) + " components)";
    }
    std::string operator()(const Grid& g) const {
        return "grid(" + std::to_string(g.points.size()) + " points on [" +
               fmt(g.points.front()) + ", " + fmt(g.points.back()) + "])";
    }
};

} // namespace

std::string describe(const Density& d) { return std::visit(DescribeVisitor{}, d.raw()); }

std::string describe(const DiscretePmf& p) {
    return "pmf(" + std::to_string(p.atoms().size()) + " atoms)";
}

std::string describe(const Distribution& d) {
    if (std::holds_alternative<Density>(d)) return describe(std::get<Density>(d));
    return describe(std::get<DiscretePmf>(d));
}

} // namespace cplxinfo
