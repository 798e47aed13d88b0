#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cplxinfo/distributions.hpp"

using namespace cplxinfo;
using doctest::Approx;

TEST_CASE("validate_pmf canonicalizes and rejects bad input") {
    SUBCASE("Bernoulli(0.5)") {
        const auto pmf = validate_pmf({{0.0, 0.5}, {1.0, 0.5}});
        REQUIRE(pmf.atoms().size() == 2);
        CHECK(pmf.atoms()[0].point == 0.0);
        CHECK(pmf.atoms()[0].mass == Approx(0.5));
    }
    SUBCASE("atoms are reordered") {
        const auto pmf = validate_pmf({{1.0, 0.2}, {0.0, 0.8}});
        CHECK(pmf.atoms()[0].point == 0.0);
        CHECK(pmf.atoms()[0].mass == Approx(0.8));
        CHECK(pmf.atoms()[1].point == 1.0);
        CHECK(pmf.atoms()[1].mass == Approx(0.2));
    }
    SUBCASE("mass sum 1.1 rejected") {
        CHECK_THROWS_AS(validate_pmf({{0.0, 0.3}, {1.0, 0.8}}), ValidationError);
    }
    SUBCASE("negative mass rejected") {
        CHECK_THROWS_AS(validate_pmf({{0.0, -0.1}, {1.0, 1.1}}), ValidationError);
    }
    SUBCASE("duplicate points rejected") {
        CHECK_THROWS_AS(validate_pmf({{0.0, 0.5}, {0.0, 0.5}}), ValidationError);
    }
    SUBCASE("tiny mass drift renormalized") {
        const auto pmf = validate_pmf({{0.0, 0.5}, {1.0, 0.5 + 5e-10}});
        double total = 0.0;
        for (const auto& a : pmf.atoms()) total += a.mass;
        CHECK(std::abs(total - 1.0) <= 1e-12);
    }
}

TEST_CASE("pdf_eval matches closed forms") {
    CHECK(pdf_eval(Density(Uniform{0, 1}), 0.5) == Approx(1.0));
    CHECK(pdf_eval(Density(Normal{0, 1}), 0.0) == Approx(0.3989422804014327).epsilon(1e-12));
    CHECK(pdf_eval(Density(PiecewiseConst{{0, 0.5, 1}, {0.5, 1.5}}), 0.75) == Approx(1.5));
    CHECK(pdf_eval(Density(Laplace{0, 1}), 0.0) == Approx(0.5));

    SUBCASE("out of support is 0, not an error") {
        CHECK(pdf_eval(Density(Uniform{0, 1}), 2.0) == 0.0);
        CHECK(pdf_eval(Density(PiecewiseConst{{0, 0.5, 1}, {0.5, 1.5}}), -1.0) == 0.0);
    }
    SUBCASE("grid interpolates linearly and is 0 outside") {
        const Density g(Grid{{0, 1, 2}, {0.0, 1.0, 0.0}});
        CHECK(pdf_eval(g, 0.5) == Approx(0.5));
        CHECK(pdf_eval(g, 1.5) == Approx(0.5));
        CHECK(pdf_eval(g, 2.5) == 0.0);
    }
}

TEST_CASE("density construction validates invariants") {
    CHECK_THROWS_AS(Density(Uniform{1, 0}), ValidationError);
    CHECK_THROWS_AS(Density(Normal{0, 0}), ValidationError);
    CHECK_THROWS_AS(Density(Laplace{0, -1}), ValidationError);
    // mass 0.5, not 1
    CHECK_THROWS_AS(Density(PiecewiseConst{{0, 1}, {0.5}}), ValidationError);
    CHECK_THROWS_AS(Density(PiecewiseConst{{0, 0, 1}, {1, 1}}), ValidationError);
    CHECK_THROWS_AS(Density(Grid{{0, 1}, {-1, 3}}), ValidationError);
    CHECK_THROWS_AS(Density(Grid{{0, 1, 2}, {1, 1}}), ValidationError);

    SUBCASE("mixture weight checks") {
        Mixture m;
        m.weights = {0.5, 0.6};
        m.components.push_back(Density(Uniform{0, 1}));
        m.components.push_back(Density(Uniform{2, 3}));
        CHECK_THROWS_AS(Density(std::move(m)), ValidationError);
    }
    SUBCASE("disjoint flag is enforced") {
        Mixture m;
        m.weights = {0.5, 0.5};
        m.components.push_back(Density(Uniform{0, 2}));
        m.components.push_back(Density(Uniform{1, 3}));
        m.disjoint = true;
        CHECK_THROWS_AS(Density(std::move(m)), ValidationError);
    }
}

TEST_CASE("density mass integrates to 1") {
    // midpoint rule over the integration segments (never samples a jump point)
    const auto trapz_mass = [](const Density& d) {
        const auto segs = d.segments();
        double mass = 0.0;
        for (std::size_t s = 0; s + 1 < segs.size(); ++s) {
            const int n = 20000;
            const double h = (segs[s + 1] - segs[s]) / n;
            for (int i = 0; i < n; ++i) mass += d.pdf(segs[s] + h * (i + 0.5)) * h;
        }
        return mass;
    };
    CHECK(trapz_mass(Density(Uniform{-3, 7})) == Approx(1.0).epsilon(1e-8));
    CHECK(trapz_mass(Density(Normal{2, 0.5})) == Approx(1.0).epsilon(1e-7));
    CHECK(trapz_mass(Density(Laplace{-1, 2})) == Approx(1.0).epsilon(1e-7));
    CHECK(trapz_mass(Density(PiecewiseConst{{0, 0.5, 1}, {0.5, 1.5}})) == Approx(1.0).epsilon(1e-9));
}

TEST_CASE("mixture pdf equals the weighted component density") {
    Mixture m;
    m.weights = {0.3, 0.7};
    m.components.push_back(Density(Uniform{0, 1}));
    m.components.push_back(Density(PiecewiseConst{{2, 2.5, 3}, {0.8, 1.2}}));
    m.disjoint = true;
    const Density mix{std::move(m)};

    Rng rng(31);
    for (int i = 0; i < 200; ++i) {
        const double x = rng.uniform(-1, 4);
        const double expected = 0.3 * Density(Uniform{0, 1}).pdf(x) +
                                0.7 * Density(PiecewiseConst{{2, 2.5, 3}, {0.8, 1.2}}).pdf(x);
        CHECK(mix.pdf(x) == Approx(expected).epsilon(1e-14));
    }
}

TEST_CASE("cdf sanity") {
    const Density n(Normal{0, 1});
    CHECK(n.cdf(0.0) == Approx(0.5).epsilon(1e-12));
    CHECK(n.cdf(1.0) - n.cdf(-1.0) == Approx(0.682689492137086).epsilon(1e-10));

    const Density u(Uniform{0, 2});
    CHECK(u.cdf(0.5) == Approx(0.25));
    CHECK(u.cdf(-1) == 0.0);
    CHECK(u.cdf(5) == 1.0);

    const Density g(Grid{{0, 1, 2}, {0.0, 1.0, 0.0}});
    CHECK(g.cdf(1.0) == Approx(0.5));
    CHECK(g.cdf(2.0) == Approx(1.0));

    const Density l(Laplace{1, 2});
    CHECK(l.cdf(1.0) == Approx(0.5));
}

TEST_CASE("draw_samples is deterministic and respects the distribution") {
    SUBCASE("uniform support and determinism") {
        const auto s1 = draw_samples(Density(Uniform{0, 1}), 3, 7);
        const auto s2 = draw_samples(Density(Uniform{0, 1}), 3, 7);
        REQUIRE(s1.values.size() == 3);
        CHECK(s1.values == s2.values);
        for (double v : s1.values) {
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
        }
    }
    SUBCASE("degenerate PMF") {
        const auto pmf = validate_pmf({{0.0, 1.0}});
        const auto s = draw_samples(pmf, 5, 123);
        for (double v : s.values) CHECK(v == 0.0);
    }
    SUBCASE("standard normal sample mean") {
        const auto s = draw_samples(Density(Normal{0, 1}), 100000, 2024);
        double mean = 0.0;
        for (double v : s.values) mean += v;
        mean /= static_cast<double>(s.values.size());
        CHECK(std::abs(mean) < 0.02);
    }
    SUBCASE("laplace and grid draws stay finite and in range") {
        for (double v : draw_samples(Density(Laplace{0, 1}), 2000, 5).values)
            CHECK(std::isfinite(v));
        const Density g(Grid{{0, 1, 2}, {0.0, 1.0, 0.0}});
        for (double v : draw_samples(g, 2000, 6).values) {
            CHECK(v >= 0.0);
            CHECK(v <= 2.0);
        }
    }
    SUBCASE("mixture draws land in component supports") {
        Mixture m;
        m.weights = {0.5, 0.5};
        m.components.push_back(Density(Uniform{0, 1}));
        m.components.push_back(Density(Uniform{5, 6}));
        m.disjoint = true;
        int low = 0;
        const auto s = draw_samples(Density(std::move(m)), 4000, 99);
        for (double v : s.values) {
            const bool in_first = v >= 0.0 && v <= 1.0;
            const bool in_second = v >= 5.0 && v <= 6.0;
            CHECK((in_first || in_second));
            low += in_first ? 1 : 0;
        }
        CHECK(low > 1600); // ~2000 expected
        CHECK(low < 2400);
    }
    SUBCASE("n = 0 rejected") { CHECK_THROWS_AS(draw_samples(Density(Uniform{0, 1}), 0, 1), ValidationError); }
}

TEST_CASE("phased event measures") {
    const double pi = std::numbers::pi;
    SUBCASE("uniform base, theta = pi/2") {
        const PhasedMeasure q{Distribution{Density(Uniform{0, 1})}, pi / 2};
        const auto amp = phased_event_measure(q, Interval{0.0, 0.5});
        CHECK(amp.real() == Approx(0.0).scale(1));
        CHECK(amp.imag() == Approx(0.5).epsilon(1e-12));
    }
    SUBCASE("zero phase is the plain probability") {
        const PhasedMeasure q{Distribution{Density(Normal{0, 1})}, 0.0};
        const auto amp = phased_event_measure(q, Interval{-1.0, 1.0});
        CHECK(amp.imag() == 0.0);
        CHECK(amp.real() == Approx(0.682689492137086).epsilon(1e-10));
    }
    SUBCASE("Bernoulli(0.3) with theta = pi at {1}") {
        const PhasedMeasure q{Distribution{validate_pmf({{0.0, 0.7}, {1.0, 0.3}})}, pi};
        const auto amp = phased_event_measure(q, std::vector<double>{1.0});
        CHECK(amp.real() == Approx(-0.3).epsilon(1e-12));
        CHECK(std::abs(amp.imag()) < 1e-12);
    }
    SUBCASE("modulus equals the base probability for random events") {
        Rng rng(17);
        for (int i = 0; i < 100; ++i) {
            const double a = rng.uniform(-2, 2);
            const double b = a + rng.uniform(0, 3);
            const double theta = rng.uniform(-10, 10);
            const PhasedMeasure q{Distribution{Density(Normal{0.5, 1.5})}, theta};
            const Interval ev{a, b};
            const double p = event_probability(q.base, ev);
            CHECK(std::abs(phased_event_measure(q, ev)) == Approx(p).epsilon(1e-13).scale(1));
        }
    }
    SUBCASE("malformed interval") {
        const PhasedMeasure q{Distribution{Density(Uniform{0, 1})}, 0.0};
        CHECK_THROWS_AS(phased_event_measure(q, Interval{1.0, 0.0}), ValidationError);
    }
    SUBCASE("point sets are null sets for densities") {
        const PhasedMeasure q{Distribution{Density(Uniform{0, 1})}, 1.0};
        CHECK(std::abs(phased_event_measure(q, std::vector<double>{0.5})) == 0.0);
    }
}

TEST_CASE("sample set validation") {
    CHECK_THROWS_AS(make_sample_set({}, "empty"), ValidationError);
    CHECK_THROWS_AS(make_sample_set({1.0, std::nan("")}, "nan"), ValidationError);
    CHECK_THROWS_AS(make_sample_set({1.0, std::numeric_limits<double>::infinity()}, "inf"),
                    ValidationError);
    const auto s = make_sample_set({1.0, 2.0}, "ok");
    CHECK(s.label == "ok");
}
