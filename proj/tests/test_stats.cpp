#include <catch_amalgamated.hpp>

#include <algorithm>

#include "ofnts/stats.hpp"
#include "support/case_study.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace ofnts;
using Catch::Approx;

TEST_CASE("statistics of the published endpoints", "[stats][case-study]") {
    for (const auto& row : case_study::rows()) {
        INFO(row.label << " " << row.window);
        const auto t = case_study::shape(row);
        REQUIRE(t.proper());
        REQUIRE(skew(t).has_value());
        CHECK(*skew(t) == Approx(row.skew).margin(0.03));
        CHECK(total_imprecision(t) == Approx(row.imprecision).margin(0.05));
        CHECK(direction_strength(t) == Approx(row.direction_strength).margin(0.01));
    }
}

TEST_CASE("frozen statistics of the Tesla rows", "[stats]") {
    const TrapezoidalOFN dec(347.36, 379.84, 398.78, 418.57, Orientation::Long);
    CHECK(*skew(dec) == Approx(19.79 / 32.48).epsilon(1e-12));
    CHECK(total_imprecision(dec) == Approx(26.135).epsilon(1e-12));
    CHECK(total_area(dec) == Approx(45.075).epsilon(1e-12));
    CHECK(direction_strength(dec) == Approx(18.94 / 45.075).epsilon(1e-12));

    const TrapezoidalOFN mar(432.99, 511.26, 563.71, 694.28, Orientation::Short);
    CHECK(*skew(mar) == Approx(130.57 / 78.27).epsilon(1e-12));
    CHECK(total_imprecision(mar) == Approx(104.42).epsilon(1e-12));
    CHECK(total_area(mar) == Approx(156.87).epsilon(1e-12));
}

TEST_CASE("area agrees with quadrature and the branch integral", "[stats]") {
    for (const auto& row : case_study::rows()) {
        const auto t = case_study::shape(row);
        const double sign = t.orientation() == Orientation::Long ? 1.0 : -1.0;
        const auto up = t.up_line();
        const auto down = t.down_line();
        const double quad = oracle::integrate01([&](double a) { return sign * (down.at(a) - up.at(a)); });
        CHECK(total_area(t) == Approx(quad).epsilon(1e-9));
        CHECK(signed_branch_area(t) == Approx(total_area(t)).epsilon(1e-12));
        CHECK(total_imprecision(t) + t.core().width() == Approx(total_area(t)).epsilon(1e-12));
    }
}

TEST_CASE("degenerate shapes", "[stats]") {
    const TrapezoidalOFN rect(2, 2, 5, 5, Orientation::Long);
    CHECK(total_area(rect) == 3.0);
    CHECK(total_imprecision(rect) == 0.0);
    CHECK(*skew(rect) == 1.0);
    CHECK(direction_strength(rect) == 1.0);

    const TrapezoidalOFN point(4, 4, 4, 4, Orientation::Short);
    CHECK(total_area(point) == 0.0);
    CHECK(direction_strength(point) == 1.0);
    CHECK(*skew(point) == 1.0);

    const TrapezoidalOFN triangle(1, 3, 3, 4, Orientation::Long);
    CHECK(direction_strength(triangle) == 0.0);
    CHECK(*skew(triangle) == 0.5);

    const TrapezoidalOFN no_lower(3, 3, 4, 6, Orientation::Long);
    CHECK_FALSE(skew(no_lower).has_value());
    CHECK(total_imprecision(no_lower) == 1.0);
}

TEST_CASE("improper shapes have no statistics", "[stats]") {
    const TrapezoidalOFN bad(11.20, 11.00, 12.50, 12.50, Orientation::Long);
    CHECK_FALSE(shape_stats(bad).has_value());
    CHECK_THROWS_AS(total_area(bad), Error);
    CHECK_THROWS_AS(total_imprecision(bad), Error);
    CHECK_THROWS_AS(direction_strength(bad), Error);
}

TEST_CASE("summarize fills every table column", "[stats]") {
    const auto w = fixtures::tsla_dec_2019();
    const auto t = build_ofn_new(w, WeightScheme::exponential());
    const auto s = summarize(w, t, "TSLA");
    CHECK(s.label == "TSLA");
    CHECK(s.a0_minus == t.a0_minus());
    CHECK(s.a0_plus == t.a0_plus());
    CHECK(s.s1 == Approx(379.84).margin(0.005));
    CHECK(s.sigma == Approx(36.68).margin(0.05));
    CHECK(s.sigma_population < s.sigma);
    CHECK(s.first_value == 336.20);
    CHECK(s.last_value == 418.33);
    REQUIRE(s.stats);
    CHECK(s.stats->area == Approx(total_area(t)));
    // Skew and D from the fixture; imprecision lands at 26.42 against the printed 26.13
    // because the fixture's exponential average differs (see tests/data/README.md).
    CHECK(*s.stats->skew == Approx(0.627).margin(0.005));
    CHECK(s.stats->imprecision == Approx(26.42).margin(0.01));
}

TEST_CASE("statistics under shift and positive scaling", "[stats][property]") {
    gen::Rng rng(31);
    for (int i = 0; i < 1000; ++i) {
        const auto t = gen::proper_ofn(rng);
        const double a = gen::uniform(rng, 0.1, 10.0);
        const double b = gen::uniform(rng, -500.0, 500.0);
        const TrapezoidalOFN u(a * t.a0_minus() + b, a * t.a1_minus() + b, a * t.a1_plus() + b, a * t.a0_plus() + b,
                               t.orientation());
        REQUIRE(u.proper());
        const double scale = std::abs(t.a0_minus()) + std::abs(t.a0_plus()) + 1.0;
        const double tol = 1e-9 * (a * scale + std::abs(b));
        CHECK(std::abs(total_imprecision(u) - a * total_imprecision(t)) <= tol);
        CHECK(std::abs(total_area(u) - a * total_area(t)) <= tol);
        if (total_area(t) > 1e-6 * scale) {
            CHECK(direction_strength(u) == Approx(direction_strength(t)).margin(1e-6));
        }
        if (t.lower_spread() > 1e-6 * scale && skew(t)) {
            REQUIRE(skew(u));
            CHECK(*skew(u) == Approx(*skew(t)).epsilon(1e-6));
        }
    }
}

TEST_CASE("zero imprecision exactly when nothing lies outside the core", "[stats][property]") {
    gen::Rng rng(77);
    for (int i = 0; i < 500; ++i) {
        auto x = gen::series(rng);
        if (i % 5 == 0) std::fill(x.begin(), x.end(), x.front());
        if (i % 5 == 1) x.resize(2, x.front());
        const auto t = build_ofn_new(SeriesWindow::from_values(x), WeightScheme::exponential());
        const bool outside = std::any_of(x.begin(), x.end(), [&](double v) { return v < t.s1() || v > t.s2(); });
        CHECK((total_imprecision(t) == 0.0) == !outside);
    }
}
