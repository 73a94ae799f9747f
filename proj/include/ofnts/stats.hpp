#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "ofnts/averages.hpp"
#include "ofnts/series.hpp"
#include "ofnts/trapezoid.hpp"

namespace ofnts {

/// Area of the trapezoid: mean of support width and core width.
inline double total_area(const TrapezoidalOFN& ofn) {
    detail::require_proper(ofn, "total_area");
    return (ofn.support().width() + ofn.core().width()) / 2.0;
}

/// Orientation-signed integral of (down - up) over alpha in [0, 1], taken from
/// the branch lines. For a proper number this is the same area as total_area.
inline double signed_branch_area(const TrapezoidalOFN& ofn) {
    const BranchLine up = ofn.up_line();
    const BranchLine down = ofn.down_line();
    const double integral = (down.intercept + down.slope / 2.0) - (up.intercept + up.slope / 2.0);
    return ofn.orientation() == Orientation::Long ? integral : -integral;
}

/// Area outside the core: half the sum of the two spreads.
inline double total_imprecision(const TrapezoidalOFN& ofn) {
    detail::require_proper(ofn, "total_imprecision");
    return (ofn.upper_spread() + ofn.lower_spread()) / 2.0;
}

/// Upper spread over lower spread. Two empty spreads are perfectly symmetric
/// (1); an empty lower spread under a nonempty upper one has no finite skew.
inline std::optional<double> skew(const TrapezoidalOFN& ofn) {
    const double upper = ofn.upper_spread();
    const double lower = ofn.lower_spread();
    if (lower == 0.0) {
        if (upper == 0.0) return 1.0;
        return std::nullopt;
    }
    return upper / lower;
}

/// Share of the total area that sits in the core. A single point counts as 1.
inline double direction_strength(const TrapezoidalOFN& ofn) {
    const double area = total_area(ofn);
    if (area == 0.0) return 1.0;
    return std::abs(ofn.core().width()) / area;
}

struct ShapeStats {
    std::optional<double> skew;  // nullopt: undefined (zero lower spread)
    double imprecision = 0.0;
    double direction_strength = 0.0;
    double area = 0.0;
};

/// Every column of the case-study tables for one window.
struct OfnSummary {
    std::string label;
    double a0_minus = 0.0;
    double a0_plus = 0.0;
    double s1 = 0.0;
    double s2 = 0.0;
    double sigma = 0.0;             // sample (n-1)
    double sigma_population = 0.0;  // n divisor, kept for comparison
    double first_value = 0.0;
    double last_value = 0.0;
    std::optional<ShapeStats> stats;  // nullopt for improper shapes
};

inline std::optional<ShapeStats> shape_stats(const TrapezoidalOFN& ofn) {
    if (!ofn.proper()) return std::nullopt;
    return ShapeStats{skew(ofn), total_imprecision(ofn), direction_strength(ofn), total_area(ofn)};
}

inline OfnSummary summarize(const SeriesWindow& w, const TrapezoidalOFN& ofn, std::string label = {}) {
    OfnSummary s;
    s.label = std::move(label);
    s.a0_minus = ofn.a0_minus();
    s.a0_plus = ofn.a0_plus();
    s.s1 = ofn.s1();
    s.s2 = ofn.s2();
    s.sigma = std_dev(w.values());
    s.sigma_population = population_std_dev(w.values());
    s.first_value = w.first();
    s.last_value = w.last();
    s.stats = shape_stats(ofn);
    return s;
}

}  // namespace ofnts
