#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <string_view>

#include "ofnts/averages.hpp"
#include "ofnts/error.hpp"
#include "ofnts/series.hpp"

namespace ofnts {

enum class Orientation { Long, Short };

constexpr std::string_view to_string(Orientation o) noexcept { return o == Orientation::Long ? "long" : "short"; }

enum class Branch { Up, Down };

struct Interval {
    double lower = 0.0;
    double upper = 0.0;

    double width() const noexcept { return upper - lower; }
    bool contains(double x) const noexcept { return lower <= x && x <= upper; }
    bool contains(const Interval& other) const noexcept { return lower <= other.lower && other.upper <= upper; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Affine branch alpha -> intercept + slope * alpha.
struct BranchLine {
    double intercept = 0.0;  // value at alpha = 0
    double slope = 0.0;      // change per unit alpha

    double at(double alpha) const noexcept { return intercept + slope * alpha; }
    double end() const noexcept { return intercept + slope; }
};

/// Trapezoidal ordered fuzzy number.
///
/// Stores the four endpoints a0- <= a1- <= a1+ <= a0+ (when proper) plus the
/// orientation. The up branch of a Long number climbs the left side from a0-
/// to a1-, and the down branch descends the right side from a1+ to a0+. A
/// Short number has the same shape with the two branches swapped.
class TrapezoidalOFN {
public:
    TrapezoidalOFN(double a0_minus, double a1_minus, double a1_plus, double a0_plus, Orientation orientation)
        : a0_minus_(a0_minus),
          a1_minus_(a1_minus),
          a1_plus_(a1_plus),
          a0_plus_(a0_plus),
          orientation_(orientation),
          proper_(a0_minus <= a1_minus && a1_minus <= a1_plus && a1_plus <= a0_plus) {}

    double a0_minus() const noexcept { return a0_minus_; }
    double a1_minus() const noexcept { return a1_minus_; }
    double a1_plus() const noexcept { return a1_plus_; }
    double a0_plus() const noexcept { return a0_plus_; }
    double s1() const noexcept { return a1_minus_; }
    double s2() const noexcept { return a1_plus_; }
    Orientation orientation() const noexcept { return orientation_; }
    bool proper() const noexcept { return proper_; }

    Interval core() const noexcept { return {a1_minus_, a1_plus_}; }
    Interval support() const noexcept { return {a0_minus_, a0_plus_}; }
    double lower_spread() const noexcept { return a1_minus_ - a0_minus_; }
    double upper_spread() const noexcept { return a0_plus_ - a1_plus_; }

    BranchLine left_line() const noexcept { return {a0_minus_, a1_minus_ - a0_minus_}; }
    BranchLine right_line() const noexcept { return {a0_plus_, a1_plus_ - a0_plus_}; }

    BranchLine line(Branch which) const noexcept {
        const bool left = (which == Branch::Up) == (orientation_ == Orientation::Long);
        return left ? left_line() : right_line();
    }
    BranchLine up_line() const noexcept { return line(Branch::Up); }
    BranchLine down_line() const noexcept { return line(Branch::Down); }

    friend bool operator==(const TrapezoidalOFN&, const TrapezoidalOFN&) = default;

private:
    double a0_minus_;
    double a1_minus_;
    double a1_plus_;
    double a0_plus_;
    Orientation orientation_;
    bool proper_;
};

namespace detail {

inline void require_alpha(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw Error(ErrorCode::AlphaOutOfRange, "alpha must lie in [0, 1], got " + std::to_string(alpha));
    }
}

inline void require_proper(const TrapezoidalOFN& ofn, const char* what) {
    if (!ofn.proper()) throw Error(ErrorCode::ImproperShape, std::string(what) + " requires a0- <= a1- <= a1+ <= a0+");
}

}  // namespace detail

/// Long iff the window does not fall (first <= last); ties count as Long.
inline Orientation orientation_of(const SeriesWindow& w) {
    if (w.size() == 0) throw Error(ErrorCode::EmptyWindow, "orientation of an empty window");
    return w.first() <= w.last() ? Orientation::Long : Orientation::Short;
}

/// Builds the OFN of a window: the core spans the simple and weighted averages,
/// and each support endpoint is the mean of the observations strictly outside
/// the core on that side. An empty side collapses to its core endpoint.
inline TrapezoidalOFN build_ofn_new(const SeriesWindow& w, const WeightScheme& scheme) {
    if (w.size() < 2) throw Error(ErrorCode::EmptyWindow, "building an OFN needs at least 2 observations");
    const auto values = w.values();
    const double sa = simple_average(values);
    const double wa = weighted_average(values, scheme);
    const double s1 = std::min(sa, wa);
    const double s2 = std::max(sa, wa);

    double below_sum = 0.0, above_sum = 0.0;
    std::size_t below = 0, above = 0;
    for (double x : values) {
        if (x < s1) {
            below_sum += x;
            ++below;
        } else if (x > s2) {
            above_sum += x;
            ++above;
        }
    }
    // The sums are convex combinations of values strictly outside the core, so
    // the min/max only guard against rounding in the division.
    const double a0_minus = below ? std::min(below_sum / static_cast<double>(below), s1) : s1;
    const double a0_plus = above ? std::max(above_sum / static_cast<double>(above), s2) : s2;
    return TrapezoidalOFN(a0_minus, s1, s2, a0_plus, orientation_of(w));
}

/// Evaluates the up or down branch at level alpha, honoring orientation.
inline double branch_at(const TrapezoidalOFN& ofn, Branch which, double alpha) {
    detail::require_alpha(alpha);
    return ofn.line(which).at(alpha);
}

inline Interval alpha_cut(const TrapezoidalOFN& ofn, double alpha) {
    detail::require_alpha(alpha);
    detail::require_proper(ofn, "alpha_cut");
    // lerp is exact at both ends and monotone in alpha, so cut(0) is the
    // support, cut(1) the core, and the cuts nest.
    return {std::lerp(ofn.a0_minus(), ofn.a1_minus(), alpha), std::lerp(ofn.a0_plus(), ofn.a1_plus(), alpha)};
}

/// Trapezoidal membership: 1 on the core, 0 at and beyond the support ends,
/// linear in between. A zero-width spread is a step edge.
inline double membership(const TrapezoidalOFN& ofn, double x) {
    detail::require_proper(ofn, "membership");
    if (ofn.a1_minus() <= x && x <= ofn.a1_plus()) return 1.0;
    if (x <= ofn.a0_minus() || x >= ofn.a0_plus()) return 0.0;
    if (x < ofn.a1_minus()) return (x - ofn.a0_minus()) / ofn.lower_spread();
    return (ofn.a0_plus() - x) / ofn.upper_spread();
}

}  // namespace ofnts
