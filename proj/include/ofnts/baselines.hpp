#pragma once

#include <algorithm>
#include <cmath>
#include <string_view>

#include "ofnts/averages.hpp"
#include "ofnts/decimal.hpp"
#include "ofnts/error.hpp"
#include "ofnts/series.hpp"
#include "ofnts/trapezoid.hpp"

namespace ofnts {

/// Guarded price masses at/above S2 (above) and at/below S1 (below).
struct MassStats {
    double above = 1.0;  // A
    double below = 1.0;  // B
};

inline MassStats mass_stats(const SeriesWindow& w, double s1, double s2) {
    MassStats m;
    for (double x : w.values()) {
        if (x >= s2) m.above += x;
        if (x <= s1) m.below += x;
    }
    return m;
}

/// An OFN given as two affine branches by their values at alpha = 0 and 1.
/// Unlike TrapezoidalOFN nothing forces the branches to nest.
struct OrderedPairTrapezoid {
    double up_start = 0.0;
    double up_end = 0.0;
    double down_start = 0.0;
    double down_end = 0.0;
    Orientation orientation = Orientation::Long;

    BranchLine up_line() const noexcept { return {up_start, up_end - up_start}; }
    BranchLine down_line() const noexcept { return {down_start, down_end - down_start}; }

    /// Reads the branches back as endpoints; Long puts the up branch on the left.
    TrapezoidalOFN to_trapezoid() const {
        if (orientation == Orientation::Long) return {up_start, up_end, down_end, down_start, orientation};
        return {down_start, down_end, up_end, up_start, orientation};
    }

    bool proper() const { return to_trapezoid().proper(); }

    /// Triangle areas of the two spreads (F-up and F-down).
    double up_spread_area() const noexcept { return std::abs(up_end - up_start) / 2.0; }
    double down_spread_area() const noexcept { return std::abs(down_start - down_end) / 2.0; }
};

/// Ordered fuzzy candlestick with linear branches.
///
/// The core [S1, S2] comes from the two averages. The up branch starts one
/// sample standard deviation beyond the extreme observation (min for Long,
/// max for Short); the down branch start is placed so that the two spreads are
/// in the ratio of the masses A and B.
inline OrderedPairTrapezoid build_ofn_mb(const SeriesWindow& w, const WeightScheme& s1_source,
                                         const WeightScheme& s2_source) {
    if (w.size() == 0) throw Error(ErrorCode::EmptyWindow, "candlestick of an empty window");
    const auto values = w.values();
    const double sigma = std_dev(values);
    const double first = weighted_average(values, s1_source);
    const double second = weighted_average(values, s2_source);
    const double s1 = std::min(first, second);
    const double s2 = std::max(first, second);
    const MassStats mass = mass_stats(w, s1, s2);
    const auto [lo, hi] = series_extrema(w);

    OrderedPairTrapezoid out;
    out.orientation = orientation_of(w);
    if (out.orientation == Orientation::Long) {
        out.up_start = lo - sigma;
        out.up_end = s1;
        out.down_start = (mass.above / mass.below) * (s1 - out.up_start) + s2;
        out.down_end = s2;
    } else {
        out.up_start = hi + sigma;
        out.up_end = s2;
        out.down_start = (mass.below / mass.above) * (s2 - out.up_start) + s1;
        out.down_end = s1;
    }
    return out;
}

namespace detail {

inline void require_bars(const SeriesWindow& w, const char* what) {
    if (!w.has_bars()) throw Error(ErrorCode::MissingOhlc, std::string(what) + " needs OHLC bars");
}

}  // namespace detail

/// Direct candlestick translation: support from the first/last series values,
/// core from the first open and last close. The core need not sit inside the
/// support, in which case the result is improper.
inline OrderedPairTrapezoid build_ofn_piasecki(const SeriesWindow& w) {
    detail::require_bars(w, "open/close core");
    if (w.size() < 2) throw Error(ErrorCode::EmptyWindow, "building an OFN needs at least 2 observations");
    const double x_first = w.first();
    const double x_last = w.last();
    const double x_open = w.bars().front().open.to_double();
    const double x_close = w.bars().back().close.to_double();

    const double support_lo = std::min(x_first, x_last);
    const double support_hi = std::max(x_first, x_last);
    const double core_lo = std::min(x_open, x_close);
    const double core_hi = std::max(x_open, x_close);

    OrderedPairTrapezoid out;
    out.orientation = x_first <= x_last ? Orientation::Long : Orientation::Short;
    if (out.orientation == Orientation::Long) {
        out.up_start = support_lo;
        out.up_end = core_lo;
        out.down_start = support_hi;
        out.down_end = core_hi;
    } else {
        out.up_start = support_hi;
        out.up_end = core_hi;
        out.down_start = support_lo;
        out.down_end = core_lo;
    }
    return out;
}

enum class CandleColor { Green, Red };

constexpr std::string_view to_string(CandleColor c) noexcept { return c == CandleColor::Green ? "green" : "red"; }

struct CandlestickSummary {
    Cents open;
    Cents close;
    Cents high;
    Cents low;
    CandleColor color = CandleColor::Green;
};

/// Classical candlestick over the window. A flat candle (close == open) is green.
inline CandlestickSummary japanese_candlestick(const SeriesWindow& w) {
    detail::require_bars(w, "candlestick");
    const auto bars = w.bars();
    CandlestickSummary c;
    c.open = bars.front().open;
    c.close = bars.back().close;
    c.high = bars.front().high;
    c.low = bars.front().low;
    for (const auto& b : bars) {
        c.high = std::max(c.high, b.high);
        c.low = std::min(c.low, b.low);
    }
    c.color = c.close >= c.open ? CandleColor::Green : CandleColor::Red;
    return c;
}

}  // namespace ofnts
