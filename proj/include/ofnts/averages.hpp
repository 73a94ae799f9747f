#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ofnts/error.hpp"

namespace ofnts {

/// Weighting used for the weighted average of a window. All kinds have
/// nondecreasing weights w_1 <= ... <= w_n, so later observations never count
/// less than earlier ones.
struct WeightScheme {
    enum class Kind { Simple, Linear, Exponential };

    Kind kind = Kind::Exponential;
    std::optional<double> gamma;  // exponential only; unset means 2/(n+1)

    static WeightScheme simple() { return {Kind::Simple, std::nullopt}; }
    static WeightScheme linear() { return {Kind::Linear, std::nullopt}; }
    static WeightScheme exponential(std::optional<double> gamma = std::nullopt) { return {Kind::Exponential, gamma}; }

    double gamma_for(std::size_t n) const { return gamma.value_or(2.0 / (static_cast<double>(n) + 1.0)); }

    /// Unnormalized weights for a window of length n.
    std::vector<double> weights(std::size_t n) const {
        std::vector<double> w(n, 1.0);
        if (kind == Kind::Linear) {
            for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<double>(i + 1);
        } else if (kind == Kind::Exponential) {
            const double keep = 1.0 - gamma_for(n);
            for (std::size_t i = 0; i < n; ++i) w[i] = std::pow(keep, static_cast<double>(n - 1 - i));
        }
        return w;
    }
};

constexpr std::string_view to_string(WeightScheme::Kind kind) noexcept {
    switch (kind) {
    case WeightScheme::Kind::Simple: return "sa";
    case WeightScheme::Kind::Linear: return "lwa";
    case WeightScheme::Kind::Exponential: return "ea";
    }
    return "ea";
}

inline std::optional<WeightScheme> parse_scheme(std::string_view name) {
    if (name == "sa" || name == "simple") return WeightScheme::simple();
    if (name == "lwa" || name == "linear") return WeightScheme::linear();
    if (name == "ea" || name == "exponential") return WeightScheme::exponential();
    return std::nullopt;
}

namespace detail {

inline void require_nonempty(std::span<const double> values, const char* what) {
    if (values.empty()) throw Error(ErrorCode::EmptySeries, std::string(what) + " of an empty series");
}

// A convex combination must land inside the hull of the data; rounding in the
// sums can push it an ulp outside (e.g. a constant series), so pin it back.
inline double clamp_to_hull(double value, std::span<const double> values) {
    auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    return std::clamp(value, *lo, *hi);
}

}  // namespace detail

inline double simple_average(std::span<const double> values) {
    detail::require_nonempty(values, "simple average");
    double sum = 0.0;
    for (double v : values) sum += v;
    return detail::clamp_to_hull(sum / static_cast<double>(values.size()), values);
}

inline double linear_weighted_average(std::span<const double> values) {
    detail::require_nonempty(values, "linear weighted average");
    const double n = static_cast<double>(values.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) sum += static_cast<double>(i + 1) * values[i];
    return detail::clamp_to_hull(sum / (n * (n + 1.0) / 2.0), values);
}

/// Exponential average with smoothing factor gamma in (0, 1).
///
/// Uses the ratio form sum (1-g)^(n-i) X_i / sum (1-g)^(n-i); the equivalent
/// g/(1-(1-g)^n) normalization loses precision when g is small.
inline double exponential_average(std::span<const double> values, double gamma) {
    detail::require_nonempty(values, "exponential average");
    if (!(gamma > 0.0 && gamma < 1.0)) {
        throw Error(ErrorCode::BadGamma, "gamma must lie in (0, 1), got " + std::to_string(gamma));
    }
    const double keep = 1.0 - gamma;
    double numerator = 0.0;
    double denominator = 0.0;
    double weight = 1.0;
    // Walk from the newest observation backwards so each weight is one multiply.
    for (std::size_t k = values.size(); k-- > 0;) {
        numerator += weight * values[k];
        denominator += weight;
        weight *= keep;
    }
    return detail::clamp_to_hull(numerator / denominator, values);
}

inline double weighted_average(std::span<const double> values, const WeightScheme& scheme) {
    switch (scheme.kind) {
    case WeightScheme::Kind::Simple: return simple_average(values);
    case WeightScheme::Kind::Linear: return linear_weighted_average(values);
    case WeightScheme::Kind::Exponential:
        detail::require_nonempty(values, "exponential average");
        // Default gamma is 2/(n+1) = 1 for a single value; the average is that value.
        if (!scheme.gamma && values.size() == 1) return values.front();
        return exponential_average(values, scheme.gamma_for(values.size()));
    }
    return simple_average(values);
}

/// Sample standard deviation (n-1 divisor), two-pass.
inline double std_dev(std::span<const double> values) {
    if (values.size() < 2) throw Error(ErrorCode::TooFewPoints, "standard deviation needs at least 2 points");
    const double mean = simple_average(values);
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    return std::sqrt(ss / static_cast<double>(values.size() - 1));
}

/// Population standard deviation (n divisor); reported alongside the sample value.
inline double population_std_dev(std::span<const double> values) {
    detail::require_nonempty(values, "standard deviation");
    const double mean = simple_average(values);
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    return std::sqrt(ss / static_cast<double>(values.size()));
}

}  // namespace ofnts
