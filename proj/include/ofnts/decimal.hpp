#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace ofnts {

namespace detail {

constexpr std::int64_t pow10(int exponent) noexcept {
    std::int64_t value = 1;
    for (int i = 0; i < exponent; ++i) value *= 10;
    return value;
}

constexpr bool is_digit(char c) noexcept { return c >= '0' && c <= '9'; }

}  // namespace detail

/// Exact decimal stored as a scaled integer (`Scale` fractional digits).
///
/// Parsing keeps every digit up to `Scale`; extra fractional digits are rounded
/// half-to-even on the decimal text itself, so no binary rounding is involved.
template <int Scale>
class FixedDecimal {
    static_assert(Scale >= 0 && Scale <= 9);

public:
    static constexpr int scale = Scale;
    static constexpr std::int64_t denominator = detail::pow10(Scale);

    constexpr FixedDecimal() = default;

    static constexpr FixedDecimal from_units(std::int64_t units) noexcept {
        FixedDecimal d;
        d.units_ = units;
        return d;
    }

    static constexpr std::optional<FixedDecimal> parse(std::string_view text) noexcept {
        if (text.empty()) return std::nullopt;
        bool negative = false;
        std::size_t pos = 0;
        if (text[0] == '-' || text[0] == '+') {
            negative = text[0] == '-';
            pos = 1;
        }
        std::int64_t whole = 0;
        int whole_digits = 0;
        while (pos < text.size() && detail::is_digit(text[pos])) {
            if (++whole_digits > 12) return std::nullopt;
            whole = whole * 10 + (text[pos] - '0');
            ++pos;
        }
        std::int64_t frac = 0;
        int frac_digits = 0;
        bool round_up = false;
        if (pos < text.size() && text[pos] == '.') {
            ++pos;
            const std::size_t frac_begin = pos;
            while (pos < text.size() && detail::is_digit(text[pos])) ++pos;
            const std::string_view digits = text.substr(frac_begin, pos - frac_begin);
            for (std::size_t i = 0; i < digits.size() && i < static_cast<std::size_t>(Scale); ++i) {
                frac = frac * 10 + (digits[i] - '0');
                ++frac_digits;
            }
            if (digits.size() > static_cast<std::size_t>(Scale)) {
                const char first_dropped = digits[Scale];
                bool tail_nonzero = false;
                for (std::size_t i = Scale + 1; i < digits.size(); ++i) tail_nonzero |= digits[i] != '0';
                round_up = first_dropped > '5' || (first_dropped == '5' && tail_nonzero);
                if (first_dropped == '5' && !tail_nonzero) {
                    const std::int64_t last = Scale > 0 ? frac % 10 : whole % 10;
                    round_up = (last % 2) != 0;
                }
            }
            if (whole_digits == 0 && digits.empty()) return std::nullopt;
        } else if (whole_digits == 0) {
            return std::nullopt;
        }
        if (pos != text.size()) return std::nullopt;
        while (frac_digits < Scale) {
            frac *= 10;
            ++frac_digits;
        }
        std::int64_t units = whole * denominator + frac + (round_up ? 1 : 0);
        return from_units(negative ? -units : units);
    }

    constexpr std::int64_t units() const noexcept { return units_; }
    constexpr double to_double() const noexcept {
        return static_cast<double>(units_) / static_cast<double>(denominator);
    }

    std::string to_string() const {
        const std::int64_t magnitude = units_ < 0 ? -units_ : units_;
        std::string out = units_ < 0 ? "-" : "";
        out += std::to_string(magnitude / denominator);
        if constexpr (Scale > 0) {
            std::string frac = std::to_string(magnitude % denominator);
            out += '.';
            out.append(static_cast<std::size_t>(Scale) - frac.size(), '0');
            out += frac;
        }
        return out;
    }

    friend constexpr auto operator<=>(const FixedDecimal&, const FixedDecimal&) = default;

private:
    std::int64_t units_ = 0;
};

using Cents = FixedDecimal<2>;
using Micros = FixedDecimal<6>;

}  // namespace ofnts
