#pragma once

#include <charconv>
#include <chrono>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>

namespace ofnts {

using Date = std::chrono::year_month_day;

namespace detail {

inline std::optional<int> parse_int(std::string_view text, std::size_t min_digits, std::size_t max_digits) {
    if (text.size() < min_digits || text.size() > max_digits) return std::nullopt;
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
    return value;
}

}  // namespace detail

/// Accepts ISO `YYYY-MM-DD` and US `M/D/YYYY`; rejects impossible calendar days.
inline std::optional<Date> parse_date(std::string_view text) {
    std::optional<int> y, m, d;
    if (auto dash = text.find('-'); dash != std::string_view::npos) {
        auto dash2 = text.find('-', dash + 1);
        if (dash2 == std::string_view::npos) return std::nullopt;
        y = detail::parse_int(text.substr(0, dash), 4, 4);
        m = detail::parse_int(text.substr(dash + 1, dash2 - dash - 1), 2, 2);
        d = detail::parse_int(text.substr(dash2 + 1), 2, 2);
    } else if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto slash2 = text.find('/', slash + 1);
        if (slash2 == std::string_view::npos) return std::nullopt;
        m = detail::parse_int(text.substr(0, slash), 1, 2);
        d = detail::parse_int(text.substr(slash + 1, slash2 - slash - 1), 1, 2);
        y = detail::parse_int(text.substr(slash2 + 1), 4, 4);
    }
    if (!y || !m || !d || *m < 1 || *d < 1) return std::nullopt;
    Date date{std::chrono::year{*y}, std::chrono::month{static_cast<unsigned>(*m)},
              std::chrono::day{static_cast<unsigned>(*d)}};
    if (!date.ok()) return std::nullopt;
    return date;
}

inline std::string to_iso(const Date& date) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(date.year()),
                  static_cast<unsigned>(date.month()), static_cast<unsigned>(date.day()));
    return buf;
}

}  // namespace ofnts
