#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ofnts/date.hpp"
#include "ofnts/decimal.hpp"
#include "ofnts/error.hpp"

namespace ofnts {

/// One trading day. OHLC are stored in cents, adjusted close in micro-units.
struct OhlcBar {
    Date date;
    Cents open;
    Cents high;
    Cents low;
    Cents close;
    std::uint64_t volume = 0;
    Micros adj_close;

    friend bool operator==(const OhlcBar&, const OhlcBar&) = default;
};

enum class Field { Open, High, Low, Close, AdjClose };

constexpr std::string_view to_string(Field field) noexcept {
    switch (field) {
    case Field::Open: return "open";
    case Field::High: return "high";
    case Field::Low: return "low";
    case Field::Close: return "close";
    case Field::AdjClose: return "adj_close";
    }
    return "close";
}

inline std::optional<Field> parse_field(std::string_view name) {
    for (Field f : {Field::Open, Field::High, Field::Low, Field::Close, Field::AdjClose}) {
        if (name == to_string(f)) return f;
    }
    return std::nullopt;
}

inline double field_value(const OhlcBar& bar, Field field) noexcept {
    switch (field) {
    case Field::Open: return bar.open.to_double();
    case Field::High: return bar.high.to_double();
    case Field::Low: return bar.low.to_double();
    case Field::Close: return bar.close.to_double();
    case Field::AdjClose: return bar.adj_close.to_double();
    }
    return bar.close.to_double();
}

/// An ordered slice of observations and the scalar series extracted from it.
///
/// Windows built from raw values carry no bars; operations that need OHLC data
/// (candlesticks, the open/close core) reject them with MissingOhlc.
class SeriesWindow {
public:
    static SeriesWindow from_bars(std::vector<OhlcBar> bars, Field field) {
        SeriesWindow w;
        w.values_.reserve(bars.size());
        for (const auto& bar : bars) w.values_.push_back(field_value(bar, field));
        w.bars_ = std::move(bars);
        w.field_ = field;
        return w;
    }

    static SeriesWindow from_values(std::vector<double> values) {
        SeriesWindow w;
        w.values_ = std::move(values);
        return w;
    }

    std::span<const double> values() const noexcept { return values_; }
    std::span<const OhlcBar> bars() const noexcept { return bars_; }
    bool has_bars() const noexcept { return !bars_.empty() && bars_.size() == values_.size(); }
    std::optional<Field> field() const noexcept { return field_; }
    std::size_t size() const noexcept { return values_.size(); }
    double first() const { return values_.front(); }
    double last() const { return values_.back(); }

    std::optional<Date> start_date() const {
        return bars_.empty() ? std::nullopt : std::optional<Date>(bars_.front().date);
    }
    std::optional<Date> end_date() const {
        return bars_.empty() ? std::nullopt : std::optional<Date>(bars_.back().date);
    }

private:
    SeriesWindow() = default;

    std::vector<OhlcBar> bars_;
    std::optional<Field> field_;
    std::vector<double> values_;
};

struct WindowSpec {
    enum class Mode { ByDateRange, BySize };

    Mode mode = Mode::BySize;
    Date start{};
    Date end{};
    std::size_t size = 0;
    std::size_t stride = 1;

    static WindowSpec by_range(Date start, Date end) {
        WindowSpec spec;
        spec.mode = Mode::ByDateRange;
        spec.start = start;
        spec.end = end;
        spec.validate();
        return spec;
    }

    static WindowSpec by_size(std::size_t size, std::size_t stride = 1) {
        WindowSpec spec;
        spec.mode = Mode::BySize;
        spec.size = size;
        spec.stride = stride;
        spec.validate();
        return spec;
    }

    void validate() const {
        if (mode == Mode::ByDateRange) {
            if (!start.ok() || !end.ok()) throw Error(ErrorCode::InvalidWindowSpec, "invalid range date");
            if (end < start) throw Error(ErrorCode::InvalidWindowSpec, "range start after end");
        } else {
            if (size < 2) throw Error(ErrorCode::InvalidWindowSpec, "window size must be at least 2");
            if (stride < 1) throw Error(ErrorCode::InvalidWindowSpec, "stride must be at least 1");
        }
    }
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

// Splits one CSV record; double quotes may wrap a field and "" escapes a quote.
inline std::optional<std::vector<std::string>> split_csv_line(std::string_view line) {
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    bool was_quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    current += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                current += c;
            }
        } else if (c == '"') {
            if (!trim(current).empty() || was_quoted) return std::nullopt;
            current.clear();
            quoted = was_quoted = true;
        } else if (c == ',') {
            fields.push_back(was_quoted ? current : std::string(trim(current)));
            current.clear();
            was_quoted = false;
        } else if (!was_quoted) {
            current += c;
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            return std::nullopt;
        }
    }
    if (quoted) return std::nullopt;
    fields.push_back(was_quoted ? current : std::string(trim(current)));
    return fields;
}

inline std::optional<std::uint64_t> parse_volume(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::uint64_t value = 0;
    for (char c : text) {
        if (!is_digit(c)) return std::nullopt;
        value = value * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return value;
}

}  // namespace detail

/// Parses an OHLCV CSV document.
///
/// The header must name Date, Open, High, Low, Close, Volume and Adj Close
/// (any order, case-insensitive, surrounding whitespace ignored). Rows come
/// back sorted by date. Errors carry the 1-based line number of the bad row.
inline std::vector<OhlcBar> parse_csv(std::istream& in) {
    static constexpr std::string_view kColumns[] = {"date", "open", "high", "low", "close", "volume", "adj close"};
    enum Col { kDate, kOpen, kHigh, kLow, kClose, kVolume, kAdjClose, kCount };

    std::string line;
    std::size_t line_no = 0;
    std::vector<std::string> header;
    while (std::getline(in, line)) {
        ++line_no;
        if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (detail::trim(line).empty()) continue;
        auto fields = detail::split_csv_line(line);
        if (!fields) throw Error(ErrorCode::MalformedRow, "line " + std::to_string(line_no) + ": unbalanced quotes in header");
        header = std::move(*fields);
        break;
    }
    if (header.empty()) throw Error(ErrorCode::MissingColumn, "no header row");

    std::size_t index[kCount];
    for (int c = 0; c < kCount; ++c) {
        auto it = std::find_if(header.begin(), header.end(), [&](const std::string& h) {
            return detail::lower(detail::trim(h)) == kColumns[c];
        });
        if (it == header.end()) throw Error(ErrorCode::MissingColumn, "header lacks column '" + std::string(kColumns[c]) + "'");
        index[c] = static_cast<std::size_t>(it - header.begin());
    }

    std::vector<std::pair<OhlcBar, std::size_t>> rows;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (detail::trim(line).empty()) continue;
        const std::string where = "line " + std::to_string(line_no);
        auto fields = detail::split_csv_line(line);
        if (!fields) throw Error(ErrorCode::MalformedRow, where + ": unbalanced quotes");
        if (fields->size() != header.size()) {
            throw Error(ErrorCode::MalformedRow, where + ": expected " + std::to_string(header.size()) +
                                                     " fields, got " + std::to_string(fields->size()));
        }
        const auto& f = *fields;

        OhlcBar bar;
        auto date = parse_date(f[index[kDate]]);
        if (!date) throw Error(ErrorCode::MalformedRow, where + ": bad date '" + f[index[kDate]] + "'");
        bar.date = *date;

        auto price = [&](Col c) {
            auto v = Cents::parse(f[index[c]]);
            if (!v) throw Error(ErrorCode::MalformedRow, where + ": non-numeric " + std::string(kColumns[c]) + " '" + f[index[c]] + "'");
            if (v->units() <= 0) throw Error(ErrorCode::MalformedRow, where + ": " + std::string(kColumns[c]) + " must be positive");
            return *v;
        };
        bar.open = price(kOpen);
        bar.high = price(kHigh);
        bar.low = price(kLow);
        bar.close = price(kClose);

        auto volume = detail::parse_volume(f[index[kVolume]]);
        if (!volume) throw Error(ErrorCode::MalformedRow, where + ": bad volume '" + f[index[kVolume]] + "'");
        bar.volume = *volume;

        auto adj = Micros::parse(f[index[kAdjClose]]);
        if (!adj || adj->units() <= 0) throw Error(ErrorCode::MalformedRow, where + ": bad adj close '" + f[index[kAdjClose]] + "'");
        bar.adj_close = *adj;

        if (bar.low > std::min(bar.open, bar.close) || bar.high < std::max(bar.open, bar.close) || bar.low > bar.high) {
            throw Error(ErrorCode::MalformedRow, where + ": OHLC values inconsistent (low/high do not bound open/close)");
        }
        rows.emplace_back(bar, line_no);
    }

    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first.date < b.first.date; });
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].first.date == rows[i - 1].first.date) {
            throw Error(ErrorCode::DuplicateDate, "line " + std::to_string(rows[i].second) + ": date " +
                                                      to_iso(rows[i].first.date) + " already seen on line " +
                                                      std::to_string(rows[i - 1].second));
        }
    }
    std::vector<OhlcBar> bars;
    bars.reserve(rows.size());
    for (auto& r : rows) bars.push_back(r.first);
    return bars;
}

inline std::vector<OhlcBar> parse_csv(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_csv(in);
}

inline std::string write_csv(std::span<const OhlcBar> bars) {
    std::string out = "Date,Open,High,Low,Close,Volume,Adj Close\n";
    for (const auto& b : bars) {
        out += to_iso(b.date) + ',' + b.open.to_string() + ',' + b.high.to_string() + ',' + b.low.to_string() + ',' +
               b.close.to_string() + ',' + std::to_string(b.volume) + ',' + b.adj_close.to_string() + '\n';
    }
    return out;
}

/// Slices sorted bars into windows.
///
/// Range mode yields exactly one window of the bars dated within [start, end].
/// Size mode yields every full window of `size` bars, starting every `stride`
/// bars; a trailing partial window is dropped.
inline std::vector<SeriesWindow> make_windows(std::span<const OhlcBar> bars, const WindowSpec& spec, Field field) {
    spec.validate();
    std::vector<SeriesWindow> windows;
    if (spec.mode == WindowSpec::Mode::ByDateRange) {
        std::vector<OhlcBar> selected;
        for (const auto& b : bars) {
            if (spec.start <= b.date && b.date <= spec.end) selected.push_back(b);
        }
        if (selected.size() < 2) {
            throw Error(ErrorCode::EmptyWindow, "range " + to_iso(spec.start) + ":" + to_iso(spec.end) + " selects " +
                                                    std::to_string(selected.size()) + " bar(s); need at least 2");
        }
        windows.push_back(SeriesWindow::from_bars(std::move(selected), field));
        return windows;
    }
    if (spec.size > bars.size()) {
        throw Error(ErrorCode::SizeExceedsData, "window size " + std::to_string(spec.size) + " exceeds " +
                                                    std::to_string(bars.size()) + " bars");
    }
    for (std::size_t start = 0; start + spec.size <= bars.size(); start += spec.stride) {
        auto slice = bars.subspan(start, spec.size);
        windows.push_back(SeriesWindow::from_bars({slice.begin(), slice.end()}, field));
    }
    return windows;
}

inline std::pair<double, double> series_extrema(const SeriesWindow& w) {
    if (w.size() == 0) throw Error(ErrorCode::EmptySeries, "extrema of an empty window");
    auto [lo, hi] = std::minmax_element(w.values().begin(), w.values().end());
    return {*lo, *hi};
}

}  // namespace ofnts
