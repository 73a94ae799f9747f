#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ofnts/baselines.hpp"
#include "ofnts/series.hpp"
#include "ofnts/stats.hpp"
#include "ofnts/trapezoid.hpp"

namespace ofnts {

enum class Method { New, Mb, Piasecki };

constexpr std::string_view to_string(Method m) noexcept {
    switch (m) {
    case Method::New: return "new";
    case Method::Mb: return "mb";
    case Method::Piasecki: return "piasecki";
    }
    return "new";
}

inline std::optional<Method> parse_method(std::string_view name) {
    for (Method m : {Method::New, Method::Mb, Method::Piasecki}) {
        if (name == to_string(m)) return m;
    }
    return std::nullopt;
}

/// How a record is built from a window.
struct BuildOptions {
    Method method = Method::New;
    WeightScheme scheme = WeightScheme::exponential();
    WeightScheme mb_first = WeightScheme::simple();
    WeightScheme mb_second = WeightScheme::exponential();
};

/// One built OFN with everything the emitters need.
struct OfnRecord {
    std::string label;
    Method method = Method::New;
    std::optional<Date> window_start;
    std::optional<Date> window_end;
    std::size_t n = 0;
    TrapezoidalOFN shape{0.0, 0.0, 0.0, 0.0, Orientation::Long};
    BranchLine up;
    BranchLine down;
    OfnSummary summary;
};

inline OfnRecord build_record(const SeriesWindow& w, const BuildOptions& options, std::string label) {
    OfnRecord r;
    r.label = label;
    r.method = options.method;
    r.window_start = w.start_date();
    r.window_end = w.end_date();
    r.n = w.size();
    switch (options.method) {
    case Method::New: r.shape = build_ofn_new(w, options.scheme); break;
    case Method::Mb: r.shape = build_ofn_mb(w, options.mb_first, options.mb_second).to_trapezoid(); break;
    case Method::Piasecki: r.shape = build_ofn_piasecki(w).to_trapezoid(); break;
    }
    r.up = r.shape.up_line();
    r.down = r.shape.down_line();
    r.summary = summarize(w, r.shape, std::move(label));
    return r;
}

/// Orders records by label, then by window start date.
inline void sort_records(std::vector<OfnRecord>& records) {
    std::stable_sort(records.begin(), records.end(), [](const OfnRecord& a, const OfnRecord& b) {
        if (a.label != b.label) return a.label < b.label;
        return a.window_start < b.window_start;
    });
}

// ---------------------------------------------------------------------------
// Number formatting

/// Fixed-point rendering of the exact binary value. glibc rounds exact ties to
/// even, so 0.125 prints as 0.12.
inline std::string format_fixed(double value, int decimals) {
    if (!std::isfinite(value)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
    std::string out = buf;
    if (out.starts_with('-') && out.find_first_not_of("-0.") == std::string::npos) out.erase(0, 1);
    return out;
}

inline std::string json_number(double value) {
    if (!std::isfinite(value)) return "null";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

inline std::string json_string(std::string_view text) { return nlohmann::json(std::string(text)).dump(); }

// ---------------------------------------------------------------------------
// Table

struct TableOptions {
    int price_decimals = 2;
    int stat_decimals = 2;
    bool extended_precision = false;  // imprecision to 7 decimals
};

namespace detail {

inline std::size_t display_width(std::string_view s) {
    std::size_t width = 0;
    for (unsigned char c : s) width += (c & 0xC0) != 0x80;
    return width;
}

inline std::string xml_escape(std::string_view text) {
    std::string out;
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

inline void pad_to(std::string& out, std::string_view cell, std::size_t width, bool left_align) {
    const std::size_t w = display_width(cell);
    if (!left_align) out.append(width - w, ' ');
    out += cell;
    if (left_align) out.append(width - w, ' ');
}

}  // namespace detail

inline std::vector<std::string> table_header() {
    return {"Label", "a0−", "a0+", "S1", "S2", "σ", "X_[1]", "X_[n]", "Skew", "Imprecision", "DirectionStrength"};
}

inline std::vector<std::string> table_row(const OfnRecord& r, const TableOptions& opt) {
    const auto& s = r.summary;
    const int p = opt.price_decimals;
    std::vector<std::string> row{r.label,
                                 format_fixed(s.a0_minus, p),
                                 format_fixed(s.a0_plus, p),
                                 format_fixed(s.s1, p),
                                 format_fixed(s.s2, p),
                                 format_fixed(s.sigma, p),
                                 format_fixed(s.first_value, p),
                                 format_fixed(s.last_value, p)};
    if (s.stats) {
        row.push_back(s.stats->skew ? format_fixed(*s.stats->skew, opt.stat_decimals) : "undef");
        row.push_back(format_fixed(s.stats->imprecision, opt.extended_precision ? 7 : opt.stat_decimals));
        row.push_back(format_fixed(s.stats->direction_strength, opt.stat_decimals));
    } else {
        row.insert(row.end(), {"n/a", "n/a", "n/a"});
    }
    return row;
}

/// Fixed-width text table, one row per record, header always present.
inline std::string emit_table(const std::vector<OfnRecord>& records, const TableOptions& opt = {}) {
    std::vector<std::vector<std::string>> rows{table_header()};
    for (const auto& r : records) rows.push_back(table_row(r, opt));
    std::vector<std::size_t> widths(rows.front().size(), 0);
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], detail::display_width(row[c]));
    }
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += "  ";
            detail::pad_to(out, row[c], widths[c], c == 0);
        }
        while (out.ends_with(' ')) out.pop_back();
        out += '\n';
    }
    return out;
}

/// Same columns as the table at full precision, plus method and window.
inline std::string emit_csv(const std::vector<OfnRecord>& records) {
    std::string out =
        "label,method,window_start,window_end,a0_minus,a0_plus,s1,s2,sigma,x_first,x_last,skew,imprecision,"
        "direction_strength\n";
    auto quote = [](const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string q = "\"";
        for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
        return q + "\"";
    };
    for (const auto& r : records) {
        const auto& s = r.summary;
        out += quote(r.label) + ',' + std::string(to_string(r.method)) + ',' +
               (r.window_start ? to_iso(*r.window_start) : "") + ',' + (r.window_end ? to_iso(*r.window_end) : "") +
               ',' + json_number(s.a0_minus) + ',' + json_number(s.a0_plus) + ',' + json_number(s.s1) + ',' +
               json_number(s.s2) + ',' + json_number(s.sigma) + ',' + json_number(s.first_value) + ',' +
               json_number(s.last_value) + ',';
        if (s.stats) {
            out += (s.stats->skew ? json_number(*s.stats->skew) : "undef") + ',' + json_number(s.stats->imprecision) +
                   ',' + json_number(s.stats->direction_strength);
        } else {
            out += ",,";
        }
        out += '\n';
    }
    return out;
}

// ---------------------------------------------------------------------------
// JSON

enum class JsonLayout { Array, Lines };

namespace detail {

class JsonObjectWriter {
public:
    void key(std::string_view k) {
        out_ += first_ ? "{" : ",";
        first_ = false;
        out_ += json_string(k) + ":";
    }
    void number(std::string_view k, double v) {
        key(k);
        out_ += json_number(v);
    }
    void number(std::string_view k, std::optional<double> v) {
        key(k);
        out_ += v ? json_number(*v) : "null";
    }
    void integer(std::string_view k, std::size_t v) {
        key(k);
        out_ += std::to_string(v);
    }
    void string(std::string_view k, std::string_view v) {
        key(k);
        out_ += json_string(v);
    }
    void optional_string(std::string_view k, const std::optional<std::string>& v) {
        key(k);
        out_ += v ? json_string(*v) : "null";
    }
    void boolean(std::string_view k, bool v) {
        key(k);
        out_ += v ? "true" : "false";
    }
    void raw(std::string_view k, std::string_view json) {
        key(k);
        out_ += json;
    }
    std::string finish() { return first_ ? "{}" : out_ + "}"; }

private:
    std::string out_;
    bool first_ = true;
};

inline std::string line_json(const BranchLine& line) {
    JsonObjectWriter w;
    w.number("slope", line.slope);
    w.number("intercept", line.intercept);
    return w.finish();
}

inline std::optional<std::string> iso_or_null(const std::optional<Date>& d) {
    return d ? std::optional<std::string>(to_iso(*d)) : std::nullopt;
}

inline void write_stats(JsonObjectWriter& w, const OfnSummary& s) {
    w.number("s1", s.s1);
    w.number("s2", s.s2);
    w.number("sigma", s.sigma);
    w.number("sigma_population", s.sigma_population);
    w.number("first_value", s.first_value);
    w.number("last_value", s.last_value);
    w.boolean("stats_available", s.stats.has_value());
    w.number("skew", s.stats ? s.stats->skew : std::nullopt);
    w.number("imprecision", s.stats ? std::optional<double>(s.stats->imprecision) : std::nullopt);
    w.number("direction_strength", s.stats ? std::optional<double>(s.stats->direction_strength) : std::nullopt);
    w.number("area", s.stats ? std::optional<double>(s.stats->area) : std::nullopt);
}

inline std::string join_json(const std::vector<std::string>& objects, JsonLayout layout) {
    std::string out;
    if (layout == JsonLayout::Lines) {
        for (const auto& o : objects) out += o + '\n';
        return out;
    }
    out = "[";
    for (std::size_t i = 0; i < objects.size(); ++i) out += (i ? ",\n" : "\n") + objects[i];
    out += objects.empty() ? "]\n" : "\n]\n";
    return out;
}

}  // namespace detail

/// Full record as one JSON object. Keys are emitted in a fixed order and
/// numbers with 17 significant digits, so parsing restores the exact doubles.
inline std::string record_json(const OfnRecord& r) {
    detail::JsonObjectWriter w;
    w.string("label", r.label);
    w.string("method", to_string(r.method));
    w.optional_string("window_start", detail::iso_or_null(r.window_start));
    w.optional_string("window_end", detail::iso_or_null(r.window_end));
    w.integer("n", r.n);
    w.string("orientation", to_string(r.shape.orientation()));
    w.boolean("proper", r.shape.proper());
    w.number("a0_minus", r.shape.a0_minus());
    w.number("a1_minus", r.shape.a1_minus());
    w.number("a1_plus", r.shape.a1_plus());
    w.number("a0_plus", r.shape.a0_plus());
    w.raw("up_branch", detail::line_json(r.up));
    w.raw("down_branch", detail::line_json(r.down));
    detail::write_stats(w, r.summary);
    return w.finish();
}

/// Summary-only object (the `stats` command).
inline std::string summary_json(const OfnRecord& r) {
    detail::JsonObjectWriter w;
    w.string("label", r.label);
    w.optional_string("window_start", detail::iso_or_null(r.window_start));
    w.optional_string("window_end", detail::iso_or_null(r.window_end));
    w.number("a0_minus", r.summary.a0_minus);
    w.number("a0_plus", r.summary.a0_plus);
    detail::write_stats(w, r.summary);
    return w.finish();
}

inline std::string emit_json(const std::vector<OfnRecord>& records, JsonLayout layout = JsonLayout::Array) {
    std::vector<std::string> objects;
    for (const auto& r : records) objects.push_back(record_json(r));
    return detail::join_json(objects, layout);
}

inline std::string emit_summary_json(const std::vector<OfnRecord>& records, JsonLayout layout = JsonLayout::Array) {
    std::vector<std::string> objects;
    for (const auto& r : records) objects.push_back(summary_json(r));
    return detail::join_json(objects, layout);
}

// ---------------------------------------------------------------------------
// SVG

/// "347.36 + 32.48α" style rendering of a branch.
inline std::string format_branch(const BranchLine& line, int decimals = 2) {
    const std::string sign = line.slope < 0 ? " − " : " + ";
    return format_fixed(line.intercept, decimals) + sign + format_fixed(std::abs(line.slope), decimals) + "α";
}

struct SvgGeometry {
    double width = 480.0;
    double height = 360.0;
    double margin_left = 70.0;
    double margin_right = 20.0;
    double margin_top = 40.0;
    double margin_bottom = 40.0;
};

/// Standalone SVG 1.1 plot of one OFN: alpha runs left to right, values bottom
/// to top. The up branch is drawn from alpha 0 to 1 and the down branch from 1
/// back to 0, each ending in an arrowhead, joined by the core segment at alpha 1.
/// Each element carries its unscaled (alpha, value) coordinates in data-* attributes.
inline std::string emit_svg(const OfnRecord& r, const SvgGeometry& g = {}) {
    detail::require_proper(r.shape, "emit_svg");
    const double lo = r.shape.a0_minus();
    const double hi = r.shape.a0_plus();
    double pad = 0.05 * (hi - lo);
    if (pad == 0.0) pad = std::max(0.05 * std::abs(lo), 0.5);
    const double vmin = lo - pad, vmax = hi + pad;
    const double amin = -0.05, amax = 1.05;
    const double plot_w = g.width - g.margin_left - g.margin_right;
    const double plot_h = g.height - g.margin_top - g.margin_bottom;

    auto px = [&](double alpha) { return g.margin_left + (alpha - amin) / (amax - amin) * plot_w; };
    auto py = [&](double v) { return g.margin_top + (vmax - v) / (vmax - vmin) * plot_h; };
    auto num = [](double v) { return format_fixed(v, 2); };
    auto pt = [&](double alpha, double v) { return num(px(alpha)) + "," + num(py(v)); };
    auto data_pt = [](double alpha, double v) { return json_number(alpha) + "," + json_number(v); };

    auto polyline = [&](const char* cls, const BranchLine& line, bool reverse) {
        std::string points, data;
        for (int i = 0; i <= 4; ++i) {
            const double alpha = reverse ? 1.0 - i / 4.0 : i / 4.0;
            points += (i ? " " : "") + pt(alpha, line.at(alpha));
        }
        const double a_from = reverse ? 1.0 : 0.0, a_to = reverse ? 0.0 : 1.0;
        data = "data-from=\"" + data_pt(a_from, line.at(a_from)) + "\" data-to=\"" + data_pt(a_to, line.at(a_to)) + "\"";
        return std::string("  <polyline class=\"") + cls + "\" " + data + " points=\"" + points +
               "\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"2\" marker-end=\"url(#arrow)\"/>\n";
    };

    std::string s;
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(g.width) + "\" height=\"" +
         num(g.height) + "\" viewBox=\"0 0 " + num(g.width) + " " + num(g.height) + "\" data-alpha-range=\"" +
         data_pt(amin, amax) + "\" data-value-range=\"" + data_pt(vmin, vmax) + "\">\n";
    s += "  <defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"7\" markerHeight=\"7\" "
         "orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"#1f4e9c\"/></marker></defs>\n";
    s += "  <rect x=\"0\" y=\"0\" width=\"" + num(g.width) + "\" height=\"" + num(g.height) + "\" fill=\"white\"/>\n";

    std::string title = r.label.empty() ? "OFN" : r.label;
    if (r.window_start && r.window_end) title += " " + to_iso(*r.window_start) + " to " + to_iso(*r.window_end);
    s += "  <text class=\"title\" x=\"" + num(g.width / 2) + "\" y=\"20\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"13\">" + detail::xml_escape(title) + " (" + std::string(to_string(r.shape.orientation())) + ")</text>\n";

    // axes and ticks
    const double x0 = px(0.0), y_bottom = g.margin_top + plot_h;
    s += "  <line class=\"axis\" x1=\"" + num(x0) + "\" y1=\"" + num(g.margin_top) + "\" x2=\"" + num(x0) + "\" y2=\"" +
         num(y_bottom) + "\" stroke=\"black\"/>\n";
    s += "  <line class=\"axis\" x1=\"" + num(g.margin_left) + "\" y1=\"" + num(y_bottom) + "\" x2=\"" +
         num(g.margin_left + plot_w) + "\" y2=\"" + num(y_bottom) + "\" stroke=\"black\"/>\n";
    for (double a : {0.0, 0.5, 1.0}) {
        s += "  <text class=\"tick\" x=\"" + num(px(a)) + "\" y=\"" + num(y_bottom + 16) +
             "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" + format_fixed(a, 1) + "</text>\n";
    }
    for (int i = 0; i <= 4; ++i) {
        const double v = vmin + (vmax - vmin) * i / 4.0;
        s += "  <text class=\"tick\" x=\"" + num(g.margin_left - 6) + "\" y=\"" + num(py(v) + 4) +
             "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" + format_fixed(v, 2) + "</text>\n";
    }
    s += "  <text class=\"axis-label\" x=\"" + num(g.margin_left + plot_w) + "\" y=\"" + num(y_bottom + 32) +
         "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">α</text>\n";

    s += polyline("branch up", r.up, false);
    s += polyline("branch down", r.down, true);
    const double core_from = r.up.end(), core_to = r.down.end();
    s += "  <line class=\"core\" data-from=\"" + data_pt(1.0, core_from) + "\" data-to=\"" + data_pt(1.0, core_to) +
         "\" x1=\"" + num(px(1.0)) + "\" y1=\"" + num(py(core_from)) + "\" x2=\"" + num(px(1.0)) + "\" y2=\"" +
         num(py(core_to)) + "\" stroke=\"#c0392b\" stroke-width=\"2\"/>\n";

    auto label_at = [&](const char* cls, const std::string& text, const BranchLine& line) {
        return std::string("  <text class=\"") + cls + "\" x=\"" + num(px(0.5)) + "\" y=\"" +
               num(py(line.at(0.5)) + (line.at(0.5) >= (vmin + vmax) / 2 ? -8.0 : 16.0)) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#1f4e9c\">" + text +
               "</text>\n";
    };
    s += label_at("label up", "μ↑ = " + format_branch(r.up), r.up);
    s += label_at("label down", "μ↓ = " + format_branch(r.down), r.down);
    s += "</svg>\n";
    return s;
}

}  // namespace ofnts
