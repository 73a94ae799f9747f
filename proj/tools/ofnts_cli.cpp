// ofnts: build trapezoidal ordered fuzzy numbers from windowed OHLCV series.
//
//   ofnts build  --input TSLA.csv --window 2019-12-03:2019-12-31
//   ofnts report --input TSLA.csv --input TM.csv --input F.csv --window 2019-12-03:2019-12-31
//   ofnts plot   --input TSLA.csv --window 2019-12-03:2019-12-31 --out tsla.svg
//   ofnts stats  --input TSLA.csv --size 20 --stride 5

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ofnts/ofnts.hpp"

namespace {

struct CliOptions {
    std::vector<std::string> inputs;
    std::vector<std::string> labels;
    std::string field = "close";
    std::string window;
    std::size_t size = 0;
    std::size_t stride = 1;
    std::string scheme = "ea";
    double gamma = 0.0;
    std::string method = "new";
    std::string mb_pair = "sa,ea";
    std::string format;
    std::string json_layout = "array";
    bool extended_precision = false;
    std::string out;
};

void add_common(CLI::App* cmd, CliOptions& o) {
    cmd->add_option("-i,--input", o.inputs, "OHLCV CSV file (repeatable)")->required();
    cmd->add_option("-l,--label", o.labels, "Label per input, in --input order (default: file stem)");
    cmd->add_option("--field", o.field, "Series to extract: open|high|low|close|adj_close")
        ->check(CLI::IsMember({"open", "high", "low", "close", "adj_close"}))
        ->capture_default_str();
    cmd->add_option("-w,--window", o.window, "Date range START:END (ISO or M/D/YYYY)");
    cmd->add_option("--size", o.size, "Window length in trading days");
    cmd->add_option("--stride", o.stride, "Step between window starts")->capture_default_str();
    cmd->add_option("--scheme", o.scheme, "Weighted average for the core: sa|lwa|ea")
        ->check(CLI::IsMember({"sa", "lwa", "ea"}))
        ->capture_default_str();
    cmd->add_option("--gamma", o.gamma, "Exponential smoothing factor in (0,1); default 2/(n+1)");
    cmd->add_option("-m,--method", o.method, "Construction: new|mb|piasecki")
        ->check(CLI::IsMember({"new", "mb", "piasecki"}))
        ->capture_default_str();
    cmd->add_option("--mb-pair", o.mb_pair, "Two averages for the mb core, e.g. sa,ea")->capture_default_str();
    cmd->add_option("-o,--out", o.out, "Output file (or directory for several SVGs); default stdout");
}

std::optional<ofnts::WeightScheme> scheme_with_gamma(const std::string& name, double gamma) {
    auto scheme = ofnts::parse_scheme(name);
    if (scheme && scheme->kind == ofnts::WeightScheme::Kind::Exponential && gamma != 0.0) scheme->gamma = gamma;
    return scheme;
}

// Translates parsed flags into a RunConfig; throws CLI::ValidationError on bad combinations.
ofnts::RunConfig to_config(const CliOptions& o, ofnts::OutputFormat format) {
    ofnts::RunConfig config;
    if (!o.labels.empty() && o.labels.size() != o.inputs.size()) {
        throw CLI::ValidationError("--label", "give one label per --input");
    }
    for (std::size_t i = 0; i < o.inputs.size(); ++i) {
        config.inputs.push_back({o.inputs[i], o.labels.empty() ? std::string() : o.labels[i]});
    }
    config.field = *ofnts::parse_field(o.field);

    if (o.window.empty() == (o.size == 0)) throw CLI::ValidationError("--window", "give either --window or --size");
    try {
        if (!o.window.empty()) {
            const auto colon = o.window.find(':');
            if (colon == std::string::npos) throw CLI::ValidationError("--window", "expected START:END");
            auto start = ofnts::parse_date(o.window.substr(0, colon));
            auto end = ofnts::parse_date(o.window.substr(colon + 1));
            if (!start || !end) throw CLI::ValidationError("--window", "unparseable date in '" + o.window + "'");
            config.window = ofnts::WindowSpec::by_range(*start, *end);
        } else {
            config.window = ofnts::WindowSpec::by_size(o.size, o.stride);
        }
    } catch (const ofnts::Error& e) {
        throw CLI::ValidationError("--window", e.what());
    }

    if (o.gamma != 0.0 && !(o.gamma > 0.0 && o.gamma < 1.0)) throw CLI::ValidationError("--gamma", "must lie in (0, 1)");
    config.build.method = *ofnts::parse_method(o.method);
    config.build.scheme = *scheme_with_gamma(o.scheme, o.gamma);
    const auto comma = o.mb_pair.find(',');
    if (comma == std::string::npos) throw CLI::ValidationError("--mb-pair", "expected two of sa|lwa|ea, e.g. sa,ea");
    auto first = scheme_with_gamma(o.mb_pair.substr(0, comma), o.gamma);
    auto second = scheme_with_gamma(o.mb_pair.substr(comma + 1), o.gamma);
    if (!first || !second) throw CLI::ValidationError("--mb-pair", "expected two of sa|lwa|ea, e.g. sa,ea");
    config.build.mb_first = *first;
    config.build.mb_second = *second;

    config.format = format;
    config.json_layout = o.json_layout == "lines" ? ofnts::JsonLayout::Lines : ofnts::JsonLayout::Array;
    config.table.extended_precision = o.extended_precision;
    config.out = o.out;
    return config;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Trapezoidal ordered fuzzy numbers from windowed OHLCV time series.\n"
                 "Candles and OFNs with X_1 == X_n (or close == open) count as long/green."};
    app.require_subcommand(1);

    CliOptions o;
    auto* build = app.add_subcommand("build", "Emit one record per (input, window) as JSON or CSV");
    auto* report = app.add_subcommand("report", "Print the summary table (or CSV)");
    auto* plot = app.add_subcommand("plot", "Render each OFN as an SVG figure");
    auto* stats = app.add_subcommand("stats", "Emit summary statistics only, as JSON");
    for (auto* cmd : {build, report, plot, stats}) add_common(cmd, o);

    build->add_option("-f,--format", o.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    report->add_option("-f,--format", o.format, "table|csv")->check(CLI::IsMember({"table", "csv"}));
    report->add_flag("--extended-precision", o.extended_precision, "Print imprecision with 7 decimals");
    for (auto* cmd : {build, stats}) {
        cmd->add_option("--json-layout", o.json_layout, "array|lines")
            ->check(CLI::IsMember({"array", "lines"}))
            ->capture_default_str();
    }

    ofnts::RunConfig config;
    try {
        app.parse(argc, argv);
        ofnts::OutputFormat format = ofnts::OutputFormat::Json;
        if (build->parsed()) format = o.format == "csv" ? ofnts::OutputFormat::Csv : ofnts::OutputFormat::Json;
        if (report->parsed()) format = o.format == "csv" ? ofnts::OutputFormat::Csv : ofnts::OutputFormat::Table;
        if (plot->parsed()) format = ofnts::OutputFormat::Svg;
        if (stats->parsed()) format = ofnts::OutputFormat::SummaryJson;
        config = to_config(o, format);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : ofnts::kExitUsage;
    }
    return ofnts::run(config, std::cout, std::cerr);
}
