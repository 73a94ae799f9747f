#pragma once

#include <cctype>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "ofnts/error.hpp"
#include "ofnts/report.hpp"
#include "ofnts/series.hpp"

namespace ofnts {

enum class OutputFormat { Json, Table, Csv, Svg, SummaryJson };

struct InputSource {
    std::string path;
    std::string label;  // empty: file stem
};

struct RunConfig {
    std::vector<InputSource> inputs;
    Field field = Field::Close;
    WindowSpec window = WindowSpec::by_size(2);
    BuildOptions build;
    OutputFormat format = OutputFormat::Json;
    JsonLayout json_layout = JsonLayout::Array;
    TableOptions table;
    std::string out;  // empty: stdout; for several SVGs, a directory
};

enum ExitCode : int { kExitOk = 0, kExitUsage = 2, kExitData = 3 };

/// Records for already-parsed inputs, in deterministic output order.
inline std::vector<OfnRecord> build_records(const std::vector<std::pair<std::string, std::vector<OhlcBar>>>& inputs,
                                            const RunConfig& config) {
    std::vector<OfnRecord> records;
    for (const auto& [label, bars] : inputs) {
        for (const auto& w : make_windows(bars, config.window, config.field)) {
            records.push_back(build_record(w, config.build, label));
        }
    }
    sort_records(records);
    return records;
}

namespace detail {

inline std::string svg_file_name(const OfnRecord& r) {
    std::string name;
    for (char c : r.label) name += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_') ? c : '_';
    if (r.window_start) name += "_" + to_iso(*r.window_start);
    return name + ".svg";
}

inline void write_atomically(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write " + tmp.string());
        f << content;
        if (!f.flush()) throw std::runtime_error("cannot write " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace detail

/// Reads every input, builds all records, and only then writes output.
/// Any ingest or build failure returns kExitData with nothing written.
inline int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (config.inputs.empty()) {
        err << "error: no --input given\n";
        return kExitUsage;
    }
    std::vector<std::pair<std::string, std::vector<OhlcBar>>> parsed;
    for (const auto& input : config.inputs) {
        std::ifstream f(input.path, std::ios::binary);
        if (!f) {
            err << "error: " << input.path << ": cannot open file\n";
            return kExitData;
        }
        std::string label = input.label.empty() ? std::filesystem::path(input.path).stem().string() : input.label;
        try {
            parsed.emplace_back(std::move(label), parse_csv(f));
        } catch (const Error& e) {
            err << "error: " << input.path << ": " << e.what() << '\n';
            return kExitData;
        }
    }

    std::vector<OfnRecord> records;
    for (std::size_t i = 0; i < parsed.size(); ++i) {
        try {
            auto one = build_records({parsed[i]}, config);
            records.insert(records.end(), one.begin(), one.end());
        } catch (const Error& e) {
            err << "error: " << config.inputs[i].path << ": " << e.what() << '\n';
            return kExitData;
        }
    }
    sort_records(records);

    std::vector<std::pair<std::string, std::string>> files;  // (file name, content) for SVG directories
    std::string text;
    try {
        switch (config.format) {
        case OutputFormat::Json: text = emit_json(records, config.json_layout); break;
        case OutputFormat::SummaryJson: text = emit_summary_json(records, config.json_layout); break;
        case OutputFormat::Table: text = emit_table(records, config.table); break;
        case OutputFormat::Csv: text = emit_csv(records); break;
        case OutputFormat::Svg:
            if (records.size() == 1) {
                text = emit_svg(records.front());
            } else {
                if (config.out.empty() || !std::filesystem::is_directory(config.out)) {
                    err << "error: " << records.size() << " windows to plot; --out must name an existing directory\n";
                    return kExitUsage;
                }
                for (const auto& r : records) files.emplace_back(detail::svg_file_name(r), emit_svg(r));
            }
            break;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitData;
    }

    try {
        if (!files.empty()) {
            for (const auto& [name, content] : files) detail::write_atomically(std::filesystem::path(config.out) / name, content);
        } else if (config.out.empty()) {
            out << text;
        } else {
            detail::write_atomically(config.out, text);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitData;
    }
    return kExitOk;
}

}  // namespace ofnts
