#pragma once

#include <chrono>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ofnts/series.hpp"

namespace fixtures {

inline std::string path(const std::string& name) { return std::string(OFNTS_TEST_DATA_DIR) + "/" + name; }

inline std::vector<ofnts::OhlcBar> load(const std::string& name) {
    std::ifstream f(path(name));
    if (!f) throw std::runtime_error("missing fixture " + name);
    return ofnts::parse_csv(f);
}

inline ofnts::Date ymd(int y, unsigned m, unsigned d) {
    return ofnts::Date{std::chrono::year{y}, std::chrono::month{m}, std::chrono::day{d}};
}

inline ofnts::SeriesWindow range(const std::string& name, ofnts::Date from, ofnts::Date to,
                                 ofnts::Field field = ofnts::Field::Close) {
    return ofnts::make_windows(load(name), ofnts::WindowSpec::by_range(from, to), field).front();
}

inline ofnts::SeriesWindow tsla_dec_2019() { return range("tsla_close.csv", ymd(2019, 12, 3), ymd(2019, 12, 31)); }
inline ofnts::SeriesWindow tsla_mar_2020() { return range("tsla_close.csv", ymd(2020, 3, 2), ymd(2020, 3, 27)); }

}  // namespace fixtures
