#include "qact/lc/mortality.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "qact/errors.hpp"

namespace qact::lc {

namespace {

// Age bands sort by their leading integer ("10-14" after "5-9").
long age_sort_key(const std::string& label) {
    char* end = nullptr;
    const long v = std::strtol(label.c_str(), &end, 10);
    if (end == label.c_str()) {
        throw IngestionError("age label '" + label + "' does not start with an integer");
    }
    return v;
}

}  // namespace

MortalitySurface load_mortality(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IngestionError("cannot open mortality file: " + path.string());

    std::string line;
    if (!std::getline(in, line)) throw IngestionError("mortality file is empty");
    {
        std::istringstream header(line);
        std::string a, y, r;
        if (!(header >> a >> y >> r) || a != "age" || y != "year" || r != "rate") {
            throw IngestionError("expected header 'age\\tyear\\trate'");
        }
    }

    std::map<std::pair<std::string, int>, double> cells;
    std::set<std::string> age_set;
    std::set<int> year_set;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string age;
        int year;
        double rate;
        if (!(row >> age >> year >> rate)) {
            throw IngestionError("malformed row at line " + std::to_string(line_no));
        }
        if (!(rate > 0.0)) {
            throw IngestionError("non-positive rate for cell (" + age + ", " +
                                 std::to_string(year) + "); log-mortality needs rates > 0");
        }
        if (!cells.emplace(std::make_pair(age, year), rate).second) {
            throw IngestionError("duplicate cell (" + age + ", " + std::to_string(year) + ")");
        }
        age_set.insert(age);
        year_set.insert(year);
    }
    if (cells.empty()) throw IngestionError("mortality file holds no data rows");

    MortalitySurface surface;
    surface.ages.assign(age_set.begin(), age_set.end());
    std::sort(surface.ages.begin(), surface.ages.end(), [](const auto& a, const auto& b) {
        return age_sort_key(a) < age_sort_key(b);
    });
    surface.years.assign(year_set.begin(), year_set.end());

    surface.rates = Matrix(static_cast<int>(surface.ages.size()),
                           static_cast<int>(surface.years.size()));
    for (int x = 0; x < surface.rates.rows; ++x) {
        for (int t = 0; t < surface.rates.cols; ++t) {
            const auto it = cells.find({surface.ages[static_cast<std::size_t>(x)],
                                        surface.years[static_cast<std::size_t>(t)]});
            if (it == cells.end()) {
                throw IngestionError("missing cell (" + surface.ages[static_cast<std::size_t>(x)] +
                                     ", " +
                                     std::to_string(surface.years[static_cast<std::size_t>(t)]) +
                                     ")");
            }
            surface.rates.at(x, t) = it->second;
        }
    }
    return surface;
}

}  // namespace qact::lc
