#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "qact/lc/matrix.hpp"

namespace qact::lc {

// Ages x years grid of central death rates. Ages are band labels ("0",
// "1-4", "5-9", ...) ordered by their leading integer; years are calendar
// years. The grid must be complete and strictly positive (the model takes
// logs).
struct MortalitySurface {
    std::vector<std::string> ages;
    std::vector<int> years;
    Matrix rates;  // rows follow `ages`, columns follow `years`

    double rate(int age_index, int year_index) const { return rates.at(age_index, year_index); }
};

// Reads a TSV with header "age\tyear\trate", one row per cell, any row
// order. Throws IngestionError naming the offending cell on duplicates,
// gaps, or non-positive rates.
MortalitySurface load_mortality(const std::filesystem::path& path);

}  // namespace qact::lc
