#include "qact/bench/csv.hpp"

#include <cstdio>

#include "qact/errors.hpp"

namespace qact::bench {

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

CsvBuilder::CsvBuilder(std::uint64_t config_hash, std::vector<std::string> columns)
    : columns_(columns.size()) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(config_hash));
    text_ = "# config_hash=";
    text_ += buf;
    text_ += '\n';
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i > 0) text_ += ',';
        text_ += columns[i];
    }
    text_ += '\n';
}

void CsvBuilder::add_raw(const std::string& cell) {
    if (in_row_ > 0) text_ += ',';
    text_ += cell;
    ++in_row_;
}

void CsvBuilder::add(double value) { add_raw(format_double(value)); }

void CsvBuilder::add(std::uint64_t value) { add_raw(std::to_string(value)); }

void CsvBuilder::end_row() {
    if (in_row_ != columns_) {
        throw UsageError("CSV row width does not match the declared columns");
    }
    text_ += '\n';
    in_row_ = 0;
}

}  // namespace qact::bench
