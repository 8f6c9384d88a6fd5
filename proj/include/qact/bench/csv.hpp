#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qact::bench {

// Plot-ready CSV with a leading comment row carrying the config hash.
class CsvBuilder {
  public:
    CsvBuilder(std::uint64_t config_hash, std::vector<std::string> columns);

    void add_raw(const std::string& cell);  // verbatim cell (strings, ints)
    void add(double value);                 // formatted %.12g
    void add(std::uint64_t value);
    void end_row();

    std::string str() const { return text_; }

  private:
    std::string text_;
    std::size_t columns_ = 0;
    std::size_t in_row_ = 0;
};

std::string format_double(double value);

}  // namespace qact::bench
