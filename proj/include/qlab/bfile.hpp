#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <stdexcept>
#include <vector>

#include "qlab/bigint.hpp"

namespace qlab {

// One "n value" line of an OEIS b-file.
struct BFileEntry {
  std::int64_t index;
  BigInt value;
};

class BFileError : public std::runtime_error {
 public:
  BFileError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  // 1-based; 0 when the file could not be opened.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Lines are "n value" separated by arbitrary blanks; '#' lines and blank lines
// are skipped. Indices must be strictly increasing but need not be contiguous.
std::vector<BFileEntry> parse_bfile(std::istream& in);
std::vector<BFileEntry> read_bfile(const std::filesystem::path& path);

}  // namespace qlab
