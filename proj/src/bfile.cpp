#include "qlab/bfile.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

namespace qlab {

namespace {

bool is_integer_token(const std::string& t, bool allow_sign) {
  std::size_t i = 0;
  if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) i = 1;
  if (i >= t.size()) return false;
  for (; i < t.size(); ++i)
    if (t[i] < '0' || t[i] > '9') return false;
  return true;
}

}  // namespace

std::vector<BFileEntry> parse_bfile(std::istream& in) {
  std::vector<BFileEntry> entries;
  std::string line;
  std::size_t lineno = 0;
  std::optional<std::int64_t> previous;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    for (unsigned char ch : line)
      if (ch >= 0x80) throw BFileError(lineno, "non-ASCII byte");

    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;

    std::istringstream fields(line);
    std::string index_text, value_text, extra;
    fields >> index_text >> value_text;
    if (value_text.empty()) throw BFileError(lineno, "expected two fields \"n value\"");
    if (fields >> extra) throw BFileError(lineno, "unexpected trailing field '" + extra + "'");
    if (!is_integer_token(index_text, false) || index_text.size() > 18)
      throw BFileError(lineno, "malformed index '" + index_text + "'");
    if (!is_integer_token(value_text, true))
      throw BFileError(lineno, "malformed value '" + value_text + "'");

    const std::int64_t index = std::stoll(index_text);
    if (previous && index <= *previous)
      throw BFileError(lineno, "index " + index_text + " is not strictly increasing");
    previous = index;
    if (value_text[0] == '+') value_text.erase(0, 1);
    entries.push_back({index, BigInt(value_text)});
  }
  return entries;
}

std::vector<BFileEntry> read_bfile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw BFileError(0, "cannot open " + path.string());
  return parse_bfile(in);
}

}  // namespace qlab
