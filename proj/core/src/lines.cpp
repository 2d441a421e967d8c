#include "komori/lines.hpp"

#include <istream>

#include "komori/utf8.hpp"

namespace komori {

std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (lines.empty()) line = std::string(utf8::strip_bom(line));
    lines.push_back(std::move(line));
  }
  return lines;
}

}  // namespace komori
