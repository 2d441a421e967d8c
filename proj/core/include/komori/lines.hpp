#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace komori {

/// Reads every line of `in`. A UTF-8 BOM on the first line and a trailing
/// '\r' on any line are removed. A final line without a newline is kept;
/// an empty input yields no lines.
std::vector<std::string> read_lines(std::istream& in);

}  // namespace komori
