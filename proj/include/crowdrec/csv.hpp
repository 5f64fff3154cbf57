#pragma once

#include <istream>
#include <string>
#include <vector>

namespace crowdrec::csv {

// Splits one CSV record. Supports double-quoted fields with "" escapes;
// fields never span multiple lines in our schemas.
std::vector<std::string> split_record(const std::string& line);

// Quotes a field only when it contains a comma, quote or newline.
std::string escape_field(const std::string& field);

std::string join_record(const std::vector<std::string>& fields);

// Reads lines, skipping a trailing \r (CRLF input).
bool read_line(std::istream& in, std::string& line);

}  // namespace crowdrec::csv
