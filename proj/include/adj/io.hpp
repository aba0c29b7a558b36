#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "adj/state.hpp"

namespace adj::io {

using json = nlohmann::json;

// Every floating-point value leaves the program with 12 significant digits.
std::string format_number(double x);
// The double that format_number(x) parses back to.
double round12(double x);

// [[re, im], ...]
json state_to_json(const StateVector& state);
// Accepts the layout above; throws ValidationError on malformed input or a
// norm off by more than 1e-9 (values are written with 12 digits).
StateVector state_from_json(const json& j);

// Comma-separated, header row, LF line endings, no quoting.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

void write_csv(std::ostream& os, const CsvTable& table);
CsvTable read_csv(std::istream& is);

}  // namespace adj::io
