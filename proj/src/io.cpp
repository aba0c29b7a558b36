#include "adj/io.hpp"

#include <fmt/format.h>

#include <istream>
#include <ostream>
#include <sstream>

#include "adj/errors.hpp"

namespace adj::io {

std::string format_number(double x) {
  if (x == 0.0) return "0";  // no "-0"
  return fmt::format("{:.12g}", x);
}

double round12(double x) { return std::stod(format_number(x)); }

json state_to_json(const StateVector& state) {
  json arr = json::array();
  for (const auto& z : state.amplitudes()) {
    arr.push_back(json::array({round12(z.real()), round12(z.imag())}));
  }
  return arr;
}

StateVector state_from_json(const json& j) {
  if (!j.is_array() || j.empty()) {
    throw ValidationError("state JSON must be a nonempty array of [re, im] pairs");
  }
  std::vector<cplx> amps;
  amps.reserve(j.size());
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      throw ValidationError("state JSON entries must be [re, im] number pairs");
    }
    amps.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  return StateVector(std::move(amps), 1e-9);
}

void write_csv(std::ostream& os, const CsvTable& table) {
  const auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) os << ',';
      os << cells[i];
    }
    os << '\n';
  };
  line(table.header);
  for (const auto& row : table.rows) line(row);
}

CsvTable read_csv(std::istream& is) {
  CsvTable table;
  std::string text;
  bool first = true;
  while (std::getline(is, text)) {
    std::vector<std::string> cells;
    std::stringstream ss(text);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (first) {
      table.header = std::move(cells);
      first = false;
    } else {
      if (cells.size() != table.header.size()) {
        throw ValidationError("CSV row has " + std::to_string(cells.size()) +
                              " cells, header has " + std::to_string(table.header.size()));
      }
      table.rows.push_back(std::move(cells));
    }
  }
  return table;
}

}  // namespace adj::io
