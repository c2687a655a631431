#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace gapasym::cli {

using Cell = std::variant<std::string, long long, double, bool>;

struct Report {
  std::string command;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

enum class Format { csv, json };

// Reals at 17 significant digits, LF line ends, header first.
std::string to_csv(const Report& r);
// {"command", "parameters", "rows"} with one object per row.
std::string to_json(const Report& r);
std::string render(const Report& r, Format f);

// Throws NumericalFailure if any real cell is not finite, InputError if a
// row does not match the column count.
void validate(const Report& r);

struct ParsedCsv {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  std::size_t column(const std::string& name) const;
  double real(std::size_t row, const std::string& name) const;
};

// Reads the CSV written by to_csv. Fields may be double-quoted.
ParsedCsv parse_csv(const std::string& text);

}  // namespace gapasym::cli
