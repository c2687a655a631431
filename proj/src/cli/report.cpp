#include "gapasym/cli/report.hpp"

#include <cmath>
#include <cstdio>

#include "gapasym/errors.hpp"

namespace gapasym::cli {

namespace {

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string cell_text(const Cell& c) {
  struct Visitor {
    std::string operator()(const std::string& s) const { return csv_field(s); }
    std::string operator()(long long v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_real(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
  };
  return std::visit(Visitor{}, c);
}

nlohmann::ordered_json cell_json(const Cell& c) {
  return std::visit([](const auto& v) { return nlohmann::ordered_json(v); }, c);
}

}  // namespace

void validate(const Report& r) {
  for (const auto& row : r.rows) {
    if (row.size() != r.columns.size()) throw InputError("report row does not match the column count");
    for (const auto& c : row)
      if (const double* d = std::get_if<double>(&c); d && !std::isfinite(*d))
        throw NumericalFailure("report contains a non-finite value");
  }
}

std::string to_csv(const Report& r) {
  std::string out;
  for (std::size_t i = 0; i < r.columns.size(); ++i) {
    if (i) out += ',';
    out += csv_field(r.columns[i]);
  }
  out += '\n';
  for (const auto& row : r.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += cell_text(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["command"] = r.command;
  j["parameters"] = r.parameters;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : r.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[r.columns[i]] = cell_json(row[i]);
    j["rows"].push_back(std::move(obj));
  }
  return j.dump(2) + "\n";
}

std::string render(const Report& r, Format f) { return f == Format::csv ? to_csv(r) : to_json(r); }

std::size_t ParsedCsv::column(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i] == name) return i;
  throw InputError("parse_csv: no column named " + name);
}

double ParsedCsv::real(std::size_t row, const std::string& name) const {
  return std::stod(rows.at(row).at(column(name)));
}

ParsedCsv parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> lines;
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false, any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
      continue;
    }
    if (c == '"') {
      quoted = true;
      any = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (c == '\n') {
      fields.push_back(std::move(field));
      field.clear();
      lines.push_back(std::move(fields));
      fields.clear();
      any = false;
    } else {
      field += c;
      any = true;
    }
  }
  if (quoted) throw InputError("parse_csv: unterminated quoted field");
  if (any || !fields.empty()) {
    fields.push_back(std::move(field));
    lines.push_back(std::move(fields));
  }
  if (lines.empty()) throw InputError("parse_csv: missing header");
  ParsedCsv out;
  out.columns = std::move(lines.front());
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].size() != out.columns.size()) throw InputError("parse_csv: ragged row");
    out.rows.push_back(std::move(lines[i]));
  }
  return out;
}

}  // namespace gapasym::cli
