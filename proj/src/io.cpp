#include "troprank/io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "troprank/errors.hpp"

namespace troprank {

namespace {

std::string position(std::size_t row, std::size_t col) {
  return "row " + std::to_string(row + 1) + ", column " + std::to_string(col + 1);
}

Rational parse_cell(std::string_view text, std::size_t row, std::size_t col) {
  try {
    return parse_rational(text);
  } catch (const DomainError&) {
    throw DomainError(position(row, col) + ": '" + std::string(text) + "' is not a rational number");
  }
}

bool blank(std::string_view s) {
  return s.find_first_not_of(" \t\r") == std::string_view::npos;
}

}  // namespace

TropMatrix parse_csv(std::string_view text) {
  std::vector<std::vector<Rational>> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    if (blank(line)) continue;
    std::vector<Rational> row;
    std::size_t c0 = 0;
    for (;;) {
      std::size_t c1 = line.find(',', c0);
      std::string_view cell = line.substr(c0, c1 == std::string_view::npos ? std::string_view::npos : c1 - c0);
      row.push_back(parse_cell(cell, rows.size(), row.size()));
      if (c1 == std::string_view::npos) break;
      c0 = c1 + 1;
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw ShapeError("row " + std::to_string(rows.size() + 1) + " has " + std::to_string(row.size()) +
                       " entries, expected " + std::to_string(rows.front().size()));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ShapeError("empty matrix");
  return TropMatrix::from_rows(rows);
}

TropMatrix parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_array())
    throw ShapeError("JSON matrix needs an \"entries\" array");
  std::vector<std::vector<Rational>> rows;
  for (const auto& r : doc["entries"]) {
    if (!r.is_array()) throw ShapeError("row " + std::to_string(rows.size() + 1) + " is not an array");
    std::vector<Rational> row;
    for (const auto& cell : r) {
      if (cell.is_string()) row.push_back(parse_cell(cell.get<std::string>(), rows.size(), row.size()));
      else if (cell.is_number_integer()) row.push_back(parse_cell(cell.dump(), rows.size(), row.size()));
      else
        throw DomainError(position(rows.size(), row.size()) + ": " + cell.dump() +
                          " is not a rational literal (write non-integers as strings)");
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw ShapeError("row " + std::to_string(rows.size() + 1) + " has " + std::to_string(row.size()) +
                       " entries, expected " + std::to_string(rows.front().size()));
    rows.push_back(std::move(row));
  }
  if (rows.empty() || rows.front().empty()) throw ShapeError("empty matrix");
  auto check = [&](const char* key, std::size_t actual) {
    if (doc.contains(key) && (!doc[key].is_number_unsigned() || doc[key].get<std::size_t>() != actual))
      throw ShapeError(std::string("\"") + key + "\" does not match the entries");
  };
  check("rows", rows.size());
  check("cols", rows.front().size());
  return TropMatrix::from_rows(rows);
}

MatrixFile parse_matrix(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return {MatrixFormat::json, parse_json(text)};
  return {MatrixFormat::csv, parse_csv(text)};
}

MatrixFile read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str());
}

std::string to_csv(const TropMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? "," : "") + to_string(m(i, j));
    out += '\n';
  }
  return out;
}

std::string to_json(const TropMatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    entries.push_back(row);
  }
  nlohmann::json doc{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
  return doc.dump() + "\n";
}

}  // namespace troprank
