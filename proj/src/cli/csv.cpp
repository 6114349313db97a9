#include <cmath>
#include <cstdio>
#include <charconv>
#include <fstream>
#include <sstream>

#include "simplexgeo/cli.hpp"

namespace simplexgeo::cli {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

std::optional<double> parse_number(const std::string& cell) {
  if (cell.empty()) return std::nullopt;
  const char* begin = cell.data();
  const char* end = begin + cell.size();
  if (*begin == '+') ++begin;
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

}  // namespace

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  for (const std::string& cell : split(text)) {
    auto v = parse_number(cell);
    if (!v) throw Error(ErrorCode::ParseError, "not a number: '" + cell + "'");
    out.push_back(*v);
  }
  if (out.empty()) throw Error(ErrorCode::ParseError, "empty list");
  return out;
}

Table read_table(std::istream& in) {
  Table table;
  std::string line;
  std::size_t line_no = 0;
  std::size_t width = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto cells = split(line);
    std::vector<double> values;
    values.reserve(cells.size());
    bool numeric = true;
    for (const auto& cell : cells) {
      auto v = parse_number(cell);
      if (!v) {
        numeric = false;
        break;
      }
      values.push_back(*v);
    }
    if (!numeric) {
      if (table.rows.empty() && table.header.empty()) {
        table.header = cells;
        width = cells.size();
        continue;
      }
      throw Error(ErrorCode::ParseError, "non-numeric cell on line " + std::to_string(line_no));
    }
    if (width == 0) width = values.size();
    if (values.size() != width) {
      throw Error(ErrorCode::RaggedRows, "line " + std::to_string(line_no) + " has " + std::to_string(values.size()) +
                                             " cells, expected " + std::to_string(width));
    }
    table.rows.push_back(Eigen::Map<const Vector>(values.data(), static_cast<Index>(values.size())));
  }
  return table;
}

Table read_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
  return read_table(in);
}

Dataset ingest(std::istream& in, const GeometryContext& ctx, bool close, std::vector<std::string>* header) {
  Table table = read_table(in);
  if (header) *header = table.header;
  Dataset data;
  data.rows.reserve(table.rows.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const Vector& row = table.rows[r];
    for (Index i = 0; i < row.size(); ++i) {
      if (!(row[i] > 0.0) || !std::isfinite(row[i])) {
        throw Error(ErrorCode::NonPositiveValue, "row " + std::to_string(r + 1) + " has a non-positive value");
      }
    }
    if (std::abs(row.sum() - 1.0) <= Composition::kSumTolerance) {
      data.rows.emplace_back(row);
    } else if (close) {
      data.rows.push_back(closure(ctx, AmbientVector(row)));
    } else {
      throw Error(ErrorCode::NotOnSimplex,
                  "row " + std::to_string(r + 1) + " sums to " + format_number(row.sum()) + " (pass --close to close it)");
    }
  }
  if (data.rows.empty()) throw Error(ErrorCode::InvalidArgument, "input has no data rows");
  return data;
}

Dataset ingest(const std::string& path, const GeometryContext& ctx, bool close, std::vector<std::string>* header) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
  return ingest(in, ctx, close, header);
}

}  // namespace simplexgeo::cli
