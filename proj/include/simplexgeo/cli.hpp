#pragma once

// Batch front end: CSV ingestion, tabular/JSON output, ternary SVG, and the
// subcommand dispatcher behind the `simplexgeo` executable.

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "simplexgeo/stats.hpp"

namespace simplexgeo::cli {

/// Numeric CSV: optional single header line, uniform width, '.' decimals.
struct Table {
  std::vector<std::string> header;  // empty when the file has none
  std::vector<Vector> rows;
};

/// Throws ParseError (non-numeric cell) or RaggedRows.
Table read_table(std::istream& in);
Table read_table_file(const std::string& path);

/// Rows within 1e-9 of unit sum become compositions; other positive rows are
/// closed with `ctx` when `close` is set and rejected (NotOnSimplex) otherwise.
Dataset ingest(std::istream& in, const GeometryContext& ctx, bool close, std::vector<std::string>* header = nullptr);
Dataset ingest(const std::string& path, const GeometryContext& ctx, bool close,
               std::vector<std::string>* header = nullptr);

/// 12 significant digits, printf %.12g.
std::string format_number(double x);

/// Comma separated reals, e.g. "1,1,2".
std::vector<double> parse_list(const std::string& text);

// Ternary scatter -----------------------------------------------------------

inline constexpr double kSvgWidth = 600.0;
inline constexpr double kSvgHeight = 520.0;

/// Fixed triangle vertices V1 (bottom left), V2 (bottom right), V3 (top).
std::array<std::array<double, 2>, 3> ternary_vertices();

/// p1 V1 + p2 V2 + p3 V3
std::array<double, 2> ternary_point(const Composition& p);

void write_ternary_svg(std::ostream& out, const Dataset& data, const std::array<std::string, 3>& labels,
                       const std::optional<Composition>& marker, const std::string& title);

// Dispatcher ----------------------------------------------------------------

enum ExitStatus : int { kOk = 0, kValidationError = 1, kNumericalError = 2 };

/// args excludes the program name. Data goes to `out` (or --output), messages to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace simplexgeo::cli
