#include <cmath>
#include <cstdio>
#include <ostream>

#include "simplexgeo/cli.hpp"

namespace simplexgeo::cli {

namespace {

constexpr double kMargin = 60.0;
constexpr double kBase = 460.0;

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::array<std::array<double, 2>, 3> ternary_vertices() {
  const double side = kSvgWidth - 2.0 * kMargin;
  return {{{kMargin, kBase}, {kSvgWidth - kMargin, kBase}, {kSvgWidth / 2.0, kBase - side * std::sqrt(3.0) / 2.0}}};
}

std::array<double, 2> ternary_point(const Composition& p) {
  if (p.size() != 3) throw Error(ErrorCode::DimensionMismatch, "ternary plots need 3-part compositions");
  const auto v = ternary_vertices();
  return {p[0] * v[0][0] + p[1] * v[1][0] + p[2] * v[2][0], p[0] * v[0][1] + p[1] * v[1][1] + p[2] * v[2][1]};
}

void write_ternary_svg(std::ostream& out, const Dataset& data, const std::array<std::string, 3>& labels,
                       const std::optional<Composition>& marker, const std::string& title) {
  if (data.dim() != 3) throw Error(ErrorCode::DimensionMismatch, "plot needs 3-part compositions");
  const auto v = ternary_vertices();
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"600\" height=\"520\" "
         "viewBox=\"0 0 600 520\">\n"
      << "  <rect x=\"0\" y=\"0\" width=\"600\" height=\"520\" fill=\"white\"/>\n";
  if (!title.empty()) {
    out << "  <text x=\"300\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">"
        << escape(title) << "</text>\n";
  }
  out << "  <polygon points=\"";
  for (const auto& p : v) out << fixed(p[0]) << ',' << fixed(p[1]) << ' ';
  out << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";

  const std::array<std::array<double, 2>, 3> label_pos{
      {{v[0][0] - 10.0, v[0][1] + 22.0}, {v[1][0] + 10.0, v[1][1] + 22.0}, {v[2][0], v[2][1] - 10.0}}};
  for (int i = 0; i < 3; ++i) {
    out << "  <text x=\"" << fixed(label_pos[i][0]) << "\" y=\"" << fixed(label_pos[i][1])
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" << escape(labels[i])
        << "</text>\n";
  }

  out << "  <g fill=\"steelblue\" fill-opacity=\"0.6\">\n";
  for (const Composition& row : data.rows) {
    const auto p = ternary_point(row);
    out << "    <circle cx=\"" << fixed(p[0]) << "\" cy=\"" << fixed(p[1]) << "\" r=\"2\"/>\n";
  }
  out << "  </g>\n";

  if (marker) {
    const auto p = ternary_point(*marker);
    out << "  <g stroke=\"crimson\" stroke-width=\"2\">\n"
        << "    <line x1=\"" << fixed(p[0] - 6) << "\" y1=\"" << fixed(p[1] - 6) << "\" x2=\"" << fixed(p[0] + 6)
        << "\" y2=\"" << fixed(p[1] + 6) << "\"/>\n"
        << "    <line x1=\"" << fixed(p[0] - 6) << "\" y1=\"" << fixed(p[1] + 6) << "\" x2=\"" << fixed(p[0] + 6)
        << "\" y2=\"" << fixed(p[1] - 6) << "\"/>\n"
        << "  </g>\n";
  }
  out << "</svg>\n";
}

}  // namespace simplexgeo::cli
