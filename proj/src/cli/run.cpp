#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>

#include <CLI11.hpp>
#include <json.hpp>

#include "simplexgeo/cli.hpp"
#include "simplexgeo/compose.hpp"

namespace simplexgeo::cli {

namespace {

using nlohmann::json;

struct RunConfig {
  std::string param_text;
  std::string param_file;
  std::string input;
  std::string output;
  std::string format = "csv";
  bool close = false;
  std::string indices;
  long long n = 1000;
  std::uint64_t seed = 0;
  std::string mu;
  std::string sigma;
  std::string by;
  double c = 1.0;
  long long k = 0;
  std::string title;
};

double rounded(double x) { return std::stod(format_number(x)); }

json json_vector(const Vector& v) {
  json arr = json::array();
  for (Index i = 0; i < v.size(); ++i) arr.push_back(rounded(v[i]));
  return arr;
}

json json_matrix(const Matrix& m) {
  json arr = json::array();
  for (Index i = 0; i < m.rows(); ++i) arr.push_back(json_vector(m.row(i).transpose()));
  return arr;
}

void write_csv_row(std::ostream& out, const Vector& v) {
  for (Index i = 0; i < v.size(); ++i) {
    if (i) out << ',';
    out << format_number(v[i]);
  }
  out << '\n';
}

void write_header(std::ostream& out, const std::vector<std::string>& header) {
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << '\n';
}

void write_rows(std::ostream& out, const RunConfig& cfg, const std::vector<std::string>& header,
                const std::vector<Vector>& rows) {
  if (cfg.format == "json") {
    json doc;
    doc["columns"] = header;
    json arr = json::array();
    for (const Vector& r : rows) arr.push_back(json_vector(r));
    doc["rows"] = std::move(arr);
    out << doc.dump(2) << '\n';
    return;
  }
  if (!header.empty()) write_header(out, header);
  for (const Vector& r : rows) write_csv_row(out, r);
}

std::vector<Vector> values_of(const std::vector<Composition>& rows) {
  std::vector<Vector> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r.values());
  return out;
}

std::vector<std::string> default_header(Index dim, const char* prefix) {
  std::vector<std::string> h;
  for (Index i = 1; i <= dim; ++i) h.push_back(prefix + std::to_string(i));
  return h;
}

const char* kind_name(ClosureKind kind) {
  switch (kind) {
    case ClosureKind::Uniform: return "uniform";
    case ClosureKind::LastDoubled: return "last-doubled";
    case ClosureKind::General: break;
  }
  return "general";
}

FreeVector load_param(const RunConfig& cfg) {
  if (!cfg.param_text.empty() && !cfg.param_file.empty()) {
    throw Error(ErrorCode::InvalidArgument, "give either --param or --param-file, not both");
  }
  if (!cfg.param_file.empty()) {
    Table t = read_table_file(cfg.param_file);
    if (t.rows.size() != 1) throw Error(ErrorCode::ParseError, "--param-file must hold exactly one row");
    return FreeVector(t.rows.front());
  }
  if (cfg.param_text.empty()) throw Error(ErrorCode::InvalidArgument, "--param or --param-file is required");
  const auto v = parse_list(cfg.param_text);
  return FreeVector(Eigen::Map<const Vector>(v.data(), static_cast<Index>(v.size())));
}

const std::string& require_input(const RunConfig& cfg) {
  if (cfg.input.empty()) throw Error(ErrorCode::InvalidArgument, "--input is required for this command");
  return cfg.input;
}

Composition composition_from_list(const GeometryContext& ctx, const std::string& text, bool close) {
  const auto v = parse_list(text);
  Vector x = Eigen::Map<const Vector>(v.data(), static_cast<Index>(v.size()));
  if (std::abs(x.sum() - 1.0) <= Composition::kSumTolerance || !close) return Composition(std::move(x));
  return closure(ctx, AmbientVector(std::move(x)));
}

SimplexGaussian load_gaussian(const RunConfig& cfg, const GeometryContext& ctx) {
  const Index n = ctx.dim() - 1;
  Coordinates mu = Coordinates::Zero(n);
  if (!cfg.mu.empty()) {
    const auto v = parse_list(cfg.mu);
    mu = Eigen::Map<const Vector>(v.data(), static_cast<Index>(v.size()));
  }
  Matrix sigma = Matrix::Identity(n, n);
  if (!cfg.sigma.empty()) {
    const Table t = read_table_file(cfg.sigma);
    if (static_cast<Index>(t.rows.size()) != n || t.rows.front().size() != n) {
      throw Error(ErrorCode::DimensionMismatch, "--sigma must be a " + std::to_string(n) + "x" + std::to_string(n) +
                                                    " matrix");
    }
    for (Index i = 0; i < n; ++i) sigma.row(i) = t.rows[static_cast<std::size_t>(i)].transpose();
  }
  return gaussian_new(ctx, helmert_basis(ctx.dim()), mu, sigma);
}

void cmd_param(std::ostream& out, const RunConfig& cfg, const GeometryContext& ctx) {
  if (cfg.format == "json") {
    json doc;
    doc["param"] = json_vector(ctx.param().values());
    doc["neutral"] = json_vector(ctx.neutral().values());
    doc["normalizer"] = rounded(ctx.normalizer());
    doc["closure"] = kind_name(ctx.closure_kind());
    out << doc.dump(2) << '\n';
    return;
  }
  out << "a";
  for (Index i = 0; i < ctx.dim(); ++i) out << ',' << format_number(ctx.param()[i]);
  out << "\ne_a";
  for (Index i = 0; i < ctx.dim(); ++i) out << ',' << format_number(ctx.neutral()[i]);
  out << "\ns," << format_number(ctx.normalizer()) << '\n';
}

void cmd_dist(std::ostream& out, const RunConfig& cfg, const GeometryContext& ctx, const Dataset& data) {
  std::vector<Vector> logs;
  logs.reserve(data.rows.size());
  for (const auto& r : data.rows) logs.push_back(log_map(ctx, r).values());
  const Index m = data.size();
  Matrix d = Matrix::Zero(m, m);
  for (Index i = 0; i < m; ++i) {
    for (Index j = i + 1; j < m; ++j) {
      d(i, j) = d(j, i) = (logs[static_cast<std::size_t>(i)] - logs[static_cast<std::size_t>(j)]).norm();
    }
  }
  if (cfg.format == "json") {
    out << json{{"distances", json_matrix(d)}}.dump(2) << '\n';
    return;
  }
  for (Index i = 0; i < m; ++i) write_csv_row(out, d.row(i).transpose());
}

void cmd_pca(std::ostream& out, const RunConfig& cfg, const GeometryContext& ctx, const Dataset& data) {
  const TangentBasis basis = helmert_basis(ctx.dim());
  const Index k = cfg.k > 0 ? static_cast<Index>(cfg.k) : basis.size();
  const PrincipalComponents pc = pca(ctx, basis, data, k);
  Matrix directions(k, ctx.dim());
  for (Index l = 0; l < k; ++l) directions.row(l) = pc.directions[static_cast<std::size_t>(l)].values().transpose();
  if (cfg.format == "json") {
    json doc;
    doc["mean"] = json_vector(pc.mean.values());
    doc["variances"] = json_vector(pc.variances);
    doc["total_variance"] = rounded(pc.total_variance);
    doc["directions"] = json_matrix(directions);
    doc["scores"] = json_matrix(pc.scores);
    out << doc.dump(2) << '\n';
    return;
  }
  auto line = [&out](const std::string& tag, const Vector& v) {
    out << tag;
    for (Index i = 0; i < v.size(); ++i) out << ',' << format_number(v[i]);
    out << '\n';
  };
  line("mean", pc.mean.values());
  line("variance", pc.variances);
  for (Index l = 0; l < k; ++l) line("direction" + std::to_string(l + 1), directions.row(l).transpose());
  for (Index j = 0; j < pc.scores.rows(); ++j) line("score" + std::to_string(j + 1), pc.scores.row(j).transpose());
}

void cmd_plot(std::ostream& out, const RunConfig& cfg, const GeometryContext& ctx, const Dataset& data,
              const std::vector<std::string>& header) {
  std::array<std::string, 3> labels{"x1", "x2", "x3"};
  if (header.size() == 3) labels = {header[0], header[1], header[2]};
  std::string title = cfg.title;
  if (title.empty()) {
    title = "a = (";
    for (Index i = 0; i < ctx.dim(); ++i) title += (i ? ", " : "") + format_number(ctx.param()[i]);
    title += ")";
  }
  write_ternary_svg(out, data, labels, ctx.neutral(), title);
}

void dispatch(const std::string& command, const RunConfig& cfg, std::ostream& out) {
  if (cfg.format != "csv" && cfg.format != "json") {
    throw Error(ErrorCode::InvalidArgument, "--format must be csv or json");
  }
  const GeometryContext ctx(load_param(cfg));

  if (command == "param") return cmd_param(out, cfg, ctx);

  if (command == "sample") {
    if (cfg.n < 1) throw Error(ErrorCode::InvalidArgument, "--n must be >= 1");
    const SimplexGaussian g = load_gaussian(cfg, ctx);
    RandomSource rng(cfg.seed);
    const Dataset data = gaussian_sample(g, rng, static_cast<Index>(cfg.n));
    return write_rows(out, cfg, default_header(ctx.dim(), "x"), values_of(data.rows));
  }

  if (command == "closure") {
    const Table t = read_table_file(require_input(cfg));
    std::vector<Vector> rows;
    for (const Vector& r : t.rows) rows.push_back(closure(ctx, AmbientVector(r)).values());
    return write_rows(out, cfg, t.header, rows);
  }

  if (command == "exp") {
    const Table t = read_table_file(require_input(cfg));
    std::vector<Vector> rows;
    for (const Vector& r : t.rows) rows.push_back(exp_map(ctx, TangentVector(r)).values());
    return write_rows(out, cfg, t.header, rows);
  }

  std::vector<std::string> header;
  const Dataset data = ingest(require_input(cfg), ctx, cfg.close, &header);
  if (data.dim() != ctx.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "input has " + std::to_string(data.dim()) + " parts, parameter has " +
                                                  std::to_string(ctx.dim()));
  }

  if (command == "log") {
    std::vector<Vector> rows;
    for (const auto& r : data.rows) rows.push_back(log_map(ctx, r).values());
    return write_rows(out, cfg, header, rows);
  }
  if (command == "perturb") {
    if (cfg.by.empty()) throw Error(ErrorCode::InvalidArgument, "perturb needs --by <composition>");
    const Composition gamma = composition_from_list(ctx, cfg.by, cfg.close);
    std::vector<Vector> rows;
    for (const auto& r : data.rows) rows.push_back(perturb(ctx, r, gamma).values());
    return write_rows(out, cfg, header, rows);
  }
  if (command == "power") {
    std::vector<Vector> rows;
    for (const auto& r : data.rows) rows.push_back(power(ctx, cfg.c, r).values());
    return write_rows(out, cfg, header, rows);
  }
  if (command == "dist") return cmd_dist(out, cfg, ctx, data);
  if (command == "mean") {
    return write_rows(out, cfg, header, {frechet_mean(ctx, data).values()});
  }
  if (command == "pca") return cmd_pca(out, cfg, ctx, data);
  if (command == "sub") {
    if (cfg.indices.empty()) throw Error(ErrorCode::InvalidArgument, "sub needs --indices");
    std::vector<Index> idx;
    for (double v : parse_list(cfg.indices)) {
      if (v != std::floor(v)) throw Error(ErrorCode::ParseError, "--indices must be integers");
      idx.push_back(static_cast<Index>(v));
    }
    const SubSelection sel(idx);
    sel.check(ctx.dim());
    std::vector<Vector> rows;
    for (const auto& r : data.rows) rows.push_back(subcompose(ctx, sel, r).composition.values());
    std::vector<std::string> sub_header;
    for (Index i : idx) {
      if (!header.empty()) sub_header.push_back(header[static_cast<std::size_t>(i - 1)]);
    }
    return write_rows(out, cfg, sub_header, rows);
  }
  if (command == "density") {
    const SimplexGaussian g = load_gaussian(cfg, ctx);
    std::vector<Vector> rows;
    for (const auto& r : data.rows) rows.push_back(Vector::Constant(1, gaussian_density(g, r)));
    return write_rows(out, cfg, {"density"}, rows);
  }
  if (command == "plot") return cmd_plot(out, cfg, ctx, data, header);

  throw Error(ErrorCode::InvalidArgument, "unknown command '" + command + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Parametric quotient geometry on the probability simplex", "simplexgeo"};
  RunConfig cfg;
  app.add_option("--param", cfg.param_text, "subgroup parameter a, comma separated");
  app.add_option("--param-file", cfg.param_file, "CSV file holding the parameter as one row");
  app.add_option("--input", cfg.input, "input CSV");
  app.add_option("--output", cfg.output, "output file (default: standard output)");
  app.add_option("--format", cfg.format, "csv or json");
  app.add_flag("--close", cfg.close, "close input rows that do not sum to 1");
  app.add_option("--indices", cfg.indices, "1-based part indices for sub");
  app.add_option("--n", cfg.n, "sample size");
  app.add_option("--seed", cfg.seed, "random seed");
  app.add_option("--mu", cfg.mu, "Gaussian mean in basis coordinates");
  app.add_option("--sigma", cfg.sigma, "CSV file with the Gaussian covariance in basis coordinates");
  app.add_option("--by", cfg.by, "composition to perturb by");
  app.add_option("--c", cfg.c, "scalar for power");
  app.add_option("--k", cfg.k, "number of principal components (default: all)");
  app.add_option("--title", cfg.title, "plot title");
  app.require_subcommand(1);

  const std::vector<std::pair<const char*, const char*>> commands{
      {"param", "print canonical a, neutral element and normalizer"},
      {"closure", "close positive rows onto the simplex"},
      {"log", "tangent image of each composition"},
      {"exp", "composition for each tangent row"},
      {"perturb", "perturb each row by --by"},
      {"power", "scale each row by --c"},
      {"dist", "pairwise distance matrix"},
      {"mean", "Frechet mean"},
      {"pca", "principal components"},
      {"sub", "subcompositions on --indices"},
      {"sample", "simulate the normal law"},
      {"density", "normal density of each row"},
      {"plot", "ternary scatter SVG"},
  };
  for (const auto& [name, help] : commands) app.add_subcommand(name, help)->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (cfg.output.empty()) {
      dispatch(command, cfg, out);
    } else {
      std::ostringstream buffer;
      dispatch(command, cfg, buffer);
      std::ofstream file(cfg.output, std::ios::binary);
      if (!file) throw Error(ErrorCode::InvalidArgument, "cannot write '" + cfg.output + "'");
      file << buffer.str();
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_numerical(e.code()) ? kNumericalError : kValidationError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kNumericalError;
  }
  return kOk;
}

}  // namespace simplexgeo::cli
