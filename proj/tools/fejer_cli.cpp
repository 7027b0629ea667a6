// fejer: circular density and distribution function estimates from the
// command line, plus reproduction of the simulation tables.

#include "fejer/angles.hpp"
#include "fejer/bandwidth.hpp"
#include "fejer/deconv.hpp"
#include "fejer/estimators.hpp"
#include "fejer/harness.hpp"
#include "fejer/io.hpp"
#include "fejer/origin.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using fejer::ParseError;
using Header = std::vector<std::pair<std::string, std::string>>;

enum ExitCode
{
  kOk = 0,
  kParseError = 1,
  kInfeasible = 2,
  kDegenerate = 3
};

struct InputOptions
{
  std::string path;
  bool degrees = false;
  bool rainfall = false;
  std::string rainfall_phase = "center";
};

struct OutputOptions
{
  std::size_t grid = 512;
  std::string format = "csv";
  std::string output;
};

struct DensityOptions
{
  InputOptions input;
  OutputOptions out;
  std::string m = "opt-parametric";
  int M = 0;
  bool unbiased = false;
  std::string berkson;
  std::string classical;
  bool clip = false;
};

struct CdfOptions
{
  InputOptions input;
  OutputOptions out;
  std::string m = "opt";
  std::string origin = "fixed:-pi";
};

struct ReproduceOptions
{
  std::string table = "all";
  std::optional<std::uint64_t> seed;
  std::size_t reps = 500;
  std::string out_dir = ".";
  unsigned threads = 1;
};

std::string fmt(double x)
{
  return fejer::format_exact(x);
}

fejer::AngleSample load_sample(const InputOptions& in)
{
  if (in.rainfall) {
    if (!in.path.empty())
      throw ParseError("--rainfall cannot be combined with an input file");
    if (in.rainfall_phase != "center" && in.rainfall_phase != "month-start")
      throw ParseError("--rainfall-phase must be 'center' or 'month-start'");
    return fejer::load_rainfall(in.rainfall_phase == "center" ? fejer::RainfallPhase::BinCenter
                                                              : fejer::RainfallPhase::MonthStart);
  }
  const auto unit = in.degrees ? fejer::AngleUnit::Degrees : fejer::AngleUnit::Radians;
  if (in.path.empty() || in.path == "-")
    return fejer::to_sample(fejer::read_input(std::cin, unit));
  std::ifstream file(in.path);
  if (!file)
    throw ParseError("cannot open '" + in.path + "'");
  return fejer::to_sample(fejer::read_input(file, unit));
}

// "none", "laplace:0.2", "uniform:pi/12", "vonmises:20"
fejer::ErrorModel parse_error_model(const std::string& text)
{
  if (text.empty() || text == "none")
    return fejer::ErrorModel::none();
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw ParseError("error model '" + text + "' must look like kind:parameter");
  const std::string kind = text.substr(0, colon);
  const double p = fejer::parse_angle_expression(text.substr(colon + 1));
  try {
    if (kind == "laplace")
      return fejer::ErrorModel::wrapped_laplace(p);
    if (kind == "uniform")
      return fejer::ErrorModel::wrapped_uniform(p);
    if (kind == "vonmises")
      return fejer::ErrorModel::von_mises(p);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  throw ParseError("unknown error kind '" + kind + "' (laplace, uniform, vonmises)");
}

std::optional<int> parse_fixed_order(const std::string& text)
{
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    return std::nullopt;
  const long v = std::strtol(text.c_str(), nullptr, 10);
  if (v < 1 || v > 10000000)
    throw ParseError("--m must be a positive order");
  return static_cast<int>(v);
}

std::size_t effective_n(const fejer::AngleSample& sample)
{
  return static_cast<std::size_t>(std::llround(sample.total_weight()));
}

const char* method_name(fejer::Theta1Method m)
{
  return m == fejer::Theta1Method::ParametricVonMises ? "parametric-vm" : "nonparametric";
}

void emit(const fejer::EstimateGrid& grid, const Header& header, const OutputOptions& out)
{
  std::ostringstream text;
  if (out.format == "csv") {
    fejer::write_grid_csv(text, grid, header);
  } else {
    nlohmann::ordered_json j;
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    for (const auto& [k, v] : header)
      meta[k] = v;
    j["meta"] = meta;
    j["theta"] = grid.theta;
    j["value"] = grid.values;
    text << j.dump(2) << '\n';
  }
  if (out.output.empty() || out.output == "-") {
    std::cout << text.str();
  } else {
    std::ofstream file(out.output);
    if (!file)
      throw ParseError("cannot write '" + out.output + "'");
    file << text.str();
  }
}

void describe_sample(Header& h, const fejer::AngleSample& s)
{
  h.emplace_back("observations", std::to_string(s.size()));
  h.emplace_back("total_weight", fmt(s.total_weight()));
}

int cmd_density(const DensityOptions& o)
{
  if (!o.berkson.empty() && !o.classical.empty())
    throw ParseError("--berkson and --classical are mutually exclusive");
  const auto sample = load_sample(o.input);
  const auto grid = fejer::uniform_grid(o.out.grid);
  const std::size_t n = effective_n(sample);
  const auto berkson = parse_error_model(o.berkson);
  const auto classical = parse_error_model(o.classical);

  Header h;
  h.emplace_back("estimate", "density");
  describe_sample(h, sample);

  fejer::FejerOrder m{ 1 };
  if (auto fixed = parse_fixed_order(o.m)) {
    m = fejer::FejerOrder(*fixed);
    h.emplace_back("m_rule", "fixed");
  } else if (o.m == "sqrt-n") {
    m = fejer::round_order(std::sqrt(static_cast<double>(n)));
    h.emplace_back("m_rule", "sqrt-n");
  } else if (o.m == "opt-parametric" || o.m == "opt-nonparametric") {
    const auto th = o.m == "opt-parametric"
                      ? fejer::theta1_parametric_vm(sample)
                      : fejer::theta1_nonparametric(sample,
                                                    o.M > 0 ? o.M : fejer::default_moment_order(n),
                                                    o.unbiased);
    const bool wl = classical.kind() == fejer::ErrorKind::WrappedLaplace;
    const auto bw = wl ? fejer::m_opt_classical_wl(th, n, classical.parameter()) : fejer::m_opt_density(th, n);
    m = bw.m;
    h.emplace_back("m_rule", o.m + (wl ? " (wrapped-laplace deconvolution)" : ""));
    h.emplace_back("theta1_hat", fmt(th.value));
    h.emplace_back("theta1_method", method_name(th.method));
    if (th.method == fejer::Theta1Method::ParametricVonMises) {
      h.emplace_back("kappa_hat", fmt(th.kappa_hat));
      h.emplace_back("mu_hat", fmt(th.mu_hat));
    } else {
      h.emplace_back("moment_order", std::to_string(th.M_used));
      h.emplace_back("clamped", th.clamped ? "true" : "false");
    }
    h.emplace_back("m_real", fmt(bw.m_real));
  } else {
    throw ParseError("--m must be an integer, sqrt-n, opt-parametric or opt-nonparametric");
  }
  h.emplace_back("m", std::to_string(m.value()));

  fejer::EstimateGrid out;
  if (berkson.kind() != fejer::ErrorKind::None || classical.kind() != fejer::ErrorKind::None) {
    const bool is_berkson = berkson.kind() != fejer::ErrorKind::None;
    const fejer::DeconvolutionOptions opts{ o.clip };
    const auto d = is_berkson ? fejer::berkson_estimate(sample, m, berkson, grid, opts)
                              : fejer::classical_estimate(sample, m, classical, grid, opts);
    h.emplace_back(is_berkson ? "berkson_error" : "classical_error",
                   is_berkson ? berkson.label() : classical.label());
    h.emplace_back("min_value", fmt(d.min_value));
    h.emplace_back("negative_points", std::to_string(d.negative_points));
    h.emplace_back("clipped", d.clipped ? "true" : "false");
    out = d.grid;
  } else {
    out = fejer::density_estimate(sample, m, grid);
  }
  emit(out, h, o.out);
  return kOk;
}

int cmd_cdf(const CdfOptions& o)
{
  const auto sample = load_sample(o.input);
  const auto grid = fejer::uniform_grid(o.out.grid);
  const std::size_t n = effective_n(sample);

  Header h;
  h.emplace_back("estimate", "cdf");
  describe_sample(h, sample);

  double origin = 0.0;
  if (o.origin == "auto") {
    const auto sel = fejer::select_origin(sample);
    origin = sel.theta0;
    h.emplace_back("origin_rule", "auto");
    h.emplace_back("cn_min", fmt(sel.criterion_min));
    h.emplace_back("cn_max", fmt(sel.criterion_max));
    h.emplace_back("minimizing_arc", fmt(sel.minimizing_arc.start) + " " + fmt(sel.minimizing_arc.end));
  } else if (o.origin.rfind("fixed:", 0) == 0) {
    origin = fejer::wrap_angle(fejer::parse_angle_expression(o.origin.substr(6)));
    h.emplace_back("origin_rule", "fixed");
  } else {
    throw ParseError("--origin must be 'auto' or 'fixed:<angle>'");
  }
  h.emplace_back("theta0", fmt(origin));

  fejer::FejerOrder m{ 1 };
  if (auto fixed = parse_fixed_order(o.m)) {
    m = fejer::FejerOrder(*fixed);
    h.emplace_back("m_rule", "fixed");
  } else if (o.m == "sqrt-n") {
    m = fejer::round_order(std::sqrt(static_cast<double>(n)));
    h.emplace_back("m_rule", "sqrt-n");
  } else if (o.m == "opt" || o.m == "opt-parametric") {
    const auto bw = fejer::m_opt_cdf(sample, origin);
    m = bw.m;
    h.emplace_back("m_rule", "opt-parametric");
    h.emplace_back("theta2_hat", fmt(bw.theta_estimate));
    h.emplace_back("kappa_hat", fmt(bw.kappa_hat));
    h.emplace_back("c", fmt(bw.c));
    h.emplace_back("m_real", fmt(bw.m_real));
    if (bw.degenerate)
      h.emplace_back("degenerate", "true");
  } else {
    throw ParseError("--m must be an integer, sqrt-n or opt");
  }
  h.emplace_back("m", std::to_string(m.value()));

  emit(fejer::cdf_estimate(sample, m, origin, grid), h, o.out);
  return kOk;
}

int cmd_reproduce(const ReproduceOptions& o)
{
  std::vector<fejer::TableId> ids;
  if (o.table == "all") {
    ids = { fejer::TableId::T1, fejer::TableId::T2, fejer::TableId::T3,
            fejer::TableId::T4, fejer::TableId::T5, fejer::TableId::AppendixB };
  } else if (auto id = fejer::parse_table_id(o.table)) {
    ids = { *id };
  } else {
    throw ParseError("unknown table '" + o.table + "' (t1..t5, appendix-b, all)");
  }

  fejer::TableOptions opts;
  opts.replications = o.reps;
  opts.threads = o.threads;
  if (o.seed) {
    opts.seed = *o.seed;
  } else if (const char* env = std::getenv("FEJER_SEED")) {
    char* end = nullptr;
    opts.seed = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0')
      throw ParseError("FEJER_SEED must be an unsigned integer");
  }
  if (opts.replications == 0)
    throw ParseError("--n-reps must be positive");

  std::filesystem::create_directories(o.out_dir);
  for (auto id : ids) {
    const auto table = fejer::run_table(id, opts);
    const auto path = std::filesystem::path(o.out_dir) / (fejer::table_name(id) + ".csv");
    std::ofstream file(path, std::ios::binary);
    if (!file)
      throw ParseError("cannot write '" + path.string() + "'");
    file << fejer::to_csv(table);
    std::size_t flagged = 0;
    for (const auto& row : table.rows)
      for (bool ok : row.within_tolerance)
        flagged += ok ? 0 : 1;
    std::cout << path.string() << ": " << table.rows.size() << " rows, " << flagged
              << " cells outside tolerance\n";
  }
  return kOk;
}

void add_input_options(CLI::App* cmd, InputOptions& in)
{
  cmd->add_option("input", in.path, "Input file (one angle per line, or angle,count); '-' or omitted reads stdin");
  cmd->add_flag("--degrees", in.degrees, "Input angles are in degrees");
  cmd->add_flag("--rainfall", in.rainfall, "Use the built-in monthly rainfall frequencies");
  cmd->add_option("--rainfall-phase", in.rainfall_phase, "Month placement: center (default) or month-start");
}

void add_output_options(CLI::App* cmd, OutputOptions& out)
{
  cmd->add_option("--grid", out.grid, "Number of grid points on [-pi, pi)")->check(CLI::PositiveNumber);
  cmd->add_option("--format", out.format, "csv or json")->check(CLI::IsMember({ "csv", "json" }));
  cmd->add_option("-o,--output", out.output, "Write to a file instead of stdout");
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{ "Fejer-polynomial density and distribution function estimation on the circle" };
  app.require_subcommand(1);

  DensityOptions dens;
  auto* density = app.add_subcommand("density", "Density estimate on a grid");
  add_input_options(density, dens.input);
  add_output_options(density, dens.out);
  density->add_option("--m", dens.m, "Order: integer, sqrt-n, opt-parametric (default), opt-nonparametric");
  density->add_option("--M", dens.M, "Moment truncation for opt-nonparametric (default round(2 n^0.25))");
  density->add_flag("--unbiased", dens.unbiased, "Unbiased squared-moment estimates for opt-nonparametric");
  density->add_option("--berkson", dens.berkson, "Berkson error: laplace:rho, uniform:a, vonmises:kappa");
  density->add_option("--classical", dens.classical, "Classical error: laplace:rho, uniform:a, vonmises:kappa");
  density->add_flag("--clip", dens.clip, "Clip negative deconvolution values and renormalize");

  CdfOptions cdf;
  auto* cdfcmd = app.add_subcommand("cdf", "Distribution function estimate on a grid");
  add_input_options(cdfcmd, cdf.input);
  add_output_options(cdfcmd, cdf.out);
  cdfcmd->add_option("--m", cdf.m, "Order: integer, sqrt-n or opt (default)");
  cdfcmd->add_option("--origin", cdf.origin, "fixed:<angle> (default fixed:-pi) or auto");

  ReproduceOptions rep;
  std::uint64_t seed = 0;
  auto* reproduce = app.add_subcommand("reproduce", "Rerun the simulation tables and write CSV files");
  reproduce->add_option("--table", rep.table, "t1..t5, appendix-b or all (default)");
  auto* seed_opt = reproduce->add_option("--seed", seed, "Master seed (default $FEJER_SEED, else 20240501)");
  reproduce->add_option("--n-reps", rep.reps, "Replications per cell (default 500)");
  reproduce->add_option("--out-dir", rep.out_dir, "Output directory (default .)");
  reproduce->add_option("--threads", rep.threads, "Worker threads per cell")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParseError;
  }
  if (seed_opt->count() > 0)
    rep.seed = seed;

  try {
    if (*density)
      return cmd_density(dens);
    if (*cdfcmd)
      return cmd_cdf(cdf);
    return cmd_reproduce(rep);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const fejer::InfeasibleDeconvolution& e) {
    std::cerr << "error: deconvolution infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const fejer::DegenerateSample& e) {
    std::cerr << "error: degenerate sample: " << e.what() << '\n';
    return kDegenerate;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParseError;
  }
}
