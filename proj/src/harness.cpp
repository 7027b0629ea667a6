#include "fejer/harness.hpp"

#include "fejer/origin.hpp"
#include "reference_values.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace fejer {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kRoundingStep = kPi / 6.0;

double round_to_step(double x)
{
  return wrap_angle(std::nearbyint(x / kRoundingStep) * kRoundingStep);
}

struct Replication
{
  bool ok = false;
  double ise = 0.0;
  int m = 0;
  double theta0 = 0.0;
};

class ExperimentRunner
{
public:
  explicit ExperimentRunner(const ExperimentSpec& spec)
    : spec_(spec)
    , grid_(uniform_grid(spec.grid_size))
    , coeffs_(spec.model.fourier_coeffs(spec.model.truncation()))
  {
    if (spec.n < 1)
      throw std::invalid_argument("experiment needs n >= 1");
    if (spec.replications < 1)
      throw std::invalid_argument("experiment needs at least one replication");
    if (spec.m_rule.kind == MRuleKind::OptNonparametric && spec.target.kind == TargetKind::Cdf)
      throw std::invalid_argument("no nonparametric order rule for CDF targets");

    const auto& t = spec.target;
    if (t.kind == TargetKind::Berkson && t.contamination == Contamination::Additive)
      truth_coeffs_ = convolve_model(coeffs_, t.true_error);
    else
      truth_coeffs_ = coeffs_;

    if (t.kind != TargetKind::Cdf) {
      truth_.resize(grid_.size());
      const bool exact = t.kind != TargetKind::Berkson || t.contamination == Contamination::Rounding;
      for (std::size_t i = 0; i < grid_.size(); ++i)
        truth_[i] = exact ? spec.model.density(grid_[i]) : fourier_density(truth_coeffs_, grid_[i]);
    } else if (t.origin) {
      truth_ = cdf_truth(*t.origin);
    }
  }

  Replication run(std::size_t r) const
  {
    RngStream rng(spec_.master_seed, r);
    const auto sample = AngleSample(observe(rng));
    Replication out;
    try {
      double origin = 0.0;
      if (spec_.target.kind == TargetKind::Cdf)
        origin = spec_.target.origin ? *spec_.target.origin : select_origin(sample).theta0;
      const FejerOrder m = select_order(sample, origin);
      const auto estimate = estimate_on_grid(sample, m, origin);
      if (spec_.target.kind == TargetKind::Cdf && !spec_.target.origin)
        out.ise = ise(estimate, cdf_truth(origin));
      else
        out.ise = ise(estimate, truth_);
      out.m = m.value();
      out.theta0 = origin;
      out.ok = true;
    } catch (const DegenerateSample&) {
      out.ok = false;
    } catch (const InfeasibleDeconvolution&) {
      out.ok = false;
    }
    return out;
  }

  double theoretical_order(double origin) const
  {
    const auto& t = spec_.target;
    switch (t.kind) {
      case TargetKind::Density:
      case TargetKind::Berkson:
        return m_opt_density(theta1(truth_coeffs_), spec_.n).m_real;
      case TargetKind::Cdf:
        return m_opt_cdf(spec_.model, origin, static_cast<double>(spec_.n)).m_real;
      case TargetKind::Classical:
        if (t.assumed_error.kind() == ErrorKind::WrappedLaplace)
          return m_opt_classical_wl(theta1(coeffs_), spec_.n, t.assumed_error.parameter()).m_real;
        return m_opt_density(theta1(coeffs_), spec_.n).m_real;
    }
    return kNaN;
  }

private:
  std::vector<double> observe(RngStream& rng) const
  {
    auto x = spec_.model.draw(spec_.n, rng);
    const auto& t = spec_.target;
    if (t.kind == TargetKind::Berkson && t.contamination == Contamination::Rounding) {
      for (double& v : x)
        v = round_to_step(v);
    } else if (t.kind == TargetKind::Classical) {
      for (double& v : x)
        v = wrap_angle(v + t.assumed_error.draw(rng));
    }
    return x;
  }

  FejerOrder select_order(const AngleSample& sample, double origin) const
  {
    const auto& rule = spec_.m_rule;
    const auto& t = spec_.target;
    switch (rule.kind) {
      case MRuleKind::Fixed:
        return FejerOrder(rule.fixed);
      case MRuleKind::SqrtN:
        return round_order(std::sqrt(static_cast<double>(spec_.n)));
      case MRuleKind::OptParametric:
      case MRuleKind::OptNonparametric:
        break;
    }
    if (t.kind == TargetKind::Cdf)
      return m_opt_cdf(sample, origin).m;

    const auto th1 = rule.kind == MRuleKind::OptParametric
                       ? theta1_parametric_vm(sample)
                       : theta1_nonparametric(sample, default_moment_order(spec_.n));
    if (t.kind == TargetKind::Classical && t.assumed_error.kind() == ErrorKind::WrappedLaplace)
      return m_opt_classical_wl(th1, spec_.n, t.assumed_error.parameter()).m;
    return m_opt_density(th1, spec_.n).m;
  }

  EstimateGrid estimate_on_grid(const AngleSample& sample, FejerOrder m, double origin) const
  {
    const auto& t = spec_.target;
    switch (t.kind) {
      case TargetKind::Density:
        return density_estimate(sample, m, grid_);
      case TargetKind::Cdf:
        return cdf_estimate(sample, m, origin, grid_);
      case TargetKind::Berkson:
        return berkson_estimate(sample, m, t.assumed_error, grid_).grid;
      case TargetKind::Classical:
        return classical_estimate(sample, m, t.assumed_error, grid_).grid;
    }
    throw std::logic_error("unknown target");
  }

  std::vector<double> cdf_truth(double origin) const
  {
    std::vector<double> out(grid_.size());
    for (std::size_t i = 0; i < grid_.size(); ++i)
      out[i] = fourier_cdf(coeffs_, grid_[i], origin);
    return out;
  }

  const ExperimentSpec& spec_;
  std::vector<double> grid_;
  FourierCoeffs coeffs_;
  FourierCoeffs truth_coeffs_;
  std::vector<double> truth_;
};

} // namespace

Target Target::cdf_fixed(double origin)
{
  Target t;
  t.kind = TargetKind::Cdf;
  t.origin = origin;
  return t;
}

Target Target::cdf_estimated()
{
  Target t;
  t.kind = TargetKind::Cdf;
  t.origin.reset();
  return t;
}

Target Target::berkson_additive(const ErrorModel& err, const ErrorModel& assumed)
{
  Target t;
  t.kind = TargetKind::Berkson;
  t.contamination = Contamination::Additive;
  t.true_error = err;
  t.assumed_error = assumed;
  return t;
}

Target Target::berkson_rounded(const ErrorModel& assumed)
{
  Target t;
  t.kind = TargetKind::Berkson;
  t.contamination = Contamination::Rounding;
  t.true_error = ErrorModel::wrapped_uniform(kRoundingStep / 2.0);
  t.assumed_error = assumed;
  return t;
}

Target Target::classical(const ErrorModel& err)
{
  Target t;
  t.kind = TargetKind::Classical;
  t.assumed_error = err;
  t.true_error = err;
  return t;
}

ExperimentResult run_experiment(const ExperimentSpec& spec)
{
  const ExperimentRunner runner(spec);
  const std::size_t reps = spec.replications;
  std::vector<Replication> results(reps);

  const unsigned threads = std::max(1u, std::min<unsigned>(spec.threads, static_cast<unsigned>(reps)));
  if (threads == 1) {
    for (std::size_t r = 0; r < reps; ++r)
      results[r] = runner.run(r);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t r = w; r < reps; r += threads)
          results[r] = runner.run(r);
      });
    }
    for (auto& th : pool)
      th.join();
  }

  ExperimentResult out;
  MiseAccumulator acc;
  double m_sum = 0.0;
  double abs_sum = 0.0;
  std::vector<double> origins;
  for (const auto& r : results) {
    if (!r.ok) {
      ++out.failed;
      continue;
    }
    acc.add(r.ise);
    m_sum += r.m;
    abs_sum += std::abs(r.theta0);
    origins.push_back(r.theta0);
    if (spec.keep_per_replication) {
      out.per_replication_ise.push_back(r.ise);
      out.per_replication_m.push_back(r.m);
      out.per_replication_theta0.push_back(r.theta0);
    }
  }
  out.completed = acc.count();
  if (out.completed == 0) {
    out.mise = kNaN;
    out.standard_error = kNaN;
    out.avg_m = kNaN;
  } else {
    out.mise = acc.mean();
    out.standard_error = acc.standard_error();
    out.avg_m = m_sum / static_cast<double>(out.completed);
  }

  if (spec.target.kind == TargetKind::Cdf) {
    out.avg_theta0 = origins.empty() ? kNaN : circular_mean(origins);
    out.avg_abs_theta0 = origins.empty() ? kNaN : abs_sum / static_cast<double>(origins.size());
    out.theta0_theoretical = spec.target.origin ? *spec.target.origin : theoretical_origin(spec.model);
  }
  out.m_theoretical = runner.theoretical_order(out.theta0_theoretical);
  return out;
}

double theoretical_origin(const CircularModel& model)
{
  constexpr int scan = 720;
  constexpr int points = 512;
  const double step = kTwoPi / scan;
  auto criterion = [&](double t) { return cdf_variance_functional(model, t, points); };

  int best = 0;
  double best_value = std::numeric_limits<double>::infinity();
  for (int i = 0; i < scan; ++i) {
    const double v = criterion(-kPi + step * i);
    if (v < best_value * (1.0 - 1e-12)) {
      best_value = v;
      best = i;
    }
  }

  // golden-section search on the bracketing interval
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = -kPi + step * (best - 1);
  double hi = -kPi + step * (best + 1);
  double x1 = hi - g * (hi - lo);
  double x2 = lo + g * (hi - lo);
  double f1 = criterion(x1);
  double f2 = criterion(x2);
  for (int it = 0; it < 60 && hi - lo > 1e-10; ++it) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - g * (hi - lo);
      f1 = criterion(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + g * (hi - lo);
      f2 = criterion(x2);
    }
  }
  return wrap_angle(0.5 * (lo + hi));
}

std::string table_name(TableId id)
{
  switch (id) {
    case TableId::T1:
      return "t1";
    case TableId::T2:
      return "t2";
    case TableId::T3:
      return "t3";
    case TableId::T4:
      return "t4";
    case TableId::T5:
      return "t5";
    case TableId::AppendixB:
      return "appendix-b";
  }
  return {};
}

std::optional<TableId> parse_table_id(const std::string& text)
{
  for (TableId id : { TableId::T1, TableId::T2, TableId::T3, TableId::T4, TableId::T5, TableId::AppendixB })
    if (table_name(id) == text)
      return id;
  return std::nullopt;
}

std::uint64_t row_seed(std::uint64_t master, TableId id, std::size_t row)
{
  return splitmix64_mix(splitmix64_mix(master) + (static_cast<std::uint64_t>(id) << 32) + row);
}

namespace {

CircularModel wn(double mu, double rho)
{
  return CircularModel::wrapped_normal(mu, rho);
}

CircularModel vm(double mu, double kappa)
{
  return CircularModel::von_mises(mu, kappa);
}

CircularModel mix(const CircularModel& a, const CircularModel& b, double p)
{
  return CircularModel::mixture(a, b, p);
}

std::vector<CircularModel> wrapped_normal_models()
{
  return {
    wn(0, 0.75),
    wn(0, 0.9),
    mix(wn(0, 0.9), wn(kPi / 2, 0.75), 0.5),
    mix(wn(0, 0.9), wn(kPi / 2, 0.9), 0.5),
    mix(wn(0, 0.9), wn(kPi / 2, 0.75), 0.2),
    mix(wn(0, 0.9), wn(kPi / 2, 0.75), 0.8),
    mix(wn(0, 0.75), wn(kPi / 2, 0.75), 0.5),
    mix(wn(0, 0.75), wn(kPi / 2, 0.75), 0.2),
    mix(wn(0, 0.75), wn(kPi, 0.75), 0.5),
  };
}

std::vector<CircularModel> von_mises_models()
{
  return {
    vm(0, 5),
    vm(kPi / 2, 5),
    vm(kPi, 5),
    vm(0, 1),
    vm(kPi / 2, 1),
    vm(kPi, 1),
    mix(vm(0, 5), vm(kPi / 2, 1), 0.5),
    mix(vm(0, 5), vm(kPi / 2, 5), 0.5),
    mix(vm(0, 5), vm(kPi / 2, 1), 0.2),
    mix(vm(0, 5), vm(kPi / 2, 1), 0.8),
    mix(vm(0, 1), vm(kPi / 2, 1), 0.5),
    mix(vm(0, 1), vm(kPi / 2, 1), 0.2),
    mix(vm(0, 5), vm(kPi, 5), 0.5),
  };
}

std::vector<CircularModel> rounded_models()
{
  return { vm(kPi, 5), vm(0, 1), wn(kPi / 2, 0.75), wn(kPi / 2, 0.9) };
}

template <std::size_t Rows, std::size_t Cols>
std::vector<double> reference_row(const double (&table)[Rows][Cols], std::size_t row)
{
  return std::vector<double>(std::begin(table[row]), std::end(table[row]));
}

ExperimentSpec base_spec(const CircularModel& model,
                         std::size_t n,
                         const TableOptions& options,
                         TableId id,
                         std::size_t row)
{
  ExperimentSpec s;
  s.model = model;
  s.n = n;
  s.replications = options.replications;
  s.master_seed = row_seed(options.seed, id, row);
  s.threads = options.threads;
  return s;
}

// Density (error-free or classical): five MISE columns, then average orders and m_TH.
void density_like_table(TableResult& table, const TableOptions& options, bool classical)
{
  table.columns = {
    { "m=5", ColumnKind::Mise },         { "m=10", ColumnKind::Mise },
    { "m=[sqrt(n)]", ColumnKind::Mise }, { "m=m_OP", ColumnKind::Mise },
    { "m=m_ON", ColumnKind::Mise },      { "avg m_OP", ColumnKind::Order },
    { "avg m_ON", ColumnKind::Order },   { "m_TH", ColumnKind::Order },
  };
  const auto models = wrapped_normal_models();
  const Target target = classical ? Target::classical(ErrorModel::wrapped_laplace(0.2)) : Target::density();
  std::size_t row = 0;
  for (std::size_t n : { 50u, 200u }) {
    for (const auto& model : models) {
      auto spec = base_spec(model, n, options, table.id, row);
      spec.target = target;
      TableRow out;
      out.label = model.label();
      out.n = n;
      ExperimentResult op;
      ExperimentResult on;
      for (MRule rule : { MRule::fixed_at(5), MRule::fixed_at(10), MRule::sqrt_n(), MRule::parametric(),
                          MRule::nonparametric() }) {
        spec.m_rule = rule;
        const auto res = run_experiment(spec);
        out.values.push_back(res.mise);
        if (rule.kind == MRuleKind::OptParametric)
          op = res;
        if (rule.kind == MRuleKind::OptNonparametric)
          on = res;
      }
      out.values.push_back(op.avg_m);
      out.values.push_back(on.avg_m);
      out.values.push_back(op.m_theoretical);
      out.reference = classical ? reference_row(reference::classical_table, row)
                                : reference_row(reference::density_table, row);
      table.rows.push_back(std::move(out));
      ++row;
    }
  }
}

void rounded_table(TableResult& table, const TableOptions& options)
{
  const ErrorModel errors[] = { ErrorModel::none(), ErrorModel::wrapped_laplace(0.1),
                                ErrorModel::wrapped_laplace(0.2), ErrorModel::wrapped_uniform(kPi / 12) };
  const char* names[] = { "none", "WL(0.1)", "WL(0.2)", "U" };
  for (const char* name : names) {
    table.columns.push_back({ std::string(name) + " param", ColumnKind::Mise });
    table.columns.push_back({ std::string(name) + " nonpar", ColumnKind::Mise });
  }
  table.columns.push_back({ "avg m_OP", ColumnKind::Order });
  table.columns.push_back({ "avg m_ON", ColumnKind::Order });

  std::size_t row = 0;
  for (const auto& model : rounded_models()) {
    for (std::size_t n : { 50u, 100u, 200u, 500u }) {
      auto spec = base_spec(model, n, options, table.id, row);
      TableRow out;
      out.label = model.label();
      out.n = n;
      double avg_op = 0.0;
      double avg_on = 0.0;
      for (const auto& err : errors) {
        spec.target = Target::berkson_rounded(err);
        spec.m_rule = MRule::parametric();
        const auto p = run_experiment(spec);
        spec.m_rule = MRule::nonparametric();
        const auto q = run_experiment(spec);
        out.values.push_back(p.mise);
        out.values.push_back(q.mise);
        avg_op = p.avg_m;
        avg_on = q.avg_m;
      }
      out.values.push_back(avg_op);
      out.values.push_back(avg_on);
      out.reference = reference_row(reference::rounded_table, row);
      table.rows.push_back(std::move(out));
      ++row;
    }
  }
}

void cdf_table(TableResult& table, const TableOptions& options, bool estimated_origin)
{
  table.columns = {
    { "m=5", ColumnKind::Mise },
    { "m=10", ColumnKind::Mise },
    { "m=[sqrt(n)]", ColumnKind::Mise },
    { "m=m_OP", ColumnKind::Mise },
    { "avg m_OP", ColumnKind::Order },
  };
  if (estimated_origin) {
    table.columns.push_back({ "avg theta0", ColumnKind::Angle });
    table.columns.push_back({ "theta0_TH", ColumnKind::Angle });
  } else {
    table.columns.push_back({ "m_TH", ColumnKind::Order });
  }

  const auto models = von_mises_models();
  std::vector<double> origins;
  if (estimated_origin)
    for (const auto& model : models)
      origins.push_back(theoretical_origin(model));

  std::size_t row = 0;
  for (std::size_t n : { 50u, 200u }) {
    for (std::size_t i = 0; i < models.size(); ++i) {
      const auto& model = models[i];
      auto spec = base_spec(model, n, options, table.id, row);
      spec.target = estimated_origin ? Target::cdf_estimated() : Target::cdf_fixed(-kPi);
      TableRow out;
      out.label = model.label();
      out.n = n;
      ExperimentResult op;
      for (MRule rule : { MRule::fixed_at(5), MRule::fixed_at(10), MRule::sqrt_n(), MRule::parametric() }) {
        spec.m_rule = rule;
        const auto res = run_experiment(spec);
        out.values.push_back(res.mise);
        if (rule.kind == MRuleKind::OptParametric)
          op = res;
      }
      out.values.push_back(op.avg_m);
      if (estimated_origin) {
        // antipodal two-component mixtures have two minimizers; compare magnitudes
        const bool antipodal = i + 1 == models.size();
        out.values.push_back(antipodal ? op.avg_abs_theta0 : op.avg_theta0);
        out.values.push_back(antipodal ? std::abs(origins[i]) : origins[i]);
        out.reference = reference_row(reference::cdf_estimated_table, row);
      } else {
        out.values.push_back(op.m_theoretical);
        out.reference = reference_row(reference::cdf_fixed_table, row);
      }
      table.rows.push_back(std::move(out));
      ++row;
    }
  }
}

void appendix_b_table(TableResult& table)
{
  table.columns = {
    { "m(S1+3pi^3/40-pi*log(m)/(m+1))", ColumnKind::Exact },
    { "m(S2-2pi^3/40+pi*log(m)/(m+1))", ColumnKind::Exact },
    { "m(S1+S2+pi^3/40)", ColumnKind::Exact },
  };
  const double pi3 = kPi * kPi * kPi;
  std::size_t row = 0;
  for (const auto& ref : reference::appendix_b_table) {
    const int m = static_cast<int>(ref[0]);
    const auto t = nu3_terms(FejerOrder(m));
    const double md = m;
    const double shift = kPi * std::log(md) / (md + 1.0);
    TableRow out;
    out.label = "m";
    out.n = static_cast<std::size_t>(m);
    out.values = { md * (t.s1 + 3.0 * pi3 / 40.0 - shift), md * (t.s2 - 2.0 * pi3 / 40.0 + shift),
                   md * (t.s1 + t.s2 + pi3 / 40.0) };
    out.reference = { ref[1], ref[2], ref[3] };
    table.rows.push_back(std::move(out));
    ++row;
  }
}

bool within(double value, double reference, ColumnKind kind, const TableResult& t)
{
  if (std::isnan(reference))
    return true;
  if (std::isnan(value))
    return false;
  switch (kind) {
    case ColumnKind::Mise:
    case ColumnKind::Order:
      return std::abs(value - reference) <= t.relative_tolerance * std::abs(reference);
    case ColumnKind::Angle:
      return std::abs(circular_difference(value, reference)) <= t.angle_tolerance;
    case ColumnKind::Exact:
      return std::abs(value - reference) <= t.exact_tolerance;
  }
  return false;
}

std::string sci(double v)
{
  if (std::isnan(v))
    return "NA";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.5e", v);
  return buf;
}

std::string quoted(const std::string& s)
{
  if (s.find_first_of(",\"") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"')
      out += '"';
    out += c;
  }
  return out + "\"";
}

} // namespace

TableResult run_table(TableId id, const TableOptions& options)
{
  if (options.replications < 1)
    throw std::invalid_argument("run_table: need at least one replication");
  TableResult table;
  table.id = id;
  table.replications = options.replications;
  table.seed = options.seed;
  const double scale = options.replications < 500 ? 2.0 : 1.0;
  table.relative_tolerance = (id == TableId::T1 ? 0.25 : 0.30) * scale;
  table.angle_tolerance = 0.1 * scale;
  table.exact_tolerance = 1e-4;

  switch (id) {
    case TableId::T1:
      density_like_table(table, options, false);
      break;
    case TableId::T2:
      density_like_table(table, options, true);
      break;
    case TableId::T3:
      rounded_table(table, options);
      break;
    case TableId::T4:
      cdf_table(table, options, false);
      break;
    case TableId::T5:
      cdf_table(table, options, true);
      break;
    case TableId::AppendixB:
      table.replications = 0;
      appendix_b_table(table);
      break;
  }

  for (auto& row : table.rows) {
    row.within_tolerance.resize(row.values.size());
    for (std::size_t c = 0; c < row.values.size(); ++c)
      row.within_tolerance[c] = within(row.values[c], row.reference[c], table.columns[c].kind, table);
  }
  return table;
}

std::string to_csv(const TableResult& table)
{
  std::ostringstream os;
  const bool appendix = table.id == TableId::AppendixB;
  os << (appendix ? "m" : "distribution,n");
  for (const auto& c : table.columns)
    os << ',' << quoted(c.name);
  for (const auto& c : table.columns)
    os << ',' << quoted("ref " + c.name);
  os << ",tolerance_flag\n";
  for (const auto& row : table.rows) {
    if (appendix)
      os << row.n;
    else
      os << quoted(row.label) << ',' << row.n;
    for (double v : row.values)
      os << ',' << sci(v);
    for (double v : row.reference)
      os << ',' << sci(v);
    std::string flag;
    for (std::size_t c = 0; c < row.values.size(); ++c) {
      if (!row.within_tolerance[c])
        flag += (flag.empty() ? "" : ";") + table.columns[c].name;
    }
    os << ',' << quoted(flag.empty() ? "ok" : "outside:" + flag) << '\n';
  }
  return os.str();
}

} // namespace fejer
