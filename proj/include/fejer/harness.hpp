#pragma once

#include "fejer/angles.hpp"
#include "fejer/bandwidth.hpp"
#include "fejer/deconv.hpp"
#include "fejer/simdist.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fejer {

enum class MRuleKind
{
  Fixed,
  SqrtN,
  OptParametric,
  OptNonparametric
};

struct MRule
{
  MRuleKind kind = MRuleKind::Fixed;
  int fixed = 1;

  static MRule fixed_at(int m) { return { MRuleKind::Fixed, m }; }
  static MRule sqrt_n() { return { MRuleKind::SqrtN, 0 }; }
  static MRule parametric() { return { MRuleKind::OptParametric, 0 }; }
  static MRule nonparametric() { return { MRuleKind::OptNonparametric, 0 }; }
};

enum class TargetKind
{
  Density,
  Cdf,
  Berkson,
  Classical
};

enum class Contamination
{
  Additive, ///< observed X* from the model; truth is X* + eps
  Rounding  ///< truth from the model; observations rounded to multiples of pi/6
};

struct Target
{
  TargetKind kind = TargetKind::Density;
  /// Cdf: fixed origin, or estimated per replication when unset.
  std::optional<double> origin = -kPi;
  /// Berkson: how observations are produced, and the error the estimator assumes.
  Contamination contamination = Contamination::Additive;
  ErrorModel true_error;
  /// Berkson: error used by the estimator. Classical: the contaminating error.
  ErrorModel assumed_error;

  static Target density() { return {}; }
  static Target cdf_fixed(double origin);
  static Target cdf_estimated();
  static Target berkson_additive(const ErrorModel& err, const ErrorModel& assumed);
  static Target berkson_rounded(const ErrorModel& assumed);
  static Target classical(const ErrorModel& err);
};

struct ExperimentSpec
{
  CircularModel model = CircularModel::uniform();
  std::size_t n = 50;
  std::size_t replications = 500;
  MRule m_rule;
  Target target;
  std::uint64_t master_seed = 0;
  std::size_t grid_size = 512;
  unsigned threads = 1;
  bool keep_per_replication = false;
};

struct ExperimentResult
{
  double mise = 0.0;
  double standard_error = 0.0;
  double avg_m = 0.0;
  double avg_theta0 = 0.0;     ///< circular mean of the origins used (CDF runs)
  double avg_abs_theta0 = 0.0; ///< mean of |theta0| (CDF runs)
  double m_theoretical = 0.0;  ///< rule applied to the true functionals
  double theta0_theoretical = 0.0;
  std::size_t completed = 0;
  std::size_t failed = 0; ///< replications aborted by a degenerate or infeasible case
  std::vector<double> per_replication_ise;
  std::vector<int> per_replication_m;
  std::vector<double> per_replication_theta0;
};

/// Runs the replications of one table cell. Replication r uses
/// RngStream(master_seed, r); results do not depend on `threads`.
ExperimentResult run_experiment(const ExperimentSpec& spec);

/// Minimizer of int F(1 - F) over the origin, by a 720-point scan and a
/// golden-section refinement. The first minimum in scan order from -pi wins.
double theoretical_origin(const CircularModel& model);

enum class TableId
{
  T1,
  T2,
  T3,
  T4,
  T5,
  AppendixB
};

/// "t1".."t5", "appendix-b".
std::string table_name(TableId id);
std::optional<TableId> parse_table_id(const std::string& text);

enum class ColumnKind
{
  Mise,
  Order,
  Angle,
  Exact
};

struct TableColumn
{
  std::string name;
  ColumnKind kind;
};

struct TableRow
{
  std::string label;
  std::size_t n = 0;
  std::vector<double> values;
  std::vector<double> reference; ///< NaN when there is no published value
  std::vector<bool> within_tolerance;
};

struct TableResult
{
  TableId id = TableId::T1;
  std::vector<TableColumn> columns;
  std::vector<TableRow> rows;
  std::size_t replications = 0;
  std::uint64_t seed = 0;
  double relative_tolerance = 0.0;
  double angle_tolerance = 0.0;
  double exact_tolerance = 0.0;
};

struct TableOptions
{
  std::size_t replications = 500;
  std::uint64_t seed = 20240501;
  unsigned threads = 1;
};

/// Runs every cell of a table. Cells of one row share random numbers.
TableResult run_table(TableId id, const TableOptions& options = {});

/// Seed of row `row` of table `id`; every cell of the row uses it.
std::uint64_t row_seed(std::uint64_t master, TableId id, std::size_t row);

/// CSV with the table's columns, the published values and a tolerance flag.
/// Numbers use 6 significant digits in scientific notation.
std::string to_csv(const TableResult& table);

} // namespace fejer
