#pragma once

#include "fejer/estimators.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fejer {

/// Malformed input text.
class ParseError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Evaluates an angle written as arithmetic over numbers and `pi`,
/// e.g. "pi/12", "-pi", "3*pi/4", "2pi/3", "0.5".
double parse_angle_expression(const std::string& text);

enum class AngleUnit
{
  Radians,
  Degrees
};

/// Parsed observations. `grouped` marks `angle,count` input.
struct InputData
{
  std::vector<double> angles;
  std::vector<double> weights;
  bool grouped = false;
};

/// Reads one angle per line, or `angle,count` pairs (comma or whitespace
/// separated). Blank lines and lines starting with '#' are skipped; a single
/// non-numeric header line before the data is allowed. Angles may be angle
/// expressions. Throws ParseError on malformed or empty input.
InputData read_input(std::istream& in, AngleUnit unit = AngleUnit::Radians);

AngleSample to_sample(const InputData& data);

enum class RainfallPhase
{
  BinCenter,  ///< month j at -pi + (2j - 1) pi / 12
  MonthStart  ///< month j at 2 pi (j - 1) / 12
};

/// Monthly rainfall frequencies (adjusted for month length) as a weighted
/// sample with 12 bins; total weight 7237.
AngleSample load_rainfall(RainfallPhase phase = RainfallPhase::BinCenter);

/// Writes `theta,value` rows with 17 significant digits, preceded by
/// `# key: value` comment lines.
void write_grid_csv(std::ostream& out,
                    const EstimateGrid& grid,
                    const std::vector<std::pair<std::string, std::string>>& header = {});

/// Reads back what write_grid_csv produced: (theta, value) columns.
std::pair<std::vector<double>, std::vector<double>> read_grid_csv(std::istream& in);

/// Shortest decimal form that reads back to the same double ("%.17g").
std::string format_exact(double x);

} // namespace fejer
