#include "fejer/io.hpp"

#include "fejer/angles.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using fejer::kPi;
using fejer::ParseError;

namespace {

fejer::InputData parse(const std::string& text, fejer::AngleUnit unit = fejer::AngleUnit::Radians)
{
  std::istringstream in(text);
  return fejer::read_input(in, unit);
}

} // namespace

TEST_CASE("angle expressions")
{
  CHECK(fejer::parse_angle_expression("pi/12") == doctest::Approx(kPi / 12.0).epsilon(1e-15));
  CHECK(fejer::parse_angle_expression("2pi/3") == doctest::Approx(2.0 * kPi / 3.0).epsilon(1e-15));
  CHECK(fejer::parse_angle_expression("-pi") == -kPi);
  CHECK(fejer::parse_angle_expression("3*pi/4") == doctest::Approx(0.75 * kPi).epsilon(1e-15));
  CHECK(fejer::parse_angle_expression(" 0.5 ") == 0.5);
  CHECK(fejer::parse_angle_expression("-(pi/2 + 1)") == doctest::Approx(-kPi / 2.0 - 1.0).epsilon(1e-15));
  CHECK(fejer::parse_angle_expression("1e-3") == 0.001);
  for (const char* bad : { "", "pi/", "2x", "(pi", "2..0", "1/0" })
    CHECK_THROWS_AS(fejer::parse_angle_expression(bad), ParseError);
}

TEST_CASE("plain input")
{
  const auto d = parse("# comment\n\n0.1\n-pi/2\n 3.0 \n");
  CHECK_FALSE(d.grouped);
  REQUIRE(d.angles.size() == 3);
  CHECK(d.angles[1] == doctest::Approx(-kPi / 2.0));
  CHECK(fejer::to_sample(d).total_weight() == 3.0);
}

TEST_CASE("grouped input with a header")
{
  const auto d = parse("angle,count\n0,3\npi/2;1\n-1 0\n");
  CHECK(d.grouped);
  REQUIRE(d.weights.size() == 3);
  CHECK(d.weights[0] == 3.0);
  CHECK(d.weights[2] == 0.0);
  CHECK(fejer::to_sample(d).total_weight() == 4.0);
}

TEST_CASE("malformed input")
{
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("# nothing\n"), ParseError);
  CHECK_THROWS_AS(parse("a\nb\n"), ParseError);
  CHECK_THROWS_AS(parse("0.1\n0.2,3\n"), ParseError);
  CHECK_THROWS_AS(parse("0.1,-2\n"), ParseError);
  CHECK_THROWS_AS(parse("0.1,0\n0.2,0\n"), ParseError);
  CHECK_THROWS_AS(parse("0.1,1,2\n"), ParseError);
  CHECK_THROWS_AS(parse("nan\n"), ParseError);
}

TEST_CASE("degrees and radians agree")
{
  const auto deg = parse("90\n-45\n180\n", fejer::AngleUnit::Degrees);
  const auto rad = parse("pi/2\n-pi/4\npi\n");
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(deg.angles[i] == doctest::Approx(rad.angles[i]).epsilon(1e-15));
}

TEST_CASE("rainfall data")
{
  const auto s = fejer::load_rainfall();
  REQUIRE(s.size() == 12);
  CHECK(s.total_weight() == 7237.0);
  CHECK(s.weights()[6] == 1458.0);
  CHECK(s.angles()[6] == doctest::Approx(kPi / 12.0).epsilon(1e-14));
  for (std::size_t j = 1; j < 12; ++j)
    CHECK(s.angles()[j] - s.angles()[j - 1] == doctest::Approx(kPi / 6.0).epsilon(1e-13));

  const auto m = fejer::load_rainfall(fejer::RainfallPhase::MonthStart);
  CHECK(std::abs(fejer::circular_difference(m.angles()[0], 0.0)) < 1e-15);
  CHECK(std::abs(fejer::circular_difference(m.angles()[6], kPi)) < 1e-14);
  CHECK(m.total_weight() == 7237.0);
}

TEST_CASE("grid CSV round trip is exact")
{
  fejer::EstimateGrid g;
  g.theta = fejer::uniform_grid(64);
  for (double t : g.theta)
    g.values.push_back(std::exp(std::cos(t)) / 7.0 + 1e-17 * t);
  std::ostringstream out;
  fejer::write_grid_csv(out, g, { { "estimate", "density" }, { "m", "5" } });
  const auto text = out.str();
  CHECK(text.rfind("# estimate: density\n# m: 5\ntheta,value\n", 0) == 0);

  std::istringstream in(text);
  const auto [theta, values] = fejer::read_grid_csv(in);
  CHECK(theta == g.theta);
  CHECK(values == g.values);

  for (double x : { 0.1, kPi, -1e-300, 123456789.123 })
    CHECK(std::stod(fejer::format_exact(x)) == x);
}
