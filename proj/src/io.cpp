#include "fejer/io.hpp"

#include "fejer/angles.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>

namespace fejer {

namespace {

class ExpressionParser
{
public:
  explicit ExpressionParser(const std::string& text)
    : text_(text)
  {
  }

  double parse()
  {
    const double v = expression();
    skip_space();
    if (pos_ != text_.size())
      fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

private:
  double expression()
  {
    double v = term();
    for (;;) {
      skip_space();
      if (accept('+'))
        v += term();
      else if (accept('-'))
        v -= term();
      else
        return v;
    }
  }

  double term()
  {
    double v = unary();
    for (;;) {
      skip_space();
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        const double d = unary();
        if (d == 0.0)
          fail("division by zero");
        v /= d;
      } else if (starts_primary()) {
        v *= unary(); // implicit product, as in "2pi"
      } else {
        return v;
      }
    }
  }

  double unary()
  {
    skip_space();
    if (accept('-'))
      return -unary();
    if (accept('+'))
      return unary();
    return primary();
  }

  double primary()
  {
    skip_space();
    if (accept('(')) {
      const double v = expression();
      skip_space();
      if (!accept(')'))
        fail("missing ')'");
      return v;
    }
    if (text_.compare(pos_, 2, "pi") == 0) {
      pos_ += 2;
      return kPi;
    }
    double v = 0.0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc() || res.ptr == first)
      fail("expected a number or 'pi'");
    pos_ += static_cast<std::size_t>(res.ptr - first);
    return v;
  }

  bool starts_primary()
  {
    if (pos_ >= text_.size())
      return false;
    return text_[pos_] == '(' || text_.compare(pos_, 2, "pi") == 0;
  }

  void skip_space()
  {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool accept(char c)
  {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const
  {
    throw ParseError("cannot parse angle '" + text_ + "': " + what);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

std::string trim(const std::string& s)
{
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
    ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
    --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split_fields(const std::string& line)
{
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',' || c == ';' || c == '\t' || c == ' ') {
      if (!cur.empty())
        out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty())
    out.push_back(cur);
  return out;
}

double parse_plain_number(const std::string& s)
{
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw ParseError("not a number: '" + s + "'");
  return v;
}

} // namespace

double parse_angle_expression(const std::string& text)
{
  const std::string t = trim(text);
  if (t.empty())
    throw ParseError("empty angle");
  const double v = ExpressionParser(t).parse();
  if (!std::isfinite(v))
    throw ParseError("angle is not finite: '" + text + "'");
  return v;
}

InputData read_input(std::istream& in, AngleUnit unit)
{
  InputData data;
  std::string line;
  std::size_t line_no = 0;
  std::size_t fields_per_row = 0;
  bool header_seen = false;
  const double scale = unit == AngleUnit::Degrees ? kPi / 180.0 : 1.0;

  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#')
      continue;
    const auto fields = split_fields(t);
    if (fields.empty())
      continue;
    if (fields.size() > 2)
      throw ParseError("line " + std::to_string(line_no) + ": expected 'angle' or 'angle,count'");

    double angle = 0.0;
    try {
      angle = parse_angle_expression(fields[0]);
    } catch (const ParseError&) {
      if (data.angles.empty() && !header_seen) {
        header_seen = true;
        continue;
      }
      throw ParseError("line " + std::to_string(line_no) + ": bad angle '" + fields[0] + "'");
    }

    if (fields_per_row == 0)
      fields_per_row = fields.size();
    else if (fields.size() != fields_per_row)
      throw ParseError("line " + std::to_string(line_no) + ": mixed single-angle and grouped rows");

    double weight = 1.0;
    if (fields.size() == 2) {
      try {
        weight = parse_plain_number(fields[1]);
      } catch (const ParseError&) {
        throw ParseError("line " + std::to_string(line_no) + ": bad count '" + fields[1] + "'");
      }
      if (!std::isfinite(weight) || weight < 0.0)
        throw ParseError("line " + std::to_string(line_no) + ": counts must be nonnegative");
    }
    data.angles.push_back(angle * scale);
    data.weights.push_back(weight);
  }

  if (data.angles.empty())
    throw ParseError("no observations in input");
  data.grouped = fields_per_row == 2;
  double total = 0.0;
  for (double w : data.weights)
    total += w;
  if (!(total > 0.0))
    throw ParseError("all counts are zero");
  return data;
}

AngleSample to_sample(const InputData& data)
{
  return AngleSample(data.angles, data.weights);
}

AngleSample load_rainfall(RainfallPhase phase)
{
  static constexpr double counts[12] = { 100, 103, 229, 414, 676, 1248, 1458, 1365, 924, 378, 199, 143 };
  std::vector<double> angles(12);
  std::vector<double> weights(counts, counts + 12);
  for (int j = 1; j <= 12; ++j) {
    const double a = phase == RainfallPhase::BinCenter ? -kPi + (2.0 * j - 1.0) * kPi / 12.0
                                                       : kTwoPi * (j - 1.0) / 12.0;
    angles[j - 1] = wrap_angle(a);
  }
  return AngleSample(angles, weights);
}

std::string format_exact(double x)
{
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_grid_csv(std::ostream& out,
                    const EstimateGrid& grid,
                    const std::vector<std::pair<std::string, std::string>>& header)
{
  for (const auto& [key, value] : header)
    out << "# " << key << ": " << value << '\n';
  out << "theta,value\n";
  for (std::size_t i = 0; i < grid.theta.size(); ++i)
    out << format_exact(grid.theta[i]) << ',' << format_exact(grid.values[i]) << '\n';
}

std::pair<std::vector<double>, std::vector<double>> read_grid_csv(std::istream& in)
{
  std::pair<std::vector<double>, std::vector<double>> out;
  std::string line;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#' || t.rfind("theta", 0) == 0)
      continue;
    const auto comma = t.find(',');
    if (comma == std::string::npos)
      throw ParseError("grid row without a comma: '" + t + "'");
    out.first.push_back(parse_plain_number(trim(t.substr(0, comma))));
    out.second.push_back(parse_plain_number(trim(t.substr(comma + 1))));
  }
  return out;
}

} // namespace fejer
