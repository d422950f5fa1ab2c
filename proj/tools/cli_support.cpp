#include "cli_support.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace hahn::cli {

namespace {

double parse_double(const std::string& s, const std::string& field) {
  double v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  while (first < last && *first == ' ') ++first;
  while (last > first && last[-1] == ' ') --last;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last)
    throw ConfigError(field + ": cannot parse '" + s + "' as a number");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

TestFunction TestFunction::parse(const std::string& text) {
  TestFunction f;
  f.label_ = text;
  if (text == "sin-pi") {
    f.kind_ = Kind::kSinPi;
  } else if (text == "runge") {
    f.kind_ = Kind::kRunge;
  } else if (text.rfind("poly:", 0) == 0) {
    f.kind_ = Kind::kPolynomial;
    for (const auto& c : split(text.substr(5), ',')) f.poly_.push_back(parse_double(c, "fn"));
  } else if (text.rfind("mode:", 0) == 0) {
    f.kind_ = Kind::kMode;
    const double n = parse_double(text.substr(5), "fn");
    if (n < 0 || n != std::floor(n)) throw ConfigError("fn: mode degree must be a nonnegative integer");
    f.mode_degree_ = static_cast<int>(n);
  } else {
    throw ConfigError("fn: expected sin-pi, runge, poly:<c0,c1,...> or mode:<n>, got '" + text + "'");
  }
  return f;
}

double TestFunction::at(double t, const HahnBasis& basis, const IntervalMap& map) const {
  switch (kind_) {
    case Kind::kSinPi:
      return std::sin(std::numbers::pi * t);
    case Kind::kRunge:
      return 1.0 / (1.0 + 25.0 * t * t);
    case Kind::kPolynomial: {
      double acc = 0;
      for (auto it = poly_.rbegin(); it != poly_.rend(); ++it) acc = acc * t + *it;
      return acc;
    }
    case Kind::kMode:
      return basis.normalized_upto(mode_degree_, map.to_grid(t)).back();
  }
  return 0.0;
}

GridFunction TestFunction::on_grid(const HahnBasis& basis, const IntervalMap& map) const {
  if (kind_ == Kind::kMode) {
    const auto q = basis.on_grid(mode_degree_);
    return {basis.params(), {q.begin(), q.end()}};
  }
  return GridFunction::sample(basis.params(),
                              [&](double x) { return at(map.to_physical(x), basis, map); });
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string label(const ParamSet& p) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "a%g_b%g", p.alpha, p.beta);
  return buf;
}

void CsvWriter::comment(const std::string& text) { out_ << "# " << text << '\n'; }

void CsvWriter::header(const std::vector<std::string>& columns) { row(columns); }

void CsvWriter::row(const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) out_ << (i ? "," : "") << cells[i];
  out_ << '\n';
}

void CsvWriter::blank() { out_ << '\n'; }

void write_metadata(CsvWriter& csv, const RunConfig& config) {
  csv.comment(std::string("hahn-cli ") + kVersion);
  csv.comment("command: " + config.command);
  std::string sets;
  for (const auto& p : config.param_sets) sets += (sets.empty() ? "" : ";") + fmt(p.alpha) + "," + fmt(p.beta);
  csv.comment("params: " + sets);
  csv.comment("N: " + std::to_string(config.N));
  csv.comment("m: " + std::to_string(effective_degree(config)));
  csv.comment("fn: " + config.fn);
  csv.comment("interval: " + fmt(config.a) + "," + fmt(config.b));
  csv.comment(std::string("normalized: ") + (config.normalized ? "true" : "false"));
}

std::vector<double> sample_points(double a, double b, int count) {
  std::vector<double> t(static_cast<std::size_t>(count));
  for (int j = 0; j < count; ++j) t[static_cast<std::size_t>(j)] = ((count - 1 - j) * a + j * b) / (count - 1);
  return t;
}

}  // namespace hahn::cli

namespace hahn::cli {

std::vector<ParamSet> parse_param_sets(const std::string& text) {
  std::vector<ParamSet> sets;
  for (const auto& item : split(text, ';')) {
    const auto ab = split(item, ',');
    if (ab.size() != 2) throw ConfigError("params: expected 'alpha,beta' pairs separated by ';', got '" + item + "'");
    sets.push_back({parse_double(ab[0], "params"), parse_double(ab[1], "params")});
  }
  return sets;
}

std::pair<double, double> parse_interval(const std::string& text) {
  const auto ab = split(text, ',');
  if (ab.size() != 2) throw ConfigError("interval: expected 'a,b', got '" + text + "'");
  return {parse_double(ab[0], "interval"), parse_double(ab[1], "interval")};
}

}  // namespace hahn::cli
