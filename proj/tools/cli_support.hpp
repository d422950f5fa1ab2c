#ifndef HAHN_TOOLS_CLI_SUPPORT_HPP
#define HAHN_TOOLS_CLI_SUPPORT_HPP

#include <sstream>
#include <string>
#include <vector>

#include "cli_app.hpp"
#include "hahn/discrete_calculus.hpp"
#include "hahn/expansion.hpp"
#include "hahn/hahn_polynomial.hpp"

namespace hahn::cli {

/// Function selected by --fn, defined on the physical interval.
class TestFunction {
 public:
  enum class Kind { kSinPi, kRunge, kPolynomial, kMode };

  /// "sin-pi", "runge", "poly:c0,c1,...", or "mode:n" (normalized Hahn
  /// polynomial of degree n of the current family).
  static TestFunction parse(const std::string& text);

  Kind kind() const { return kind_; }
  const std::string& label() const { return label_; }
  int mode_degree() const { return mode_degree_; }

  double at(double t, const HahnBasis& basis, const IntervalMap& map) const;
  GridFunction on_grid(const HahnBasis& basis, const IntervalMap& map) const;

 private:
  Kind kind_ = Kind::kSinPi;
  std::string label_;
  std::vector<double> poly_;
  int mode_degree_ = 0;
};

/// Fixed 17-significant-digit rendering.
std::string fmt(double v);

/// Column suffix for a parameter set, e.g. "a0.5_b0.5".
std::string label(const ParamSet& p);

/// CSV text: '#' metadata lines, one header row, comma-separated data.
class CsvWriter {
 public:
  void comment(const std::string& text);
  void header(const std::vector<std::string>& columns);
  void row(const std::vector<std::string>& cells);
  void blank();
  std::string str() const { return out_.str(); }

 private:
  std::ostringstream out_;
};

/// Metadata block shared by all commands.
void write_metadata(CsvWriter& csv, const RunConfig& config);

/// S equispaced points on [a, b], endpoints included.
std::vector<double> sample_points(double a, double b, int count);

}  // namespace hahn::cli

#endif  // HAHN_TOOLS_CLI_SUPPORT_HPP
