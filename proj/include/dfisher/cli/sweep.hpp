#ifndef DFISHER_CLI_SWEEP_HPP
#define DFISHER_CLI_SWEEP_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dfisher/cli/params.hpp"
#include "dfisher/fisher.hpp"

namespace dfisher::cli {

/// Linear grid start..stop with `count` points plus optional extra points;
/// points() is sorted ascending without duplicates.
struct Grid {
  Rational start{0};
  Rational stop{0};
  long count = 1;
  std::vector<Rational> extra;

  std::vector<Rational> points() const;
};

struct SweepSpec {
  std::string curve;
  FamilyTag family = FamilyTag::Charlier;
  /// "n" or one of the family's parameter names.
  std::string variable = "n";
  ParamMap fixed;
  Grid grid;
  std::vector<Method> methods = {Method::Expansion};
  Backend backend = Backend::Float;
  TruncationPolicy trunc = TruncationPolicy::defaults();

  /// UsageError for an unknown variable, a variable also given as fixed, an
  /// empty grid or a non-integer grid for n / N.
  void validate() const;
};

struct SweepRow {
  std::string curve;
  std::string variable;
  Rational x;
  std::string family;
  std::string n;
  std::string params;
  Method method;
  std::optional<Scalar> value;
  bool converged = false;
  /// "ok" or the error kind.
  std::string status;
};

/// Rows ordered curve, then grid point, then method. Grid points are
/// evaluated on `threads` workers (0 picks hardware concurrency); the row
/// order does not depend on scheduling.
std::vector<SweepRow> run_sweep(const std::vector<SweepSpec>& specs, unsigned threads = 0);

void write_sweep_header(std::ostream& out);
void write_sweep_rows(std::ostream& out, const std::vector<SweepRow>& rows);

/// One figure of the shipped configuration.
struct FigureConfig {
  std::string id;
  std::string title;
  std::vector<SweepSpec> curves;
};

/// Reads the INI-style figure file: one section per figure with keys
/// title, family, variable, start, stop, count, extra, curves, methods,
/// backend. `curves` separates curves with '|' and parameters with spaces.
std::vector<FigureConfig> load_figures(const std::string& path);

/// Path compiled in at build time.
std::string default_figures_path();

}  // namespace dfisher::cli

#endif  // DFISHER_CLI_SWEEP_HPP
