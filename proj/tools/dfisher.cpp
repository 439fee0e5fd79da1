#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dfisher/cli/commands.hpp"
#include "dfisher/cli/sweep.hpp"
#include "dfisher/cli/verify.hpp"
#include "dfisher/errors.hpp"

namespace {

using namespace dfisher;
using namespace dfisher::cli;

/// Flags shared by every family-driven subcommand, kept as strings so that
/// exact rationals like 3/2 survive parsing.
struct FamilyFlags {
  std::string family;
  std::map<std::string, std::string> raw;
  std::string backend = "exact";

  void attach(CLI::App* app, bool with_n) {
    app->add_option("--family", family, "charlier | meixner | kravchuk | hahn")->required();
    for (const char* key : {"mu", "gamma", "p", "N", "alpha", "beta"}) {
      app->add_option(std::string("--") + key, raw[key], std::string("family parameter ") + key);
    }
    if (with_n) app->add_option("--n", raw["n"], "degree")->required();
    app->add_option("--backend", backend, "exact | float")->capture_default_str();
  }

  ParamMap params() const {
    ParamMap out;
    for (const auto& [key, text] : raw) {
      if (text.empty()) continue;
      try {
        out[key] = parse_rational(text);
      } catch (const std::invalid_argument& e) {
        throw UsageError("--" + key + ": " + e.what());
      }
    }
    return out;
  }

  FamilyTag tag() const {
    try {
      return parse_family_tag(family);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
};

std::vector<Method> parse_methods(const std::vector<std::string>& names) {
  std::vector<Method> out;
  for (const auto& n : names) {
    try {
      out.push_back(parse_method(n));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  set_working_precision(precision_from_environment());

  CLI::App app{
      "Relative Fisher information of the Charlier, Meixner, Kravchuk and Hahn polynomials.\n"
      "Exit codes: 0 success, 1 verification failure, 2 parameter-domain error, 64 usage error.\n"
      "Precision of the float backend: DFISHER_PRECISION (decimal digits, default 80, minimum 50)."};
  app.require_subcommand(1);

  FamilyFlags fisher_flags;
  std::vector<std::string> fisher_methods;
  auto* fisher = app.add_subcommand("fisher", "I[P_n] by every evaluation method, as CSV");
  fisher_flags.attach(fisher, true);
  fisher->add_option("--methods", fisher_methods, "subset of direct,theorem,expansion,closed")->delimiter(',');

  FamilyFlags point_flags;
  std::string points;
  auto* eval = app.add_subcommand("eval", "monic P_n(x) values, as CSV");
  auto* density = app.add_subcommand("density", "Rakhmanov density values, as CSV");
  for (auto* sub : {eval, density}) {
    point_flags.attach(sub, true);
    sub->add_option("--x", points, "points: comma list (0,1,5/2) or integer range a:b")->required();
  }

  std::vector<std::string> figures;
  std::string config = default_figures_path();
  std::string out_path;
  unsigned threads = 0;
  FamilyFlags sweep_flags;
  sweep_flags.backend = "float";
  std::string vary, from, to, extra;
  long count = 0;
  std::vector<std::string> sweep_methods;
  auto* sweep = app.add_subcommand("sweep", "parameter sweeps as long-format CSV");
  sweep->add_option("--figure", figures, "figure ids from the config (repeatable, 'all' for every figure)")
      ->delimiter(',');
  sweep->add_option("--config", config, "figure config file")->capture_default_str();
  sweep->add_option("--out", out_path, "output file (default: standard output)");
  sweep->add_option("--threads", threads, "worker threads (0 = hardware concurrency)");
  sweep->add_option("--family", sweep_flags.family, "ad-hoc sweep: family");
  for (const char* key : {"mu", "gamma", "p", "N", "alpha", "beta", "n"}) {
    sweep->add_option(std::string("--") + key, sweep_flags.raw[key], std::string("ad-hoc sweep: fixed ") + key);
  }
  sweep->add_option("--backend", sweep_flags.backend, "ad-hoc sweep: exact | float")->capture_default_str();
  sweep->add_option("--vary", vary, "ad-hoc sweep: swept variable (n or a parameter)");
  sweep->add_option("--from", from, "ad-hoc sweep: grid start");
  sweep->add_option("--to", to, "ad-hoc sweep: grid stop");
  sweep->add_option("--count", count, "ad-hoc sweep: number of linear grid points");
  sweep->add_option("--extra", extra, "ad-hoc sweep: additional grid points, comma separated");
  sweep->add_option("--methods", sweep_methods, "ad-hoc sweep: methods (default expansion)")->delimiter(',');

  std::vector<std::string> suites;
  bool notes = false;
  bool list = false;
  auto* verify = app.add_subcommand("verify", "run the invariant suites");
  verify->add_option("--suite", suites, "suite name (repeatable; default all)")->delimiter(',');
  verify->add_flag("--notes", notes, "print informational lines of every suite");
  verify->add_flag("--list", list, "list suite names and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*fisher) {
      FisherArgs args{fisher_flags.tag(), fisher_flags.params(), parse_backend(fisher_flags.backend)};
      if (!fisher_methods.empty()) args.methods = parse_methods(fisher_methods);
      return cmd_fisher(args, std::cout, std::cerr);
    }
    if (*eval || *density) {
      PointArgs args{point_flags.tag(), point_flags.params(), parse_backend(point_flags.backend),
                     parse_point_list(points)};
      return *eval ? cmd_eval(args, std::cout, std::cerr) : cmd_density(args, std::cout, std::cerr);
    }
    if (*sweep) {
      std::vector<SweepSpec> specs;
      if (!sweep_flags.family.empty()) {
        if (!figures.empty()) throw UsageError("use either --figure or an ad-hoc --family sweep");
        if (vary.empty() || from.empty() || to.empty() || count < 1) {
          throw UsageError("ad-hoc sweep needs --vary, --from, --to and --count");
        }
        SweepSpec spec;
        spec.curve = "custom";
        spec.family = sweep_flags.tag();
        spec.variable = vary;
        spec.fixed = sweep_flags.params();
        try {
          spec.grid.start = parse_rational(from);
          spec.grid.stop = parse_rational(to);
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
        spec.grid.count = count;
        spec.grid.extra = parse_point_list(extra);
        spec.backend = parse_backend(sweep_flags.backend);
        if (!sweep_methods.empty()) spec.methods = parse_methods(sweep_methods);
        specs.push_back(std::move(spec));
      } else {
        if (figures.empty()) throw UsageError("sweep needs --figure or --family");
        const std::vector<FigureConfig> all = load_figures(config);
        for (const auto& id : figures) {
          bool found = false;
          for (const auto& fig : all) {
            if (id == "all" || fig.id == id) {
              specs.insert(specs.end(), fig.curves.begin(), fig.curves.end());
              found = true;
            }
          }
          if (!found) throw UsageError("no figure '" + id + "' in " + config);
        }
      }
      const std::vector<SweepRow> rows = run_sweep(specs, threads);
      if (out_path.empty()) {
        write_sweep_header(std::cout);
        write_sweep_rows(std::cout, rows);
      } else {
        std::ofstream file(out_path);
        if (!file) throw UsageError("cannot write " + out_path);
        write_sweep_header(file);
        write_sweep_rows(file, rows);
      }
      return kExitOk;
    }
    if (*verify) {
      if (list) {
        for (const auto& s : suite_names()) std::cout << s << '\n';
        return kExitOk;
      }
      return cmd_verify(suites, notes, std::cout);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.kind() << ": " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}
