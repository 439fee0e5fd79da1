#include "dfisher/cli/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <ostream>
#include <thread>

#include <boost/algorithm/string.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "dfisher/errors.hpp"

#ifndef DFISHER_FIGURES_CONFIG_PATH
#define DFISHER_FIGURES_CONFIG_PATH "config/figures.ini"
#endif

namespace dfisher::cli {

std::vector<Rational> Grid::points() const {
  if (count < 1) throw UsageError("grid count must be >= 1");
  std::vector<Rational> pts;
  if (count == 1) {
    pts.push_back(start);
  } else {
    const Rational step = (stop - start) / (count - 1);
    for (long i = 0; i < count; ++i) pts.push_back(start + step * i);
  }
  pts.insert(pts.end(), extra.begin(), extra.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

void SweepSpec::validate() const {
  const auto& names = family_parameter_names(family);
  const bool known = variable == "n" || std::find(names.begin(), names.end(), variable) != names.end();
  if (!known) {
    throw UsageError("'" + variable + "' is not a parameter of the " + std::string(to_string(family)) + " family");
  }
  if (fixed.count(variable)) throw UsageError("'" + variable + "' is swept and cannot also be fixed");
  if (methods.empty()) throw UsageError("no methods selected");
  const std::vector<Rational> pts = grid.points();
  if (variable == "n" || variable == "N") {
    for (const auto& x : pts) {
      if (boost::multiprecision::denominator(x) != 1) {
        throw UsageError("grid for " + variable + " must be integer, got " + format_exact(x));
      }
    }
  }
  if (variable != "n" && !fixed.count("n")) throw UsageError("sweep over " + variable + " needs a fixed n");
}

namespace {

std::string error_kind(const std::string& error) {
  const auto colon = error.find(':');
  return colon == std::string::npos ? error : error.substr(0, colon);
}

std::vector<SweepRow> evaluate_point(const SweepSpec& spec, const Rational& x) {
  ParamMap params = spec.fixed;
  params[spec.variable] = x;
  std::vector<SweepRow> rows;
  auto base = [&](Method m) {
    SweepRow row;
    row.curve = spec.curve;
    row.variable = spec.variable;
    row.x = x;
    row.family = std::string(to_string(spec.family));
    row.n = params.count("n") ? format_exact(params.at("n")) : "?";
    row.params = params_string(spec.family, params);
    row.method = m;
    return row;
  };
  try {
    const long n = require_integer(params.at("n"), "n");
    const FamilySpec f = make_family(spec.family, params);
    const FisherReport report = spec.backend == Backend::Exact
                                    ? fisher_report<Rational>(f, n, spec.trunc, spec.methods)
                                    : fisher_report<BigFloat>(f, n, spec.trunc, spec.methods);
    for (const auto& o : report.outcomes) {
      SweepRow row = base(o.method);
      row.value = o.value;
      row.converged = o.value.has_value() && o.converged;
      row.status = o.value ? "ok" : error_kind(o.error);
      rows.push_back(std::move(row));
    }
  } catch (const Error& e) {
    for (const Method m : spec.methods) {
      SweepRow row = base(m);
      row.status = e.kind();
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace

std::vector<SweepRow> run_sweep(const std::vector<SweepSpec>& specs, unsigned threads) {
  struct Task {
    const SweepSpec* spec;
    Rational x;
  };
  std::vector<Task> tasks;
  for (const auto& spec : specs) {
    spec.validate();
    for (auto& x : spec.grid.points()) tasks.push_back({&spec, std::move(x)});
  }
  std::vector<std::vector<SweepRow>> results(tasks.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(tasks.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      results[i] = evaluate_point(*tasks[i].spec, tasks[i].x);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::vector<SweepRow> rows;
  for (auto& r : results) std::move(r.begin(), r.end(), std::back_inserter(rows));
  return rows;
}

void write_sweep_header(std::ostream& out) {
  out << "curve,variable,x,family,n,params,method,value,converged,status\n";
}

void write_sweep_rows(std::ostream& out, const std::vector<SweepRow>& rows) {
  for (const auto& r : rows) {
    out << r.curve << ',' << r.variable << ',' << format_grid_value(r.x) << ',' << r.family << ',' << r.n << ','
        << r.params << ',' << to_string(r.method) << ',' << (r.value ? r.value->str() : std::string("error")) << ','
        << (r.converged ? "true" : "false") << ',' << r.status << '\n';
  }
}

namespace {

ParamMap parse_assignments(const std::string& text, const std::string& where) {
  ParamMap params;
  std::vector<std::string> parts;
  const std::string trimmed = boost::algorithm::trim_copy(text);
  if (trimmed.empty()) return params;
  boost::algorithm::split(parts, trimmed, boost::algorithm::is_any_of(" \t"), boost::algorithm::token_compress_on);
  for (const auto& part : parts) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw UsageError(where + ": expected key=value, got '" + part + "'");
    try {
      params[part.substr(0, eq)] = parse_rational(part.substr(eq + 1));
    } catch (const std::invalid_argument& e) {
      throw UsageError(where + ": " + e.what());
    }
  }
  return params;
}

Rational required_rational(const boost::property_tree::ptree& sec, const std::string& key, const std::string& where) {
  const auto v = sec.get_optional<std::string>(key);
  if (!v) throw UsageError(where + ": missing key '" + key + "'");
  try {
    return parse_rational(*v);
  } catch (const std::invalid_argument& e) {
    throw UsageError(where + "." + key + ": " + e.what());
  }
}

}  // namespace

std::vector<FigureConfig> load_figures(const std::string& path) {
  boost::property_tree::ptree tree;
  try {
    boost::property_tree::ini_parser::read_ini(path, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw UsageError("cannot read figure config: " + std::string(e.what()));
  }
  std::vector<FigureConfig> figures;
  for (const auto& [id, sec] : tree) {
    FigureConfig fig;
    fig.id = id;
    fig.title = sec.get<std::string>("title", id);
    SweepSpec proto;
    try {
      proto.family = parse_family_tag(sec.get<std::string>("family", ""));
    } catch (const std::invalid_argument& e) {
      throw UsageError(id + ": " + e.what());
    }
    proto.variable = sec.get<std::string>("variable", "n");
    proto.grid.start = required_rational(sec, "start", id);
    proto.grid.stop = required_rational(sec, "stop", id);
    proto.grid.count = require_integer(required_rational(sec, "count", id), id + ".count");
    proto.grid.extra = parse_point_list(sec.get<std::string>("extra", ""));
    proto.backend = parse_backend(sec.get<std::string>("backend", "float"));
    proto.methods.clear();
    std::vector<std::string> names;
    const std::string methods = sec.get<std::string>("methods", "expansion");
    boost::algorithm::split(names, methods, boost::algorithm::is_any_of(","));
    for (auto& m : names) {
      boost::algorithm::trim(m);
      if (m.empty()) continue;
      try {
        proto.methods.push_back(parse_method(m));
      } catch (const std::invalid_argument& e) {
        throw UsageError(id + ": " + e.what());
      }
    }
    std::vector<std::string> curves;
    const std::string curve_text = sec.get<std::string>("curves", "");
    boost::algorithm::split(curves, curve_text, boost::algorithm::is_any_of("|"));
    int index = 0;
    for (const auto& c : curves) {
      if (boost::algorithm::trim_copy(c).empty()) continue;
      SweepSpec spec = proto;
      spec.curve = id + "." + std::to_string(++index);
      spec.fixed = parse_assignments(c, id);
      spec.validate();
      fig.curves.push_back(std::move(spec));
    }
    if (fig.curves.empty()) throw UsageError(id + ": no curves");
    figures.push_back(std::move(fig));
  }
  return figures;
}

std::string default_figures_path() { return DFISHER_FIGURES_CONFIG_PATH; }

}  // namespace dfisher::cli
