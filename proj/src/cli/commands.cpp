#include "dfisher/cli/commands.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "dfisher/errors.hpp"
#include "dfisher/families.hpp"

namespace dfisher::cli {

namespace {

long degree_of(const ParamMap& params) {
  const auto it = params.find("n");
  if (it == params.end()) throw UsageError("missing --n");
  return require_integer(it->second, "n");
}

}  // namespace

int cmd_fisher(const FisherArgs& args, std::ostream& out, std::ostream& err) {
  FisherReport report{FamilySpec::charlier(Rational(1)), 0, {}, Scalar(), std::nullopt};
  try {
    const long n = degree_of(args.params);
    const FamilySpec f = make_family(args.family, args.params);
    f.check_degree(n);
    std::vector<Method> methods = args.methods;
    // The discrepancy column needs the reference value even when not requested.
    const bool has_expansion = std::find(methods.begin(), methods.end(), Method::Expansion) != methods.end();
    if (!has_expansion) methods.push_back(Method::Expansion);
    report = args.backend == Backend::Exact ? fisher_report<Rational>(f, n, TruncationPolicy::defaults(), methods)
                                            : fisher_report<BigFloat>(f, n, TruncationPolicy::defaults(), methods);
  } catch (const Error& e) {
    err << "error: " << e.kind() << ": " << e.what() << '\n';
    return kExitDomain;
  }
  const MethodOutcome* reference = report.find(Method::Expansion);
  out << "family,n,params,method,value,converged,discrepancy\n";
  for (const Method m : args.methods) {
    const MethodOutcome* o = report.find(m);
    out << report.family.name() << ',' << report.degree << ',' << report.family.params_string() << ','
        << to_string(m) << ',';
    if (o->value) {
      out << o->value->str() << ',' << (o->converged ? "true" : "false") << ',';
      if (reference && reference->value) out << relative_difference(*o->value, *reference->value).str();
    } else {
      out << "error,false,";
      err << "warning: " << to_string(m) << ": " << o->error << '\n';
    }
    out << '\n';
  }
  return kExitOk;
}

namespace {

template <Field T>
void eval_rows(const FamilySpec& f, long n, const std::vector<Rational>& points, std::ostream& out) {
  for (const auto& x : points) {
    out << f.name() << ',' << n << ',' << f.params_string() << ',' << format_grid_value(x) << ','
        << Scalar(eval_poly<T>(f, n, from_rational<T>(x))).str() << '\n';
  }
}

template <Field T>
void density_rows(const FamilySpec& f, long n, const std::vector<long>& points, std::ostream& out) {
  for (const long x : points) {
    out << f.name() << ',' << n << ',' << f.params_string() << ',' << x << ','
        << Scalar(rakhmanov_density<T>(f, n, x)).str() << '\n';
  }
}

}  // namespace

int cmd_eval(const PointArgs& args, std::ostream& out, std::ostream& err) {
  try {
    const long n = degree_of(args.params);
    const FamilySpec f = make_family(args.family, args.params);
    f.check_degree(n);
    std::ostringstream buf;
    if (args.backend == Backend::Exact) {
      eval_rows<Rational>(f, n, args.points, buf);
    } else {
      eval_rows<BigFloat>(f, n, args.points, buf);
    }
    out << "family,n,params,x,value\n" << buf.str();
  } catch (const Error& e) {
    err << "error: " << e.kind() << ": " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitOk;
}

int cmd_density(const PointArgs& args, std::ostream& out, std::ostream& err) {
  try {
    const long n = degree_of(args.params);
    const FamilySpec f = make_family(args.family, args.params);
    f.check_degree(n);
    std::vector<long> xs;
    for (const auto& x : args.points) {
      xs.push_back(require_integer(x, "x"));
      f.check_support(xs.back());
    }
    std::ostringstream buf;
    if (args.backend == Backend::Exact) {
      density_rows<Rational>(f, n, xs, buf);
    } else {
      density_rows<BigFloat>(f, n, xs, buf);
    }
    out << "family,n,params,x,density\n" << buf.str();
  } catch (const Error& e) {
    err << "error: " << e.kind() << ": " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace dfisher::cli
