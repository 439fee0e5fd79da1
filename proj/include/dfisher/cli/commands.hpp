#ifndef DFISHER_CLI_COMMANDS_HPP
#define DFISHER_CLI_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "dfisher/cli/params.hpp"
#include "dfisher/fisher.hpp"

namespace dfisher::cli {

struct FisherArgs {
  FamilyTag family;
  ParamMap params;  // includes n
  Backend backend = Backend::Exact;
  std::vector<Method> methods = {std::begin(kAllMethods), std::end(kAllMethods)};
};

/// Header `family,n,params,method,value,converged,discrepancy`; the
/// discrepancy column is the relative difference from the Expansion value.
int cmd_fisher(const FisherArgs& args, std::ostream& out, std::ostream& err);

struct PointArgs {
  FamilyTag family;
  ParamMap params;  // includes n
  Backend backend = Backend::Exact;
  std::vector<Rational> points;
};

/// `family,n,params,x,value` with monic P_n(x).
int cmd_eval(const PointArgs& args, std::ostream& out, std::ostream& err);

/// `family,n,params,x,density`.
int cmd_density(const PointArgs& args, std::ostream& out, std::ostream& err);

}  // namespace dfisher::cli

#endif  // DFISHER_CLI_COMMANDS_HPP
