#ifndef DFISHER_CLI_PARAMS_HPP
#define DFISHER_CLI_PARAMS_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "dfisher/family.hpp"
#include "dfisher/scalar.hpp"

namespace dfisher::cli {

/// Bad flags or config; maps to exit code 64.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitDomain = 2, kExitUsage = 64 };

enum class Backend { Exact, Float };

Backend parse_backend(const std::string& name);
std::string to_string(Backend b);

/// Family parameters by flag name: mu, gamma, p, N, alpha, beta (and n).
using ParamMap = std::map<std::string, Rational>;

/// Names the family needs, in display order.
const std::vector<std::string>& family_parameter_names(FamilyTag tag);

/// Missing parameters raise UsageError, non-integer N raises DomainError and
/// the family factories raise DomainError for out-of-domain values.
FamilySpec make_family(FamilyTag tag, const ParamMap& params);

/// "key=value;..." in the family's display order; used when the family
/// itself could not be built.
std::string params_string(FamilyTag tag, const ParamMap& params);

long require_integer(const Rational& value, const std::string& what);

/// Exact decimal when the value has a short terminating expansion, p/q otherwise.
std::string format_grid_value(const Rational& x);

/// Comma list "0,1,5/2" or inclusive integer range "a:b".
std::vector<Rational> parse_point_list(const std::string& text);

}  // namespace dfisher::cli

#endif  // DFISHER_CLI_PARAMS_HPP
