#ifndef DFISHER_FAMILY_HPP
#define DFISHER_FAMILY_HPP

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "dfisher/scalar.hpp"

namespace dfisher {

enum class FamilyTag { Charlier, Meixner, Kravchuk, Hahn };

std::string_view to_string(FamilyTag tag);
/// Case-insensitive; also accepts "krawtchouk". Throws std::invalid_argument.
FamilyTag parse_family_tag(std::string_view name);

struct CharlierParams {
  Rational mu;
};
struct MeixnerParams {
  Rational gamma;
  Rational mu;
};
struct KravchukParams {
  Rational p;
  long N;
};
struct HahnParams {
  Rational alpha;
  Rational beta;
  long N;
};

/// Lattice x = a, a+1, ..., b-1; b empty means the support is unbounded.
struct LatticeSupport {
  long a = 0;
  std::optional<long> b;

  bool bounded() const { return b.has_value(); }
  bool contains(long x) const { return x >= a && (!b || x < *b); }
};

/// One of the four classical families with validated parameters.
///
/// Domains: Charlier mu > 0; Meixner gamma > 0, 0 < mu < 1;
/// Kravchuk 0 < p < 1, N >= 1; Hahn alpha > -1, beta > -1, N >= 1.
/// Construction outside these throws DomainError.
class FamilySpec {
 public:
  using Params = std::variant<CharlierParams, MeixnerParams, KravchukParams, HahnParams>;

  static FamilySpec charlier(Rational mu);
  static FamilySpec meixner(Rational gamma, Rational mu);
  static FamilySpec kravchuk(Rational p, long N);
  static FamilySpec hahn(Rational alpha, Rational beta, long N);

  FamilyTag tag() const;
  const Params& params() const { return params_; }

  template <class P>
  const P& as() const {
    return std::get<P>(params_);
  }

  LatticeSupport support() const;
  /// N - 1 for Kravchuk and Hahn, none for the unbounded families.
  std::optional<long> max_degree() const;
  /// Throws DegreeOutOfRange unless 0 <= n <= max_degree().
  void check_degree(long n) const;
  /// Throws OutOfSupport unless x lies in support().
  void check_support(long x) const;

  /// "charlier", "meixner", ...
  std::string name() const;
  /// Semicolon separated exact parameters, e.g. "gamma=3/2;mu=1/4".
  std::string params_string() const;

  friend bool operator==(const FamilySpec& a, const FamilySpec& b);

 private:
  explicit FamilySpec(Params p) : params_(std::move(p)) {}
  Params params_;
};

bool operator==(const CharlierParams& a, const CharlierParams& b);
bool operator==(const MeixnerParams& a, const MeixnerParams& b);
bool operator==(const KravchukParams& a, const KravchukParams& b);
bool operator==(const HahnParams& a, const HahnParams& b);

}  // namespace dfisher

#endif  // DFISHER_FAMILY_HPP
