#ifndef DFISHER_ASYMPTOTICS_HPP
#define DFISHER_ASYMPTOTICS_HPP

#include <map>
#include <string>
#include <string_view>

#include "dfisher/family.hpp"
#include "dfisher/scalar.hpp"

namespace dfisher {

enum class LimitVariable {
  DegreeToInfinity,
  MuToZero,
  MuToOne,
  GammaToZero,
  GammaToInfinity,
  PToZero,
  PToOne,
  SizeToInfinity,
};

std::string_view to_string(LimitVariable v);
/// "n->inf", "mu->0", "mu->1", "gamma->0", "gamma->inf", "p->0", "p->1", "N->inf".
LimitVariable parse_limit_variable(std::string_view name);

/// A limiting formula of one family. `fixed` holds every parameter except
/// the limit variable, by its flag name (n, mu, gamma, p, N).
struct AsymptoteSpec {
  FamilyTag family;
  LimitVariable limit;
  std::map<std::string, Rational> fixed;

  /// Throws DomainError when `limit` is not a parameter of `family` or a
  /// required fixed parameter is missing.
  void validate() const;
  /// Value of the asymptote with the limit variable set to `at`.
  template <Field T>
  T evaluate(const Rational& at) const;
};

/// (1-mu)/mu + (1-gamma)/n.
template <Field T>
T meixner_large_n(const Rational& gamma, const Rational& mu, long n);

/// n/(n+gamma-1) 2F1(1-n,1;2-n-gamma;1) (1-mu)^2.
template <Field T>
T meixner_mu_to_one(const Rational& gamma, long n, const Rational& mu);

/// n/((n+gamma-1) mu).
template <Field T>
T meixner_mu_to_zero(const Rational& gamma, long n, const Rational& mu);

/// n (1-mu)^2 / (mu gamma).
template <Field T>
T meixner_gamma_to_infinity(long n, const Rational& mu, const Rational& gamma);

/// (n/gamma) (1-mu)^2 mu^(n-2).
template <Field T>
T meixner_gamma_to_zero(long n, const Rational& mu, const Rational& gamma);

/// ((1-p)^(1-N) + (1-N)p - 1) / (N p^3), the value at n = N-1.
template <Field T>
T kravchuk_max_degree(long N, const Rational& p);

/// 1 / (N (1-p)^(N-1) p^3), the large-N form of kravchuk_max_degree.
template <Field T>
T kravchuk_max_degree_large_N(long N, const Rational& p);

/// n / ((N-n+1) p).
template <Field T>
T kravchuk_p_to_zero(long n, long N, const Rational& p);

/// n! / ((N-n+1)_n (1-p)^n).
template <Field T>
T kravchuk_p_to_one(long n, long N, const Rational& p);

}  // namespace dfisher

#endif  // DFISHER_ASYMPTOTICS_HPP
