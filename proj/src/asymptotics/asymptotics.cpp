#include "dfisher/asymptotics.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <vector>

#include "dfisher/errors.hpp"
#include "dfisher/hypergeometric.hpp"

namespace dfisher {

namespace {

template <Field T>
T int_pow(const T& base, long e) {
  if (e < 0) return T(1) / int_pow(base, -e);
  T result(1);
  for (long k = 0; k < e; ++k) result *= base;
  return result;
}

struct LimitInfo {
  LimitVariable v;
  std::string_view name;
  FamilyTag family;
  std::string_view variable;
  std::vector<std::string> needs;
};

const std::vector<LimitInfo>& limit_table() {
  static const std::vector<LimitInfo> table = {
      {LimitVariable::DegreeToInfinity, "n->inf", FamilyTag::Meixner, "n", {"gamma", "mu"}},
      {LimitVariable::MuToZero, "mu->0", FamilyTag::Meixner, "mu", {"gamma", "n"}},
      {LimitVariable::MuToOne, "mu->1", FamilyTag::Meixner, "mu", {"gamma", "n"}},
      {LimitVariable::GammaToZero, "gamma->0", FamilyTag::Meixner, "gamma", {"n", "mu"}},
      {LimitVariable::GammaToInfinity, "gamma->inf", FamilyTag::Meixner, "gamma", {"n", "mu"}},
      {LimitVariable::PToZero, "p->0", FamilyTag::Kravchuk, "p", {"n", "N"}},
      {LimitVariable::PToOne, "p->1", FamilyTag::Kravchuk, "p", {"n", "N"}},
      {LimitVariable::SizeToInfinity, "N->inf", FamilyTag::Kravchuk, "N", {"p"}},
  };
  return table;
}

const LimitInfo& info(LimitVariable v) {
  for (const auto& i : limit_table()) {
    if (i.v == v) return i;
  }
  throw std::logic_error("unknown limit variable");
}

long as_long(const Rational& r, std::string_view what) {
  if (denominator(r) != 1) throw DomainError(std::string(what) + " must be an integer");
  return numerator(r).convert_to<long>();
}

}  // namespace

std::string_view to_string(LimitVariable v) { return info(v).name; }

LimitVariable parse_limit_variable(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (const auto& i : limit_table()) {
    std::string key(i.name);
    std::transform(key.begin(), key.end(), key.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (key == lower) return i.v;
  }
  throw std::invalid_argument("unknown limit '" + std::string(name) + "'");
}

void AsymptoteSpec::validate() const {
  const LimitInfo& i = info(limit);
  if (i.family != family) {
    throw DomainError(std::string(i.name) + " is not a limit of the " + std::string(to_string(family)) +
                      " family");
  }
  for (const auto& key : i.needs) {
    if (!fixed.count(key)) throw DomainError(std::string(i.name) + " needs a fixed value for " + key);
  }
  if (fixed.count(std::string(i.variable))) {
    throw DomainError(std::string(i.variable) + " is the limit variable and cannot be fixed");
  }
}

template <Field T>
T AsymptoteSpec::evaluate(const Rational& at) const {
  validate();
  auto get = [&](const char* k) { return fixed.at(k); };
  switch (limit) {
    case LimitVariable::DegreeToInfinity: return meixner_large_n<T>(get("gamma"), get("mu"), as_long(at, "n"));
    case LimitVariable::MuToZero: return meixner_mu_to_zero<T>(get("gamma"), as_long(get("n"), "n"), at);
    case LimitVariable::MuToOne: return meixner_mu_to_one<T>(get("gamma"), as_long(get("n"), "n"), at);
    case LimitVariable::GammaToZero: return meixner_gamma_to_zero<T>(as_long(get("n"), "n"), get("mu"), at);
    case LimitVariable::GammaToInfinity:
      return meixner_gamma_to_infinity<T>(as_long(get("n"), "n"), get("mu"), at);
    case LimitVariable::PToZero:
      return kravchuk_p_to_zero<T>(as_long(get("n"), "n"), as_long(get("N"), "N"), at);
    case LimitVariable::PToOne: return kravchuk_p_to_one<T>(as_long(get("n"), "n"), as_long(get("N"), "N"), at);
    case LimitVariable::SizeToInfinity: return kravchuk_max_degree_large_N<T>(as_long(at, "N"), get("p"));
  }
  throw std::logic_error("unknown limit variable");
}

template <Field T>
T meixner_large_n(const Rational& gamma, const Rational& mu, long n) {
  if (n < 1) throw DegreeOutOfRange("large-n asymptote needs n >= 1");
  const T m = from_rational<T>(mu);
  return (1 - m) / m + (1 - from_rational<T>(gamma)) / T(n);
}

template <Field T>
T meixner_mu_to_one(const Rational& gamma, long n, const Rational& mu) {
  if (n < 1) throw DegreeOutOfRange("mu -> 1 asymptote needs n >= 1");
  const T g = from_rational<T>(gamma);
  const T m = from_rational<T>(mu);
  const T nn(n);
  const PFQSpec<T> series{{T(1 - nn), T(1)}, {T(2 - nn - g)}, T(1)};
  return nn / (nn + g - 1) * terminating_pfq(series) * (1 - m) * (1 - m);
}

template <Field T>
T meixner_mu_to_zero(const Rational& gamma, long n, const Rational& mu) {
  const T nn(n);
  return nn / ((nn + from_rational<T>(gamma) - 1) * from_rational<T>(mu));
}

template <Field T>
T meixner_gamma_to_infinity(long n, const Rational& mu, const Rational& gamma) {
  const T m = from_rational<T>(mu);
  return T(n) * (1 - m) * (1 - m) / (m * from_rational<T>(gamma));
}

template <Field T>
T meixner_gamma_to_zero(long n, const Rational& mu, const Rational& gamma) {
  const T m = from_rational<T>(mu);
  return T(n) / from_rational<T>(gamma) * (1 - m) * (1 - m) * int_pow(m, n - 2);
}

template <Field T>
T kravchuk_max_degree(long N, const Rational& p) {
  const T q = from_rational<T>(p);
  return (int_pow(T(1 - q), 1 - N) + T(1 - N) * q - 1) / (T(N) * q * q * q);
}

template <Field T>
T kravchuk_max_degree_large_N(long N, const Rational& p) {
  const T q = from_rational<T>(p);
  return T(1) / (T(N) * int_pow(T(1 - q), N - 1) * q * q * q);
}

template <Field T>
T kravchuk_p_to_zero(long n, long N, const Rational& p) {
  return T(n) / (T(N - n + 1) * from_rational<T>(p));
}

template <Field T>
T kravchuk_p_to_one(long n, long N, const Rational& p) {
  const auto un = static_cast<unsigned>(n);
  return factorial<T>(un) / (pochhammer<T>(T(N - n + 1), un) * int_pow(T(1 - from_rational<T>(p)), n));
}

#define DFISHER_INSTANTIATE(T)                                                       \
  template T AsymptoteSpec::evaluate<T>(const Rational&) const;                      \
  template T meixner_large_n<T>(const Rational&, const Rational&, long);             \
  template T meixner_mu_to_one<T>(const Rational&, long, const Rational&);           \
  template T meixner_mu_to_zero<T>(const Rational&, long, const Rational&);          \
  template T meixner_gamma_to_infinity<T>(long, const Rational&, const Rational&);   \
  template T meixner_gamma_to_zero<T>(long, const Rational&, const Rational&);       \
  template T kravchuk_max_degree<T>(long, const Rational&);                          \
  template T kravchuk_max_degree_large_N<T>(long, const Rational&);                  \
  template T kravchuk_p_to_zero<T>(long, long, const Rational&);                     \
  template T kravchuk_p_to_one<T>(long, long, const Rational&);

DFISHER_INSTANTIATE(Rational)
DFISHER_INSTANTIATE(BigFloat)

#undef DFISHER_INSTANTIATE

}  // namespace dfisher
