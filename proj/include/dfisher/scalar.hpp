#ifndef DFISHER_SCALAR_HPP
#define DFISHER_SCALAR_HPP

#include <concepts>
#include <string>
#include <string_view>
#include <variant>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace dfisher {

/// Exact rational numbers, always kept in lowest terms by GMP.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;
/// Arbitrary precision binary float; precision is set process-wide.
using BigFloat = boost::multiprecision::mpfr_float;

/// The two arithmetic backends every kernel is instantiated for.
template <class T>
concept Field = std::same_as<T, Rational> || std::same_as<T, BigFloat>;

template <Field T>
inline constexpr bool is_exact_v = std::same_as<T, Rational>;

inline constexpr unsigned kDefaultPrecision = 80;
inline constexpr unsigned kMinimumPrecision = 50;
/// Environment variable consulted by precision_from_environment().
inline constexpr const char* kPrecisionEnvVar = "DFISHER_PRECISION";

/// Sets the working precision (decimal digits) of all BigFloat values created
/// afterwards. Values below kMinimumPrecision are raised to it.
void set_working_precision(unsigned digits);
unsigned working_precision();
/// Reads DFISHER_PRECISION, falling back to kDefaultPrecision.
unsigned precision_from_environment();

BigFloat to_bigfloat(const Rational& q);

template <Field T>
T from_rational(const Rational& q) {
  if constexpr (is_exact_v<T>) {
    return q;
  } else {
    return to_bigfloat(q);
  }
}

template <Field T>
BigFloat as_bigfloat(const T& x) {
  if constexpr (is_exact_v<T>) {
    return to_bigfloat(x);
  } else {
    return x;
  }
}

template <Field T>
T from_int(long v) {
  return T(v);
}

/// True when x is an integer <= 0 (exactly, for both backends).
template <Field T>
bool is_nonpositive_integer(const T& x);

/// Parses "3/2", "-0.25", "1e-4", "7" into an exact rational.
/// Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string format_exact(const Rational& q);
/// Round-trippable decimal at the working precision.
std::string format_decimal(const BigFloat& x);

/// A value from either backend, as carried by reports and CLI output.
class Scalar {
 public:
  Scalar() : value_(Rational(0)) {}
  Scalar(Rational q) : value_(std::move(q)) {}
  Scalar(BigFloat x) : value_(std::move(x)) {}

  bool is_exact() const { return std::holds_alternative<Rational>(value_); }
  /// Requires is_exact().
  const Rational& exact() const { return std::get<Rational>(value_); }
  BigFloat to_bigfloat() const;
  bool is_zero() const;
  int sign() const;
  /// Exact values as p/q, floats as decimals.
  std::string str() const;

 private:
  std::variant<Rational, BigFloat> value_;
};

/// |a - b| / max(|a|, |b|), zero when both vanish. Exact when both are exact.
Scalar relative_difference(const Scalar& a, const Scalar& b);
bool operator<(const Scalar& a, const Scalar& b);

}  // namespace dfisher

#endif  // DFISHER_SCALAR_HPP
