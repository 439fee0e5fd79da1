#include "dfisher/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace dfisher {

void set_working_precision(unsigned digits) {
  BigFloat::default_precision(std::max(digits, kMinimumPrecision));
}

unsigned working_precision() { return BigFloat::default_precision(); }

unsigned precision_from_environment() {
  const char* raw = std::getenv(kPrecisionEnvVar);
  if (raw == nullptr || *raw == '\0') return kDefaultPrecision;
  char* end = nullptr;
  const unsigned long v = std::strtoul(raw, &end, 10);
  if (end == raw || *end != '\0' || v == 0) {
    throw std::invalid_argument(std::string(kPrecisionEnvVar) + " must be a positive integer, got '" +
                                raw + "'");
  }
  return static_cast<unsigned>(std::max<unsigned long>(v, kMinimumPrecision));
}

BigFloat to_bigfloat(const Rational& q) {
  BigFloat num(boost::multiprecision::numerator(q));
  BigFloat den(boost::multiprecision::denominator(q));
  return num / den;
}

template <>
bool is_nonpositive_integer<Rational>(const Rational& x) {
  return boost::multiprecision::denominator(x) == 1 && x <= 0;
}

template <>
bool is_nonpositive_integer<BigFloat>(const BigFloat& x) {
  return x <= 0 && boost::multiprecision::floor(x) == x;
}

namespace {

Rational parse_decimal(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  Integer mantissa = 0;
  long scale = 0;
  bool any_digit = false;
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mantissa = mantissa * 10 + (c - '0');
      if (seen_point) --scale;
      any_digit = true;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) throw std::invalid_argument("not a number: '" + std::string(whole) + "'");
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') {
      throw std::invalid_argument("not a number: '" + std::string(whole) + "'");
    }
    ++i;
    bool exp_negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      exp_negative = text[i] == '-';
      ++i;
    }
    long exponent = 0;
    bool exp_digit = false;
    for (; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw std::invalid_argument("not a number: '" + std::string(whole) + "'");
      }
      exponent = exponent * 10 + (text[i] - '0');
      exp_digit = true;
      if (exponent > 100000) throw std::invalid_argument("exponent too large: '" + std::string(whole) + "'");
    }
    if (!exp_digit) throw std::invalid_argument("not a number: '" + std::string(whole) + "'");
    scale += exp_negative ? -exponent : exponent;
  }
  Rational value(mantissa);
  Integer ten_pow = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(scale < 0 ? -scale : scale));
  if (scale < 0) {
    value /= Rational(ten_pow);
  } else {
    value *= Rational(ten_pow);
  }
  return negative ? Rational(-value) : value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view t = trim(text);
  if (t.empty()) throw std::invalid_argument("empty number");
  const auto slash = t.find('/');
  if (slash == std::string_view::npos) return parse_decimal(t, t);
  const Rational num = parse_decimal(trim(t.substr(0, slash)), t);
  const Rational den = parse_decimal(trim(t.substr(slash + 1)), t);
  if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(t) + "'");
  return num / den;
}

std::string format_exact(const Rational& q) { return q.str(); }

std::string format_decimal(const BigFloat& x) {
  if (x == 0) return "0";
  return x.str(static_cast<std::streamsize>(working_precision()), std::ios_base::fmtflags(0));
}

BigFloat Scalar::to_bigfloat() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return dfisher::to_bigfloat(*q);
  return std::get<BigFloat>(value_);
}

bool Scalar::is_zero() const { return sign() == 0; }

int Scalar::sign() const {
  return std::visit([](const auto& v) { return v.sign(); }, value_);
}

std::string Scalar::str() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return format_exact(*q);
  return format_decimal(std::get<BigFloat>(value_));
}

Scalar relative_difference(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) {
    const Rational diff = abs(a.exact() - b.exact());
    if (diff == 0) return Scalar(Rational(0));
    const Rational scale = std::max(abs(a.exact()), abs(b.exact()));
    return Scalar(Rational(diff / scale));
  }
  const BigFloat x = a.to_bigfloat();
  const BigFloat y = b.to_bigfloat();
  const BigFloat diff = abs(x - y);
  if (diff == 0) return Scalar(BigFloat(0));
  const BigFloat scale = std::max(abs(x), abs(y));
  return Scalar(BigFloat(diff / scale));
}

bool operator<(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return a.exact() < b.exact();
  return a.to_bigfloat() < b.to_bigfloat();
}

}  // namespace dfisher
