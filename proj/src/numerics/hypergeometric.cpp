#include "dfisher/hypergeometric.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "dfisher/errors.hpp"

namespace dfisher {

template <Field T>
T pochhammer(const T& a, unsigned k) {
  T result(1);
  for (unsigned i = 0; i < k; ++i) result *= a + T(i);
  return result;
}

template <Field T>
T binomial(unsigned n, unsigned k) {
  if (k > n) return T(0);
  k = std::min(k, n - k);
  // Exact in integers for both backends.
  Integer c = 1;
  for (unsigned i = 1; i <= k; ++i) {
    c *= n - k + i;
    c /= i;
  }
  if constexpr (is_exact_v<T>) {
    return Rational(c);
  } else {
    return BigFloat(c);
  }
}

template <Field T>
std::optional<unsigned> termination_length(const PFQSpec<T>& spec) {
  std::optional<unsigned> m;
  for (const T& a : spec.numerator) {
    if (!is_nonpositive_integer(a)) continue;
    const unsigned len = T(-a).template convert_to<unsigned>();
    if (!m || len < *m) m = len;
  }
  return m;
}

template <Field T>
T terminating_pfq(const PFQSpec<T>& spec) {
  const auto m = termination_length(spec);
  if (!m) throw NotTerminating("pFq has no nonpositive-integer numerator parameter");
  if (spec.argument == 0) return T(1);
  T term(1);
  T sum(1);
  for (unsigned k = 0; k < *m; ++k) {
    const T kk(k);
    for (const T& a : spec.numerator) term *= a + kk;
    for (const T& b : spec.denominator) {
      const T factor = b + kk;
      if (factor == 0) {
        throw DenominatorPole("pFq denominator Pochhammer vanishes at index " + std::to_string(k + 1) +
                              " before termination at " + std::to_string(*m));
      }
      term /= factor;
    }
    term *= spec.argument;
    term /= T(k + 1);
    sum += term;
  }
  return sum;
}

BigFloat default_acceleration_tolerance() {
  return boost::multiprecision::pow(BigFloat(10), -static_cast<int>(working_precision() / 2));
}

template <Field T>
AcceleratedSum accelerated_pfq_at_minus_one(const PFQSpec<T>& spec, const BigFloat& tol,
                                            unsigned max_terms) {
  if (spec.argument != -1) throw std::invalid_argument("accelerated_pfq_at_minus_one needs argument -1");
  if (const auto m = termination_length(spec)) {
    return AcceleratedSum{Scalar(terminating_pfq(spec)), true, *m + 1};
  }
  if (max_terms < 4) throw std::invalid_argument("accelerated_pfq_at_minus_one needs max_terms >= 4");

  std::vector<BigFloat> num;
  std::vector<BigFloat> den;
  for (const T& a : spec.numerator) num.push_back(as_bigfloat(a));
  for (const T& b : spec.denominator) den.push_back(as_bigfloat(b));

  // terms[k] = k-th series term, partial[k] = sum of terms[0..k].
  std::vector<BigFloat> terms{BigFloat(1)};
  std::vector<BigFloat> partial{BigFloat(1)};
  terms.reserve(max_terms + 1);
  partial.reserve(max_terms + 1);
  for (unsigned k = 0; k < max_terms; ++k) {
    BigFloat t = terms.back();
    for (const BigFloat& a : num) t *= a + k;
    for (const BigFloat& b : den) {
      const BigFloat factor = b + k;
      if (factor == 0) {
        throw DenominatorPole("pFq denominator Pochhammer vanishes at index " + std::to_string(k + 1));
      }
      t /= factor;
    }
    t = -t / (k + 1);
    terms.push_back(t);
    partial.push_back(partial.back() + t);
  }

  BigFloat previous = partial[0];
  BigFloat estimate = previous;
  for (unsigned k = 1; k + 1 < terms.size(); ++k) {
    BigFloat numer = 0;
    BigFloat denom = 0;
    BigFloat binom = 1;  // C(k, j)
    for (unsigned j = 0; j <= k; ++j) {
      BigFloat c = binom * boost::multiprecision::pow(BigFloat(1 + j), static_cast<int>(k) - 1);
      if (j % 2 == 1) c = -c;
      const BigFloat w = c / terms[j + 1];
      numer += w * partial[j];
      denom += w;
      binom = binom * (k - j) / (j + 1);
    }
    estimate = numer / denom;
    if (k >= 3) {
      const BigFloat scale = abs(estimate) > 0 ? abs(estimate) : BigFloat(1);
      if (abs(estimate - previous) < tol * scale) {
        return AcceleratedSum{Scalar(estimate), true, k + 2};
      }
    }
    previous = estimate;
  }
  return AcceleratedSum{Scalar(estimate), false, static_cast<unsigned>(terms.size())};
}

#define DFISHER_INSTANTIATE(T)                                                              \
  template T pochhammer<T>(const T&, unsigned);                                             \
  template T binomial<T>(unsigned, unsigned);                                               \
  template std::optional<unsigned> termination_length<T>(const PFQSpec<T>&);                \
  template T terminating_pfq<T>(const PFQSpec<T>&);                                         \
  template AcceleratedSum accelerated_pfq_at_minus_one<T>(const PFQSpec<T>&, const BigFloat&, \
                                                          unsigned);

DFISHER_INSTANTIATE(Rational)
DFISHER_INSTANTIATE(BigFloat)

#undef DFISHER_INSTANTIATE

}  // namespace dfisher
