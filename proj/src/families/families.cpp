#include "dfisher/families.hpp"

#include <algorithm>

#include "dfisher/errors.hpp"
#include "dfisher/hypergeometric.hpp"

namespace dfisher {

namespace {

template <Field T>
T ipow(T base, long e) {
  if (e < 0) return T(1) / ipow(std::move(base), -e);
  T result(1);
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

template <Field T>
T param(const Rational& q) {
  return from_rational<T>(q);
}

}  // namespace

template <Field T>
TableOneData<T> table_one(const FamilySpec& f) {
  TableOneData<T> d;
  d.support = f.support();
  switch (f.tag()) {
    case FamilyTag::Charlier: {
      const T mu = param<T>(f.as<CharlierParams>().mu);
      d.sigma = {T(0), T(1), T(0)};
      d.tau = {mu, T(-1), T(0)};
      d.lambda = {T(0), T(1), T(0)};
      d.reduced_weight_constant = "exp(-mu)";
      break;
    }
    case FamilyTag::Meixner: {
      const auto& p = f.as<MeixnerParams>();
      const T mu = param<T>(p.mu);
      const T gamma = param<T>(p.gamma);
      d.sigma = {T(0), T(1), T(0)};
      d.tau = {mu * gamma, mu - 1, T(0)};
      d.lambda = {T(0), 1 - mu, T(0)};
      d.reduced_weight_constant = "1 (Gamma(gamma+x)/Gamma(gamma) kept as (gamma)_x)";
      break;
    }
    case FamilyTag::Kravchuk: {
      const auto& p = f.as<KravchukParams>();
      const T prob = param<T>(p.p);
      const T q = 1 - prob;
      d.sigma = {T(0), T(1), T(0)};
      d.tau = {T(p.N) * prob / q, T(-1) / q, T(0)};
      d.lambda = {T(0), T(1) / q, T(0)};
      d.reduced_weight_constant = "1";
      break;
    }
    case FamilyTag::Hahn: {
      const auto& p = f.as<HahnParams>();
      const T alpha = param<T>(p.alpha);
      const T beta = param<T>(p.beta);
      const T N(p.N);
      d.sigma = {T(0), N + alpha, T(-1)};
      d.tau = {(beta + 1) * (N - 1), -(alpha + beta + 2), T(0)};
      d.lambda = {T(0), alpha + beta + 1, T(1)};
      d.reduced_weight_constant = "Gamma(alpha+1)*Gamma(beta+1)";
      break;
    }
  }
  return d;
}

template <Field T>
T MassFactor::evaluate() const {
  switch (kind) {
    case Kind::One: return T(1);
    case Kind::Exponential:
      if constexpr (is_exact_v<T>) {
        if (exponent == 0) return T(1);
        throw NotRepresentable("mass factor " + describe() + " is irrational");
      } else {
        return exp(to_bigfloat(exponent));
      }
    case Kind::Power:
      if constexpr (is_exact_v<T>) {
        if (boost::multiprecision::denominator(exponent) == 1) {
          return ipow<T>(base, exponent.convert_to<long>());
        }
        throw NotRepresentable("mass factor " + describe() + " is irrational");
      } else {
        return pow(to_bigfloat(base), to_bigfloat(exponent));
      }
  }
  return T(1);
}

std::string MassFactor::describe() const {
  switch (kind) {
    case Kind::One: return "1";
    case Kind::Exponential: return "exp(" + format_exact(exponent) + ")";
    case Kind::Power: return "(" + format_exact(base) + ")^(" + format_exact(exponent) + ")";
  }
  return "?";
}

MassFactor mass_factor(const FamilySpec& f) {
  switch (f.tag()) {
    case FamilyTag::Charlier:
      return MassFactor{MassFactor::Kind::Exponential, Rational(1), f.as<CharlierParams>().mu};
    case FamilyTag::Meixner: {
      const auto& p = f.as<MeixnerParams>();
      return MassFactor{MassFactor::Kind::Power, Rational(1 - p.mu), Rational(-p.gamma)};
    }
    default: return MassFactor{};
  }
}

template <Field T>
T reduced_weight(const FamilySpec& f, long x) {
  f.check_support(x);
  const auto ux = static_cast<unsigned>(x);
  switch (f.tag()) {
    case FamilyTag::Charlier: {
      const T mu = param<T>(f.as<CharlierParams>().mu);
      return ipow(mu, x) / factorial<T>(ux);
    }
    case FamilyTag::Meixner: {
      const auto& p = f.as<MeixnerParams>();
      return pochhammer(param<T>(p.gamma), ux) * ipow(param<T>(p.mu), x) / factorial<T>(ux);
    }
    case FamilyTag::Kravchuk: {
      const auto& p = f.as<KravchukParams>();
      const T prob = param<T>(p.p);
      return binomial<T>(static_cast<unsigned>(p.N), ux) * ipow(prob, x) * ipow(T(1 - prob), p.N - x);
    }
    case FamilyTag::Hahn: {
      const auto& p = f.as<HahnParams>();
      const auto rest = static_cast<unsigned>(p.N - 1 - x);
      return pochhammer(T(param<T>(p.alpha) + 1), rest) * pochhammer(T(param<T>(p.beta) + 1), ux) /
             (factorial<T>(rest) * factorial<T>(ux));
    }
  }
  return T(0);
}

template <Field T>
T reduced_norm(const FamilySpec& f, long n) {
  f.check_degree(n);
  const auto un = static_cast<unsigned>(n);
  switch (f.tag()) {
    case FamilyTag::Charlier: return factorial<T>(un) * ipow(param<T>(f.as<CharlierParams>().mu), n);
    case FamilyTag::Meixner: {
      const auto& p = f.as<MeixnerParams>();
      const T mu = param<T>(p.mu);
      return factorial<T>(un) * pochhammer(param<T>(p.gamma), un) * ipow(mu, n) / ipow(T(1 - mu), 2 * n);
    }
    case FamilyTag::Kravchuk: {
      const auto& p = f.as<KravchukParams>();
      const T prob = param<T>(p.p);
      return factorial<T>(un) * pochhammer(T(p.N - n + 1), un) * ipow(T(prob * (1 - prob)), n);
    }
    case FamilyTag::Hahn: {
      const auto& p = f.as<HahnParams>();
      const T s = param<T>(p.alpha) + param<T>(p.beta);
      const auto N = static_cast<unsigned>(p.N);
      if (n == 0) return pochhammer(T(s + 2), N - 1) / factorial<T>(N - 1);
      const T shifted = s + T(n + 1);
      const T lead = pochhammer(shifted, un);
      return factorial<T>(un) * pochhammer(T(param<T>(p.alpha) + 1), un) *
             pochhammer(T(param<T>(p.beta) + 1), un) * pochhammer(shifted, N) /
             ((T(2 * n + 1) + s) * factorial<T>(static_cast<unsigned>(p.N - n - 1)) * lead * lead);
    }
  }
  return T(0);
}

template <Field T>
T weight_ratio(const FamilySpec& f, long x) {
  f.check_support(x);
  if (x < 1) throw OutOfSupport(f.name() + ": weight_ratio needs x >= 1");
  const T X(x);
  switch (f.tag()) {
    case FamilyTag::Charlier: return X / param<T>(f.as<CharlierParams>().mu);
    case FamilyTag::Meixner: {
      const auto& p = f.as<MeixnerParams>();
      return X / (param<T>(p.mu) * (param<T>(p.gamma) + X - 1));
    }
    case FamilyTag::Kravchuk: {
      const auto& p = f.as<KravchukParams>();
      const T prob = param<T>(p.p);
      return X * (1 - prob) / (prob * T(p.N - x + 1));
    }
    case FamilyTag::Hahn: {
      const auto& p = f.as<HahnParams>();
      return X * (T(p.N) + param<T>(p.alpha) - X) / (T(p.N - x) * (param<T>(p.beta) + X));
    }
  }
  return T(0);
}

template <Field T>
RecurrenceCoeffs<T> recurrence_coeffs(const FamilySpec& f, long count) {
  RecurrenceCoeffs<T> rc;
  rc.a.reserve(static_cast<std::size_t>(std::max(count, 0L)));
  rc.b.reserve(static_cast<std::size_t>(std::max(count, 0L)));
  for (long k = 0; k < count; ++k) {
    const T K(k);
    switch (f.tag()) {
      case FamilyTag::Charlier: {
        const T mu = param<T>(f.as<CharlierParams>().mu);
        rc.a.push_back(K + mu);
        rc.b.push_back(K * mu);
        break;
      }
      case FamilyTag::Meixner: {
        const auto& p = f.as<MeixnerParams>();
        const T mu = param<T>(p.mu);
        const T gamma = param<T>(p.gamma);
        const T q = 1 - mu;
        rc.a.push_back((K + (K + gamma) * mu) / q);
        rc.b.push_back(K * (K + gamma - 1) * mu / (q * q));
        break;
      }
      case FamilyTag::Kravchuk: {
        const auto& p = f.as<KravchukParams>();
        const T prob = param<T>(p.p);
        rc.a.push_back(prob * T(p.N - k) + K * (1 - prob));
        rc.b.push_back(K * prob * (1 - prob) * T(p.N - k + 1));
        break;
      }
      case FamilyTag::Hahn: {
        // Standard Hahn Q_n(x; a, b, M) on x = 0..M with weight
        // C(a+x, x) C(b+M-x, M-x); here a = beta, b = alpha, M = N-1.
        const auto& p = f.as<HahnParams>();
        const T a = param<T>(p.beta);
        const T b = param<T>(p.alpha);
        const T M(p.N - 1);
        const T s = a + b;
        auto up = [&](const T& j) -> T {
          if (j == 0) return (a + 1) * M / (s + 2);
          return (j + s + 1) * (j + a + 1) * (M - j) / ((2 * j + s + 1) * (2 * j + s + 2));
        };
        auto down = [&](const T& j) -> T {
          if (j == 0) return T(0);
          return j * (j + s + M + 1) * (j + b) / ((2 * j + s) * (2 * j + s + 1));
        };
        rc.a.push_back(up(K) + down(K));
        rc.b.push_back(k == 0 ? T(0) : T(up(T(k - 1)) * down(K)));
        break;
      }
    }
  }
  return rc;
}

template <Field T>
MonicPolynomial<T>::MonicPolynomial(const FamilySpec& f, long n) : n_(n) {
  f.check_degree(n);
  rc_ = recurrence_coeffs<T>(f, n);
}

template <Field T>
T MonicPolynomial<T>::operator()(const T& x) const {
  if (n_ == 0) return T(1);
  T prev(1);
  T cur = x - rc_.a[0];
  for (long k = 1; k < n_; ++k) {
    T next = (x - rc_.a[k]) * cur - rc_.b[k] * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

template <Field T>
T eval_poly(const FamilySpec& f, long n, const T& x) {
  return MonicPolynomial<T>(f, n)(x);
}

template <Field T>
T forward_diff(const FamilySpec& f, long n, const T& x) {
  return eval_poly(f, n, T(x + 1)) - eval_poly(f, n, x);
}

template <Field T>
T backward_diff(const FamilySpec& f, long n, const T& x) {
  return eval_poly(f, n, x) - eval_poly(f, n, T(x - 1));
}

LadderTarget ladder_target(const FamilySpec& f, long n) {
  f.check_degree(n);
  if (n < 1) throw DegreeOutOfRange(f.name() + ": ladder relation needs n >= 1");
  switch (f.tag()) {
    case FamilyTag::Charlier: return {f, n};
    case FamilyTag::Meixner: {
      const auto& p = f.as<MeixnerParams>();
      return {FamilySpec::meixner(p.gamma + 1, p.mu), n};
    }
    case FamilyTag::Kravchuk: {
      const auto& p = f.as<KravchukParams>();
      return {FamilySpec::kravchuk(p.p, p.N - 1), n};
    }
    case FamilyTag::Hahn: {
      const auto& p = f.as<HahnParams>();
      return {FamilySpec::hahn(p.alpha + 1, p.beta + 1, p.N - 1), n};
    }
  }
  return {f, n};
}

template <Field T>
std::vector<T> connection_coeffs(const FamilySpec& f, long n) {
  f.check_degree(n);
  std::vector<T> out(static_cast<std::size_t>(n), T(0));
  if (n == 0) return out;
  const T factor(n);
  switch (f.tag()) {
    case FamilyTag::Charlier: out.back() = factor; break;
    case FamilyTag::Meixner: {
      const T mu = param<T>(f.as<MeixnerParams>().mu);
      const T ratio = mu / (mu - 1);
      for (long j = 0; j < n; ++j) {
        out[j] = factor * pochhammer(T(j + 1), static_cast<unsigned>(n - j - 1)) * ipow(ratio, n - j - 1);
      }
      break;
    }
    case FamilyTag::Kravchuk: {
      const T prob = param<T>(f.as<KravchukParams>().p);
      for (long j = 0; j < n; ++j) {
        out[j] = factor * pochhammer(T(j + 1), static_cast<unsigned>(n - j - 1)) * ipow(prob, n - j - 1);
      }
      break;
    }
    case FamilyTag::Hahn: {
      const auto& p = f.as<HahnParams>();
      const T alpha = param<T>(p.alpha);
      const T beta = param<T>(p.beta);
      const T N(p.N);
      const T s = alpha + beta;
      for (long j = 0; j < n; ++j) {
        const T J(j);
        const auto len = static_cast<unsigned>(n - 1 - j);
        const T pre = binomial<T>(static_cast<unsigned>(n - 1), static_cast<unsigned>(j)) *
                      pochhammer(T(2 + J - N), len) * pochhammer(T(2 + J + beta), len) /
                      pochhammer(T(2 + J + T(n) + s), len);
        PFQSpec<T> series{{T(J - T(n) + 1), T(1 + J - N), T(J + beta + 1), T(2 + T(n) + J + s)},
                          {T(2 + J - N), T(J + beta + 2), T(2 * J + s + 2)},
                          T(1)};
        out[j] = factor * pre * terminating_pfq(series);
      }
      break;
    }
  }
  return out;
}

BigFloat zero_bound(const FamilySpec& f, long n) {
  const auto rc = recurrence_coeffs<BigFloat>(f, n + 2);
  BigFloat bound = 0;
  for (long k = 0; k <= n; ++k) {
    BigFloat r = abs(rc.a[k]) + sqrt(abs(rc.b[k])) + sqrt(abs(rc.b[k + 1]));
    if (r > bound) bound = r;
  }
  return bound;
}

#define DFISHER_INSTANTIATE(T)                                                           \
  template TableOneData<T> table_one<T>(const FamilySpec&);                              \
  template T MassFactor::evaluate<T>() const;                                            \
  template T reduced_weight<T>(const FamilySpec&, long);                                 \
  template T reduced_norm<T>(const FamilySpec&, long);                                   \
  template T weight_ratio<T>(const FamilySpec&, long);                                   \
  template RecurrenceCoeffs<T> recurrence_coeffs<T>(const FamilySpec&, long);            \
  template class MonicPolynomial<T>;                                                     \
  template T eval_poly<T>(const FamilySpec&, long, const T&);                            \
  template T forward_diff<T>(const FamilySpec&, long, const T&);                         \
  template T backward_diff<T>(const FamilySpec&, long, const T&);                        \
  template std::vector<T> connection_coeffs<T>(const FamilySpec&, long);

DFISHER_INSTANTIATE(Rational)
DFISHER_INSTANTIATE(BigFloat)

#undef DFISHER_INSTANTIATE

}  // namespace dfisher
