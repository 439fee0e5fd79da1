#include "oracles.hpp"

namespace oracle {

namespace {

Rational rising(const Rational& a, long k) {
  Rational r(1);
  for (long i = 0; i < k; ++i) r *= a + i;
  return r;
}

Rational fact(long k) { return rising(Rational(1), k); }

template <class T>
T eval(const std::vector<T>& c, const T& x) {
  T v(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
  return v;
}

template <class T>
std::vector<std::vector<T>> gs(const std::vector<T>& w, long count) {
  auto inner = [&](const std::vector<T>& p, const std::vector<T>& q) {
    T s(0);
    for (std::size_t x = 0; x < w.size(); ++x) {
      const T X(static_cast<long>(x));
      s += w[x] * eval(p, X) * eval(q, X);
    }
    return s;
  };
  std::vector<std::vector<T>> basis;
  for (long k = 0; k < count; ++k) {
    std::vector<T> mono(static_cast<std::size_t>(k + 1), T(0));
    mono[k] = 1;
    std::vector<T> p = mono;
    for (const auto& q : basis) {
      const T c = inner(mono, q) / inner(q, q);
      for (std::size_t i = 0; i < q.size(); ++i) p[i] -= c * q[i];
    }
    basis.push_back(std::move(p));
  }
  return basis;
}

template <class T>
T fisher_ratio(const std::vector<T>& w, long n) {
  const auto basis = gs(w, n + 1);
  T num(0), den(0);
  for (std::size_t x = 0; x < w.size(); ++x) {
    const T X(static_cast<long>(x));
    const T p = eval(basis[n], X);
    const T d = eval(basis[n], T(X + 1)) - p;
    num += w[x] * d * d;
    den += w[x] * p * p;
  }
  return num / den;
}

}  // namespace

std::vector<Rational> kravchuk_weights(const Rational& p, long N) {
  std::vector<Rational> w;
  for (long x = 0; x <= N; ++x) {
    Rational term = fact(N) / (fact(x) * fact(N - x));
    for (long i = 0; i < x; ++i) term *= p;
    for (long i = 0; i < N - x; ++i) term *= 1 - p;
    w.push_back(term);
  }
  return w;
}

std::vector<Rational> hahn_weights(const Rational& alpha, const Rational& beta, long N) {
  std::vector<Rational> w;
  for (long x = 0; x < N; ++x) {
    w.push_back(rising(alpha + 1, N - 1 - x) * rising(beta + 1, x) / (fact(N - 1 - x) * fact(x)));
  }
  return w;
}

std::vector<std::vector<Rational>> gram_schmidt(const std::vector<Rational>& w, long count) { return gs(w, count); }

Rational horner(const std::vector<Rational>& c, const Rational& x) { return eval(c, x); }

Rational direct_fisher(const std::vector<Rational>& w, long n) { return fisher_ratio(w, n); }

BigFloat direct_fisher_charlier(const BigFloat& mu, long n, long cutoff) {
  std::vector<BigFloat> w;
  BigFloat term = exp(-mu);
  for (long x = 0; x <= cutoff; ++x) {
    w.push_back(term);
    term *= mu / (x + 1);
  }
  return fisher_ratio(w, n);
}

BigFloat direct_fisher_meixner(const BigFloat& gamma, const BigFloat& mu, long n, long cutoff) {
  std::vector<BigFloat> w;
  BigFloat term = 1;
  for (long x = 0; x <= cutoff; ++x) {
    w.push_back(term);
    term *= (gamma + x) * mu / (x + 1);
  }
  return fisher_ratio(w, n);
}

BigFloat euler_averaged_ln2(long terms) {
  std::vector<BigFloat> s;
  BigFloat partial = 0;
  for (long k = 0; k < terms; ++k) {
    partial += BigFloat((k % 2 == 0) ? 1 : -1) / (k + 1);
    s.push_back(partial);
  }
  while (s.size() > 1) {
    for (std::size_t i = 0; i + 1 < s.size(); ++i) s[i] = (s[i] + s[i + 1]) / 2;
    s.pop_back();
  }
  return s.front();
}

}  // namespace oracle
