#include "dfisher/fisher.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "dfisher/errors.hpp"
#include "dfisher/families.hpp"
#include "dfisher/hypergeometric.hpp"

namespace dfisher {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::DirectSum: return "direct";
    case Method::TheoremFormula: return "theorem";
    case Method::Expansion: return "expansion";
    case Method::ClosedForm: return "closed";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "direct" || lower == "directsum") return Method::DirectSum;
  if (lower == "theorem" || lower == "theoremformula") return Method::TheoremFormula;
  if (lower == "expansion") return Method::Expansion;
  if (lower == "closed" || lower == "closedform") return Method::ClosedForm;
  throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

TruncationPolicy TruncationPolicy::defaults() {
  return TruncationPolicy{boost::multiprecision::pow(BigFloat(10), -30), 1'000'000};
}

namespace {

/// Sum of term(x), x = 0, 1, ..., for unbounded supports. The tail test is
/// applied only past `zero_free_from`, where the polynomial part of the
/// summand keeps one sign and its term ratio decreases; `limit_ratio` is the
/// x -> infinity limit of the weight ratio omega(x+1)/omega(x).
BigFloat truncated_sum(const std::function<BigFloat(long)>& term, long zero_free_from, const BigFloat& limit_ratio,
                       const TruncationPolicy& trunc) {
  BigFloat sum = 0;
  BigFloat scale = 0;  // sum of |t|; cancelling sums such as <P_n, P_m> need it
  BigFloat prev = 0;
  int quiet = 0;
  for (long x = 0; x <= trunc.hard_cap; ++x) {
    const BigFloat t = term(x);
    sum += t;
    scale += abs(t);
    if (x > zero_free_from) {
      if (t == 0 && prev == 0) return sum;
      if (prev != 0) {
        const BigFloat ratio = abs(t / prev);
        const BigFloat rho = std::max(ratio, limit_ratio);
        if (rho < 1) {
          const BigFloat tail = abs(t) * rho / (1 - rho);
          // Two consecutive passes guard against a locally flat ratio.
          quiet = tail <= trunc.tail_tol * scale ? quiet + 1 : 0;
          if (quiet >= 2) return sum;
        }
      }
    }
    prev = t;
  }
  throw TruncationCapExceeded("truncated sum did not reach tail tolerance within " +
                              std::to_string(trunc.hard_cap) + " lattice points");
}

/// reduced_weight(0), reduced_weight(1), ... in order, each from the previous
/// one through the weight ratio.
class WeightWalk {
 public:
  explicit WeightWalk(const FamilySpec& f) : f_(f) {}

  const BigFloat& at(long x) {
    if (x == 0) {
      w_ = reduced_weight<BigFloat>(f_, 0);
    } else {
      if (x != last_ + 1) throw std::logic_error("WeightWalk must advance one point at a time");
      w_ /= weight_ratio<BigFloat>(f_, x);
    }
    last_ = x;
    return w_;
  }

 private:
  const FamilySpec& f_;
  BigFloat w_;
  long last_ = -1;
};

long first_zero_free_point(const FamilySpec& f, long degree) {
  const BigFloat bound = zero_bound(f, std::max(degree, 1L));
  return ceil(bound).convert_to<long>() + 2;
}

BigFloat limit_weight_ratio(const FamilySpec& f) {
  if (f.tag() == FamilyTag::Meixner) return to_bigfloat(f.as<MeixnerParams>().mu);
  return BigFloat(0);
}

/// sum_k Delta^k q(0) / k! * M_k where M_k = sum_x omega(x) x^(k falling) / Z.
Rational factorial_moment_sum(const FamilySpec& f, long degree, const std::function<Rational(long)>& q) {
  if (degree < 0) return Rational(0);
  std::vector<Rational> diffs;
  diffs.reserve(static_cast<std::size_t>(degree + 1));
  for (long k = 0; k <= degree; ++k) diffs.push_back(q(k));
  // In place: diffs[k] becomes Delta^k q(0).
  for (long level = 1; level <= degree; ++level) {
    for (long k = degree; k >= level; --k) diffs[k] -= diffs[k - 1];
  }
  Rational moment_scale(1);
  Rational shift(0);
  switch (f.tag()) {
    case FamilyTag::Charlier: moment_scale = f.as<CharlierParams>().mu; break;
    case FamilyTag::Meixner: {
      const auto& p = f.as<MeixnerParams>();
      moment_scale = p.mu / (1 - p.mu);
      shift = p.gamma;
      break;
    }
    default: throw std::logic_error("factorial moments are only used on unbounded supports");
  }
  Rational total(0);
  Rational moment(1);  // M_k / k!
  for (long k = 0; k <= degree; ++k) {
    total += diffs[k] * moment;
    // Charlier: M_k = mu^k. Meixner: M_k = (gamma)_k (mu/(1-mu))^k.
    const Rational growth = f.tag() == FamilyTag::Meixner ? Rational(shift + k) : Rational(1);
    moment *= growth * moment_scale / (k + 1);
  }
  return total;
}

template <Field T>
T checked_div(const T& num, const T& den, const char* what) {
  if (den == 0) throw DenominatorPole(std::string("vanishing denominator in ") + what);
  return num / den;
}

template <Field T>
T sign_power(long e) {
  return (e % 2 == 0) ? T(1) : T(-1);
}

}  // namespace

template <Field T>
T weighted_polynomial_sum(const FamilySpec& f, long degree, const std::function<T(long)>& q,
                          const TruncationPolicy& trunc) {
  const LatticeSupport sup = f.support();
  if (sup.bounded()) {
    T sum(0);
    for (long x = sup.a; x < *sup.b; ++x) sum += reduced_weight<T>(f, x) * q(x);
    return sum;
  }
  if constexpr (is_exact_v<T>) {
    return factorial_moment_sum(f, degree, q);
  } else {
    WeightWalk w(f);
    const BigFloat raw = truncated_sum([&](long x) { return BigFloat(w.at(x) * q(x)); },
                                       first_zero_free_point(f, degree), limit_weight_ratio(f), trunc);
    return raw / mass_factor(f).evaluate<BigFloat>();
  }
}

template <Field T>
T rakhmanov_density(const FamilySpec& f, long n, long x) {
  f.check_degree(n);
  f.check_support(x);
  const T p = eval_poly(f, n, T(x));
  return reduced_weight<T>(f, x) * p * p / (mass_factor(f).evaluate<T>() * reduced_norm<T>(f, n));
}

template <Field T>
T fisher_direct(const FamilySpec& f, long n, const TruncationPolicy& trunc) {
  const MonicPolynomial<T> poly(f, n);
  if (n == 0) return T(0);
  const std::function<T(long)> q = [&](long x) {
    const T d = poly.at(x + 1) - poly.at(x);
    return T(d * d);
  };
  return weighted_polynomial_sum<T>(f, 2 * n - 2, q, trunc) / reduced_norm<T>(f, n);
}

template <Field T>
T fisher_theorem(const FamilySpec& f, long n, const TruncationPolicy& trunc) {
  const MonicPolynomial<T> poly(f, n);
  // P_0 = 1 makes the bracket the norm itself.
  if (n == 0) return T(0);
  const LatticeSupport sup = f.support();
  const T norm = reduced_norm<T>(f, n);
  if (sup.bounded()) {
    // omega(x-1) P_n(x)^2 at x = b; the x = a end carries omega(a-1) = 0.
    const long b = *sup.b;
    const T pb = poly.at(b);
    T bracket = reduced_weight<T>(f, b - 1) * pb * pb;
    for (long x = sup.a + 1; x < b; ++x) {
      const T px = poly.at(x);
      bracket += reduced_weight<T>(f, x) * weight_ratio<T>(f, x) * px * px;
    }
    return bracket / norm - 1;
  }
  if constexpr (is_exact_v<T>) {
    const std::function<Rational(long)> shifted = [&](long y) {
      const Rational p = poly.at(y + 1);
      return Rational(p * p);
    };
    return factorial_moment_sum(f, 2 * n, shifted) / norm - 1;
  } else {
    // omega(x) r(x) = omega(x-1); the walk runs one point behind x.
    WeightWalk w(f);
    const BigFloat raw = truncated_sum(
        [&](long x) -> BigFloat {
          if (x == 0) return BigFloat(0);
          const BigFloat px = poly.at(x);
          return w.at(x - 1) * px * px;
        },
        first_zero_free_point(f, 2 * n), limit_weight_ratio(f), trunc);
    return raw / (mass_factor(f).evaluate<BigFloat>() * norm) - 1;
  }
}

template <Field T>
T fisher_expansion(const FamilySpec& f, long n) {
  f.check_degree(n);
  if (n == 0) return T(0);
  const std::vector<T> a = connection_coeffs<T>(f, n);
  T sum(0);
  for (long j = 0; j < n; ++j) sum += a[j] * a[j] * reduced_norm<T>(f, j);
  return sum / reduced_norm<T>(f, n);
}

template <Field T>
HahnClosedParts<T> hahn_closed_parts(const FamilySpec& f, long n) {
  if (f.tag() != FamilyTag::Hahn) throw std::invalid_argument("hahn_closed_parts needs a Hahn family");
  f.check_degree(n);
  if (n < 1) throw DegreeOutOfRange("hahn closed form needs n >= 1");
  const auto& prm = f.as<HahnParams>();
  const T alpha = from_rational<T>(prm.alpha);
  const T beta = from_rational<T>(prm.beta);
  const T N(prm.N);
  const T s = alpha + beta;
  const T nn(n);
  const auto un = static_cast<unsigned>(n);
  const auto m = static_cast<unsigned>(n - 1);
  const T half_up = (s + 3) / 2;
  const T half_down = (s + 1) / 2;
  const T fact_m = factorial<T>(m);
  auto P = [](const T& a, unsigned k) { return pochhammer<T>(a, k); };

  HahnClosedParts<T> parts;
  {
    // A1*A2 with Gamma(s+n+1)/Gamma(s+1) = (s+1)_n, Gamma(a+1)/Gamma(a+n+1) = 1/(a+1)_n,
    // Gamma(s+N+1)/Gamma(s+N+n+1) = 1/(s+N+1)_n and (s+1)_n/(s+1) = (s+2)_{n-1}.
    const T lead = P(T(s + nn + 1), un);
    const T num = nn * nn * (s + 2 * nn + 1) * factorial<T>(static_cast<unsigned>(prm.N - n - 1)) * lead * lead *
                  P(T(s + 2), m);
    const T den = factorial<T>(un) * P(T(alpha + 1), un) * P(T(beta + 1), un) * P(T(s + N + 1), un) *
                  factorial<T>(static_cast<unsigned>(prm.N - 1));
    parts.prefactor = checked_div(num, den, "A1*A2");
  }
  const T common_den = P(T(s + nn + 2), m) * P(T(-s - nn - 1), m) * (s + 2) * (N + beta);
  {
    const T b1_root = checked_div(T(fact_m * (beta + 1) * (s + N + 1) * P(T(-s - nn - N), m) * P(T(beta + 2), m)),
                                  common_den, "B1");
    const T b2 = checked_div(
        T(sign_power<T>(n - 1) * P(T(alpha + 1), m) * P(half_up, m) * P(T(s + 1), m) * P(T(1 - N), m)),
        T(fact_m * P(half_down, m) * P(T(beta + 1), m) * P(T(s + N + 1), m)), "B2");
    const PFQSpec<T> b3{{T(1 - nn), T(1), T(1 - nn - beta), T(1 - nn - s - N), T(2 - nn - half_down)},
                        {T(1 - nn - alpha), T(2 - nn - half_up), T(1 - nn - s), T(1 - nn + N)},
                        T(-1)};
    parts.b = b1_root * b1_root * b2 * terminating_pfq(b3);
  }
  {
    const T low = P(T(s + nn + 2), m) * P(T(-s - nn - 1), m) * (s + 2);
    const T c1 = checked_div(
        T(2 * sign_power<T>(n) * fact_m * fact_m * (beta + 1) * (s + N + 1) * P(T(-s - nn - N), m)), T(low * low),
        "C1");
    const T neg = -N - beta;
    const T c2 = checked_div(
        T(P(T(beta + 2), m) * (1 - N) * (alpha + 1) * P(T(-alpha - nn), m) * P(T(2 - N), m) * (s + 2 * nn + 1)),
        T(factorial<T>(un) * neg * neg), "C2");
    // Gamma(s+n+1) from C3 over Gamma(s+2) from C2.
    parts.c_outer = c1 * c2 * P(T(s + 2), m);
    const PFQSpec<T> c3{{T(1), T(half_up + nn), T(s + nn + 1)}, {T(nn + 1), T(half_down + nn)}, T(-1)};
    const AcceleratedSum acc = accelerated_pfq_at_minus_one(c3, default_acceleration_tolerance());
    parts.c_series = acc.value.to_bigfloat();
    parts.c_converged = acc.converged;
  }
  {
    const T d1_root =
        checked_div(T(fact_m * (N - 1) * (alpha + 1) * P(T(-alpha - nn), m) * P(T(2 - N), m)), common_den, "D1");
    const T d2 = checked_div(
        T(sign_power<T>(n - 1) * P(half_up, m) * P(T(beta + 1), m) * P(T(s + N + 1), m) * P(T(s + 1), m)),
        T(fact_m * P(T(1 - N), m) * P(T(alpha + 1), m) * P(half_down, m)), "D2");
    const PFQSpec<T> d3{{T(1 - nn), T(1), T(1 - nn + N), T(1 - nn - alpha), T(2 - nn - half_down)},
                        {T(2 - nn - half_up), T(1 - nn - beta), T(1 - nn - s - N), T(1 - nn - s)},
                        T(-1)};
    parts.d = d1_root * d1_root * d2 * terminating_pfq(d3);
  }
  return parts;
}

template <Field T>
ClosedFormResult fisher_closed(const FamilySpec& f, long n) {
  f.check_degree(n);
  if (n == 0) return {Scalar(T(0)), true};
  const T nn(n);
  switch (f.tag()) {
    case FamilyTag::Charlier: return {Scalar(T(nn / from_rational<T>(f.as<CharlierParams>().mu))), true};
    case FamilyTag::Meixner: {
      const auto& p = f.as<MeixnerParams>();
      const T mu = from_rational<T>(p.mu);
      const T gamma = from_rational<T>(p.gamma);
      const PFQSpec<T> series{{T(1 - nn), T(1)}, {T(2 - nn - gamma)}, mu};
      const T value = nn * (1 - mu) * (1 - mu) / (mu * (nn + gamma - 1)) * terminating_pfq(series);
      return {Scalar(value), true};
    }
    case FamilyTag::Kravchuk: {
      const auto& p = f.as<KravchukParams>();
      const T prob = from_rational<T>(p.p);
      const PFQSpec<T> series{{T(1 - nn), T(1)}, {T(p.N - n + 2)}, T(prob / (prob - 1))};
      const T value = nn / (T(p.N - n + 1) * prob * (1 - prob)) * terminating_pfq(series);
      return {Scalar(value), true};
    }
    case FamilyTag::Hahn: {
      const HahnClosedParts<T> parts = hahn_closed_parts<T>(f, n);
      const BigFloat exact_part = as_bigfloat(T(parts.prefactor * (parts.b + parts.d)));
      const BigFloat series_part = as_bigfloat(T(parts.prefactor * parts.c_outer)) * parts.c_series;
      return {Scalar(BigFloat(exact_part + series_part)), parts.c_converged};
    }
  }
  return {};
}

const MethodOutcome* FisherReport::find(Method m) const {
  for (const auto& o : outcomes) {
    if (o.method == m) return &o;
  }
  return nullptr;
}

template <Field T>
FisherReport fisher_report(const FamilySpec& f, long n, const TruncationPolicy& trunc,
                           const std::vector<Method>& methods) {
  FisherReport report{f, n, {}, Scalar(Rational(0)), std::nullopt};
  for (const Method m : methods) {
    MethodOutcome out{m, std::nullopt, true, {}};
    try {
      switch (m) {
        case Method::DirectSum: out.value = Scalar(fisher_direct<T>(f, n, trunc)); break;
        case Method::TheoremFormula: out.value = Scalar(fisher_theorem<T>(f, n, trunc)); break;
        case Method::Expansion: out.value = Scalar(fisher_expansion<T>(f, n)); break;
        case Method::ClosedForm: {
          ClosedFormResult r = fisher_closed<T>(f, n);
          out.value = std::move(r.value);
          out.converged = r.converged;
          if (f.tag() == FamilyTag::Hahn && n >= 1) report.hahn_c3_converged = r.converged;
          break;
        }
      }
    } catch (const Error& e) {
      out.converged = false;
      out.error = std::string(e.kind()) + ": " + e.what();
    }
    report.outcomes.push_back(std::move(out));
  }
  bool all_exact = true;
  Rational worst_exact(0);
  BigFloat worst(0);
  for (std::size_t i = 0; i < report.outcomes.size(); ++i) {
    for (std::size_t j = i + 1; j < report.outcomes.size(); ++j) {
      const auto& a = report.outcomes[i].value;
      const auto& b = report.outcomes[j].value;
      if (!a || !b) continue;
      const Scalar d = relative_difference(*a, *b);
      if (d.is_exact()) {
        worst_exact = std::max(worst_exact, d.exact());
      } else {
        all_exact = false;
      }
      worst = std::max(worst, d.to_bigfloat());
    }
  }
  report.max_pairwise_rel_discrepancy = all_exact ? Scalar(worst_exact) : Scalar(worst);
  return report;
}

#define DFISHER_INSTANTIATE(T)                                                                            \
  template T weighted_polynomial_sum<T>(const FamilySpec&, long, const std::function<T(long)>&,           \
                                        const TruncationPolicy&);                                         \
  template T rakhmanov_density<T>(const FamilySpec&, long, long);                                         \
  template T fisher_direct<T>(const FamilySpec&, long, const TruncationPolicy&);                          \
  template T fisher_theorem<T>(const FamilySpec&, long, const TruncationPolicy&);                         \
  template T fisher_expansion<T>(const FamilySpec&, long);                                                \
  template HahnClosedParts<T> hahn_closed_parts<T>(const FamilySpec&, long);                              \
  template ClosedFormResult fisher_closed<T>(const FamilySpec&, long);                                    \
  template FisherReport fisher_report<T>(const FamilySpec&, long, const TruncationPolicy&,                \
                                         const std::vector<Method>&);

DFISHER_INSTANTIATE(Rational)
DFISHER_INSTANTIATE(BigFloat)

#undef DFISHER_INSTANTIATE

}  // namespace dfisher
