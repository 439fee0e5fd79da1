#include "dfisher/cli/verify.hpp"

#include <chrono>
#include <algorithm>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "dfisher/asymptotics.hpp"
#include "dfisher/cli/params.hpp"
#include "dfisher/errors.hpp"
#include "dfisher/families.hpp"
#include "dfisher/fisher.hpp"
#include "dfisher/hypergeometric.hpp"

namespace dfisher::cli {

namespace {

class Recorder {
 public:
  explicit Recorder(SuiteResult& r) : r_(r) {}

  void check(bool ok, const std::string& inputs) {
    if (ok) {
      ++r_.passed;
      return;
    }
    if (r_.failed++ == 0) r_.first_failure = inputs;
  }

  /// Runs `body`; a library error counts as a failed case.
  void guarded(const std::string& inputs, const std::function<bool()>& body) {
    try {
      check(body(), inputs);
    } catch (const std::exception& e) {
      check(false, inputs + " threw " + e.what());
    }
  }

  void note(std::string line) { r_.notes.push_back(std::move(line)); }

 private:
  SuiteResult& r_;
};

std::string describe(const FamilySpec& f, long n) {
  return f.name() + "(" + f.params_string() + ") n=" + std::to_string(n);
}

std::vector<FamilySpec> bounded_cases() {
  std::vector<FamilySpec> out;
  for (const long N : {2L, 5L, 10L}) {
    for (const Rational& p : {Rational(1, 4), Rational(1, 2), Rational(2, 3)}) out.push_back(FamilySpec::kravchuk(p, N));
    out.push_back(FamilySpec::hahn(0, 0, N));
    out.push_back(FamilySpec::hahn(3, Rational(-1, 2), N));
    out.push_back(FamilySpec::hahn(1, 2, N));
  }
  return out;
}

std::vector<FamilySpec> unbounded_cases() {
  return {FamilySpec::charlier(Rational(1, 2)),          FamilySpec::charlier(1),
          FamilySpec::charlier(2),                       FamilySpec::charlier(5),
          FamilySpec::meixner(Rational(3, 2), Rational(1, 4)), FamilySpec::meixner(2, Rational(1, 2)),
          FamilySpec::meixner(4, Rational(3, 4))};
}

std::vector<FamilySpec> all_cases() {
  std::vector<FamilySpec> out = unbounded_cases();
  for (auto& f : bounded_cases()) out.push_back(std::move(f));
  return out;
}

long degree_cap(const FamilySpec& f, long cap) { return std::min(cap, f.max_degree().value_or(cap)); }

BigFloat rel_err(const BigFloat& a, const BigFloat& b) {
  const BigFloat scale = std::max(abs(a), abs(b));
  return scale == 0 ? BigFloat(0) : BigFloat(abs(a - b) / scale);
}

BigFloat pow10(int e) { return boost::multiprecision::pow(BigFloat(10), e); }

void suite_pochhammer(Recorder& rec) {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> num(-60, 60);
  std::uniform_int_distribution<int> den(1, 12);
  std::uniform_int_distribution<unsigned> len(0, 20);
  const BigFloat tol = pow10(5 - static_cast<int>(working_precision()));
  for (int trial = 0; trial < 200; ++trial) {
    const Rational a(num(rng), den(rng));
    const unsigned j = len(rng);
    const unsigned k = len(rng);
    const std::string inputs = "a=" + format_exact(a) + " j=" + std::to_string(j) + " k=" + std::to_string(k);
    rec.check(pochhammer<Rational>(a, j + k) == pochhammer<Rational>(a, j) * pochhammer<Rational>(Rational(a + j), k),
              "pochhammer split " + inputs);
    rec.check(rel_err(to_bigfloat(pochhammer<Rational>(a, j)), pochhammer<BigFloat>(to_bigfloat(a), j)) <= tol,
              "pochhammer exact vs float " + inputs);
  }
  rec.check(pochhammer<Rational>(3, 4) == 360, "pochhammer(3,4)");
  rec.check(pochhammer<Rational>(-2, 4) == 0, "pochhammer(-2,4)");
  rec.check(binomial<Rational>(5, 2) == 10, "binomial(5,2)");
  rec.check(binomial<Rational>(3, 5) == 0, "binomial(3,5)");
  for (unsigned n = 0; n <= 30; ++n) {
    for (unsigned k = 0; k <= n + 2; ++k) {
      rec.check(to_bigfloat(binomial<Rational>(n, k)) == binomial<BigFloat>(n, k),
                "binomial exact vs float n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  }
}

void suite_pfq(Recorder& rec) {
  rec.check(terminating_pfq(PFQSpec<Rational>{{0, 1}, {5}, Rational(3, 10)}) == 1, "2F1(0,1;5;3/10)");
  rec.check(terminating_pfq(PFQSpec<Rational>{{-1, 1}, {3}, Rational(1, 2)}) == Rational(5, 6), "2F1(-1,1;3;1/2)");
  rec.check(terminating_pfq(PFQSpec<Rational>{{-1, 1}, {3}, -1}) == Rational(4, 3), "2F1(-1,1;3;-1)");
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(-40, 40);
  std::uniform_int_distribution<int> den(1, 9);
  std::uniform_int_distribution<int> stop(0, 12);
  const BigFloat tol = pow10(5 - static_cast<int>(working_precision()));
  for (int trial = 0; trial < 150; ++trial) {
    PFQSpec<Rational> spec{{Rational(-stop(rng)), Rational(num(rng), den(rng)), Rational(num(rng), den(rng))},
                           {Rational(num(rng), den(rng)) + Rational(1, 97), Rational(num(rng), den(rng)) + Rational(1, 89)},
                           Rational(num(rng), den(rng))};
    std::ostringstream inputs;
    inputs << "3F2 num=";
    for (const auto& p : spec.numerator) inputs << format_exact(p) << ' ';
    inputs << "den=";
    for (const auto& p : spec.denominator) inputs << format_exact(p) << ' ';
    inputs << "z=" << format_exact(spec.argument);
    PFQSpec<Rational> zero = spec;
    zero.argument = 0;
    rec.guarded("zero argument " + inputs.str(), [&] { return terminating_pfq(zero) == 1; });
    PFQSpec<BigFloat> fspec;
    for (const auto& p : spec.numerator) fspec.numerator.push_back(to_bigfloat(p));
    for (const auto& p : spec.denominator) fspec.denominator.push_back(to_bigfloat(p));
    fspec.argument = to_bigfloat(spec.argument);
    rec.guarded("exact vs float " + inputs.str(), [&] {
      const BigFloat exact = to_bigfloat(terminating_pfq(spec));
      const BigFloat flt = terminating_pfq(fspec);
      // Cancellation can leave the exact sum tiny; compare against the term scale then.
      return BigFloat(abs(exact - flt)) <= tol * std::max(BigFloat(abs(exact)), BigFloat(1));
    });
  }
  const AcceleratedSum finite = accelerated_pfq_at_minus_one(PFQSpec<Rational>{{-1, 1}, {3}, -1},
                                                             default_acceleration_tolerance());
  rec.check(finite.converged && finite.value.is_exact() && finite.value.exact() == Rational(4, 3),
            "accelerated terminating 2F1(-1,1;3;-1)");
  const AcceleratedSum ln2 = accelerated_pfq_at_minus_one(PFQSpec<Rational>{{1, 1}, {2}, -1},
                                                          default_acceleration_tolerance());
  const BigFloat log2 = log(BigFloat(2));
  rec.check(ln2.converged && rel_err(ln2.value.to_bigfloat(), log2) <= pow10(-35),
            "accelerated 2F1(1,1;2;-1) = ln 2, got " + ln2.value.str());
}

void suite_orthogonality(Recorder& rec) {
  for (const auto& f : bounded_cases()) {
    const long cap = degree_cap(f, 8);
    for (long n = 0; n <= cap; ++n) {
      for (long m = 0; m <= n; ++m) {
        rec.guarded(describe(f, n) + " m=" + std::to_string(m), [&] {
          const MonicPolynomial<Rational> pn(f, n), pm(f, m);
          const std::function<Rational(long)> q = [&](long x) { return Rational(pn.at(x) * pm.at(x)); };
          const Rational s = weighted_polynomial_sum<Rational>(f, n + m, q);
          return s == (n == m ? reduced_norm<Rational>(f, n) : Rational(0));
        });
      }
    }
  }
  TruncationPolicy tight = TruncationPolicy::defaults();
  tight.tail_tol = pow10(-40);
  const BigFloat tol = pow10(-30);
  for (const auto& f : unbounded_cases()) {
    for (long n = 0; n <= 8; ++n) {
      for (long m = 0; m <= n; ++m) {
        rec.guarded(describe(f, n) + " m=" + std::to_string(m) + " truncated", [&] {
          const MonicPolynomial<BigFloat> pn(f, n), pm(f, m);
          const std::function<BigFloat(long)> q = [&](long x) { return BigFloat(pn.at(x) * pm.at(x)); };
          const BigFloat s = weighted_polynomial_sum<BigFloat>(f, n + m, q, tight);
          const BigFloat nn = reduced_norm<BigFloat>(f, n);
          if (n == m) return rel_err(s, nn) <= tol;
          return abs(s) <= tol * sqrt(nn * reduced_norm<BigFloat>(f, m));
        });
      }
    }
  }
}

void suite_difference_equation(Recorder& rec) {
  for (const auto& f : all_cases()) {
    const TableOneData<Rational> t = table_one<Rational>(f);
    for (long n = 0; n <= degree_cap(f, 8); ++n) {
      for (long x = 0; x <= n + 3; ++x) {
        rec.guarded(describe(f, n) + " x=" + std::to_string(x), [&] {
          const Rational X(x);
          const Rational dn = forward_diff<Rational>(f, n, X);
          const Rational dnabla = dn - backward_diff<Rational>(f, n, X);
          return t.sigma(X) * dnabla + t.tau(X) * dn + t.lambda_of(n) * eval_poly<Rational>(f, n, X) == 0;
        });
      }
    }
  }
}

void suite_weight_ratio(Recorder& rec) {
  for (const auto& f : all_cases()) {
    const TableOneData<Rational> t = table_one<Rational>(f);
    const LatticeSupport sup = f.support();
    const long last = sup.b ? std::min(12L, *sup.b - 1) : 12L;
    for (long x = 1; x <= last; ++x) {
      rec.guarded(f.name() + "(" + f.params_string() + ") x=" + std::to_string(x), [&] {
        const Rational r = weight_ratio<Rational>(f, x);
        const Rational X(x);
        const Rational den = t.tau(X - 1) + t.sigma(X - 1);
        const bool direct = r == reduced_weight<Rational>(f, x - 1) / reduced_weight<Rational>(f, x);
        return direct && (den == 0 || r == t.sigma(X) / den);
      });
    }
  }
}

void suite_recurrence_norm(Recorder& rec) {
  for (const auto& f : all_cases()) {
    const long cap = degree_cap(f, 8);
    const RecurrenceCoeffs<Rational> rc = recurrence_coeffs<Rational>(f, cap + 1);
    for (long n = 1; n <= cap; ++n) {
      rec.guarded(describe(f, n), [&] {
        return rc.b[n] == reduced_norm<Rational>(f, n) / reduced_norm<Rational>(f, n - 1);
      });
    }
  }
}

void suite_ladder(Recorder& rec) {
  for (const auto& f : all_cases()) {
    for (long n = 1; n <= degree_cap(f, 8); ++n) {
      const LadderTarget target = ladder_target(f, n);
      const std::vector<Rational> a = connection_coeffs<Rational>(f, n);
      for (long x = 0; x <= 10; ++x) {
        const Rational X(x);
        rec.guarded(describe(f, n) + " x=" + std::to_string(x), [&] {
          const Rational d = forward_diff<Rational>(f, n, X);
          Rational expansion(0);
          for (long j = 0; j < n; ++j) expansion += a[j] * eval_poly<Rational>(f, j, X);
          return d == target.factor * eval_poly<Rational>(target.family, n - 1, X) && d == expansion;
        });
      }
    }
  }
}

/// Monic orthogonal polynomials by Gram-Schmidt on 1, x, x^2, ... as
/// coefficient vectors, lowest degree first.
std::vector<std::vector<Rational>> gram_schmidt(const FamilySpec& f, long count) {
  const long b = *f.support().b;
  std::vector<Rational> w;
  for (long x = 0; x < b; ++x) w.push_back(reduced_weight<Rational>(f, x));
  auto value = [](const std::vector<Rational>& c, long x) {
    Rational v(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
    return v;
  };
  auto inner = [&](const std::vector<Rational>& p, const std::vector<Rational>& q) {
    Rational s(0);
    for (long x = 0; x < b; ++x) s += w[x] * value(p, x) * value(q, x);
    return s;
  };
  std::vector<std::vector<Rational>> basis;
  for (long k = 0; k < count; ++k) {
    std::vector<Rational> p(static_cast<std::size_t>(k + 1), Rational(0));
    p[k] = 1;
    const std::vector<Rational> mono = p;
    for (const auto& q : basis) {
      const Rational c = inner(mono, q) / inner(q, q);
      for (std::size_t i = 0; i < q.size(); ++i) p[i] -= c * q[i];
    }
    basis.push_back(std::move(p));
  }
  return basis;
}

void suite_gram_schmidt(Recorder& rec) {
  for (const auto& f : bounded_cases()) {
    const long cap = degree_cap(f, 8);
    const auto basis = gram_schmidt(f, cap + 1);
    for (long n = 0; n <= cap; ++n) {
      rec.guarded(describe(f, n), [&] {
        for (long x = -2; x <= *f.support().b + 2; ++x) {
          Rational v(0);
          for (auto it = basis[n].rbegin(); it != basis[n].rend(); ++it) v = v * x + *it;
          if (v != eval_poly<Rational>(f, n, Rational(x))) return false;
        }
        return true;
      });
    }
  }
}

void suite_rakhmanov(Recorder& rec) {
  for (const auto& f : bounded_cases()) {
    for (long n = 0; n <= degree_cap(f, 8); ++n) {
      rec.guarded(describe(f, n), [&] {
        Rational s(0);
        for (long x = 0; x < *f.support().b; ++x) {
          const Rational rho = rakhmanov_density<Rational>(f, n, x);
          if (rho < 0) return false;
          s += rho;
        }
        return s == 1;
      });
    }
  }
  const BigFloat tol = pow10(-30);
  for (const auto& f : unbounded_cases()) {
    for (long n = 0; n <= 8; ++n) {
      rec.guarded(describe(f, n) + " truncated", [&] {
        // Past every zero and the mode the terms fall monotonically; stop when
        // they are far below the tolerance.
        const long start = static_cast<long>(ceil(zero_bound(f, std::max(n, 1L))).convert_to<long>()) + 2;
        BigFloat s = 0;
        for (long x = 0; x < 1'000'000; ++x) {
          const BigFloat rho = rakhmanov_density<BigFloat>(f, n, x);
          if (rho < 0) return false;
          s += rho;
          if (x > start && rho < pow10(-45) * s) break;
        }
        return abs(s - 1) <= tol;
      });
    }
  }
}

template <Field T>
void nonnegativity_for(Recorder& rec, const FamilySpec& f, const std::string& tag) {
  for (long n = 0; n <= degree_cap(f, 6); ++n) {
    const FisherReport r = fisher_report<T>(f, n);
    for (const auto& o : r.outcomes) {
      const std::string inputs = describe(f, n) + " " + tag + " " + std::string(to_string(o.method));
      if (!o.value) {
        rec.check(false, inputs + " failed: " + o.error);
        continue;
      }
      // The Hahn closed form is a float; its n = 0 value is exact by construction.
      const int sign = o.value->sign();
      rec.check(n == 0 ? o.value->is_zero() : sign > 0, inputs + " value " + o.value->str());
    }
  }
}

void suite_nonnegativity(Recorder& rec) {
  for (const auto& f : all_cases()) {
    nonnegativity_for<Rational>(rec, f, "exact");
    nonnegativity_for<BigFloat>(rec, f, "float");
  }
}

std::vector<FamilySpec> three_way_cases() {
  std::vector<FamilySpec> out;
  for (long N = 2; N <= 12; ++N) {
    for (const Rational& p : {Rational(1, 4), Rational(1, 2), Rational(2, 3)}) out.push_back(FamilySpec::kravchuk(p, N));
  }
  for (long N = 2; N <= 12; ++N) {
    out.push_back(FamilySpec::hahn(0, 0, N));
    out.push_back(FamilySpec::hahn(3, Rational(-1, 2), N));
    out.push_back(FamilySpec::hahn(1, 2, N));
  }
  return out;
}

void suite_three_way(Recorder& rec) {
  const std::vector<Method> methods{Method::DirectSum, Method::TheoremFormula, Method::Expansion};
  for (const auto& f : three_way_cases()) {
    for (long n = 0; n <= *f.max_degree(); ++n) {
      rec.guarded(describe(f, n), [&] {
        const FisherReport r = fisher_report<Rational>(f, n, TruncationPolicy::defaults(), methods);
        const auto& d = r.outcomes[0].value;
        const auto& t = r.outcomes[1].value;
        const auto& e = r.outcomes[2].value;
        return d && t && e && d->exact() == e->exact() && t->exact() == e->exact();
      });
    }
  }
}

bool exact_closed_equals_expansion(const FamilySpec& f, long n) {
  const ClosedFormResult c = fisher_closed<Rational>(f, n);
  return c.converged && c.value.is_exact() && c.value.exact() == fisher_expansion<Rational>(f, n);
}

/// Hahn grid points: closed form vs expansion where C3 settled; the others
/// are listed as notes.
void hahn_closed_checks(Recorder& rec, bool flag_every_point) {
  const BigFloat tol = pow10(-8);
  for (const auto& f : three_way_cases()) {
    if (f.tag() != FamilyTag::Hahn) continue;
    for (long n = 1; n <= *f.max_degree(); ++n) {
      const std::string inputs = describe(f, n);
      try {
        const ClosedFormResult c = fisher_closed<Rational>(f, n);
        const BigFloat ref = to_bigfloat(fisher_expansion<Rational>(f, n));
        const BigFloat err = rel_err(c.value.to_bigfloat(), ref);
        if (flag_every_point) {
          rec.note(inputs + " C3 " + (c.converged ? "converged" : "not-converged") +
                   " rel.err=" + err.str(6, std::ios_base::scientific));
        } else if (!c.converged) {
          rec.note(inputs + " C3 not converged, excluded");
        }
        if (c.converged) rec.check(err <= tol, inputs + " rel.err=" + err.str(6, std::ios_base::scientific));
      } catch (const Error& e) {
        rec.note(inputs + " closed form raised " + e.kind() + ": " + e.what());
        rec.check(false, inputs + " threw " + e.what());
      }
    }
  }
}

void suite_closed_form(Recorder& rec) {
  for (long n = 0; n <= 20; ++n) {
    for (const Rational& mu : {Rational(1, 2), Rational(1), Rational(2), Rational(5)}) {
      const FamilySpec f = FamilySpec::charlier(mu);
      rec.guarded(describe(f, n), [&] { return exact_closed_equals_expansion(f, n); });
    }
  }
  for (const Rational& gamma : {Rational(3, 2), Rational(2), Rational(4)}) {
    for (const Rational& mu : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
      const FamilySpec f = FamilySpec::meixner(gamma, mu);
      for (long n = 0; n <= 20; ++n) {
        rec.guarded(describe(f, n), [&] { return exact_closed_equals_expansion(f, n); });
      }
    }
  }
  for (const auto& f : three_way_cases()) {
    if (f.tag() != FamilyTag::Kravchuk) continue;
    for (long n = 0; n <= *f.max_degree(); ++n) {
      rec.guarded(describe(f, n), [&] { return exact_closed_equals_expansion(f, n); });
    }
  }
  hahn_closed_checks(rec, false);
}

void suite_charlier(Recorder& rec) {
  for (const Rational& mu : {Rational(1, 2), Rational(1), Rational(2), Rational(5)}) {
    const FamilySpec f = FamilySpec::charlier(mu);
    for (long n = 1; n <= 20; ++n) {
      const FisherReport r = fisher_report<Rational>(f, n);
      for (const auto& o : r.outcomes) {
        rec.check(o.value && o.value->is_exact() && o.value->exact() == Rational(n) / mu,
                  describe(f, n) + " " + std::string(to_string(o.method)) + " " +
                      (o.value ? o.value->str() : o.error));
      }
    }
  }
}

void suite_hahn_closed_form(Recorder& rec) { hahn_closed_checks(rec, true); }

void suite_truncated_vs_exact(Recorder& rec) {
  const BigFloat tol = pow10(-25);
  for (const auto& f : unbounded_cases()) {
    for (long n = 0; n <= 10; ++n) {
      rec.guarded(describe(f, n), [&] {
        const BigFloat truncated = fisher_direct<BigFloat>(f, n);
        const BigFloat theorem = fisher_theorem<BigFloat>(f, n);
        const BigFloat exact = to_bigfloat(fisher_expansion<Rational>(f, n));
        if (n == 0) return truncated == 0 && theorem == 0;
        return rel_err(truncated, exact) <= tol && rel_err(theorem, exact) <= tol;
      });
    }
  }
}

/// |exact/asymptote - 1| must shrink along the sequence.
void monotone_approach(Recorder& rec, const std::string& what, const std::vector<BigFloat>& exact,
                       const std::vector<BigFloat>& asym) {
  std::ostringstream detail;
  bool ok = true;
  BigFloat prev = -1;
  for (std::size_t i = 0; i < exact.size(); ++i) {
    const BigFloat gap = abs(exact[i] / asym[i] - 1);
    detail << ' ' << gap.str(4, std::ios_base::scientific);
    if (prev >= 0 && !(gap < prev)) ok = false;
    prev = gap;
  }
  rec.note(what + " |ratio-1|:" + detail.str());
  rec.check(ok, what + " |ratio-1| sequence" + detail.str());
}

void suite_asymptotes(Recorder& rec) {
  for (long N = 2; N <= 10; ++N) {
    for (const Rational& p : {Rational(1, 4), Rational(1, 2), Rational(2, 3)}) {
      const FamilySpec f = FamilySpec::kravchuk(p, N);
      rec.guarded("max-degree " + describe(f, N - 1), [&] {
        return kravchuk_max_degree<Rational>(N, p) == fisher_expansion<Rational>(f, N - 1);
      });
    }
  }
  rec.check(kravchuk_max_degree<Rational>(3, Rational(1, 2)) == Rational(16, 3), "max-degree N=3 p=1/2");
  rec.check(meixner_mu_to_zero<Rational>(2, 1, Rational(1, 100)) == 50, "mu->0 n=1 gamma=2 mu=1/100");

  const std::vector<Rational> small{Rational(1, 100), Rational(1, 1000), Rational(1, 10000)};
  for (const auto& [gamma, n] : std::vector<std::pair<Rational, long>>{{Rational(3, 2), 2}, {4, 2}, {Rational(3, 2), 5}}) {
    std::vector<BigFloat> exact, asym;
    for (const auto& mu : small) {
      exact.push_back(to_bigfloat(fisher_expansion<Rational>(FamilySpec::meixner(gamma, mu), n)));
      asym.push_back(meixner_mu_to_zero<BigFloat>(gamma, n, mu));
    }
    monotone_approach(rec, "meixner mu->0 gamma=" + format_exact(gamma) + " n=" + std::to_string(n), exact, asym);
  }
  for (const auto& [mu, n] : std::vector<std::pair<Rational, long>>{{Rational(1, 4), 2}, {Rational(3, 4), 2}, {Rational(1, 4), 5}}) {
    std::vector<BigFloat> exact, asym;
    for (const Rational& gamma : {Rational(100), Rational(1000)}) {
      exact.push_back(to_bigfloat(fisher_expansion<Rational>(FamilySpec::meixner(gamma, mu), n)));
      asym.push_back(meixner_gamma_to_infinity<BigFloat>(n, mu, gamma));
    }
    monotone_approach(rec, "meixner gamma->inf mu=" + format_exact(mu) + " n=" + std::to_string(n), exact, asym);
    exact.clear();
    asym.clear();
    for (const Rational& gamma : {Rational(1, 100), Rational(1, 1000)}) {
      exact.push_back(to_bigfloat(fisher_expansion<Rational>(FamilySpec::meixner(gamma, mu), n)));
      asym.push_back(meixner_gamma_to_zero<BigFloat>(n, mu, gamma));
    }
    monotone_approach(rec, "meixner gamma->0 mu=" + format_exact(mu) + " n=" + std::to_string(n), exact, asym);
  }
  {
    std::vector<BigFloat> exact, asym;
    for (const Rational& p : {Rational(1, 100), Rational(1, 1000), Rational(1, 10000)}) {
      exact.push_back(to_bigfloat(fisher_expansion<Rational>(FamilySpec::kravchuk(p, 15), 2)));
      asym.push_back(kravchuk_p_to_zero<BigFloat>(2, 15, p));
    }
    monotone_approach(rec, "kravchuk p->0 n=2 N=15", exact, asym);
    rec.check(abs(exact.back() / asym.back() - 1) <= BigFloat(1) / 100, "kravchuk p->0 within 1% at p=1e-4");
  }
  for (const auto& [gamma, mu] : std::vector<std::pair<Rational, Rational>>{
           {Rational(3, 2), Rational(1, 4)}, {4, Rational(1, 4)}, {Rational(3, 2), Rational(1, 7)}}) {
    BigFloat worst = 0;
    for (long n = 10; n <= 200; n += 10) {
      const BigFloat exact = fisher_closed<BigFloat>(FamilySpec::meixner(gamma, mu), n).value.to_bigfloat();
      worst = std::max(worst, BigFloat(n * abs(exact - meixner_large_n<BigFloat>(gamma, mu, n))));
    }
    rec.note("meixner large-n gamma=" + format_exact(gamma) + " mu=" + format_exact(mu) +
             " max n|exact-asymptote| over n=10..200: " + worst.str(6));
  }
}

using SuiteFn = void (*)(Recorder&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"pochhammer", suite_pochhammer},
      {"pfq", suite_pfq},
      {"orthogonality", suite_orthogonality},
      {"difference-equation", suite_difference_equation},
      {"weight-ratio", suite_weight_ratio},
      {"recurrence-norm", suite_recurrence_norm},
      {"ladder", suite_ladder},
      {"gram-schmidt", suite_gram_schmidt},
      {"rakhmanov", suite_rakhmanov},
      {"nonnegativity", suite_nonnegativity},
      {"three-way", suite_three_way},
      {"closed-form", suite_closed_form},
      {"charlier", suite_charlier},
      {"hahn-closed-form", suite_hahn_closed_form},
      {"truncated-vs-exact", suite_truncated_vs_exact},
      {"asymptotes", suite_asymptotes},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name) {
  for (const auto& [key, fn] : registry()) {
    if (key != name) continue;
    SuiteResult result;
    result.name = name;
    Recorder rec(result);
    try {
      fn(rec);
    } catch (const std::exception& e) {
      rec.check(false, "suite aborted: " + std::string(e.what()));
    }
    return result;
  }
  throw UsageError("unknown suite '" + name + "'");
}

int cmd_verify(const std::vector<std::string>& suites, bool show_notes, std::ostream& out) {
  const std::vector<std::string>& chosen = suites.empty() ? suite_names() : suites;
  for (const auto& s : chosen) {
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end()) {
      throw UsageError("unknown suite '" + s + "'");
    }
  }
  bool all_ok = true;
  for (const auto& s : chosen) {
    const auto t0 = std::chrono::steady_clock::now();
    const SuiteResult r = run_suite(s);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    all_ok = all_ok && r.ok();
    out << (r.ok() ? "PASS " : "FAIL ") << r.name << ": " << r.passed << " passed, " << r.failed << " failed ("
        << std::fixed << std::setprecision(2) << secs << " s)\n";
    if (!r.first_failure.empty()) out << "  first failure: " << r.first_failure << '\n';
    if (show_notes || s == "hahn-closed-form") {
      for (const auto& n : r.notes) out << "  " << n << '\n';
    }
  }
  out << (all_ok ? "all suites passed" : "verification failed") << '\n';
  return all_ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace dfisher::cli
