#include <doctest.h>

#include "dfisher/errors.hpp"
#include "dfisher/families.hpp"
#include "oracles.hpp"

using namespace dfisher;

namespace {

std::vector<FamilySpec> sample_families() {
  return {FamilySpec::charlier(2),
          FamilySpec::charlier(Rational(1, 3)),
          FamilySpec::meixner(2, Rational(1, 2)),
          FamilySpec::meixner(Rational(3, 2), Rational(1, 4)),
          FamilySpec::kravchuk(Rational(1, 2), 3),
          FamilySpec::kravchuk(Rational(2, 3), 9),
          FamilySpec::hahn(0, 0, 5),
          FamilySpec::hahn(3, Rational(-1, 2), 9),
          FamilySpec::hahn(Rational(5, 2), 1, 8)};
}

long cap(const FamilySpec& f, long c) { return std::min(c, f.max_degree().value_or(c)); }

std::vector<Rational> oracle_weights(const FamilySpec& f) {
  if (f.tag() == FamilyTag::Kravchuk) {
    const auto& p = f.as<KravchukParams>();
    return oracle::kravchuk_weights(p.p, p.N);
  }
  const auto& p = f.as<HahnParams>();
  return oracle::hahn_weights(p.alpha, p.beta, p.N);
}

}  // namespace

TEST_SUITE("families") {
  TEST_CASE("reduced weight examples") {
    CHECK(reduced_weight<Rational>(FamilySpec::charlier(2), 3) == Rational(4, 3));
    CHECK(reduced_weight<Rational>(FamilySpec::kravchuk(Rational(1, 2), 3), 1) == Rational(3, 8));
    for (long x = 0; x < 5; ++x) CHECK(reduced_weight<Rational>(FamilySpec::hahn(0, 0, 5), x) == 1);
  }

  TEST_CASE("reduced norm examples") {
    CHECK(reduced_norm<Rational>(FamilySpec::charlier(2), 3) == 48);
    CHECK(reduced_norm<Rational>(FamilySpec::kravchuk(Rational(1, 2), 3), 1) == Rational(3, 4));
    CHECK(reduced_norm<Rational>(FamilySpec::hahn(0, 0, 5), 1) == 10);
  }

  TEST_CASE("weight ratio examples") {
    CHECK(weight_ratio<Rational>(FamilySpec::charlier(2), 4) == 2);
    CHECK(weight_ratio<Rational>(FamilySpec::meixner(2, Rational(1, 2)), 1) == 1);
  }

  TEST_CASE("polynomial examples") {
    for (const auto& f : sample_families()) CHECK(eval_poly<Rational>(f, 0, Rational(7, 2)) == 1);
    CHECK(eval_poly<Rational>(FamilySpec::charlier(2), 1, Rational(5)) == 3);
    CHECK(eval_poly<Rational>(FamilySpec::hahn(0, 0, 5), 1, Rational(0)) == -2);
  }

  TEST_CASE("difference examples") {
    const FamilySpec c = FamilySpec::charlier(2);
    for (long x = -3; x <= 6; ++x) {
      CHECK(forward_diff<Rational>(c, 0, Rational(x)) == 0);
      CHECK(forward_diff<Rational>(c, 1, Rational(x)) == 1);
    }
    const FamilySpec k = FamilySpec::kravchuk(Rational(1, 2), 3);
    const Rational d = forward_diff<Rational>(k, 2, Rational(0));
    CHECK(d == eval_poly<Rational>(k, 2, Rational(1)) - eval_poly<Rational>(k, 2, Rational(0)));
    CHECK(d == 2 * eval_poly<Rational>(FamilySpec::kravchuk(Rational(1, 2), 2), 1, Rational(0)));
  }

  TEST_CASE("ladder targets") {
    const LadderTarget c = ladder_target(FamilySpec::charlier(2), 3);
    CHECK(c.family == FamilySpec::charlier(2));
    CHECK(c.factor == 3);
    const LadderTarget h = ladder_target(FamilySpec::hahn(0, 0, 5), 2);
    CHECK(h.family == FamilySpec::hahn(1, 1, 4));
    CHECK(h.factor == 2);
    CHECK_THROWS_AS(ladder_target(FamilySpec::charlier(2), 0), DegreeOutOfRange);
  }

  TEST_CASE("ladder relation holds pointwise") {
    for (const auto& f : sample_families()) {
      for (long n = 1; n <= cap(f, 7); ++n) {
        const LadderTarget t = ladder_target(f, n);
        for (long x = 0; x <= 10; ++x) {
          CHECK(forward_diff<Rational>(f, n, Rational(x)) ==
                t.factor * eval_poly<Rational>(t.family, n - 1, Rational(x)));
        }
      }
    }
  }

  TEST_CASE("connection coefficient examples") {
    const auto c = connection_coeffs<Rational>(FamilySpec::charlier(2), 3);
    CHECK(c == std::vector<Rational>{0, 0, 3});
    const auto m = connection_coeffs<Rational>(FamilySpec::meixner(2, Rational(1, 2)), 2);
    CHECK(m == std::vector<Rational>{-2, 2});
  }

  TEST_CASE("connection coefficients reproduce the forward difference") {
    for (const auto& f : sample_families()) {
      for (long n = 1; n <= cap(f, 7); ++n) {
        const auto a = connection_coeffs<Rational>(f, n);
        REQUIRE(a.size() == static_cast<std::size_t>(n));
        for (long x = 0; x <= n + 2; ++x) {
          Rational s(0);
          for (long j = 0; j < n; ++j) s += a[j] * eval_poly<Rational>(f, j, Rational(x));
          CHECK(s == forward_diff<Rational>(f, n, Rational(x)));
        }
      }
    }
  }

  TEST_CASE("difference equation is satisfied exactly") {
    for (const auto& f : sample_families()) {
      const auto t = table_one<Rational>(f);
      CHECK(t.tau.c2 == 0);
      for (long n = 0; n <= cap(f, 8); ++n) {
        for (long x = 0; x <= n + 3; ++x) {
          const Rational X(x);
          const Rational d = forward_diff<Rational>(f, n, X);
          const Rational dd = d - backward_diff<Rational>(f, n, X);
          CHECK(t.sigma(X) * dd + t.tau(X) * d + t.lambda_of(n) * eval_poly<Rational>(f, n, X) == 0);
        }
      }
    }
  }

  TEST_CASE("weight ratio matches sigma/(tau+sigma) and consecutive weights") {
    for (const auto& f : sample_families()) {
      const auto t = table_one<Rational>(f);
      const long last = f.support().b ? std::min(12L, *f.support().b - 1) : 12L;
      for (long x = 1; x <= last; ++x) {
        const Rational r = weight_ratio<Rational>(f, x);
        CHECK(r == reduced_weight<Rational>(f, x - 1) / reduced_weight<Rational>(f, x));
        const Rational den = t.tau(Rational(x - 1)) + t.sigma(Rational(x - 1));
        if (den != 0) CHECK(r == t.sigma(Rational(x)) / den);
      }
    }
  }

  TEST_CASE("recurrence b_n is the norm ratio") {
    for (const auto& f : sample_families()) {
      const long c = cap(f, 8);
      const auto rc = recurrence_coeffs<Rational>(f, c + 1);
      for (long n = 1; n <= c; ++n) CHECK(rc.b[n] == reduced_norm<Rational>(f, n) / reduced_norm<Rational>(f, n - 1));
    }
  }

  TEST_CASE("bounded families match the Gram-Schmidt oracle") {
    for (const auto& f : sample_families()) {
      if (!f.support().bounded()) continue;
      const auto w = oracle_weights(f);
      for (long x = 0; x < static_cast<long>(w.size()); ++x) CHECK(reduced_weight<Rational>(f, x) == w[x]);
      const long c = *f.max_degree();
      const auto basis = oracle::gram_schmidt(w, c + 1);
      for (long n = 0; n <= c; ++n) {
        for (long x = -2; x <= static_cast<long>(w.size()) + 2; ++x) {
          CHECK(eval_poly<Rational>(f, n, Rational(x)) == oracle::horner(basis[n], Rational(x)));
        }
      }
    }
  }

  TEST_CASE("orthogonality is exact on bounded supports") {
    for (const auto& f : sample_families()) {
      if (!f.support().bounded()) continue;
      for (long n = 0; n <= cap(f, 8); ++n) {
        for (long m = 0; m <= cap(f, 8); ++m) {
          Rational s(0);
          for (long x = 0; x < *f.support().b; ++x) {
            s += reduced_weight<Rational>(f, x) * eval_poly<Rational>(f, n, Rational(x)) *
                 eval_poly<Rational>(f, m, Rational(x));
          }
          CHECK(s == (n == m ? reduced_norm<Rational>(f, n) : Rational(0)));
        }
      }
    }
  }

  TEST_CASE("mass factor") {
    CHECK(mass_factor(FamilySpec::kravchuk(Rational(1, 3), 4)).is_one());
    CHECK(mass_factor(FamilySpec::meixner(2, Rational(1, 2))).evaluate<Rational>() == 4);
    CHECK_THROWS_AS(mass_factor(FamilySpec::charlier(1)).evaluate<Rational>(), NotRepresentable);
    CHECK(abs(mass_factor(FamilySpec::charlier(1)).evaluate<BigFloat>() - exp(BigFloat(1))) < BigFloat("1e-70"));
  }

  TEST_CASE("zero bound encloses the sign changes") {
    for (const auto& f : sample_families()) {
      const long n = cap(f, 6);
      const BigFloat bound = zero_bound(f, n);
      // Past the bound every P_k keeps the sign of its leading coefficient.
      const long start = ceil(bound).convert_to<long>() + 1;
      for (long k = 0; k <= n; ++k) {
        for (long x = start; x < start + 5; ++x) CHECK(eval_poly<Rational>(f, k, Rational(x)) > 0);
      }
    }
  }

  TEST_CASE("domains and supports") {
    CHECK_THROWS_AS(FamilySpec::charlier(0), DomainError);
    CHECK_THROWS_AS(FamilySpec::meixner(0, Rational(1, 2)), DomainError);
    CHECK_THROWS_AS(FamilySpec::meixner(1, 1), DomainError);
    CHECK_THROWS_AS(FamilySpec::kravchuk(Rational(1, 2), 0), DomainError);
    CHECK_THROWS_AS(FamilySpec::kravchuk(1, 3), DomainError);
    CHECK_THROWS_AS(FamilySpec::hahn(-1, 0, 4), DomainError);
    CHECK_THROWS_AS(FamilySpec::hahn(0, -1, 4), DomainError);
    CHECK_NOTHROW(FamilySpec::hahn(Rational(-99, 100), 0, 4));
    const FamilySpec k = FamilySpec::kravchuk(Rational(1, 2), 3);
    CHECK(k.support().contains(3));
    CHECK_FALSE(k.support().contains(4));
    CHECK_THROWS_AS(k.check_support(4), OutOfSupport);
    CHECK_THROWS_AS(k.check_degree(3), DegreeOutOfRange);
    CHECK_THROWS_AS(FamilySpec::hahn(0, 0, 5).check_support(5), OutOfSupport);
    CHECK_FALSE(FamilySpec::charlier(1).max_degree().has_value());
    CHECK(parse_family_tag("Krawtchouk") == FamilyTag::Kravchuk);
    CHECK_THROWS(parse_family_tag("laguerre"));
  }
}
