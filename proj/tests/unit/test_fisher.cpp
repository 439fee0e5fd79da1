#include <doctest.h>

#include "dfisher/errors.hpp"
#include "dfisher/families.hpp"
#include "dfisher/fisher.hpp"
#include "oracles.hpp"

using namespace dfisher;

namespace {

BigFloat rel(const BigFloat& a, const BigFloat& b) {
  const BigFloat s = std::max(BigFloat(abs(a)), BigFloat(abs(b)));
  return s == 0 ? BigFloat(0) : BigFloat(abs(a - b) / s);
}

BigFloat ten_pow(int e) { return boost::multiprecision::pow(BigFloat(10), e); }

std::vector<FamilySpec> grid_bounded() {
  std::vector<FamilySpec> out;
  for (long N = 2; N <= 12; ++N) {
    for (const Rational& p : {Rational(1, 4), Rational(1, 2), Rational(2, 3)}) out.push_back(FamilySpec::kravchuk(p, N));
    out.push_back(FamilySpec::hahn(0, 0, N));
    out.push_back(FamilySpec::hahn(3, Rational(-1, 2), N));
    out.push_back(FamilySpec::hahn(1, 2, N));
  }
  return out;
}

}  // namespace

TEST_SUITE("fisher") {
  TEST_CASE("direct sum examples") {
    CHECK(fisher_direct<Rational>(FamilySpec::charlier(2), 3) == Rational(3, 2));
    CHECK(fisher_direct<Rational>(FamilySpec::kravchuk(Rational(1, 2), 3), 2) == Rational(16, 3));
    for (const auto& f : {FamilySpec::charlier(2), FamilySpec::meixner(2, Rational(1, 2)), FamilySpec::hahn(0, 0, 5)}) {
      CHECK(fisher_direct<Rational>(f, 0) == 0);
      CHECK(fisher_direct<BigFloat>(f, 0) == 0);
    }
  }

  TEST_CASE("theorem formula examples") {
    CHECK(fisher_theorem<Rational>(FamilySpec::charlier(2), 1) == Rational(1, 2));
    CHECK(fisher_theorem<Rational>(FamilySpec::hahn(0, 0, 5), 1) == Rational(1, 2));
    for (const auto& f : {FamilySpec::charlier(2), FamilySpec::kravchuk(Rational(2, 3), 5), FamilySpec::hahn(1, 2, 6)}) {
      CHECK(fisher_theorem<Rational>(f, 0) == 0);
      CHECK(fisher_theorem<BigFloat>(f, 0) == 0);
    }
  }

  TEST_CASE("expansion examples") {
    CHECK(fisher_expansion<Rational>(FamilySpec::charlier(2), 3) == Rational(3, 2));
    CHECK(fisher_expansion<Rational>(FamilySpec::meixner(2, Rational(1, 2)), 1) == Rational(1, 4));
    CHECK(fisher_expansion<Rational>(FamilySpec::kravchuk(Rational(1, 2), 10), 1) == Rational(2, 5));
  }

  TEST_CASE("closed form examples") {
    const ClosedFormResult c = fisher_closed<Rational>(FamilySpec::charlier(2), 3);
    CHECK(c.converged);
    CHECK(c.value.exact() == Rational(3, 2));
    const ClosedFormResult k = fisher_closed<Rational>(FamilySpec::kravchuk(Rational(1, 2), 3), 2);
    CHECK(k.converged);
    CHECK(k.value.exact() == Rational(16, 3));
    BigFloat previous_gap = 10;
    for (long n : {10L, 40L, 160L}) {
      const BigFloat v = fisher_closed<BigFloat>(FamilySpec::meixner(Rational(3, 2), Rational(1, 4)), n).value.to_bigfloat();
      const BigFloat gap = abs(v - 3);
      CHECK(gap < previous_gap);
      previous_gap = gap;
    }
  }

  TEST_CASE("report examples") {
    const FisherReport c = fisher_report<Rational>(FamilySpec::charlier(2), 3);
    REQUIRE(c.outcomes.size() == 4);
    for (const auto& o : c.outcomes) CHECK(o.value->exact() == Rational(3, 2));
    CHECK(c.max_pairwise_rel_discrepancy.is_zero());
    CHECK_FALSE(c.hahn_c3_converged.has_value());

    const FisherReport k = fisher_report<Rational>(FamilySpec::kravchuk(Rational(1, 2), 12), 5);
    for (const auto& o : k.outcomes) CHECK(o.value->exact() == k.find(Method::Expansion)->value->exact());

    const FisherReport h = fisher_report<Rational>(FamilySpec::hahn(0, 0, 20), 1);
    for (Method m : {Method::DirectSum, Method::TheoremFormula, Method::Expansion}) {
      CHECK(h.find(m)->value->exact() == Rational(12, 399));
    }
    REQUIRE(h.hahn_c3_converged.has_value());
    CHECK(*h.hahn_c3_converged);
    CHECK(rel(h.find(Method::ClosedForm)->value->to_bigfloat(), to_bigfloat(Rational(12, 399))) < ten_pow(-30));
  }

  TEST_CASE("hahn n = 1 equals 12/(N^2-1)") {
    for (long N = 3; N <= 20; ++N) {
      CHECK(fisher_expansion<Rational>(FamilySpec::hahn(0, 0, N), 1) == Rational(12, N * N - 1));
    }
  }

  TEST_CASE("direct, theorem and expansion agree exactly on bounded supports") {
    for (const auto& f : grid_bounded()) {
      for (long n = 0; n <= *f.max_degree(); ++n) {
        const Rational e = fisher_expansion<Rational>(f, n);
        CHECK(fisher_direct<Rational>(f, n) == e);
        CHECK(fisher_theorem<Rational>(f, n) == e);
      }
    }
  }

  TEST_CASE("bounded values match the brute-force oracle") {
    for (const auto& f : {FamilySpec::kravchuk(Rational(1, 3), 7), FamilySpec::hahn(Rational(1, 2), 2, 7),
                          FamilySpec::hahn(3, Rational(-1, 2), 6)}) {
      std::vector<Rational> w;
      for (long x = 0; x < *f.support().b; ++x) w.push_back(reduced_weight<Rational>(f, x));
      const std::vector<Rational> ow = f.tag() == FamilyTag::Kravchuk
                                           ? oracle::kravchuk_weights(f.as<KravchukParams>().p, 7)
                                           : oracle::hahn_weights(f.as<HahnParams>().alpha, f.as<HahnParams>().beta,
                                                                  f.as<HahnParams>().N);
      CHECK(w == ow);
      for (long n = 0; n <= *f.max_degree(); ++n) CHECK(fisher_expansion<Rational>(f, n) == oracle::direct_fisher(ow, n));
    }
  }

  TEST_CASE("unbounded values match the brute-force oracle") {
    for (long n = 1; n <= 4; ++n) {
      CHECK(rel(fisher_direct<BigFloat>(FamilySpec::charlier(Rational(3, 2)), n),
                oracle::direct_fisher_charlier(BigFloat(3) / 2, n, 150)) < ten_pow(-30));
      const BigFloat mo = oracle::direct_fisher_meixner(BigFloat(3) / 2, BigFloat(1) / 4, n, 250);
      CHECK(rel(to_bigfloat(fisher_expansion<Rational>(FamilySpec::meixner(Rational(3, 2), Rational(1, 4)), n)), mo) <
            ten_pow(-30));
    }
  }

  TEST_CASE("closed form equals expansion") {
    for (const Rational& gamma : {Rational(3, 2), Rational(2), Rational(4)}) {
      for (const Rational& mu : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
        const FamilySpec f = FamilySpec::meixner(gamma, mu);
        for (long n = 0; n <= 15; ++n) CHECK(fisher_closed<Rational>(f, n).value.exact() == fisher_expansion<Rational>(f, n));
      }
    }
    for (const auto& f : grid_bounded()) {
      for (long n = 1; n <= *f.max_degree(); ++n) {
        const ClosedFormResult c = fisher_closed<Rational>(f, n);
        const Rational e = fisher_expansion<Rational>(f, n);
        if (f.tag() == FamilyTag::Kravchuk) {
          CHECK(c.value.exact() == e);
        } else if (c.converged) {
          CHECK(rel(c.value.to_bigfloat(), to_bigfloat(e)) < ten_pow(-8));
        }
      }
    }
  }

  TEST_CASE("hahn closed form with alpha + beta = -1 reports the pole") {
    const FamilySpec f = FamilySpec::hahn(Rational(-1, 2), Rational(-1, 2), 6);
    CHECK_THROWS_AS(fisher_closed<Rational>(f, 2), DenominatorPole);
    const FisherReport r = fisher_report<Rational>(f, 2);
    CHECK_FALSE(r.find(Method::ClosedForm)->value.has_value());
    CHECK(r.find(Method::ClosedForm)->error.rfind("DenominatorPole", 0) == 0);
    CHECK(r.find(Method::Expansion)->value->exact() == Rational(256, 105));
  }

  TEST_CASE("nonnegative, and zero exactly at n = 0") {
    for (const auto& f : {FamilySpec::charlier(Rational(1, 2)), FamilySpec::meixner(4, Rational(3, 4)),
                          FamilySpec::kravchuk(Rational(2, 3), 6), FamilySpec::hahn(1, 2, 7)}) {
      for (long n = 0; n <= 5; ++n) {
        for (const auto& o : fisher_report<BigFloat>(f, n).outcomes) {
          REQUIRE(o.value.has_value());
          if (n == 0) {
            CHECK(o.value->is_zero());
          } else {
            CHECK(o.value->sign() > 0);
          }
        }
      }
    }
  }

  TEST_CASE("truncated float sums match the exact value") {
    for (const auto& f : {FamilySpec::charlier(5), FamilySpec::meixner(4, Rational(3, 4)),
                          FamilySpec::meixner(Rational(3, 2), Rational(1, 4))}) {
      for (long n = 1; n <= 10; ++n) {
        const BigFloat e = to_bigfloat(fisher_expansion<Rational>(f, n));
        CHECK(rel(fisher_direct<BigFloat>(f, n), e) < ten_pow(-25));
        CHECK(rel(fisher_theorem<BigFloat>(f, n), e) < ten_pow(-25));
      }
    }
  }

  TEST_CASE("truncation cap is reported") {
    TruncationPolicy tiny = TruncationPolicy::defaults();
    tiny.hard_cap = 5;
    CHECK_THROWS_AS(fisher_direct<BigFloat>(FamilySpec::meixner(4, Rational(3, 4)), 3, tiny), TruncationCapExceeded);
    const FisherReport r = fisher_report<BigFloat>(FamilySpec::meixner(4, Rational(3, 4)), 3, tiny);
    CHECK_FALSE(r.find(Method::DirectSum)->value.has_value());
    CHECK(r.find(Method::Expansion)->value.has_value());
  }

  TEST_CASE("rakhmanov density") {
    const FamilySpec k = FamilySpec::kravchuk(Rational(1, 2), 3);
    const std::vector<Rational> expected{Rational(1, 8), Rational(3, 8), Rational(3, 8), Rational(1, 8)};
    for (long x = 0; x <= 3; ++x) CHECK(rakhmanov_density<Rational>(k, 0, x) == expected[x]);
    for (long x = 0; x < 5; ++x) CHECK(rakhmanov_density<Rational>(FamilySpec::hahn(0, 0, 5), 0, x) == Rational(1, 5));
    Rational s(0);
    for (long x = 0; x <= 3; ++x) s += rakhmanov_density<Rational>(k, 2, x);
    CHECK(s == 1);
    CHECK_THROWS_AS(rakhmanov_density<Rational>(FamilySpec::charlier(2), 1, 0), NotRepresentable);
    CHECK_THROWS_AS(rakhmanov_density<Rational>(k, 1, 4), OutOfSupport);
    BigFloat t = 0;
    for (long x = 0; x < 200; ++x) t += rakhmanov_density<BigFloat>(FamilySpec::charlier(2), 3, x);
    CHECK(abs(t - 1) < ten_pow(-30));
  }

  TEST_CASE("method names") {
    for (Method m : kAllMethods) CHECK(parse_method(to_string(m)) == m);
    CHECK_THROWS(parse_method("simpson"));
  }
}
