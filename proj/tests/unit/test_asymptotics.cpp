#include <doctest.h>

#include "dfisher/asymptotics.hpp"
#include "dfisher/errors.hpp"
#include "dfisher/fisher.hpp"

using namespace dfisher;

namespace {

BigFloat gap(const Rational& exact, const BigFloat& asym) { return abs(to_bigfloat(exact) / asym - 1); }

}  // namespace

TEST_SUITE("asymptotics") {
  TEST_CASE("meixner large n") {
    CHECK(meixner_large_n<Rational>(Rational(3, 2), Rational(1, 4), 1'000'000) - 3 == Rational(-1, 2'000'000));
    CHECK(meixner_large_n<Rational>(Rational(3, 2), Rational(1, 7), 1) == 6 - Rational(1, 2));
    for (long n : {1L, 7L, 50L}) CHECK(meixner_large_n<Rational>(1, Rational(1, 4), n) == 3);
  }

  TEST_CASE("meixner mu limits") {
    for (const Rational& gamma : {Rational(1, 2), Rational(3), Rational(7, 3)}) {
      CHECK(meixner_mu_to_one<Rational>(gamma, 1, Rational(9, 10)) == Rational(1, 100) / gamma);
    }
    CHECK(meixner_mu_to_zero<Rational>(2, 1, Rational(1, 100)) == 50);
    for (long n : {2L, 5L}) {
      BigFloat previous = 1;
      for (const Rational& mu : {Rational(1, 100), Rational(1, 1000), Rational(1, 10000)}) {
        const BigFloat g = gap(fisher_expansion<Rational>(FamilySpec::meixner(Rational(3, 2), mu), n),
                               meixner_mu_to_zero<BigFloat>(Rational(3, 2), n, mu));
        CHECK(g < previous);
        previous = g;
      }
    }
  }

  TEST_CASE("meixner gamma limits") {
    CHECK(meixner_gamma_to_infinity<Rational>(2, Rational(1, 2), 4) == Rational(1, 4));
    CHECK(meixner_gamma_to_zero<Rational>(3, Rational(1, 2), Rational(1, 2)) == Rational(3, 4));
    BigFloat previous = 1;
    for (const Rational& gamma : {Rational(100), Rational(1000)}) {
      const BigFloat g = gap(fisher_expansion<Rational>(FamilySpec::meixner(gamma, Rational(1, 4)), 2),
                             meixner_gamma_to_infinity<BigFloat>(2, Rational(1, 4), gamma));
      CHECK(g < previous);
      previous = g;
    }
    previous = 1;
    for (const Rational& gamma : {Rational(1, 100), Rational(1, 1000)}) {
      const BigFloat g = gap(fisher_expansion<Rational>(FamilySpec::meixner(gamma, Rational(3, 4)), 2),
                             meixner_gamma_to_zero<BigFloat>(2, Rational(3, 4), gamma));
      CHECK(g < previous);
      previous = g;
    }
  }

  TEST_CASE("kravchuk limits") {
    CHECK(kravchuk_max_degree<Rational>(3, Rational(1, 2)) == Rational(16, 3));
    for (long N = 2; N <= 10; ++N) {
      for (const Rational& p : {Rational(1, 4), Rational(1, 2), Rational(2, 3)}) {
        CHECK(kravchuk_max_degree<Rational>(N, p) == fisher_expansion<Rational>(FamilySpec::kravchuk(p, N), N - 1));
        CHECK(kravchuk_max_degree<Rational>(N, p) == fisher_closed<Rational>(FamilySpec::kravchuk(p, N), N - 1).value.exact());
      }
    }
    const Rational p(1, 10000);
    const BigFloat asym = kravchuk_p_to_zero<BigFloat>(2, 15, p);
    CHECK(abs(asym - BigFloat(2) / BigFloat("14e-4")) < BigFloat("1e-60"));
    CHECK(gap(fisher_expansion<Rational>(FamilySpec::kravchuk(p, 15), 2), asym) < BigFloat("0.01"));
    CHECK(kravchuk_p_to_one<Rational>(2, 15, Rational(1, 2)) == Rational(2, 14 * 15) * 4);
    CHECK(kravchuk_max_degree_large_N<Rational>(3, Rational(1, 2)) == Rational(1, 3) * 4 * 8);
  }

  TEST_CASE("asymptote specs") {
    AsymptoteSpec ok{FamilyTag::Meixner, LimitVariable::MuToZero, {{"gamma", 2}, {"n", 1}}};
    CHECK(ok.evaluate<Rational>(Rational(1, 100)) == 50);
    AsymptoteSpec wrong_family{FamilyTag::Kravchuk, LimitVariable::GammaToZero, {{"n", 2}, {"mu", Rational(1, 2)}}};
    CHECK_THROWS_AS(wrong_family.validate(), DomainError);
    AsymptoteSpec missing{FamilyTag::Kravchuk, LimitVariable::PToZero, {{"n", 2}}};
    CHECK_THROWS_AS(missing.validate(), DomainError);
    AsymptoteSpec fixed_variable{FamilyTag::Meixner, LimitVariable::DegreeToInfinity,
                                 {{"gamma", 2}, {"mu", Rational(1, 4)}, {"n", 3}}};
    CHECK_THROWS_AS(fixed_variable.validate(), DomainError);
    AsymptoteSpec large_n{FamilyTag::Kravchuk, LimitVariable::SizeToInfinity, {{"p", Rational(1, 2)}}};
    CHECK(large_n.evaluate<Rational>(3) == kravchuk_max_degree_large_N<Rational>(3, Rational(1, 2)));
    CHECK(parse_limit_variable("GAMMA->inf") == LimitVariable::GammaToInfinity);
    CHECK_THROWS(parse_limit_variable("x->0"));
  }
}
