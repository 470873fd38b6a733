#include "doctest.h"

#include "urs/tate.hpp"

using namespace urs;

namespace {
Session S2() { return Session::make(2, 4, 4); }
Session S3() { return Session::make(3, 4, 4); }
}

TEST_CASE("z-integral equals closed gamma for every tame character, p<=3") {
  for (Session s : {S2(), S3()}) {
    AddChar psiF(s, false);
    long q2m1 = s.fld->p * s.fld->p - 1;
    for (long j = 0; j < q2m1; ++j) {
      for (long te = 0; te < 4; ++te) {
        MultChar chi(s, j, 4, te);
        LocalFactorReport rep = local_factor_report(psiF, chi);
        CHECK(rep.agree);
      }
    }
  }
}

TEST_CASE("z-integral / closed gamma at the (s) shift family") {
  Session s = S2();
  AddChar psiF(s, false);
  MultChar triv(s, 0, 1, 0);
  RatFun z = z_integral(psiF, triv, Shift{1, 0});
  CHECK(z == gamma_closed(psiF, triv.inverse(), Shift{-1, 0}));
}

TEST_CASE("ramified z-integral is a single Gauss term") {
  Session s = S3();
  AddChar psiF(s, false);
  MultChar chi(s, 1, 1, 0); // ramified restriction
  RatFun z = z_integral(psiF, chi, Shift{2, -2});
  // q^{-1/2} G(psi_F, chi): no X-dependence, trivial denominator
  RatFun expect = RatFun::of(Scalar::sqrt_q_pow(s.cyc, -1) * gauss_sum(psiF, chi));
  CHECK(z == expect);
  CHECK(z.den().deg() == 0);
}

TEST_CASE("unramified epsilon factor matches the level-one formula") {
  Session s = S3();
  AddChar psiF(s, false);
  MultChar chi(s, 2, 4, 1); // unramified restriction, tau(pi) = i
  // eps(2s-1, chi, psi_F) = q^{2s-3/2} chi(pi)^{-1} = X^{-2} S^{-3} chi(pi)^{-1}
  RatFun eps = eps_factor(psiF, chi, Shift{2, -1});
  RatFun expect = qs_power(s, -2, -3).scaled(chi.unif_value().inv());
  CHECK(eps == expect);
}

TEST_CASE("gamma functional equation product") {
  // gamma(s',chi) * gamma(1-s',chi^{-1}) = chi(-1)
  for (Session s : {S2(), S3()}) {
    AddChar psiF(s, false);
    long q2m1 = s.fld->p * s.fld->p - 1;
    for (long j : {0L, 1L, q2m1 / 2}) {
      MultChar chi(s, j, 4, 1);
      Shift sh{2, -1};
      RatFun prod = gamma_closed(psiF, chi, sh) * gamma_closed(psiF, chi.inverse(), sh.dual());
      CHECK(prod == RatFun::of(chi.value_at_minus_one_F()));
    }
  }
}

TEST_CASE("local coefficient: both computation paths agree") {
  for (Session s : {S2(), S3()}) {
    AddChar psiF(s, false);
    long q2m1 = s.fld->p * s.fld->p - 1;
    for (long j = 0; j < q2m1; ++j) {
      MultChar tau(s, j, 4, 1);
      RatFun C = local_coefficient(psiF, tau); // throws on any mismatch
      CHECK(!C.is_zero());
    }
  }
}

TEST_CASE("trivial tau: C = gamma(2s-1, 1, psi_F)") {
  Session s = S2();
  AddChar psiF(s, false);
  MultChar triv(s, 0, 1, 0);
  CHECK(local_coefficient(psiF, triv) == gamma_closed(psiF, triv, Shift{2, -1}));
}

TEST_CASE("N-stability of the z-integral") {
  Session s4 = Session::make(3, 4, 4);
  Session s5 = Session::make(3, 5, 4);
  AddChar p4(s4, false), p5(s5, false);
  MultChar c4(s4, 1, 4, 1), c5(s5, 1, 4, 1);
  // same cyclotomic session order, so values are directly comparable
  REQUIRE(s4.cyc->order() == s5.cyc->order());
  RatFun z4 = z_integral(p4, c4, Shift{2, -2});
  RatFun z5 = z_integral(p5, c5, Shift{2, -2});
  CHECK(z4.num().deg() == z5.num().deg());
  for (long k = 0; k <= z4.num().deg(); ++k)
    CHECK(z4.num().at(k, s4.cyc) == z5.num().at(k, s5.cyc));
  for (long k = 0; k <= z4.den().deg(); ++k)
    CHECK(z4.den().at(k, s4.cyc) == z5.den().at(k, s5.cyc));
}
