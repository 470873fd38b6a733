#include "doctest.h"

#include "urs/ratfun.hpp"

using namespace urs;

namespace {
CycPtr F() {
  static CycPtr f = std::make_shared<CycField>(12, 2);
  return f;
}
Scalar one() { return Scalar::one(F()); }
RatFun X(long k = 1) { return RatFun::monomial(one(), k); }
}

TEST_CASE("geometric tail basics") {
  RatFun r = X();
  RatFun g = geometric_tail(r, 0);
  CHECK(g == RatFun::of(one()) / (RatFun::of(one()) - X()));

  RatFun g2 = geometric_tail(X() * X(), 2);
  CHECK(g2 == X().pow(4) / (RatFun::of(one()) - X().pow(2)));

  RatFun g3 = geometric_tail(-X(), 1);
  CHECK(g3 == (-X()) / (RatFun::of(one()) + X()));

  CHECK_THROWS_AS(geometric_tail(RatFun::of(one()), 0), pole_error);
}

TEST_CASE("tail shift identity r*tail(r,n0) = tail(r,n0+1)") {
  RatFun r = X(2).scaled(Scalar::of_rat(F(), Rat(2, 3)));
  for (long n0 : {0L, 1L, 3L})
    CHECK(r * geometric_tail(r, n0) == geometric_tail(r, n0 + 1));
}

TEST_CASE("ratfun arithmetic and equality") {
  RatFun a = (X() + RatFun::of(one())) / (X() - RatFun::of(one()));
  RatFun b = (X() * X() - RatFun::of(one())) / (X() - RatFun::of(one())).pow(2);
  CHECK(a == b); // cancellation of common factors
  CHECK(a - b == RatFun::zero(F()));
  CHECK((a / a) == RatFun::of(one()));
}

TEST_CASE("negative powers of X") {
  RatFun m = RatFun::monomial(one(), -3);
  CHECK(m * X(3) == RatFun::of(one()));
}

TEST_CASE("evaluation homomorphism commutes with arithmetic") {
  RatFun a = (X(2) + RatFun::of(Scalar::of_int(F(), 5))) / (X() + RatFun::of(one()));
  RatFun b = X() - RatFun::of(Scalar::of_rat(F(), Rat(1, 2)));
  Scalar x0 = Scalar::of_rat(F(), Rat(2, 7));
  CHECK((a * b).eval(x0) == a.eval(x0) * b.eval(x0));
  CHECK((a + b).eval(x0) == a.eval(x0) + b.eval(x0));
}

TEST_CASE("degree gap") {
  RatFun g = X(2).scaled(Scalar::of_int(F(), 2));
  CHECK(g.degree_gap() == 2);
  CHECK((RatFun::of(one()) / X(3)).degree_gap() == -3);
}
