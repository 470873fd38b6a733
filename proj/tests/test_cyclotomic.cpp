#include "doctest.h"

#include "urs/cyclotomic.hpp"

using namespace urs;

namespace {
CycPtr field12() { return std::make_shared<CycField>(12, 3); }
}

TEST_CASE("zeta_4 squared is -1") {
  CycPtr F = field12();
  Scalar i = Scalar::root_of_unity(F, 4, 1);
  CHECK(i * i == -Scalar::one(F));
}

TEST_CASE("S*S = p") {
  CycPtr F = field12();
  Scalar s = Scalar::sqrt_q_pow(F, 1);
  CHECK(s * s == Scalar::of_int(F, 3));
  CHECK(s * Scalar::sqrt_q_pow(F, -1) == Scalar::one(F));
}

TEST_CASE("sum of primitive cube roots is -1") {
  CycPtr F = field12();
  Scalar z = Scalar::root_of_unity(F, 3, 1);
  Scalar z2 = Scalar::root_of_unity(F, 3, 2);
  CHECK(z + z2 == -Scalar::one(F));
}

TEST_CASE("embedding compatibility: zeta_8^2 = zeta_4") {
  CycPtr F = std::make_shared<CycField>(24, 2);
  Scalar a = Scalar::root_of_unity(F, 8, 2);
  Scalar b = Scalar::root_of_unity(F, 4, 1);
  CHECK(a == b);
  CHECK(Scalar::root_of_unity(F, 2, 1) == -Scalar::one(F));
  CHECK(Scalar::root_of_unity(F, 3, 3) == Scalar::one(F));
}

TEST_CASE("field axioms on random-ish elements") {
  CycPtr F = field12();
  Scalar a = Scalar::root_of_unity(F, 12, 5) + Scalar::of_rat(F, Rat(3, 7));
  Scalar b = Scalar::sqrt_q_pow(F, 1) * Scalar::root_of_unity(F, 12, 7) - Scalar::one(F);
  CHECK(a + b == b + a);
  CHECK(a * b == b * a);
  CHECK((a + b) * a == a * a + b * a);
  CHECK(a * a.inv() == Scalar::one(F));
  CHECK(b * b.inv() == Scalar::one(F));
  CHECK_THROWS_AS(Scalar::zero(F).inv(), scalar_error);
}

TEST_CASE("inverse with odd part") {
  CycPtr F = field12();
  Scalar x = Scalar::one(F) + Scalar::sqrt_q_pow(F, 1); // 1 + S
  Scalar y = x.inv();
  CHECK(x * y == Scalar::one(F));
}

TEST_CASE("session order covers required roots") {
  long n = session_cyclotomic_order(2, 4, 4);
  CHECK(n % 16 == 0);
  CHECK(n % 3 == 0);
  CHECK(n % 4 == 0);
}
