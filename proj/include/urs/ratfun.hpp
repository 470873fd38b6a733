#ifndef URS_RATFUN_HPP
#define URS_RATFUN_HPP

#include "urs/cyclotomic.hpp"

namespace urs {

struct ratfun_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// a geometric tail was asked for ratio 1 (an L-factor pole)
struct pole_error : ratfun_error {
  using ratfun_error::ratfun_error;
};

// dense polynomial in X over Scalar, lowest degree first
struct Poly {
  std::vector<Scalar> c;

  static Poly zero() { return {}; }
  static Poly of(const Scalar& s);
  static Poly monomial(const Scalar& s, long k);

  long deg() const; // -1 for zero
  bool is_zero() const { return deg() < 0; }
  void trim();
  Scalar lead() const;
  Scalar at(long k, const CycPtr& F) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  bool operator==(const Poly& o) const;

  Scalar eval(const Scalar& x) const; // evaluation homomorphism
};

Poly poly_rem(Poly a, const Poly& b);          // remainder, b nonzero
Poly poly_gcd(Poly a, Poly b);                 // monic gcd
Poly poly_div_exact_p(const Poly& a, const Poly& b);

// rational function in X = q_F^{-s}; canonical: den monic, gcd(num,den)=1
class RatFun {
public:
  RatFun() = default;
  explicit RatFun(Poly num, Poly den);

  static RatFun zero(const CycPtr& F);
  static RatFun of(const Scalar& s);
  static RatFun monomial(const Scalar& s, long k); // s X^k, k may be negative

  bool is_zero() const { return num_.is_zero(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  RatFun operator+(const RatFun& o) const;
  RatFun operator-(const RatFun& o) const;
  RatFun operator-() const;
  RatFun operator*(const RatFun& o) const;
  RatFun operator/(const RatFun& o) const;
  RatFun scaled(const Scalar& s) const;
  RatFun pow(long k) const;

  RatFun& operator+=(const RatFun& o) { *this = *this + o; return *this; }
  RatFun& operator*=(const RatFun& o) { *this = *this * o; return *this; }

  bool operator==(const RatFun& o) const;
  bool operator!=(const RatFun& o) const { return !(*this == o); }

  Scalar eval(const Scalar& x) const;
  std::complex<double> embed(double sqrtp, std::complex<double> x) const;
  std::string str() const;

  // degree of numerator minus degree of denominator
  long degree_gap() const { return num_.deg() - den_.deg(); }

private:
  Poly num_, den_; // den_ nonzero monic after normalize
  void normalize();
};

// sum_{n >= n0} r^n = r^{n0} / (1 - r); pole_error if r == 1
RatFun geometric_tail(const RatFun& r, long n0);

} // namespace urs

#endif
