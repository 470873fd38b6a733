#ifndef URS_CYCLOTOMIC_HPP
#define URS_CYCLOTOMIC_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>
#include <complex>

#include <boost/multiprecision/cpp_int.hpp>

namespace urs {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

struct scalar_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Q(zeta_n), power basis modulo the n-th cyclotomic polynomial, plus a
// formal symbol S with S^2 = p.  The order n is fixed per session and must
// be divisible by every root-of-unity order the run needs.
class CycField {
public:
  CycField(long n, long p);

  long order() const { return n_; }
  long degree() const { return phi_; }
  long prime() const { return p_; }

  // canonical coordinates of zeta_n^k, k taken mod n
  const std::vector<Rat>& zeta_pow(long k) const;
  // x^j mod Phi_n for j in [0, 2*phi-2]
  const std::vector<Rat>& reduce_pow(long j) const;
  const std::vector<Rat>& cyclo() const { return cyclo_; }

private:
  long n_, phi_, p_;
  std::vector<Rat> cyclo_;                     // Phi_n, monic, degree phi_
  std::vector<std::vector<Rat>> pow_;          // x^j mod Phi_n, j < 2*phi-1
  std::vector<std::vector<Rat>> zeta_;         // zeta^k canonical, k < n
};

using CycPtr = std::shared_ptr<const CycField>;

// Element of Q(zeta_n) + S*Q(zeta_n), S^2 = p.  Always kept in canonical
// form, so equality is coordinate-wise.
class Scalar {
public:
  Scalar() = default;
  explicit Scalar(CycPtr F);

  static Scalar zero(CycPtr F) { return Scalar(std::move(F)); }
  static Scalar one(CycPtr F);
  static Scalar of_rat(CycPtr F, const Rat& r);
  static Scalar of_int(CycPtr F, long v) { return of_rat(F, Rat(v)); }
  // zeta_m^k; m must divide the session order
  static Scalar root_of_unity(CycPtr F, long m, long k);
  // S^j, j may be negative (S^-1 = S/p)
  static Scalar sqrt_q_pow(CycPtr F, long j);

  const CycPtr& field() const { return F_; }
  bool is_zero() const;
  bool is_one() const;
  bool is_rational(Rat* out = nullptr) const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator-() const;
  Scalar operator*(const Scalar& o) const;
  Scalar inv() const;              // throws scalar_error on 0 / zero divisor
  Scalar galois_minus() const;     // zeta -> zeta^-1, S fixed (debug aid)

  Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
  Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::complex<double> embed(double sqrtp) const;
  std::string str() const;

  // raw canonical coordinates (even + S*odd over the power basis)
  const std::vector<Rat>& even() const { return ev_; }
  const std::vector<Rat>& odd() const { return od_; }

private:
  CycPtr F_;
  std::vector<Rat> ev_, od_;

  static void add_into(std::vector<Rat>& a, const std::vector<Rat>& b, bool sub);
  std::vector<Rat> mul_vec(const std::vector<Rat>& a, const std::vector<Rat>& b) const;
  friend class CycField;
};

// lcm helper for session order computation
long lcm_long(long a, long b);

// session order: lcm(4, p^K, p^2-1, extra (e.g. ord tau(piF)))
long session_cyclotomic_order(long p, long psi_depth, long extra);

} // namespace urs

#endif
