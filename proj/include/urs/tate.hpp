#ifndef URS_TATE_HPP
#define URS_TATE_HPP

#include "urs/characters.hpp"

namespace urs {

struct verification_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// affine exponent a*s + b for |.|_F^(a s + b); q_F^{-s} = X
struct Shift {
  long a = 0, b = 0;
  Shift dual() const { return {-a, 1 - b}; } // s' -> 1 - s'
};

// X^xpow * S^s_half as a rational function
RatFun qs_power(const Session& s, long xpow, long s_half);

// z(chi, shift) = int_{F^x} chi(y) psi_F(y) |y|_F^(a s + b) dy  (dy self-dual)
// finite shells for v <= 0 plus a geometric tail; shells v <= -1 are computed
// and asserted to vanish by character orthogonality
RatFun z_integral(const AddChar& psiF, const MultChar& chi, Shift shift);

// Tate local factors for the tame character chi|_{F^x}, level-one psi_F:
//   L(s',chi) = 1/(1 - chi(pi) q^{-s'}) unramified, 1 ramified
//   eps(s',chi,psi_F) = chi(pi)^{-1} q^{s'-1/2} unramified,
//                       q^{-1/2} G(psi_F, chi^{-1}) ramified
//   gamma = eps * L(1-s', chi^{-1}) / L(s', chi)
RatFun L_factor(const Session& s, const MultChar& chi, Shift shift);
RatFun eps_factor(const AddChar& psiF, const MultChar& chi, Shift shift);
RatFun gamma_closed(const AddChar& psiF, const MultChar& chi, Shift shift);

// C(s,tau,psi) = tau(-1) gamma(2s-1, tau|_F, psi_F); computed two ways
// (closed form and the inverse z-integral identity) and cross-checked
RatFun local_coefficient(const AddChar& psiF, const MultChar& tau);

struct LocalFactorReport {
  std::string character;
  RatFun L, eps, gamma, z;
  bool agree = false;
};

LocalFactorReport local_factor_report(const AddChar& psiF, const MultChar& chi);

} // namespace urs

#endif
