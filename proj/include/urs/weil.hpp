#ifndef URS_WEIL_HPP
#define URS_WEIL_HPP

#include "urs/characters.hpp"
#include "urs/tate.hpp"

namespace urs {

// finitely supported value table on p_E^{-M} / p_E^{L}: vanishes outside
// p_E^{-M}, constant on cosets of p_E^{L}
class SchwartzFn {
public:
  SchwartzFn(Session s, long M, long L);

  static SchwartzFn indicator_ball(const Session& s, long m); // 1_{p_E^m}
  static SchwartzFn indicator_cell(const Session& s, long M, long L,
                                   std::int64_t w1, std::int64_t w2);

  long support_exp() const { return M_; }
  long level_exp() const { return L_; }
  const Session& session() const { return s_; }

  Scalar eval(const ResElt& x) const;
  ResElt cell_rep(std::int64_t w1, std::int64_t w2) const;
  Scalar& cell(std::int64_t w1, std::int64_t w2);
  const Scalar& cell(std::int64_t w1, std::int64_t w2) const;
  std::int64_t side() const { return side_; } // cells indexed by [0,side)^2

  SchwartzFn refined(long newM, long newL) const;
  SchwartzFn scaled(const Scalar& c) const;
  bool equal_as_function(const SchwartzFn& o) const;
  bool is_zero_function() const;

private:
  Session s_;
  long M_, L_;
  std::int64_t side_; // p^(M+L)
  std::vector<Scalar> tab_;
};

// self-dual Fourier transform with kernel psi^sign(sigma(x) xi)
SchwartzFn fourier(const SchwartzFn& phi, int sign);

// the Weil representation omega_{psi^eps, Upsilon^eps} of U_2 acting on S(E)
class WeilRep {
public:
  WeilRep(Session s, MultChar upsilon, int eps);

  const Session& session() const { return s_; }
  int eps() const { return eps_; }
  const MultChar& upsilon() const { return ups_; }

  // generator actions (2.1)-(2.3)
  SchwartzFn act_diag(const ResElt& a, const SchwartzFn& phi) const;
  SchwartzFn act_unip(const ResElt& x, const SchwartzFn& phi) const; // x in F
  SchwartzFn act_weyl(const SchwartzFn& phi) const;

  // action of b = [[a,0],[abar^-1 c, abar^-1]] via the generator word
  // diag(-a,.) w n(-c) w
  SchwartzFn act_bminus_generators(const ResElt& a, const ResElt& c,
                                   const SchwartzFn& phi) const;

  // closed double-integral form of the same action, evaluated at x
  Scalar bminus_closed(const ResElt& a, const ResElt& c, const SchwartzFn& phi,
                       const ResElt& x, const SchwartzFn* inner_cache = nullptr) const;

  SchwartzFn inner_transform(const SchwartzFn& phi) const; // cacheable

private:
  Session s_;
  MultChar ups_;
  int eps_;
};

// both paths for b; throws verification_error on disagreement beyond an
// overall scalar, returns the (expected trivial) constant otherwise
Scalar weil_consistency_bminus(const WeilRep& w, const ResElt& a, const ResElt& c,
                               const SchwartzFn& phi, long probe_M, long probe_L);

} // namespace urs

#endif
