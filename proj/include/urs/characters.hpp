#ifndef URS_CHARACTERS_HPP
#define URS_CHARACTERS_HPP

#include "urs/localfield.hpp"
#include "urs/ratfun.hpp"

namespace urs {

struct character_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Shared per-run state: the truncated fields plus the coefficient field.
struct Session {
  FieldPtr fld;
  CycPtr cyc;
  long psi_depth; // psi_F can be evaluated on v(x) >= 1 - psi_depth

  static Session make(long p, long N, long psi_depth, long extra_order = 4);

  ResElt pi() const { return ResElt::make(fld, 1, 1, 0); }
  ResElt one() const { return ResElt::from_int(fld, 1); }
  ResElt half() const; // exact 1/2; valuation -1 when p = 2
  Scalar sc_one() const { return Scalar::one(cyc); }
  Scalar sc_int(long v) const { return Scalar::of_int(cyc, v); }
};

// level-one additive character of F: x -> e(frac(x/p)); on E via the trace
class AddChar {
public:
  AddChar(Session s, bool on_E) : s_(std::move(s)), on_E_(on_E) {}

  // psi_F(x) for x in F; psi(x) = psi_F(tr x) for x in E
  Scalar eval(const ResElt& x) const;
  Scalar eval_inv(const ResElt& x) const; // psi^{-1}(x)
  bool on_E() const { return on_E_; }
  const Session& session() const { return s_; }

private:
  Session s_;
  bool on_E_;
  Scalar eval_F(const ResElt& x) const;
};

// tamely ramified character of E^x: determined by a character of k_E^x
// (index j on a fixed generator) and the value at the uniformizer
class MultChar {
public:
  MultChar(Session s, long residue_exp, long unif_order, long unif_exp);

  Scalar eval(const ResElt& x) const; // x != 0
  // character data
  long residue_exp() const { return j_; }
  long unif_order() const { return t_order_; }
  long unif_exp() const { return t_exp_; }
  Scalar unif_value() const; // tau(pi)

  MultChar inverse() const;
  MultChar times(const MultChar& o) const;
  MultChar star() const;       // tau*(a) = tau(sigma(a)^-1)
  bool restriction_to_F_unramified() const; // trivial on O_F^x
  Scalar value_at_minus_one_F() const;      // tau(-1), -1 in F
  const Session& session() const { return s_; }

private:
  Session s_;
  long j_;        // exponent mod q^2-1 on the residue generator
  long t_order_, t_exp_;
};

// character of k_E^1 = ker(N: k_E^x -> k_F^x), cyclic of order q+1
class NormOneChar {
public:
  NormOneChar(Session s, long exp);

  // evaluate at a unit whose residue has norm 1
  Scalar eval(const ResElt& z) const;
  Scalar at_minus_one() const;
  long exponent() const { return m_; }
  const Session& session() const { return s_; }

private:
  Session s_;
  long m_; // mod q+1
};

// G(psi_F, chi) = sum over u in k_F^x of psi_F(u) chi(u)
Scalar gauss_sum(const AddChar& psiF, const MultChar& chi);

// tame extension of omega_{E/F}: Upsilon(pi) = -1, trivial on O_F^x Teichmuller
MultChar make_upsilon(const Session& s, long choice);

} // namespace urs

#endif
