#include "urs/characters.hpp"

#include <map>
#include <tuple>

namespace urs {

Session Session::make(long p, long N, long psi_depth, long extra_order) {
  // immutable per-parameter state, shared across a process
  static std::map<std::tuple<long, long, long, long>, Session> cache;
  auto key = std::make_tuple(p, N, psi_depth, extra_order);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  Session s;
  s.fld = std::make_shared<FieldCtx>(FieldCtx::make_default(p, N));
  long n = session_cyclotomic_order(p, psi_depth, extra_order);
  s.cyc = std::make_shared<CycField>(n, p);
  s.psi_depth = psi_depth;
  cache.emplace(key, s);
  return s;
}

ResElt Session::half() const {
  return ResElt::from_int(fld, 2).inv();
}

Scalar AddChar::eval_F(const ResElt& x) const {
  if (x.is_exact_zero()) return Scalar::one(s_.cyc);
  if (!x.lies_in_F()) throw character_error("psi_F on a non-F element");
  if (x.val_at_least(1)) return Scalar::one(s_.cyc);
  long v = x.val();
  long m = -v; // x = pi^v u, v <= 0 here
  if (m + 1 > s_.psi_depth)
    throw precision_error("psi_F argument below the session window");
  // psi_F(x) = e(frac(x/p)) = zeta_{p^{m+1}}^{u mod p^{m+1}}
  std::int64_t mod = 1;
  for (long i = 0; i < m + 1; ++i) mod *= s_.fld->p;
  if (x.relw() < m + 1) throw precision_error("psi_F argument too coarse");
  std::int64_t u = x.u1() % mod;
  return Scalar::root_of_unity(s_.cyc, mod, long(u));
}

Scalar AddChar::eval(const ResElt& x) const {
  if (!on_E_) return eval_F(x);
  return eval_F(x.trace());
}

Scalar AddChar::eval_inv(const ResElt& x) const {
  if (x.is_exact_zero()) return Scalar::one(s_.cyc);
  return eval(-x);
}

MultChar::MultChar(Session s, long residue_exp, long unif_order, long unif_exp)
    : s_(std::move(s)), t_order_(unif_order), t_exp_(unif_exp) {
  long q2m1 = s_.fld->p * s_.fld->p - 1;
  j_ = ((residue_exp % q2m1) + q2m1) % q2m1;
  if (unif_order <= 0 || s_.cyc->order() % unif_order != 0)
    throw character_error("tau(pi) order must divide the session order");
}

Scalar MultChar::unif_value() const {
  return Scalar::root_of_unity(s_.cyc, t_order_, t_exp_);
}

Scalar MultChar::eval(const ResElt& x) const {
  if (x.is_exact_zero()) throw character_error("multiplicative character at 0");
  long v = x.val();
  if (x.relw() < 1) throw precision_error("unit residue unknown");
  long p = s_.fld->p;
  long idx = s_.fld->res_index(((x.u1() % p) + p) % p, ((x.u2() % p) + p) % p);
  long d = s_.fld->dlog(idx);
  long q2m1 = p * p - 1;
  Scalar res = Scalar::root_of_unity(s_.cyc, q2m1, j_ * d);
  if (v == 0) return res;
  return res * Scalar::root_of_unity(s_.cyc, t_order_, t_exp_ * v);
}

MultChar MultChar::inverse() const { return MultChar(s_, -j_, t_order_, -t_exp_); }

MultChar MultChar::times(const MultChar& o) const {
  long lo = lcm_long(t_order_, o.t_order_);
  long e = t_exp_ * (lo / t_order_) + o.t_exp_ * (lo / o.t_order_);
  return MultChar(s_, j_ + o.j_, lo, e);
}

MultChar MultChar::star() const {
  // tau*(a) = tau(a*) with a* = sigma(a)^{-1}; on residues sigma = Frobenius
  // t -> t^q, and sigma(pi) = pi, so tau* has exponent -j*q and t -> t^{-1}
  long q = s_.fld->p;
  return MultChar(s_, -j_ * q, t_order_, -t_exp_);
}

bool MultChar::restriction_to_F_unramified() const {
  long q = s_.fld->p;
  long q2m1 = q * q - 1;
  // trivial on Teichmuller lifts of k_F^x = <g^(q+1)>
  return (j_ * (q + 1)) % q2m1 == 0;
}

Scalar MultChar::value_at_minus_one_F() const {
  return eval(ResElt::from_int(s_.fld, -1));
}

NormOneChar::NormOneChar(Session s, long exp) : s_(std::move(s)) {
  long qp1 = s_.fld->p + 1;
  m_ = ((exp % qp1) + qp1) % qp1;
}

Scalar NormOneChar::eval(const ResElt& z) const {
  long p = s_.fld->p;
  if (z.val() != 0) throw character_error("norm-one character at non-unit");
  long idx = s_.fld->res_index(((z.u1() % p) + p) % p, ((z.u2() % p) + p) % p);
  long d = s_.fld->dlog(idx);
  long q2m1 = p * p - 1;
  if ((d * (p + 1)) % q2m1 != 0)
    throw character_error("residue is not norm-one");
  // z = g^d with d = k(q-1); omega^1(z) = zeta_{q+1}^(m k)
  long k = d / (p - 1);
  return Scalar::root_of_unity(s_.cyc, p + 1, m_ * k);
}

Scalar NormOneChar::at_minus_one() const {
  return eval(ResElt::from_int(s_.fld, -1));
}

Scalar gauss_sum(const AddChar& psiF, const MultChar& chi) {
  const Session& s = psiF.session();
  Scalar acc = Scalar::zero(s.cyc);
  for (long a = 1; a < s.fld->p; ++a) {
    ResElt u = ResElt::from_int(s.fld, a);
    ResElt t = u.teichmuller().first;
    acc += psiF.eval(t) * chi.eval(t);
  }
  return acc;
}

MultChar make_upsilon(const Session& s, long choice) {
  long q = s.fld->p;
  if (choice < 0 || choice > q)
    throw character_error("upsilon choice out of range (0..q)");
  MultChar u(s, choice * (q - 1), 2, 1); // Upsilon(pi) = -1
  if (!u.restriction_to_F_unramified())
    throw character_error("upsilon residue character not trivial on k_F^x");
  // sanity: Upsilon(-1) = 1 and Upsilon(u) = 1 on F-Teichmuller units
  if (!u.value_at_minus_one_F().is_one())
    throw character_error("upsilon(-1) != 1");
  for (long a = 1; a < q; ++a) {
    ResElt t = ResElt::from_int(s.fld, a).teichmuller().first;
    if (!u.eval(t).is_one()) throw character_error("upsilon not trivial on O_F^x");
  }
  return u;
}

} // namespace urs
