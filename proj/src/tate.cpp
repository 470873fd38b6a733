#include "urs/tate.hpp"

namespace urs {

RatFun qs_power(const Session& s, long xpow, long s_half) {
  return RatFun::monomial(Scalar::sqrt_q_pow(s.cyc, s_half), xpow);
}

namespace {

// shell v of the z-integrand, computed honestly at unit depth `depth`
RatFun z_shell(const AddChar& psiF, const MultChar& chi, Shift sh, long v, long depth) {
  const Session& s = psiF.session();
  Scalar acc = Scalar::zero(s.cyc);
  for (const ShellRep& r : shell_reps(s.fld, s.cyc, v, v, depth, true))
    acc += chi.eval(r.rep) * psiF.eval(r.rep) * r.volume;
  if (acc.is_zero()) return RatFun::zero(s.cyc);
  // |y|^(a s + b) on the shell: X^(v a) q^(-v b)
  return qs_power(s, v * sh.a, -2 * v * sh.b).scaled(acc);
}

} // namespace

RatFun z_integral(const AddChar& psiF, const MultChar& chi, Shift sh) {
  if (sh.a == 0) throw verification_error("z_integral needs a nonconstant exponent");
  const Session& s = psiF.session();
  RatFun total = RatFun::zero(s.cyc);

  // shells v <= -1 vanish by orthogonality against psi_F; prove it per run
  for (long v = -2; v <= -1; ++v) {
    RatFun shell = z_shell(psiF, chi, sh, v, -v + 1);
    if (!shell.is_zero())
      throw verification_error("z_integral: negative shell failed to vanish");
  }

  // v = 0: the Gauss-sum shell
  total += z_shell(psiF, chi, sh, 0, 1);

  bool unram = chi.restriction_to_F_unramified();
  Scalar volOx = vol_add_F(s.cyc, 0) - vol_add_F(s.cyc, 1); // vol(O_F^x)
  if (!unram) {
    // each positive shell vanishes; check the first one
    RatFun shell = z_shell(psiF, chi, sh, 1, 1);
    if (!shell.is_zero())
      throw verification_error("z_integral: ramified tail shell nonzero");
    return total;
  }
  // unramified tail: sum_{v>=1} (chi(pi) q^{-b-1} X^a)^v vol(O_F^x)
  RatFun ratio = qs_power(s, sh.a, -2 * (sh.b + 1)).scaled(chi.unif_value());
  RatFun tail = geometric_tail(ratio, 1).scaled(volOx);
  // the closed tail must reproduce the honest first shells
  for (long v = 1; v <= 2; ++v) {
    RatFun honest = z_shell(psiF, chi, sh, v, 1);
    if (honest != ratio.pow(v).scaled(volOx))
      throw verification_error("z_integral: tail mismatch at shell " + std::to_string(v));
  }
  return total + tail;
}

RatFun L_factor(const Session& s, const MultChar& chi, Shift sh) {
  RatFun one = RatFun::of(Scalar::one(s.cyc));
  if (!chi.restriction_to_F_unramified()) return one;
  RatFun qs = qs_power(s, sh.a, -2 * sh.b).scaled(chi.unif_value()); // chi(pi) q^{-s'}
  return one / (one - qs);
}

RatFun eps_factor(const AddChar& psiF, const MultChar& chi, Shift sh) {
  const Session& s = psiF.session();
  if (chi.restriction_to_F_unramified())
    return qs_power(s, -sh.a, 2 * sh.b - 1).scaled(chi.unif_value().inv());
  Scalar g = gauss_sum(psiF, chi.inverse());
  return RatFun::of(Scalar::sqrt_q_pow(s.cyc, -1) * g);
}

RatFun gamma_closed(const AddChar& psiF, const MultChar& chi, Shift sh) {
  const Session& s = psiF.session();
  RatFun L1 = L_factor(s, chi.inverse(), sh.dual());
  RatFun L0 = L_factor(s, chi, sh);
  return eps_factor(psiF, chi, sh) * L1 / L0;
}

RatFun local_coefficient(const AddChar& psiF, const MultChar& tau) {
  const Session& s = psiF.session();
  // C = tau(-1) gamma(2s-1, tau|_F, psi_F)
  RatFun C = gamma_closed(psiF, tau, Shift{2, -1}).scaled(tau.value_at_minus_one_F());
  // the proof identity: C^{-1} = int tau(y) psi_F(y) |y|^{2s-2} dy
  //                            = gamma(2-2s, tau|_F^{-1}, psi_F)
  RatFun zi = z_integral(psiF, tau, Shift{2, -2});
  RatFun gdual = gamma_closed(psiF, tau.inverse(), Shift{-2, 2});
  if (zi != gdual)
    throw verification_error("local coefficient: z-integral vs closed gamma mismatch");
  RatFun one = RatFun::of(Scalar::one(s.cyc));
  if (C * zi != one)
    throw verification_error("local coefficient: C * gamma(2-2s, tau^-1) != 1");
  return C;
}

LocalFactorReport local_factor_report(const AddChar& psiF, const MultChar& chi) {
  LocalFactorReport rep;
  rep.character = "j=" + std::to_string(chi.residue_exp()) + ", t=zeta_" +
                  std::to_string(chi.unif_order()) + "^" + std::to_string(chi.unif_exp());
  Shift sh{2, -2}; // the 2s-2 family used by the local coefficient
  rep.L = L_factor(psiF.session(), chi, sh);
  rep.eps = eps_factor(psiF, chi, sh);
  rep.gamma = gamma_closed(psiF, chi, sh);
  rep.z = z_integral(psiF, chi, sh);
  // z computes gamma(2-2s, chi^-1) by the Tate functional equation
  rep.agree = (rep.z == gamma_closed(psiF, chi.inverse(), Shift{-2, 2}));
  return rep;
}

} // namespace urs
