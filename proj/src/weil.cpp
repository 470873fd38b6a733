#include "urs/weil.hpp"

#include <optional>

namespace urs {

namespace {
std::int64_t ipow(long p, long e) {
  std::int64_t r = 1;
  for (long i = 0; i < e; ++i) r *= p;
  return r;
}
} // namespace

SchwartzFn::SchwartzFn(Session s, long M, long L) : s_(std::move(s)), M_(M), L_(L) {
  if (M + L < 0) throw field_error("SchwartzFn: M + L must be >= 0");
  if (M + L > s_.fld->N) throw precision_error("SchwartzFn: M + L exceeds precision budget");
  side_ = ipow(s_.fld->p, M + L);
  if (side_ * side_ > (1 << 22)) throw precision_error("SchwartzFn table too large");
  tab_.assign(side_ * side_, Scalar::zero(s_.cyc));
}

SchwartzFn SchwartzFn::indicator_ball(const Session& s, long m) {
  SchwartzFn f(s, -m, m);
  f.tab_[0] = Scalar::one(s.cyc);
  return f;
}

SchwartzFn SchwartzFn::indicator_cell(const Session& s, long M, long L,
                                      std::int64_t w1, std::int64_t w2) {
  SchwartzFn f(s, M, L);
  f.cell(w1, w2) = Scalar::one(s.cyc);
  return f;
}

ResElt SchwartzFn::cell_rep(std::int64_t w1, std::int64_t w2) const {
  if ((w1 % side_) == 0 && (w2 % side_) == 0) return ResElt::zero(s_.fld);
  return ResElt::make(s_.fld, -M_, w1, w2);
}

Scalar& SchwartzFn::cell(std::int64_t w1, std::int64_t w2) {
  return tab_[(w1 % side_) * side_ + (w2 % side_)];
}

const Scalar& SchwartzFn::cell(std::int64_t w1, std::int64_t w2) const {
  return tab_[(w1 % side_) * side_ + (w2 % side_)];
}

Scalar SchwartzFn::eval(const ResElt& x) const {
  if (x.is_exact_zero()) return tab_[0];
  if (!x.val_at_least(-M_)) return Scalar::zero(s_.cyc);
  if (x.val_at_least(L_)) return tab_[0]; // x in p^L: the zero cell
  if (x.known_bound() < L_)
    throw precision_error("SchwartzFn::eval: element too coarse for the level");
  long v = x.val();
  // class of pi^M x in O/p^(M+L)
  std::int64_t sh = ipow(s_.fld->p, v + M_);
  std::int64_t w1 = (x.u1() * sh) % side_;
  std::int64_t w2 = (x.u2() * sh) % side_;
  return tab_[w1 * side_ + w2];
}

SchwartzFn SchwartzFn::refined(long newM, long newL) const {
  if (newM < M_ || newL < L_) throw field_error("refined: geometry must grow");
  SchwartzFn out(s_, newM, newL);
  for (std::int64_t a = 0; a < out.side_; ++a)
    for (std::int64_t b = 0; b < out.side_; ++b)
      out.tab_[a * out.side_ + b] = eval(out.cell_rep(a, b));
  return out;
}

SchwartzFn SchwartzFn::scaled(const Scalar& c) const {
  SchwartzFn out = *this;
  for (Scalar& v : out.tab_) if (!v.is_zero()) v = v * c;
  return out;
}

bool SchwartzFn::equal_as_function(const SchwartzFn& o) const {
  long M = std::max(M_, o.M_), L = std::max(L_, o.L_);
  SchwartzFn a = refined(M, L), b = o.refined(M, L);
  for (std::int64_t i = 0; i < a.side_ * a.side_; ++i)
    if (!(a.tab_[i] == b.tab_[i])) return false;
  return true;
}

bool SchwartzFn::is_zero_function() const {
  for (const Scalar& v : tab_)
    if (!v.is_zero()) return false;
  return true;
}

SchwartzFn fourier(const SchwartzFn& phi, int sign) {
  const Session& s = phi.session();
  long M = phi.support_exp(), L = phi.level_exp();
  AddChar psi(s, true);
  SchwartzFn out(s, L - 1, M + 1);
  Scalar volcell = vol_add_E(s.cyc, L);
  std::int64_t side = phi.side();
  for (std::int64_t a = 0; a < out.side(); ++a)
    for (std::int64_t b = 0; b < out.side(); ++b) {
      ResElt xi = out.cell_rep(a, b);
      Scalar acc = Scalar::zero(s.cyc);
      for (std::int64_t w1 = 0; w1 < side; ++w1)
        for (std::int64_t w2 = 0; w2 < side; ++w2) {
          const Scalar& v = phi.cell(w1, w2);
          if (v.is_zero()) continue;
          ResElt x = phi.cell_rep(w1, w2);
          ResElt arg = x.sigma() * xi;
          Scalar k = (sign >= 0) ? psi.eval(arg) : psi.eval_inv(arg);
          acc += v * k;
        }
      out.cell(a, b) = acc * volcell;
    }
  return out;
}

WeilRep::WeilRep(Session s, MultChar upsilon, int eps)
    : s_(std::move(s)), ups_(std::move(upsilon)), eps_(eps) {}

SchwartzFn WeilRep::act_diag(const ResElt& a, const SchwartzFn& phi) const {
  long va = a.val();
  Scalar pref = (eps_ >= 0 ? ups_.eval(a) : ups_.eval(a).inv());
  // |a|_E^{1/2} = q^{-v(a)}
  Rat absa(1);
  for (long i = 0; i < std::abs(va); ++i)
    if (va > 0) absa /= s_.fld->p; else absa *= s_.fld->p;
  pref = pref * Scalar::of_rat(s_.cyc, absa);
  SchwartzFn out(s_, phi.support_exp() + va, phi.level_exp() - va);
  for (std::int64_t w1 = 0; w1 < out.side(); ++w1)
    for (std::int64_t w2 = 0; w2 < out.side(); ++w2) {
      ResElt xi = out.cell_rep(w1, w2);
      Scalar v = phi.eval(xi * a);
      if (!v.is_zero()) out.cell(w1, w2) = v * pref;
    }
  return out;
}

SchwartzFn WeilRep::act_unip(const ResElt& x, const SchwartzFn& phi) const {
  if (x.is_exact_zero()) return phi;
  if (!x.lies_in_F()) throw field_error("unipotent parameter must be Galois-fixed");
  long vx = x.val();
  long M = phi.support_exp(), L = phi.level_exp();
  // level L' making psi_F^eps(x N(xi)) constant on cells:
  // v(x) + min(L'-M, 2L') >= 1
  auto ceil2 = [](long a) { return a > 0 ? (a + 1) / 2 : 0; };
  long Lp = std::max({L, 1 - vx + M, ceil2(1 - vx)});
  SchwartzFn out = phi.refined(M, Lp);
  AddChar psi(s_, true);
  ResElt half = s_.half();
  for (std::int64_t w1 = 0; w1 < out.side(); ++w1)
    for (std::int64_t w2 = 0; w2 < out.side(); ++w2) {
      Scalar& v = out.cell(w1, w2);
      if (v.is_zero()) continue;
      ResElt xi = out.cell_rep(w1, w2);
      if (xi.is_exact_zero()) continue; // kernel is 1 at xi = 0
      ResElt arg = half * x * xi.norm();
      Scalar k = (eps_ >= 0) ? psi.eval(arg) : psi.eval_inv(arg);
      v = v * k;
    }
  return out;
}

SchwartzFn WeilRep::act_weyl(const SchwartzFn& phi) const { return fourier(phi, eps_); }

SchwartzFn WeilRep::act_bminus_generators(const ResElt& a, const ResElt& c,
                                          const SchwartzFn& phi) const {
  // b = diag(-a, -sigma(a)^-1) . w . n(-c) . w
  SchwartzFn f1 = act_weyl(phi);
  SchwartzFn f2 = c.is_exact_zero() ? f1 : act_unip(-c, f1);
  SchwartzFn f3 = act_weyl(f2);
  return act_diag(-a, f3);
}

SchwartzFn WeilRep::inner_transform(const SchwartzFn& phi) const {
  return fourier(phi, eps_);
}

Scalar WeilRep::bminus_closed(const ResElt& a, const ResElt& c, const SchwartzFn& phi,
                              const ResElt& x, const SchwartzFn* inner_cache) const {
  SchwartzFn inner = inner_cache ? *inner_cache : inner_transform(phi);
  long Mi = inner.support_exp(), Li = inner.level_exp();
  // refine so both kernels are constant on y-cells
  auto ceil2 = [](long a) { return a > 0 ? (a + 1) / 2 : 0; };
  long Lp = Li;
  if (!c.is_exact_zero()) {
    long vc = c.val();
    Lp = std::max(Lp, 1 - vc + Mi);
    Lp = std::max(Lp, ceil2(1 - vc));
  }
  if (!x.is_exact_zero() && !a.is_exact_zero()) {
    long vax = a.val() + x.val();
    Lp = std::max(Lp, 1 - vax);
  }
  const SchwartzFn* yp = &inner;
  std::optional<SchwartzFn> store;
  if (Lp > Li) {
    store.emplace(inner.refined(Mi, Lp));
    yp = &*store;
  } else {
    Lp = Li;
  }
  const SchwartzFn& yfun = *yp;
  AddChar psi(s_, true);
  AddChar psiF(s_, false);
  Scalar volcell = vol_add_E(s_.cyc, Lp);
  Scalar acc = Scalar::zero(s_.cyc);
  for (std::int64_t w1 = 0; w1 < yfun.side(); ++w1)
    for (std::int64_t w2 = 0; w2 < yfun.side(); ++w2) {
      const Scalar& v = yfun.cell(w1, w2);
      if (v.is_zero()) continue;
      ResElt y = yfun.cell_rep(w1, w2);
      Scalar k = Scalar::one(s_.cyc);
      if (!c.is_exact_zero() && !y.is_exact_zero()) {
        // psi^eps(-(1/2) c N(y)) = psi_F^{-eps}(c N(y))
        ResElt arg = c * y.norm();
        k = k * ((eps_ >= 0) ? psiF.eval_inv(arg) : psiF.eval(arg));
      }
      if (!x.is_exact_zero() && !y.is_exact_zero()) {
        // psi^eps(sigma(y) . (-a x))
        ResElt arg = y.sigma() * a * x;
        k = k * ((eps_ >= 0) ? psi.eval_inv(arg) : psi.eval(arg));
      }
      acc += v * k;
    }
  acc = acc * volcell;
  // prefactor Upsilon^eps(-a) |a|_E^(1/2)
  Scalar pref = (eps_ >= 0) ? ups_.eval(-a) : ups_.eval(-a).inv();
  Rat absa(1);
  long va = a.val();
  for (long i = 0; i < std::abs(va); ++i)
    if (va > 0) absa /= s_.fld->p; else absa *= s_.fld->p;
  return acc * pref * Scalar::of_rat(s_.cyc, absa);
}

Scalar weil_consistency_bminus(const WeilRep& w, const ResElt& a, const ResElt& c,
                               const SchwartzFn& phi, long probe_M, long probe_L) {
  const Session& s = w.session();
  SchwartzFn gen = w.act_bminus_generators(a, c, phi);
  SchwartzFn inner = w.inner_transform(phi);
  {
    // pre-refine once for the deepest probe point, so the closed-form
    // evaluations below never rebuild the y-table
    auto ceil2 = [](long t) { return t > 0 ? (t + 1) / 2 : 0; };
    long Mi = inner.support_exp(), Lp = inner.level_exp();
    if (!c.is_exact_zero()) {
      Lp = std::max(Lp, 1 - c.val() + Mi);
      Lp = std::max(Lp, ceil2(1 - c.val()));
    }
    if (!a.is_exact_zero()) Lp = std::max(Lp, 1 - a.val() + probe_M);
    if (Lp > inner.level_exp()) inner = inner.refined(Mi, Lp);
  }
  Scalar lhs0 = Scalar::zero(s.cyc), rhs0 = Scalar::zero(s.cyc);
  bool ratio_set = false;
  SchwartzFn probe(s, probe_M, probe_L);
  for (std::int64_t w1 = 0; w1 < probe.side(); ++w1)
    for (std::int64_t w2 = 0; w2 < probe.side(); ++w2) {
      ResElt x = probe.cell_rep(w1, w2);
      Scalar lhs = w.bminus_closed(a, c, phi, x, &inner);
      Scalar rhs = gen.eval(x);
      if (lhs.is_zero() != rhs.is_zero())
        throw verification_error("weil b-action: support mismatch between paths");
      if (lhs.is_zero()) continue;
      if (!ratio_set) { lhs0 = lhs; rhs0 = rhs; ratio_set = true; }
      else if (!(lhs * rhs0 == rhs * lhs0)) // constant-ratio check without division
        throw verification_error("weil b-action: non-constant discrepancy");
    }
  if (!ratio_set) return Scalar::one(s.cyc);
  return lhs0 * rhs0.inv(); // expected 1; reported otherwise
}

} // namespace urs
