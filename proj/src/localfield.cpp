#include "urs/localfield.hpp"

#include <algorithm>
#include <sstream>

namespace urs {

namespace {

std::int64_t mod_pos(std::int64_t a, std::int64_t m) {
  a %= m;
  return a < 0 ? a + m : a;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t m) {
  std::int64_t t = 0, nt = 1, r = m, nr = mod_pos(a, m);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  if (r != 1) throw field_error("inv_mod: not invertible");
  return mod_pos(t, m);
}

long val_of_pair(std::int64_t a, std::int64_t b, long p, long cap) {
  long v = 0;
  while (v < cap && a % p == 0 && b % p == 0) {
    a /= p;
    b /= p;
    ++v;
  }
  return v;
}

} // namespace

FieldCtx::FieldCtx(long p_, long N_, long h1_, long h0_)
    : p(p_), N(N_), h1(h1_), h0(h0_) {
  if (N < 3) throw field_error("precision N must be >= 3");
  W = N + 5;
  pW = 1;
  for (long i = 0; i < W; ++i) {
    pW *= p;
    if (pW > (std::int64_t(1) << 31)) {
      // keep products inside int64
      if (p >= 5 && W > 11) throw field_error("precision too deep for p");
    }
  }
  // h must be irreducible mod p: no root in F_p
  for (long t = 0; t < p; ++t)
    if ((t * t + h1 * t + h0) % p == 0)
      throw field_error("h reducible mod p");
  build_tables();
}

FieldCtx FieldCtx::make_default(long p, long N) {
  if (p == 2) return FieldCtx(2, N, 1, 1);  // Y^2+Y+1
  if (p == 3) return FieldCtx(3, N, 0, 1);  // Y^2+1
  if (p == 5) return FieldCtx(5, N, 0, 2);  // Y^2+2
  throw field_error("unsupported residue characteristic");
}

std::int64_t FieldCtx::ppow(long k) const {
  std::int64_t r = 1;
  for (long i = 0; i < k; ++i) r *= p;
  return r;
}

void FieldCtx::build_tables() {
  long q2 = p * p;
  dlog_.assign(q2, -1);
  power_.assign(q2 - 1, {0, 0});
  // multiplication in F_{p^2}: (a+bY)(c+dY), Y^2 = -h1 Y - h0
  auto mul = [&](std::pair<long, long> x, std::pair<long, long> y) {
    long a = x.first, b = x.second, c = y.first, d = y.second;
    long bd = b * d % p;
    long re = mod_pos(a * c - bd * h0, p);
    long im = mod_pos(a * d + b * c - bd * h1, p);
    return std::pair<long, long>(re, im);
  };
  for (long a = 0; a < p; ++a)
    for (long b = 0; b < p; ++b) {
      if (a == 0 && b == 0) continue;
      std::pair<long, long> g{a, b}, acc{1, 0};
      bool prim = true;
      for (long e = 1; e < q2 - 1; ++e) {
        acc = mul(acc, g);
        if (acc.first == 1 && acc.second == 0) { prim = false; break; }
      }
      if (prim) {
        gen_idx_ = a * p + b;
        acc = {1, 0};
        for (long e = 0; e < q2 - 1; ++e) {
          power_[e] = acc;
          dlog_[acc.first * p + acc.second] = e;
          acc = mul(acc, g);
        }
        return;
      }
    }
  throw field_error("no generator found");
}

long FieldCtx::dlog(long idx) const {
  long d = dlog_[idx];
  if (d < 0) throw field_error("dlog of zero residue");
  return d;
}

std::pair<long, long> FieldCtx::res_of_dlog(long e) const {
  long m = long(power_.size());
  e = ((e % m) + m) % m;
  return power_[e];
}

ResElt ResElt::zero(FieldPtr c) {
  ResElt r;
  r.ctx_ = std::move(c);
  r.exact_zero_ = true;
  return r;
}

ResElt ResElt::make(FieldPtr c, long v, std::int64_t c1, std::int64_t c2) {
  ResElt r;
  r.ctx_ = std::move(c);
  r.v_ = v;
  r.relw_ = r.ctx_->W;
  r.c1_ = mod_pos(c1, r.ctx_->pW);
  r.c2_ = mod_pos(c2, r.ctx_->pW);
  r.exact_zero_ = false;
  r.normalize();
  return r;
}

ResElt ResElt::from_int(FieldPtr c, long long n) { return make(std::move(c), 0, n, 0); }

ResElt ResElt::unit_y(FieldPtr c) { return make(std::move(c), 0, 0, 1); }

void ResElt::normalize() {
  if (exact_zero_) return;
  if (c1_ == 0 && c2_ == 0) {
    // all unit coordinates vanished: only the bound v_ + relw_ survives
    capped_ = true;
    v_ = v_ + relw_;
    relw_ = 0;
    return;
  }
  long t = val_of_pair(c1_, c2_, ctx_->p, relw_);
  if (t > 0) {
    std::int64_t pt = ctx_->ppow(t);
    c1_ /= pt;
    c2_ /= pt;
    v_ += t;
    relw_ -= t;
  }
  std::int64_t m = ctx_->ppow(relw_);
  c1_ = mod_pos(c1_, m);
  c2_ = mod_pos(c2_, m);
}

bool ResElt::is_exact_zero() const { return exact_zero_; }

long ResElt::val() const {
  if (exact_zero_)
    throw precision_error("valuation of exact zero");
  if (capped_)
    throw precision_error("valuation not determined at this precision");
  return v_;
}

bool ResElt::val_at_least(long k) const {
  if (exact_zero_) return true;
  if (capped_) {
    if (v_ >= k) return true; // zero mod pi^v_, v_ >= k
    throw precision_error("valuation comparison beyond trusted window");
  }
  return v_ >= k;
}

long ResElt::known_bound() const {
  if (exact_zero_) return std::numeric_limits<long>::max();
  return v_ + relw_;
}

bool ResElt::lies_in_F() const {
  if (exact_zero_ || capped_) return true;
  return c2_ == 0;
}

ResElt ResElt::operator+(const ResElt& o) const {
  if (exact_zero_) return o;
  if (o.exact_zero_) return *this;
  long known = std::min(known_bound(), o.known_bound());
  long v0 = known;
  if (!capped_) v0 = std::min(v0, v_);
  if (!o.capped_) v0 = std::min(v0, o.v_);
  long rel = known - v0;
  if (rel <= 0) {
    ResElt r;
    r.ctx_ = ctx_;
    r.exact_zero_ = false;
    r.capped_ = true;
    r.v_ = known;
    r.relw_ = 0;
    return r;
  }
  std::int64_t m = ctx_->ppow(rel);
  auto lift = [&](const ResElt* x) -> std::pair<std::int64_t, std::int64_t> {
    if (x->capped_) return {0, 0};
    std::int64_t sh = ctx_->ppow(x->v_ - v0);
    return {mod_pos(x->c1_ * sh, m), mod_pos(x->c2_ * sh, m)};
  };
  auto [a1, a2] = lift(this);
  auto [b1, b2] = lift(&o);
  ResElt r;
  r.ctx_ = ctx_;
  r.exact_zero_ = false;
  r.v_ = v0;
  r.relw_ = rel;
  r.c1_ = mod_pos(a1 + b1, m);
  r.c2_ = mod_pos(a2 + b2, m);
  r.normalize();
  return r;
}

ResElt ResElt::operator-() const {
  if (exact_zero_ || capped_) return *this;
  ResElt r = *this;
  std::int64_t m = ctx_->ppow(relw_);
  r.c1_ = mod_pos(-c1_, m);
  r.c2_ = mod_pos(-c2_, m);
  return r;
}

ResElt ResElt::operator-(const ResElt& o) const { return *this + (-o); }

ResElt ResElt::operator*(const ResElt& o) const {
  if (exact_zero_ || o.exact_zero_) return zero(ctx_ ? ctx_ : o.ctx_);
  if (capped_ || o.capped_) {
    ResElt r;
    r.ctx_ = ctx_;
    r.exact_zero_ = false;
    r.capped_ = true;
    long va = capped_ ? v_ : v_;
    long vb = o.capped_ ? o.v_ : o.v_;
    r.v_ = va + vb; // 0 mod pi^(bound + other valuation)
    r.relw_ = 0;
    return r;
  }
  long rel = std::min(relw_, o.relw_);
  std::int64_t m = ctx_->ppow(rel);
  std::int64_t a = c1_ % m, b = c2_ % m, c = o.c1_ % m, d = o.c2_ % m;
  std::int64_t bd = b * d % m;
  std::int64_t re = mod_pos(a * c % m - bd * ctx_->h0 % m, m);
  std::int64_t im = mod_pos((a * d + b * c) % m - bd * ctx_->h1 % m, m);
  ResElt r;
  r.ctx_ = ctx_;
  r.exact_zero_ = false;
  r.v_ = v_ + o.v_;
  r.relw_ = rel;
  r.c1_ = re;
  r.c2_ = im;
  r.normalize();
  return r;
}

ResElt ResElt::inv() const {
  if (exact_zero_) throw field_error("inversion of zero");
  if (capped_) throw precision_error("inversion of capped zero");
  // (c1 + c2 Y)^-1 = sigma(x)/N(x) with N a unit of Z/p^relw
  std::int64_t m = ctx_->ppow(relw_);
  std::int64_t s1 = mod_pos(c1_ - c2_ * ctx_->h1, m);
  std::int64_t s2 = mod_pos(-c2_, m);
  // N = c1*s1 - h0*c2*s2 ... compute via mul of unit parts
  std::int64_t bd = c2_ % m * (s2 % m) % m;
  std::int64_t n = mod_pos(c1_ * s1 % m - bd * ctx_->h0 % m, m);
  // imaginary part of x*sigma(x) must vanish
  std::int64_t imn = mod_pos((c1_ * s2 + c2_ * s1) % m - bd * ctx_->h1 % m, m);
  if (imn != 0) throw field_error("internal: norm not rational");
  std::int64_t ninv = inv_mod(n, m);
  ResElt r;
  r.ctx_ = ctx_;
  r.exact_zero_ = false;
  r.v_ = -v_;
  r.relw_ = relw_;
  r.c1_ = mod_pos(s1 * ninv, m);
  r.c2_ = mod_pos(s2 * ninv, m);
  return r;
}

ResElt ResElt::sigma() const {
  if (exact_zero_ || capped_) return *this;
  // sigma(Y) = -h1 - Y (the other root of h), an exact ring automorphism
  std::int64_t m = ctx_->ppow(relw_);
  ResElt r = *this;
  r.c1_ = mod_pos(c1_ - c2_ * ctx_->h1, m);
  r.c2_ = mod_pos(-c2_, m);
  r.normalize();
  return r;
}

ResElt ResElt::norm() const { return *this * sigma(); }

ResElt ResElt::trace() const { return *this + sigma(); }

std::pair<ResElt, ResElt> ResElt::teichmuller() const {
  if (exact_zero_ || capped_ || v_ != 0)
    throw field_error("teichmuller of non-unit");
  // iterate u -> u^(p^2); converges to the Teichmuller representative
  ResElt t = *this;
  for (long i = 0; i < ctx_->W + 1; ++i) {
    ResElt s = t;
    for (long j = 0; j < 2; ++j) {
      ResElt acc = s;
      for (long k = 1; k < ctx_->p; ++k) acc = acc * s;
      s = acc;
    }
    t = s;
  }
  // m = u/t - 1 in p_E
  ResElt m = *this * t.inv() - from_int(ctx_, 1);
  return {t, m};
}

ResElt ResElt::shift(long k) const {
  if (exact_zero_) return *this;
  ResElt r = *this;
  r.v_ += k;
  return r;
}

bool ResElt::operator==(const ResElt& o) const {
  // equality in the truncated model: no nonzero digit in the common window
  ResElt d = *this - o;
  return d.exact_zero_ || d.capped_;
}

std::optional<ResElt> ResElt::f_part_mod_p() const {
  // f in F with (*this - f) in p_E, when the Y-coordinate allows it
  if (exact_zero_ || capped_) return ResElt::zero(ctx_);
  // x = pi^v (c1 + c2 Y): Y-part is pi^v c2 Y; need v + val(c2) >= 1
  long vc2 = relw_;
  if (c2_ != 0) {
    vc2 = 0;
    std::int64_t t = c2_;
    while (t % ctx_->p == 0) { t /= ctx_->p; ++vc2; }
  }
  if (v_ + vc2 < 1) return std::nullopt;
  return make(ctx_, v_, c1_, 0);
}

std::string ResElt::str() const {
  if (exact_zero_) return "0";
  std::ostringstream os;
  if (capped_) {
    os << "O(pi^" << v_ << ")";
    return os.str();
  }
  os << "pi^" << v_ << "*(" << c1_;
  if (c2_ != 0) os << "+" << c2_ << "Y";
  os << " mod p^" << relw_ << ")";
  return os.str();
}

std::vector<ShellRep> shell_reps(const FieldPtr& fld, const CycPtr& cyc,
                                 long vmin, long vmax, long depth, bool in_F) {
  if (depth < 1) throw field_error("shell depth must be >= 1");
  if (depth > fld->N) throw precision_error("shell depth exceeds precision window");
  std::vector<ShellRep> out;
  if (vmin > vmax) return out;
  long p = fld->p;
  std::int64_t pd = fld->ppow(depth);
  for (long v = vmin; v <= vmax; ++v) {
    Scalar vol = in_F ? vol_add_F(cyc, v + depth) : vol_add_E(cyc, v + depth);
    for (std::int64_t a = 0; a < pd; ++a) {
      if (in_F) {
        if (a % p == 0) continue;
        out.push_back({ResElt::make(fld, v, a, 0), vol});
      } else {
        for (std::int64_t b = 0; b < pd; ++b) {
          if (a % p == 0 && b % p == 0) continue;
          out.push_back({ResElt::make(fld, v, a, b), vol});
        }
      }
    }
  }
  return out;
}

Scalar vol_add_F(const CycPtr& cyc, long k) {
  // vol(p_F^k) = q^(1/2) * q^-k = S * p^-k
  Rat r(1);
  if (k >= 0)
    for (long i = 0; i < k; ++i) r /= cyc->prime();
  else
    for (long i = 0; i < -k; ++i) r *= cyc->prime();
  return Scalar::sqrt_q_pow(cyc, 1) * Scalar::of_rat(cyc, r);
}

Scalar vol_add_E(const CycPtr& cyc, long k) {
  // vol(p_E^k) = q_E^(1/2) q_E^-k = q^(1-2k)
  Rat r(cyc->prime());
  long e = 1 - 2 * k;
  Rat out(1);
  if (e >= 0)
    for (long i = 0; i < e; ++i) out *= r;
  else
    for (long i = 0; i < -e; ++i) out /= r;
  return Scalar::of_rat(cyc, out);
}

Scalar vol_mult_F(const CycPtr& cyc, long depth) {
  // vol^x of u(1+p_F^depth) with vol^x(O_F^x) = 1
  Rat r(1);
  r /= (cyc->prime() - 1);
  for (long i = 1; i < depth; ++i) r /= cyc->prime();
  return Scalar::of_rat(cyc, r);
}

Scalar vol_mult_E(const CycPtr& cyc, long depth) {
  Rat r(1);
  r /= (Rat(cyc->prime()) * cyc->prime() - 1);
  for (long i = 1; i < depth; ++i) r /= Rat(cyc->prime()) * cyc->prime();
  return Scalar::of_rat(cyc, r);
}

} // namespace urs
