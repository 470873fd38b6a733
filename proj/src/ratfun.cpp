#include "urs/ratfun.hpp"

#include <sstream>

namespace urs {

Poly Poly::of(const Scalar& s) {
  Poly p;
  p.c.push_back(s);
  p.trim();
  return p;
}

Poly Poly::monomial(const Scalar& s, long k) {
  Poly p;
  if (s.is_zero()) return p;
  p.c.assign(k + 1, Scalar::zero(s.field()));
  p.c[k] = s;
  return p;
}

long Poly::deg() const {
  for (long i = long(c.size()) - 1; i >= 0; --i)
    if (!c[i].is_zero()) return i;
  return -1;
}

void Poly::trim() {
  long d = deg();
  c.resize(d + 1);
}

Scalar Poly::lead() const {
  long d = deg();
  if (d < 0) throw ratfun_error("lead of zero polynomial");
  return c[d];
}

Scalar Poly::at(long k, const CycPtr& F) const {
  if (k < 0 || k >= long(c.size())) return Scalar::zero(F);
  return c[k];
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = c.size() >= o.c.size() ? *this : o;
  const Poly& s = c.size() >= o.c.size() ? o : *this;
  for (size_t i = 0; i < s.c.size(); ++i) r.c[i] = r.c[i] + s.c[i];
  r.trim();
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly no = o;
  for (Scalar& s : no.c) s = -s;
  return *this + no;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  if (is_zero() || o.is_zero()) return r;
  CycPtr F = c[deg()].field();
  r.c.assign(c.size() + o.c.size() - 1, Scalar::zero(F));
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    for (size_t j = 0; j < o.c.size(); ++j) {
      if (o.c[j].is_zero()) continue;
      r.c[i + j] += c[i] * o.c[j];
    }
  }
  r.trim();
  return r;
}

bool Poly::operator==(const Poly& o) const {
  long d = deg();
  if (d != o.deg()) return false;
  for (long i = 0; i <= d; ++i)
    if (!(c[i] == o.c[i])) return false;
  return true;
}

Scalar Poly::eval(const Scalar& x) const {
  if (is_zero()) return Scalar::zero(x.field());
  Scalar acc = c[deg()];
  for (long i = deg() - 1; i >= 0; --i) acc = acc * x + c[i];
  return acc;
}

Poly poly_rem(Poly a, const Poly& b) {
  long db = b.deg();
  if (db < 0) throw ratfun_error("poly_rem by zero");
  Scalar il = b.lead().inv();
  while (a.deg() >= db) {
    long da = a.deg();
    Scalar f = a.c[da] * il;
    for (long i = 0; i <= db; ++i)
      a.c[da - db + i] = a.c[da - db + i] - f * b.c[i];
    a.c[da] = Scalar::zero(f.field()); // force exact cancellation of the top term
    a.trim();
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  Scalar il = a.lead().inv();
  for (Scalar& s : a.c) s = s * il;
  return a;
}

Poly poly_div_exact_p(const Poly& a, const Poly& b) {
  Poly q, r = a;
  long db = b.deg();
  Scalar il = b.lead().inv();
  if (a.deg() < db) {
    if (!a.is_zero()) throw ratfun_error("poly_div_exact: not divisible");
    return q;
  }
  q.c.assign(a.deg() - db + 1, Scalar::zero(il.field()));
  while (r.deg() >= db) {
    long dr = r.deg();
    Scalar f = r.c[dr] * il;
    q.c[dr - db] = f;
    for (long i = 0; i <= db; ++i)
      r.c[dr - db + i] = r.c[dr - db + i] - f * b.c[i];
    r.c[dr] = Scalar::zero(f.field());
    r.trim();
  }
  if (!r.is_zero()) throw ratfun_error("poly_div_exact: nonzero remainder");
  q.trim();
  return q;
}

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

RatFun RatFun::zero(const CycPtr& F) {
  return RatFun(Poly::zero(), Poly::of(Scalar::one(F)));
}

RatFun RatFun::of(const Scalar& s) {
  return RatFun(Poly::of(s), Poly::of(Scalar::one(s.field())));
}

RatFun RatFun::monomial(const Scalar& s, long k) {
  if (k >= 0)
    return RatFun(Poly::monomial(s, k), Poly::of(Scalar::one(s.field())));
  return RatFun(Poly::of(s), Poly::monomial(Scalar::one(s.field()), -k));
}

void RatFun::normalize() {
  if (den_.is_zero()) throw ratfun_error("zero denominator");
  if (num_.is_zero()) {
    CycPtr F = den_.lead().field();
    num_ = Poly::zero();
    den_ = Poly::of(Scalar::one(F));
    return;
  }
  if (den_.deg() > 0 && num_.deg() > 0) {
    Poly g = poly_gcd(num_, den_);
    if (g.deg() > 0) {
      num_ = poly_div_exact_p(num_, g);
      den_ = poly_div_exact_p(den_, g);
    }
  } else if (den_.deg() > 0) {
    // constant numerator: only X^k factors can cancel, and num has none
  }
  if (!den_.lead().is_one()) {
    Scalar il = den_.lead().inv();
    for (Scalar& s : num_.c) s = s * il;
    for (Scalar& s : den_.c) s = s * il;
  }
}

RatFun RatFun::operator+(const RatFun& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  // fast path: equal denominators (common during shell accumulation)
  if (den_ == o.den_) return RatFun(num_ + o.num_, den_);
  return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator-(const RatFun& o) const { return *this + (-o); }

RatFun RatFun::operator-() const {
  RatFun r = *this;
  for (Scalar& s : r.num_.c) s = -s;
  return r;
}

RatFun RatFun::operator*(const RatFun& o) const {
  if (is_zero() || o.is_zero()) {
    CycPtr F = den_.lead().field();
    return zero(F);
  }
  return RatFun(num_ * o.num_, den_ * o.den_);
}

RatFun RatFun::operator/(const RatFun& o) const {
  if (o.is_zero()) throw ratfun_error("division by zero rational function");
  if (is_zero()) return *this;
  return RatFun(num_ * o.den_, den_ * o.num_);
}

RatFun RatFun::scaled(const Scalar& s) const {
  if (s.is_zero()) return zero(den_.lead().field());
  Poly n = num_;
  for (Scalar& x : n.c) x = x * s;
  return RatFun(n, den_);
}

RatFun RatFun::pow(long k) const {
  CycPtr F = den_.lead().field();
  RatFun acc = RatFun::of(Scalar::one(F));
  RatFun base = *this;
  bool invert = k < 0;
  unsigned long e = invert ? -k : k;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  if (invert) acc = RatFun::of(Scalar::one(F)) / acc;
  return acc;
}

bool RatFun::operator==(const RatFun& o) const {
  // canonical forms, but cross-multiply to be safe about unit normalization
  return num_ * o.den_ == o.num_ * den_;
}

Scalar RatFun::eval(const Scalar& x) const {
  Scalar d = den_.eval(x);
  return num_.eval(x) * d.inv();
}

std::complex<double> RatFun::embed(double sqrtp, std::complex<double> x) const {
  std::complex<double> n(0, 0), d(0, 0), xp(1, 0);
  for (size_t i = 0; i < num_.c.size(); ++i) { n += num_.c[i].embed(sqrtp) * xp; xp *= x; }
  xp = {1, 0};
  for (size_t i = 0; i < den_.c.size(); ++i) { d += den_.c[i].embed(sqrtp) * xp; xp *= x; }
  return n / d;
}

std::string RatFun::str() const {
  auto poly_str = [](const Poly& p) {
    if (p.is_zero()) return std::string("0");
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < p.c.size(); ++i) {
      if (p.c[i].is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      os << "[" << p.c[i].str() << "]";
      if (i == 1) os << " X";
      else if (i > 1) os << " X^" << i;
    }
    return os.str();
  };
  std::string s = "(" + poly_str(num_) + ")";
  if (den_.deg() > 0 || !den_.lead().is_one()) s += " / (" + poly_str(den_) + ")";
  return s;
}

RatFun geometric_tail(const RatFun& r, long n0) {
  CycPtr F = r.den().lead().field();
  RatFun one = RatFun::of(Scalar::one(F));
  if (r == one) throw pole_error("geometric tail at ratio 1 (L-factor pole)");
  return r.pow(n0) / (one - r);
}

} // namespace urs
