#include "urs/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace urs {

namespace {

// exact division of integer polynomials, used to build Phi_n
std::vector<Rat> poly_div_exact(std::vector<Rat> num, const std::vector<Rat>& den) {
  std::vector<Rat> q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Rat(0));
  long dd = long(den.size()) - 1;
  for (long i = long(num.size()) - 1; i >= dd; --i) {
    Rat c = num[i] / den[dd];
    q[i - dd] = c;
    if (!c.is_zero())
      for (long j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  for (const Rat& c : num)
    if (!c.is_zero()) throw scalar_error("poly_div_exact: nonzero remainder");
  return q;
}

std::vector<Rat> cyclotomic_poly_dense(long n) {
  // x^n - 1 divided by all Phi_d, d | n, d < n
  std::vector<std::vector<Rat>> memo(n + 1);
  struct Rec {
    std::vector<std::vector<Rat>>& memo;
    std::vector<Rat> operator()(long m) {
      if (!memo[m].empty()) return memo[m];
      std::vector<Rat> p(m + 1, Rat(0));
      p[0] = -1; p[m] = 1;
      for (long d = 1; d < m; ++d)
        if (m % d == 0) p = poly_div_exact(p, (*this)(d));
      return memo[m] = p;
    }
  } rec{memo};
  return rec(n);
}

std::vector<Rat> cyclotomic_poly(long n) {
  // Phi_n(x) = Phi_rad(n)(x^(n/rad)); keeps the polynomial sparse
  long rad = 1, m = n;
  for (long d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      rad *= d;
      while (m % d == 0) m /= d;
    }
  if (m > 1) rad *= m;
  std::vector<Rat> base = cyclotomic_poly_dense(rad);
  long k = n / rad;
  if (k == 1) return base;
  std::vector<Rat> out((base.size() - 1) * k + 1, Rat(0));
  for (size_t i = 0; i < base.size(); ++i) out[i * k] = base[i];
  return out;
}

} // namespace

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

long session_cyclotomic_order(long p, long psi_depth, long extra) {
  long n = 4;
  long pk = 1;
  for (long i = 0; i < psi_depth; ++i) pk *= p;
  n = lcm_long(n, pk);
  n = lcm_long(n, p * p - 1);
  if (extra > 0) n = lcm_long(n, extra);
  return n;
}

CycField::CycField(long n, long p) : n_(n), p_(p) {
  if (n < 1) throw scalar_error("cyclotomic order must be positive");
  cyclo_ = cyclotomic_poly(n);
  phi_ = long(cyclo_.size()) - 1;
  // x^j mod Phi_n for j < 2*phi-1 (enough for products of reduced elements)
  pow_.resize(std::max<long>(2 * phi_ - 1, phi_ + 1));
  for (long j = 0; j < long(pow_.size()); ++j) {
    std::vector<Rat> v(phi_, Rat(0));
    if (j < phi_) {
      v[j] = 1;
    } else {
      // x * pow_[j-1] reduced
      const std::vector<Rat>& prev = pow_[j - 1];
      std::vector<Rat> sh(phi_ + 1, Rat(0));
      for (long i = 0; i < phi_; ++i) sh[i + 1] = prev[i];
      Rat top = sh[phi_];
      for (long i = 0; i < phi_; ++i) v[i] = sh[i] - top * cyclo_[i];
    }
    pow_[j] = std::move(v);
  }
  zeta_.resize(n_);
  for (long k = 0; k < n_; ++k) {
    if (k < std::min<long>(phi_, n_)) {
      zeta_[k] = pow_[k];
    } else {
      // zeta^k = x^k mod Phi_n: reduce iteratively from zeta^{k-1}
      const std::vector<Rat>& prev = zeta_[k - 1];
      std::vector<Rat> sh(phi_ + 1, Rat(0));
      for (long i = 0; i < phi_; ++i) sh[i + 1] = prev[i];
      Rat top = sh[phi_];
      std::vector<Rat> v(phi_);
      for (long i = 0; i < phi_; ++i) v[i] = sh[i] - top * cyclo_[i];
      zeta_[k] = std::move(v);
    }
  }
}

const std::vector<Rat>& CycField::zeta_pow(long k) const {
  k %= n_;
  if (k < 0) k += n_;
  return zeta_[k];
}

const std::vector<Rat>& CycField::reduce_pow(long j) const { return pow_[j]; }

Scalar::Scalar(CycPtr F) : F_(std::move(F)) {
  ev_.assign(F_->degree(), Rat(0));
  od_.assign(F_->degree(), Rat(0));
}

Scalar Scalar::one(CycPtr F) {
  Scalar s(std::move(F));
  s.ev_[0] = 1;
  return s;
}

Scalar Scalar::of_rat(CycPtr F, const Rat& r) {
  Scalar s(std::move(F));
  s.ev_[0] = r;
  return s;
}

Scalar Scalar::root_of_unity(CycPtr F, long m, long k) {
  if (m <= 0 || F->order() % m != 0)
    throw scalar_error("root_of_unity: order " + std::to_string(m) +
                       " does not divide session order " + std::to_string(F->order()));
  long e = (F->order() / m) * (((k % m) + m) % m);
  Scalar s(F);
  s.ev_ = F->zeta_pow(e);
  return s;
}

Scalar Scalar::sqrt_q_pow(CycPtr F, long j) {
  Scalar s = one(F);
  Rat pw(1);
  long half = (j >= 0) ? j / 2 : -((-j + 1) / 2);
  bool odd = (j % 2) != 0;
  // S^(2h) = p^h; S^(2h+1) = p^h * S
  if (half >= 0)
    for (long i = 0; i < half; ++i) pw *= F->prime();
  else
    for (long i = 0; i < -half; ++i) pw /= F->prime();
  if (!odd) {
    s.ev_[0] = pw;
  } else {
    s.ev_[0] = 0;
    s.od_[0] = pw;
  }
  return s;
}

bool Scalar::is_zero() const {
  for (const Rat& c : ev_) if (!c.is_zero()) return false;
  for (const Rat& c : od_) if (!c.is_zero()) return false;
  return true;
}

bool Scalar::is_one() const {
  if (ev_[0] != 1) return false;
  for (size_t i = 1; i < ev_.size(); ++i) if (!ev_[i].is_zero()) return false;
  for (const Rat& c : od_) if (!c.is_zero()) return false;
  return true;
}

bool Scalar::is_rational(Rat* out) const {
  for (size_t i = 1; i < ev_.size(); ++i) if (!ev_[i].is_zero()) return false;
  for (const Rat& c : od_) if (!c.is_zero()) return false;
  if (out) *out = ev_[0];
  return true;
}

void Scalar::add_into(std::vector<Rat>& a, const std::vector<Rat>& b, bool sub) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (!b[i].is_zero()) { if (sub) a[i] -= b[i]; else a[i] += b[i]; }
  }
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar r = *this;
  add_into(r.ev_, o.ev_, false);
  add_into(r.od_, o.od_, false);
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  Scalar r = *this;
  add_into(r.ev_, o.ev_, true);
  add_into(r.od_, o.od_, true);
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (Rat& c : r.ev_) if (!c.is_zero()) c = -c;
  for (Rat& c : r.od_) if (!c.is_zero()) c = -c;
  return r;
}

std::vector<Rat> Scalar::mul_vec(const std::vector<Rat>& a, const std::vector<Rat>& b) const {
  long phi = F_->degree();
  std::vector<Rat> out(phi, Rat(0));
  // sparse-aware convolution followed by table reduction
  std::vector<long> ia, ib;
  for (long i = 0; i < phi; ++i) if (!a[i].is_zero()) ia.push_back(i);
  if (ia.empty()) return out;
  for (long i = 0; i < phi; ++i) if (!b[i].is_zero()) ib.push_back(i);
  if (ib.empty()) return out;
  std::vector<Rat> conv(2 * phi - 1, Rat(0));
  for (long i : ia)
    for (long j : ib) conv[i + j] += a[i] * b[j];
  for (long k = 0; k < phi; ++k) out[k] = conv[k];
  for (long k = phi; k < 2 * phi - 1; ++k) {
    if (conv[k].is_zero()) continue;
    const std::vector<Rat>& red = F_->reduce_pow(k);
    for (long i = 0; i < phi; ++i)
      if (!red[i].is_zero()) out[i] += conv[k] * red[i];
  }
  return out;
}

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar r(F_);
  // (e1 + S o1)(e2 + S o2) = e1 e2 + p o1 o2 + S (e1 o2 + o1 e2)
  r.ev_ = mul_vec(ev_, o.ev_);
  std::vector<Rat> oo = mul_vec(od_, o.od_);
  Rat p(F_->prime());
  for (long i = 0; i < F_->degree(); ++i)
    if (!oo[i].is_zero()) r.ev_[i] += p * oo[i];
  r.od_ = mul_vec(ev_, o.od_);
  std::vector<Rat> oe = mul_vec(od_, o.ev_);
  add_into(r.od_, oe, false);
  return r;
}

namespace {

// extended Euclid in Q[x] against Phi_n, for inversion in Q(zeta_n)
std::vector<Rat> poly_mod_inverse(const std::vector<Rat>& a0, const std::vector<Rat>& mod) {
  auto deg = [](const std::vector<Rat>& v) {
    for (long i = long(v.size()) - 1; i >= 0; --i) if (!v[i].is_zero()) return i;
    return long(-1);
  };
  std::vector<Rat> r0 = mod, r1 = a0, s0(1, Rat(0)), s1(1, Rat(1));
  while (deg(r1) >= 0) {
    long d0 = deg(r0), d1 = deg(r1);
    if (d0 < d1) { std::swap(r0, r1); std::swap(s0, s1); continue; }
    Rat c = r0[d0] / r1[d1];
    long sh = d0 - d1;
    for (long i = 0; i <= d1; ++i) r0[i + sh] -= c * r1[i];
    if (long(s0.size()) < long(s1.size()) + sh) s0.resize(s1.size() + sh, Rat(0));
    for (long i = 0; i < long(s1.size()); ++i) s0[i + sh] -= c * s1[i];
    if (deg(r0) < deg(r1)) { std::swap(r0, r1); std::swap(s0, s1); }
  }
  long d = deg(r0);
  if (d != 0) throw scalar_error("inversion of a zero divisor in Q(zeta_n)[S]");
  Rat lead = r0[0];
  std::vector<Rat> inv = s0;
  for (Rat& c : inv) c /= lead;
  return inv;
}

} // namespace

Scalar Scalar::inv() const {
  if (is_zero()) throw scalar_error("inversion of zero");
  long phi = F_->degree();
  // fast paths: rational multiples of a single basis power (the common case)
  {
    long ne = -1, no = -1;
    bool simple = true;
    for (long i = 0; i < phi && simple; ++i) {
      if (!ev_[i].is_zero()) { if (ne >= 0) simple = false; else ne = i; }
      if (!od_[i].is_zero()) { if (no >= 0) simple = false; else no = i; }
    }
    if (simple && (ne < 0 || no < 0)) {
      Scalar r(F_);
      if (no < 0) { // c zeta^ne
        const std::vector<Rat>& z = F_->zeta_pow(-ne);
        Rat ci = 1 / ev_[ne];
        for (long i = 0; i < phi; ++i)
          if (!z[i].is_zero()) r.ev_[i] = ci * z[i];
      } else { // c S zeta^no: inverse = c^-1 p^-1 S zeta^-no
        const std::vector<Rat>& z = F_->zeta_pow(-no);
        Rat ci = 1 / (od_[no] * F_->prime());
        for (long i = 0; i < phi; ++i)
          if (!z[i].is_zero()) r.od_[i] = ci * z[i];
      }
      return r;
    }
  }
  // (e + S o)^-1 = (e - S o) / (e^2 - p o^2)
  Scalar conj = *this;
  for (Rat& c : conj.od_) if (c != 0) c = -c;
  Scalar den = *this * conj; // pure even by construction
  for (const Rat& c : den.od_)
    if (c != 0) throw scalar_error("internal: denominator not even");
  if (den.is_zero()) throw scalar_error("inversion of a zero divisor (S-norm vanishes)");
  std::vector<Rat> num = den.ev_;
  num.resize(phi);
  std::vector<Rat> iv = poly_mod_inverse(num, F_->cyclo());
  iv.resize(phi, Rat(0));
  Scalar invden(F_);
  invden.ev_ = iv;
  return conj * invden;
}

Scalar Scalar::galois_minus() const {
  Scalar r(F_);
  // apply zeta^k -> zeta^{-k} on the power basis via the zeta table
  for (long k = 0; k < F_->degree(); ++k) {
    if (!ev_[k].is_zero()) {
      const std::vector<Rat>& z = F_->zeta_pow(-k);
      for (long i = 0; i < F_->degree(); ++i)
        if (!z[i].is_zero()) r.ev_[i] += ev_[k] * z[i];
    }
    if (!od_[k].is_zero()) {
      const std::vector<Rat>& z = F_->zeta_pow(-k);
      for (long i = 0; i < F_->degree(); ++i)
        if (!z[i].is_zero()) r.od_[i] += od_[k] * z[i];
    }
  }
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  return ev_ == o.ev_ && od_ == o.od_;
}

std::complex<double> Scalar::embed(double sqrtp) const {
  const double tau = 6.283185307179586476925287;
  long n = F_->order();
  std::complex<double> acc(0, 0), accS(0, 0);
  for (long k = 0; k < F_->degree(); ++k) {
    if (ev_[k] != 0)
      acc += double(ev_[k].convert_to<double>()) *
             std::exp(std::complex<double>(0, tau * double(k) / double(n)));
    if (od_[k] != 0)
      accS += double(od_[k].convert_to<double>()) *
              std::exp(std::complex<double>(0, tau * double(k) / double(n)));
  }
  return acc + sqrtp * accS;
}

std::string Scalar::str() const {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Rat& c, long k, bool s_part) {
    if (c == 0) return;
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    if (s_part) os << "*S";
    if (k > 0) os << "*z^" << k;
  };
  for (long k = 0; k < F_->degree(); ++k) emit(ev_[k], k, false);
  for (long k = 0; k < F_->degree(); ++k) emit(od_[k], k, true);
  if (first) os << "0";
  return os.str();
}

} // namespace urs
