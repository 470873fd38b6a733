#ifndef URS_LOCALFIELD_HPP
#define URS_LOCALFIELD_HPP

#include "urs/cyclotomic.hpp"

#include <optional>

namespace urs {

struct precision_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct field_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Truncated model of F = Q_p and its unramified quadratic extension
// E = F[Y]/(h), h monic quadratic, irreducible mod p.  Elements carry a
// uniformizer valuation and a unit part known mod p^W (W = N + guard).
class FieldCtx {
public:
  FieldCtx(long p, long N, long h1, long h0); // h = Y^2 + h1 Y + h0
  static FieldCtx make_default(long p, long N);

  long p, N, W;
  long h1, h0;
  std::int64_t pW;                 // p^W
  std::int64_t ppow(long k) const; // p^k, 0 <= k <= W

  long q() const { return p; }

  // residue field k_E = F_{p^2} as pairs mod p; generator and dlog table
  long res_index(std::int64_t a, std::int64_t b) const { return (a % p) * p + (b % p); }
  long generator_index() const { return gen_idx_; }
  long dlog(long idx) const; // index of k_E^* element -> exponent base generator
  std::pair<long, long> res_of_dlog(long e) const;

private:
  long gen_idx_;
  std::vector<long> dlog_;                    // size p*p, -1 for 0
  std::vector<std::pair<long, long>> power_;  // generator powers
  void build_tables();
};

using FieldPtr = std::shared_ptr<const FieldCtx>;

// Element of E (or F): x = pi^v * (c1 + c2 Y), unit part mod p^relw.
// exact zero has v = +inf sentinel; a capped zero ("0 mod pi^known") keeps
// only the bound `known`.
class ResElt {
public:
  ResElt() = default;

  static ResElt zero(FieldPtr c);
  static ResElt from_int(FieldPtr c, long long n);           // exact image of n
  static ResElt make(FieldPtr c, long v, std::int64_t c1, std::int64_t c2);
  static ResElt unit_y(FieldPtr c); // the basis element Y

  const FieldPtr& ctx() const { return ctx_; }
  bool is_exact_zero() const;
  bool is_capped_zero() const { return capped_; }

  long val() const;                 // throws precision_error on capped zero
  bool val_at_least(long k) const;  // decidable up to the known bound
  long known_bound() const;         // element is exact mod pi^known

  // unit coordinates (only for non-zero): x = pi^v (u1 + u2 Y) mod p^relw
  std::int64_t u1() const { return c1_; }
  std::int64_t u2() const { return c2_; }
  long relw() const { return relw_; }

  bool lies_in_F() const; // second coordinate vanishes to full known precision

  ResElt operator+(const ResElt& o) const;
  ResElt operator-(const ResElt& o) const;
  ResElt operator-() const;
  ResElt operator*(const ResElt& o) const;
  ResElt inv() const;
  ResElt sigma() const;              // Galois conjugation (Frobenius lift)
  ResElt norm() const;               // x sigma(x), lands in F
  ResElt trace() const;              // x + sigma(x), lands in F
  std::pair<ResElt, ResElt> teichmuller() const; // unit -> (t, m), u = t(1+m)
  ResElt shift(long k) const;        // multiply by pi^k

  bool operator==(const ResElt& o) const;
  bool operator!=(const ResElt& o) const { return !(*this == o); }

  // decompose x = f + delta with f in F and delta in p_E, if the residue
  // allows it (Y-coordinate of the unit part divisible by p at depth v+1)
  std::optional<ResElt> f_part_mod_p() const;

  std::string str() const;

private:
  FieldPtr ctx_;
  long v_ = 0;
  long relw_ = 0;        // unit known mod p^relw
  std::int64_t c1_ = 0, c2_ = 0;
  bool exact_zero_ = true;
  bool capped_ = false;  // "zero mod pi^(v_)": v_ holds the bound

  void normalize();
  friend struct ShellGen;
};

// coset representatives of valuation shells, with additive Haar volumes
// (self-dual normalization: vol(O_F) = S, vol(O_E) = q_F)
struct ShellRep {
  ResElt rep;
  Scalar volume;   // additive volume of rep * (1 + p^depth) coset
};

// all x with vmin <= v(x) <= vmax, classes mod pi^(v+depth) on each shell;
// in_F restricts to the subfield
std::vector<ShellRep> shell_reps(const FieldPtr& fld, const CycPtr& cyc,
                                 long vmin, long vmax, long depth, bool in_F);

// volume helpers
Scalar vol_add_F(const CycPtr& cyc, long k);   // vol(p_F^k) = S q^-k
Scalar vol_add_E(const CycPtr& cyc, long k);   // vol(p_E^k) = q^(1-2k)
Scalar vol_mult_F(const CycPtr& cyc, long depth); // vol^x(u(1+p^d)), vol^x(O_F^x)=1
Scalar vol_mult_E(const CycPtr& cyc, long depth);

} // namespace urs

#endif
