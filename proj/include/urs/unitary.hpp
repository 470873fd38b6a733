#ifndef URS_UNITARY_HPP
#define URS_UNITARY_HPP

#include "urs/characters.hpp"
#include "urs/weil.hpp"

namespace urs {

// matrix over the truncated E, size 2l; elements of U_{2l} satisfy
// t(sigma g) J g = J with J = [[0, w_l], [-w_l, 0]]
class UMat {
public:
  UMat(Session s, long l);
  static UMat identity(Session s, long l);

  long l() const { return l_; }
  long n() const { return 2 * l_; }
  const Session& session() const { return s_; }

  ResElt& at(long i, long j) { return e_[i * n() + j]; }
  const ResElt& at(long i, long j) const { return e_[i * n() + j]; }

  UMat operator*(const UMat& o) const;
  UMat inverse() const; // via the form: g^-1 = -J tsigma(g) J
  UMat sigma_transpose() const;
  UMat scaled(const ResElt& z) const;
  bool is_unitary() const;
  bool operator==(const UMat& o) const;
  std::string str() const;

private:
  Session s_;
  long l_;
  std::vector<ResElt> e_;
};

UMat j_form(const Session& s, long l);
UMat w_l1_matrix(const Session& s, long l);  // w_{l-1,1}
UMat iota_matrix(const Session& s, long l);  // diag((-1)^{l-i}; (-1)^{i-1})

// structured elements; all are checked unitary on construction
UMat r_matrix(const Session& s, long l, const std::vector<ResElt>& r); // l-2 coords
UMat x_matrix(const Session& s, long l, const ResElt& x);
UMat b_embed(const Session& s, long l, const ResElt& a, const ResElt& c);
UMat torus_matrix(const Session& s, long l, const std::vector<ResElt>& d); // l entries
UMat upper_root(const Session& s, long l, long i, const ResElt& t); // i = 1..l-1
UMat middle_root(const Session& s, long l, const ResElt& x);        // x in F
UMat corner_root(const Session& s, long l, const ResElt& z);        // z in F

// iota (w^{-1} m w) iota: the argument of W_0 in the integrals, and the
// paper's displayed conjugation
UMat conj_w_iota(const UMat& m);

enum class IwahoriClass { none, iwahori, plus, plusplus };
IwahoriClass iwahori_membership(const UMat& g);

// psi_{N_l, alpha}(u) = psi(sum u_{i,i+1} - (alpha/2) u_{l,l+1}); defined for
// upper-unipotent u (the middle entry must have an F-part mod p)
Scalar psi_Nl(const UMat& u, long alpha);

// affine generic character of I^+:
//   residue form (the well-defined character): psi_E on the l-1 adjacent
//   coordinates, psi_F on the F-parts of the middle and corner coordinates
//   literal form: psi applied to the printed expression with an exact 1/2
Scalar chi_b_residue(const UMat& y, long b);
Scalar chi_b_literal(const UMat& y, long b);

struct WhittakerDatum {
  Session s;
  long l;
  NormOneChar omega1;
  long b; // unit class in k_F^x, as an integer 1..p-1
};

struct WhittakerValue {
  bool in_support = false;
  Scalar value;
};

// W_0 on N_l Z I^+ (0 outside), and W = W_0^iota
WhittakerValue whittaker_W0(const UMat& h, const WhittakerDatum& d);
WhittakerValue whittaker_W(const UMat& g, const WhittakerDatum& d);

struct ConjFormulaReport {
  bool matches_engine_template = false; // product == derived closed form
  bool display_x_sign_flipped = false;  // engine (-1)^l sigma(x) vs printed (-1)^(l-1)
  bool display_r_entries_differ = false;
  std::string first_mismatch;
};

ConjFormulaReport conjugation_formula(const Session& s, long l,
                                      const std::vector<ResElt>& r,
                                      const ResElt& x, const ResElt& a,
                                      const ResElt& c);

struct SupportScanReport {
  long tuples = 0;
  long members = 0;
  bool lemma_holds = true;      // membership iff all parameters in p-ranges
  bool values_match = true;     // on-support W equals psi_F(b c pi^-1)
  std::string counterexample;
};

SupportScanReport support_lemma_scan(const WhittakerDatum& d, long depth);

} // namespace urs

#endif
