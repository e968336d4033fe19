#pragma once

// Exact coefficient arithmetic for Hecke-algebra computations.
//
// A FieldSpec describes a field F together with a distinguished element q of
// multiplicative order e (the quantum characteristic, q = 1 when e equals the
// characteristic p).  Three kinds of fields are supported:
//
//   * prime fields GF(p), used when e = p (q = 1) or when e | p - 1;
//   * extensions GF(p^k) with k minimal such that e | p^k - 1, built as
//     GF(p)[u]/(f) where f is the lexicographically least irreducible factor
//     of the e-th cyclotomic polynomial over GF(p), so q = [u] is a primitive
//     e-th root of unity;
//   * characteristic 0: exact rational arithmetic in Q[u]/(Phi_e), q = [u].
//
// Elements of finite fields are stored as a single packed integer (base-p
// digits are the coordinates in the power basis of [u]); fields of size at
// most 256 get full lookup tables so arithmetic is branch-free.  Elements in
// characteristic 0 carry a shared immutable coordinate vector of mpq values.
//
// Everything here is immutable after construction and safe to share between
// threads.  No floating point is used anywhere.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace hv {

using Int = mpz_class;
using Rat = mpq_class;

// ---------------------------------------------------------------------------
// Dense integer polynomials (lowest degree first, no trailing zeros).

using ZPoly = std::vector<Int>;

int z_deg(const ZPoly& f);  // deg(0) = -1
ZPoly z_trim(ZPoly f);
ZPoly z_add(const ZPoly& a, const ZPoly& b);
ZPoly z_sub(const ZPoly& a, const ZPoly& b);
ZPoly z_mul(const ZPoly& a, const ZPoly& b);
// Exact division; throws std::invalid_argument if b = 0 or b does not divide a.
ZPoly z_divexact(const ZPoly& a, const ZPoly& b);
ZPoly z_pow_minus_one(unsigned d);  // u^d - 1

// d-th cyclotomic polynomial over the integers, by iterated exact division of
// u^d - 1 by Phi_{d'} over the proper divisors d' of d.
ZPoly cyclotomic(unsigned d);

// Resultant of two nonzero integer polynomials (Sylvester determinant,
// computed fraction-free).  Throws std::invalid_argument on zero input.
Int resultant(const ZPoly& f, const ZPoly& g);

// ---------------------------------------------------------------------------

class FieldSpec;

class FieldElement {
 public:
  FieldElement() = default;  // the zero element of any field

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }
  bool operator<(const FieldElement& o) const;  // structural order, for maps

 private:
  friend class FieldSpec;
  uint32_t v_ = 0;                              // packed value, finite fields
  std::shared_ptr<const std::vector<Rat>> c_;   // coordinates, char 0 (null = 0)
};

struct FieldData;

class FieldSpec {
 public:
  FieldSpec() = default;

  unsigned characteristic() const;
  unsigned quantum_char() const;  // e
  unsigned ext_degree() const;    // k (deg Phi_e in characteristic 0)
  bool finite() const;
  uint64_t size() const;  // p^k, or 0 when infinite

  FieldElement zero() const { return FieldElement(); }
  FieldElement one() const;
  FieldElement q() const;
  FieldElement q_inv() const;

  FieldElement from_int(long v) const;
  FieldElement from_rat(const Rat& v) const;
  // Element with the given coordinates in the power basis 1, q, ..., q^{k-1}.
  FieldElement element(const std::vector<long>& coords) const;
  std::vector<Rat> coords(const FieldElement& x) const;  // length k

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement inv(const FieldElement& a) const;  // throws on zero
  FieldElement div(const FieldElement& a, const FieldElement& b) const;
  FieldElement pow(const FieldElement& a, long m) const;  // negative m allowed

  bool is_zero(const FieldElement& a) const { return a == FieldElement(); }
  bool is_one(const FieldElement& a) const { return a == one(); }

  std::string str(const FieldElement& a) const;

  bool same_field(const FieldSpec& o) const { return d_ == o.d_; }

 private:
  friend FieldSpec build_field(unsigned p, unsigned e);
  static FieldElement fin_make(uint32_t v);
  static FieldElement cyc_wrap(std::vector<Rat> v);  // normalizes zero to null
  static uint32_t fin_get(const FieldElement& x);
  std::shared_ptr<const FieldData> d_;
};

// Constructs the field for characteristic p (0 or prime) and quantum
// characteristic e >= 2.  Requires gcd(e, p) = 1 or e = p when p > 0.
FieldSpec build_field(unsigned p, unsigned e);

bool is_prime(unsigned long n);

// ---------------------------------------------------------------------------
// Dense univariate polynomials over a FieldSpec (lowest degree first).

struct Poly {
  std::vector<FieldElement> c;
};

int p_deg(const Poly& f);
Poly p_trim(const FieldSpec& fs, Poly f);
bool p_is_zero(const FieldSpec& fs, const Poly& f);
Poly p_from_ints(const FieldSpec& fs, const std::vector<long>& coeffs);
Poly p_from_zpoly(const FieldSpec& fs, const ZPoly& f);
Poly p_one(const FieldSpec& fs);
Poly p_linear(const FieldSpec& fs, const FieldElement& alpha);  // u - alpha

Poly p_add(const FieldSpec& fs, const Poly& a, const Poly& b);
Poly p_sub(const FieldSpec& fs, const Poly& a, const Poly& b);
Poly p_mul(const FieldSpec& fs, const Poly& a, const Poly& b);
void p_divmod(const FieldSpec& fs, const Poly& a, const Poly& b, Poly& quot,
              Poly& rem);
Poly p_gcd(const FieldSpec& fs, Poly a, Poly b);  // monic
FieldElement p_eval(const FieldSpec& fs, const Poly& f, const FieldElement& x);

// Largest l such that (u - alpha)^l divides f; f must be nonzero.
unsigned root_multiplicity(const FieldSpec& fs, const Poly& f,
                           const FieldElement& alpha);

// Resultant over the field, via Gaussian elimination of the Sylvester matrix.
FieldElement resultant(const FieldSpec& fs, const Poly& f, const Poly& g);

std::string p_str(const FieldSpec& fs, const Poly& f);

}  // namespace hv
