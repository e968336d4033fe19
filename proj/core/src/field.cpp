#include "heckevert/field.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hv {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

// ---------------------------------------------------------------------------
// Integer polynomials.

int z_deg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

ZPoly z_trim(ZPoly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

ZPoly z_add(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return z_trim(std::move(r));
}

ZPoly z_sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return z_trim(std::move(r));
}

ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return z_trim(std::move(r));
}

ZPoly z_divexact(const ZPoly& a, const ZPoly& b) {
  require(!z_trim(b).empty(), "z_divexact: division by zero polynomial");
  ZPoly den = z_trim(b);
  ZPoly rem = z_trim(a);
  ZPoly quot(rem.size() >= den.size() ? rem.size() - den.size() + 1 : 0, 0);
  while (z_deg(rem) >= z_deg(den)) {
    if (rem.back() % den.back() != 0)
      throw std::invalid_argument("z_divexact: not an exact division");
    Int c = rem.back() / den.back();
    size_t shift = rem.size() - den.size();
    quot[shift] = c;
    for (size_t i = 0; i < den.size(); ++i) rem[shift + i] -= c * den[i];
    rem = z_trim(std::move(rem));
    if (rem.empty()) break;
  }
  if (!rem.empty()) throw std::invalid_argument("z_divexact: nonzero remainder");
  return z_trim(std::move(quot));
}

ZPoly z_pow_minus_one(unsigned d) {
  ZPoly f(d + 1, 0);
  f[0] = -1;
  f[d] = 1;
  return f;
}

ZPoly cyclotomic(unsigned d) {
  require(d >= 1, "cyclotomic: d must be >= 1");
  std::vector<unsigned> divs;
  for (unsigned k = 1; k <= d; ++k)
    if (d % k == 0) divs.push_back(k);
  std::vector<ZPoly> phi(divs.size());
  for (size_t i = 0; i < divs.size(); ++i) {
    ZPoly num = z_pow_minus_one(divs[i]);
    for (size_t j = 0; j < i; ++j)
      if (divs[i] % divs[j] == 0) num = z_divexact(num, phi[j]);
    phi[i] = std::move(num);
  }
  return phi.back();
}

Int resultant(const ZPoly& f, const ZPoly& g) {
  ZPoly ff = z_trim(f), gg = z_trim(g);
  require(!ff.empty() && !gg.empty(), "resultant: zero polynomial");
  int m = z_deg(ff), n = z_deg(gg);
  if (m == 0 && n == 0) return 1;
  if (m == 0) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), ff[0].get_mpz_t(), n);
    return r;
  }
  if (n == 0) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), gg[0].get_mpz_t(), m);
    return r;
  }
  // Sylvester matrix, Bareiss fraction-free elimination.
  int N = m + n;
  std::vector<std::vector<Int>> M(N, std::vector<Int>(N, 0));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) M[r][r + i] = ff[m - i];
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) M[n + r][r + i] = gg[n - i];
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < N; ++k) {
    if (M[k][k] == 0) {
      int piv = -1;
      for (int i = k + 1; i < N; ++i)
        if (M[i][k] != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      std::swap(M[k], M[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < N; ++i) {
      for (int j = k + 1; j < N; ++j) {
        Int t = M[k][k] * M[i][j] - M[i][k] * M[k][j];
        mpz_divexact(M[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      M[i][k] = 0;
    }
    prev = M[k][k];
  }
  return sign > 0 ? M[N - 1][N - 1] : Int(-M[N - 1][N - 1]);
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// FieldData and packed GF(p)[x] helpers.

struct FieldData {
  unsigned p = 0;
  unsigned e = 2;
  unsigned k = 1;
  uint64_t size = 0;            // p^k, or 0 when infinite
  std::vector<unsigned> mod_p;  // finite: monic modulus, length k+1
  std::vector<Rat> mod_0;       // char 0: Phi_e, monic, length k+1
  FieldElement q, q_inv;
  std::vector<uint32_t> add_t, mul_t, neg_t, inv_t;  // small finite fields
};

namespace {

constexpr uint64_t kTableLimit = 256;

std::vector<unsigned> unpack(uint32_t v, unsigned p, unsigned k) {
  std::vector<unsigned> d(k, 0);
  for (unsigned i = 0; i < k; ++i) {
    d[i] = v % p;
    v /= p;
  }
  return d;
}

uint32_t pack(const std::vector<unsigned>& d, unsigned p) {
  uint64_t v = 0;
  for (size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return static_cast<uint32_t>(v);
}

std::vector<unsigned> fp_trim(std::vector<unsigned> f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

unsigned fp_scalar_inv(unsigned a, unsigned p) {
  for (unsigned t = 1; t < p; ++t)
    if (t * a % p == 1) return t;
  throw std::logic_error("fp_scalar_inv: not invertible");
}

std::vector<unsigned> fp_mul(const std::vector<unsigned>& a,
                             const std::vector<unsigned>& b, unsigned p) {
  if (a.empty() || b.empty()) return {};
  std::vector<unsigned> r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return fp_trim(std::move(r));
}

void fp_divmod(std::vector<unsigned> a, const std::vector<unsigned>& b,
               unsigned p, std::vector<unsigned>& quot,
               std::vector<unsigned>& rem) {
  std::vector<unsigned> bb = fp_trim(b);
  unsigned lead_inv = fp_scalar_inv(bb.back(), p);
  a = fp_trim(std::move(a));
  quot.assign(a.size() >= bb.size() ? a.size() - bb.size() + 1 : 0, 0);
  while (a.size() >= bb.size() && !a.empty()) {
    unsigned c = a.back() * lead_inv % p;
    size_t shift = a.size() - bb.size();
    quot[shift] = c;
    for (size_t i = 0; i < bb.size(); ++i)
      a[shift + i] = (a[shift + i] + p * p - c * bb[i] % p * 1u) % p;
    a = fp_trim(std::move(a));
  }
  rem = std::move(a);
  quot = fp_trim(std::move(quot));
}

std::vector<unsigned> fp_mod(const std::vector<unsigned>& a,
                             const std::vector<unsigned>& b, unsigned p) {
  std::vector<unsigned> q, r;
  fp_divmod(a, b, p, q, r);
  return r;
}

// Extended Euclid over GF(p)[x]: g = gcd(a,b) monic, g = s*a + t*b (t unused).
void fp_xgcd(std::vector<unsigned> a, std::vector<unsigned> b, unsigned p,
             std::vector<unsigned>& g, std::vector<unsigned>& s) {
  std::vector<unsigned> s0 = {1}, s1 = {};
  a = fp_trim(std::move(a));
  b = fp_trim(std::move(b));
  while (!b.empty()) {
    std::vector<unsigned> quot, rem;
    fp_divmod(a, b, p, quot, rem);
    a.swap(b);
    b = std::move(rem);
    auto qs = fp_mul(quot, s1, p);
    std::vector<unsigned> ns(std::max(s0.size(), qs.size()), 0);
    for (size_t i = 0; i < s0.size(); ++i) ns[i] = s0[i];
    for (size_t i = 0; i < qs.size(); ++i) ns[i] = (ns[i] + p - qs[i]) % p;
    s0 = std::move(s1);
    s1 = fp_trim(std::move(ns));
  }
  unsigned lead_inv = fp_scalar_inv(a.back(), p);
  for (auto& c : a) c = c * lead_inv % p;
  for (auto& c : s0) c = c * lead_inv % p;
  g = std::move(a);
  s = std::move(s0);
}

// Rational polynomial helpers for characteristic 0.
using QPoly = std::vector<Rat>;

QPoly q_trim(QPoly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

QPoly q_polymul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return q_trim(std::move(r));
}

void q_divmod(QPoly a, const QPoly& b, QPoly& quot, QPoly& rem) {
  QPoly bb = q_trim(b);
  a = q_trim(std::move(a));
  quot.assign(a.size() >= bb.size() ? a.size() - bb.size() + 1 : 0, 0);
  while (a.size() >= bb.size() && !a.empty()) {
    Rat c = a.back() / bb.back();
    size_t shift = a.size() - bb.size();
    quot[shift] = c;
    for (size_t i = 0; i < bb.size(); ++i) a[shift + i] -= c * bb[i];
    a = q_trim(std::move(a));
  }
  rem = std::move(a);
  quot = q_trim(std::move(quot));
}

void q_xgcd(QPoly a, QPoly b, QPoly& g, QPoly& s) {
  QPoly s0 = {Rat(1)}, s1 = {};
  a = q_trim(std::move(a));
  b = q_trim(std::move(b));
  while (!b.empty()) {
    QPoly quot, rem;
    q_divmod(a, b, quot, rem);
    a.swap(b);
    b = std::move(rem);
    auto qs = q_polymul(quot, s1);
    QPoly ns(std::max(s0.size(), qs.size()), 0);
    for (size_t i = 0; i < s0.size(); ++i) ns[i] = s0[i];
    for (size_t i = 0; i < qs.size(); ++i) ns[i] -= qs[i];
    s0 = std::move(s1);
    s1 = q_trim(std::move(ns));
  }
  Rat lead = a.back();
  for (auto& c : a) c /= lead;
  for (auto& c : s0) c /= lead;
  g = std::move(a);
  s = std::move(s0);
}

}  // namespace

// ---------------------------------------------------------------------------
// FieldElement

bool FieldElement::operator==(const FieldElement& o) const {
  if (v_ != o.v_) return false;
  if (!c_ && !o.c_) return true;
  if (!c_ || !o.c_) return false;
  return *c_ == *o.c_;
}

bool FieldElement::operator<(const FieldElement& o) const {
  if (v_ != o.v_) return v_ < o.v_;
  bool a = static_cast<bool>(c_), b = static_cast<bool>(o.c_);
  if (a != b) return b;  // null (zero) sorts first
  if (!a) return false;
  const auto& x = *c_;
  const auto& y = *o.c_;
  if (x.size() != y.size()) return x.size() < y.size();
  for (size_t i = 0; i < x.size(); ++i) {
    int c = cmp(x[i], y[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

// ---------------------------------------------------------------------------
// FieldSpec

FieldElement FieldSpec::fin_make(uint32_t v) {
  FieldElement x;
  x.v_ = v;
  return x;
}

uint32_t FieldSpec::fin_get(const FieldElement& x) { return x.v_; }

FieldElement FieldSpec::cyc_wrap(std::vector<Rat> v) {
  bool nz = false;
  for (const auto& c : v)
    if (c != 0) {
      nz = true;
      break;
    }
  FieldElement x;
  if (nz) x.c_ = std::make_shared<const std::vector<Rat>>(std::move(v));
  return x;
}

unsigned FieldSpec::characteristic() const { return d_->p; }
unsigned FieldSpec::quantum_char() const { return d_->e; }
unsigned FieldSpec::ext_degree() const { return d_->k; }
bool FieldSpec::finite() const { return d_->p != 0; }
uint64_t FieldSpec::size() const { return d_->size; }

FieldElement FieldSpec::one() const { return from_int(1); }
FieldElement FieldSpec::q() const { return d_->q; }
FieldElement FieldSpec::q_inv() const { return d_->q_inv; }

FieldElement FieldSpec::from_int(long v) const {
  if (finite()) {
    long p = d_->p;
    return fin_make(static_cast<uint32_t>(((v % p) + p) % p));
  }
  return from_rat(Rat(v));
}

FieldElement FieldSpec::from_rat(const Rat& v) const {
  if (finite()) {
    Int num = v.get_num(), den = v.get_den();
    unsigned long p = d_->p;
    unsigned long n = mpz_fdiv_ui(num.get_mpz_t(), p);
    unsigned long dd = mpz_fdiv_ui(den.get_mpz_t(), p);
    require(dd != 0, "from_rat: denominator divisible by p");
    unsigned dinv = fp_scalar_inv(static_cast<unsigned>(dd), d_->p);
    return fin_make(static_cast<uint32_t>(n * dinv % p));
  }
  if (v == 0) return FieldElement();
  std::vector<Rat> c(d_->k, Rat(0));
  c[0] = v;
  return cyc_wrap(std::move(c));
}

FieldElement FieldSpec::element(const std::vector<long>& coords) const {
  require(coords.size() <= d_->k, "element: too many coordinates");
  if (finite()) {
    std::vector<unsigned> dg(d_->k, 0);
    long p = d_->p;
    for (size_t i = 0; i < coords.size(); ++i)
      dg[i] = static_cast<unsigned>(((coords[i] % p) + p) % p);
    return fin_make(pack(dg, d_->p));
  }
  std::vector<Rat> c(d_->k, Rat(0));
  for (size_t i = 0; i < coords.size(); ++i) c[i] = coords[i];
  return cyc_wrap(std::move(c));
}

std::vector<Rat> FieldSpec::coords(const FieldElement& x) const {
  std::vector<Rat> r(d_->k, Rat(0));
  if (finite()) {
    auto dg = unpack(x.v_, d_->p, d_->k);
    for (unsigned i = 0; i < d_->k; ++i) r[i] = static_cast<long>(dg[i]);
  } else if (x.c_) {
    for (unsigned i = 0; i < d_->k && i < x.c_->size(); ++i) r[i] = (*x.c_)[i];
  }
  return r;
}

FieldElement FieldSpec::add(const FieldElement& a, const FieldElement& b) const {
  if (finite()) {
    const auto& d = *d_;
    if (!d.add_t.empty()) return fin_make(d.add_t[a.v_ * d.size + b.v_]);
    auto da = unpack(a.v_, d.p, d.k), db = unpack(b.v_, d.p, d.k);
    for (unsigned i = 0; i < d.k; ++i) da[i] = (da[i] + db[i]) % d.p;
    return fin_make(pack(da, d.p));
  }
  if (!a.c_) return b;
  if (!b.c_) return a;
  std::vector<Rat> v = *a.c_;
  for (size_t i = 0; i < v.size(); ++i) v[i] += (*b.c_)[i];
  return cyc_wrap(std::move(v));
}

FieldElement FieldSpec::neg(const FieldElement& a) const {
  if (finite()) {
    const auto& d = *d_;
    if (!d.neg_t.empty()) return fin_make(d.neg_t[a.v_]);
    auto da = unpack(a.v_, d.p, d.k);
    for (auto& x : da) x = (d.p - x) % d.p;
    return fin_make(pack(da, d.p));
  }
  if (!a.c_) return a;
  std::vector<Rat> v = *a.c_;
  for (auto& x : v) x = -x;
  return cyc_wrap(std::move(v));
}

FieldElement FieldSpec::sub(const FieldElement& a, const FieldElement& b) const {
  return add(a, neg(b));
}

FieldElement FieldSpec::mul(const FieldElement& a, const FieldElement& b) const {
  if (finite()) {
    const auto& d = *d_;
    if (a.v_ == 0 || b.v_ == 0) return FieldElement();
    if (!d.mul_t.empty()) return fin_make(d.mul_t[a.v_ * d.size + b.v_]);
    auto da = unpack(a.v_, d.p, d.k), db = unpack(b.v_, d.p, d.k);
    auto prod = fp_mul(da, db, d.p);
    prod = fp_mod(prod, d.mod_p, d.p);
    prod.resize(d.k, 0);
    return fin_make(pack(prod, d.p));
  }
  if (!a.c_ || !b.c_) return FieldElement();
  const auto& d = *d_;
  std::vector<Rat> prod(2 * d.k - 1, Rat(0));
  for (unsigned i = 0; i < d.k; ++i)
    for (unsigned j = 0; j < d.k; ++j) prod[i + j] += (*a.c_)[i] * (*b.c_)[j];
  for (size_t i = prod.size(); i-- > d.k;) {
    if (prod[i] == 0) continue;
    Rat c = prod[i];
    prod[i] = 0;
    for (unsigned j = 0; j < d.k; ++j) prod[i - d.k + j] -= c * d.mod_0[j];
  }
  prod.resize(d.k);
  return cyc_wrap(std::move(prod));
}

FieldElement FieldSpec::inv(const FieldElement& a) const {
  require(!is_zero(a), "inv: division by zero");
  if (finite()) {
    const auto& d = *d_;
    if (!d.inv_t.empty()) return fin_make(d.inv_t[a.v_]);
    auto da = unpack(a.v_, d.p, d.k);
    std::vector<unsigned> g, s;
    fp_xgcd(fp_trim(da), d.mod_p, d.p, g, s);
    if (g.size() != 1) throw std::logic_error("inv: element not invertible");
    s = fp_mod(s, d.mod_p, d.p);
    s.resize(d.k, 0);
    return fin_make(pack(s, d.p));
  }
  const auto& d = *d_;
  QPoly av(a.c_->begin(), a.c_->end());
  QPoly g, s;
  q_xgcd(q_trim(std::move(av)), d.mod_0, g, s);
  if (g.size() != 1) throw std::logic_error("inv: element not invertible");
  QPoly quot, rem;
  q_divmod(std::move(s), d.mod_0, quot, rem);
  rem.resize(d.k, Rat(0));
  return cyc_wrap(std::move(rem));
}

FieldElement FieldSpec::div(const FieldElement& a, const FieldElement& b) const {
  return mul(a, inv(b));
}

FieldElement FieldSpec::pow(const FieldElement& a, long m) const {
  if (m < 0) return pow(inv(a), -m);
  FieldElement r = one(), base = a;
  unsigned long mm = static_cast<unsigned long>(m);
  while (mm) {
    if (mm & 1) r = mul(r, base);
    base = mul(base, base);
    mm >>= 1;
  }
  return r;
}

std::string FieldSpec::str(const FieldElement& a) const {
  auto co = coords(a);
  std::ostringstream out;
  bool first = true;
  for (unsigned i = 0; i < d_->k; ++i) {
    if (co[i] == 0) continue;
    if (!first) out << "+";
    first = false;
    if (i == 0) {
      out << co[i].get_str();
    } else {
      if (co[i] != 1) out << co[i].get_str() << "*";
      out << "q";
      if (i > 1) out << "^" << i;
    }
  }
  if (first) out << "0";
  return out.str();
}

// ---------------------------------------------------------------------------
// build_field

FieldSpec build_field(unsigned p, unsigned e) {
  require(e >= 2, "build_field: quantum characteristic e must be >= 2");
  if (p != 0) {
    require(is_prime(p), "build_field: characteristic must be 0 or prime");
    if (e != p) require(e % p != 0, "build_field: p divides e but e != p");
  }

  auto data = std::make_shared<FieldData>();
  data->p = p;
  data->e = e;

  if (p == 0) {
    ZPoly phi = cyclotomic(e);
    unsigned k = static_cast<unsigned>(z_deg(phi));
    data->k = k;
    data->size = 0;
    data->mod_0.assign(phi.begin(), phi.end());
    if (k == 1) {
      data->q = cyc_wrap({Rat(-data->mod_0[0])});
    } else {
      std::vector<Rat> v(k, Rat(0));
      v[1] = 1;
      data->q = cyc_wrap(std::move(v));
    }
    FieldSpec fs;
    fs.d_ = data;
    auto d2 = std::make_shared<FieldData>(*data);
    d2->q_inv = fs.pow(data->q, static_cast<long>(e) - 1);
    FieldSpec fs2;
    fs2.d_ = d2;
    // invariants: q^e = 1, 1 + q + ... + q^{e-1} = 0, q * q_inv = 1
    FieldElement s = fs2.zero(), pw = fs2.one();
    for (unsigned i = 0; i < e; ++i) {
      s = fs2.add(s, pw);
      pw = fs2.mul(pw, fs2.q());
    }
    if (!fs2.is_one(pw)) throw std::logic_error("build_field: q^e != 1");
    if (!fs2.is_zero(s))
      throw std::logic_error("build_field: 1 + q + ... + q^{e-1} != 0");
    if (!fs2.is_one(fs2.mul(fs2.q(), fs2.q_inv())))
      throw std::logic_error("build_field: q * q_inv != 1");
    return fs2;
  }

  if (e == p) {
    data->k = 1;
    data->size = p;
    data->mod_p = {p - 1, 1};  // u - 1, so q = [u] = 1
  } else {
    unsigned k = 1;
    unsigned long pk = p % e;
    while (pk != 1) {
      pk = pk * p % e;
      ++k;
      require(k <= 64, "build_field: extension degree too large");
    }
    uint64_t size = 1;
    for (unsigned i = 0; i < k; ++i) {
      size *= p;
      require(size <= (1ull << 31), "build_field: field too large");
    }
    data->k = k;
    data->size = size;
    // Lexicographically least monic degree-k factor of Phi_e over GF(p);
    // candidates are scanned by packed value (lexicographic on the
    // coefficient tuple read from the leading end).  Every irreducible
    // factor of Phi_e over GF(p) has degree exactly k, so any degree-k
    // divisor is irreducible.
    ZPoly phi = cyclotomic(e);
    std::vector<unsigned> phi_p(phi.size());
    for (size_t i = 0; i < phi.size(); ++i)
      phi_p[i] = static_cast<unsigned>(mpz_fdiv_ui(phi[i].get_mpz_t(), p));
    bool found = false;
    for (uint64_t c = 0; c < size && !found; ++c) {
      std::vector<unsigned> cand = unpack(static_cast<uint32_t>(c), p, k);
      cand.push_back(1);
      if (fp_mod(phi_p, cand, p).empty()) {
        data->mod_p = cand;
        found = true;
      }
    }
    if (!found) throw std::logic_error("build_field: no factor of Phi_e found");
  }

  if (data->k == 1) {
    data->q = fin_make((p - data->mod_p[0] % p) % p);
  } else {
    std::vector<unsigned> dg(data->k, 0);
    dg[1] = 1;
    data->q = fin_make(pack(dg, p));
  }
  FieldSpec fs;
  fs.d_ = data;
  auto d2 = std::make_shared<FieldData>(*data);
  d2->q_inv = fs.pow(data->q, static_cast<long>(e) - 1);
  FieldSpec fs2;
  fs2.d_ = d2;

  if (d2->size <= kTableLimit) {
    uint32_t n = static_cast<uint32_t>(d2->size);
    auto d3 = std::make_shared<FieldData>(*d2);
    d3->add_t.resize(static_cast<size_t>(n) * n);
    d3->mul_t.resize(static_cast<size_t>(n) * n);
    d3->neg_t.resize(n);
    d3->inv_t.assign(n, 0);
    for (uint32_t a = 0; a < n; ++a) {
      d3->neg_t[a] = fin_get(fs2.neg(fin_make(a)));
      for (uint32_t b = 0; b < n; ++b) {
        d3->add_t[a * n + b] = fin_get(fs2.add(fin_make(a), fin_make(b)));
        d3->mul_t[a * n + b] = fin_get(fs2.mul(fin_make(a), fin_make(b)));
      }
    }
    for (uint32_t a = 1; a < n; ++a)
      for (uint32_t b = 1; b < n; ++b)
        if (d3->mul_t[a * n + b] == 1) d3->inv_t[a] = b;
    fs2.d_ = d3;
  }

  // invariants: q has exact order e (q = 1 when e = p), power sum vanishes
  {
    FieldElement s = fs2.zero(), pw = fs2.one();
    for (unsigned i = 0; i < e; ++i) {
      if (i > 0 && e != p && fs2.is_one(pw))
        throw std::logic_error("build_field: q has order < e");
      s = fs2.add(s, pw);
      pw = fs2.mul(pw, fs2.q());
    }
    if (!fs2.is_one(pw)) throw std::logic_error("build_field: q^e != 1");
    if (!fs2.is_zero(s))
      throw std::logic_error("build_field: 1 + q + ... + q^{e-1} != 0");
    if (!fs2.is_one(fs2.mul(fs2.q(), fs2.q_inv())))
      throw std::logic_error("build_field: q * q_inv != 1");
  }
  return fs2;
}

// ---------------------------------------------------------------------------
// Polynomials over a FieldSpec.

int p_deg(const Poly& f) { return static_cast<int>(f.c.size()) - 1; }

Poly p_trim(const FieldSpec& fs, Poly f) {
  while (!f.c.empty() && fs.is_zero(f.c.back())) f.c.pop_back();
  return f;
}

bool p_is_zero(const FieldSpec& fs, const Poly& f) {
  for (const auto& x : f.c)
    if (!fs.is_zero(x)) return false;
  return true;
}

Poly p_from_ints(const FieldSpec& fs, const std::vector<long>& coeffs) {
  Poly f;
  f.c.reserve(coeffs.size());
  for (long c : coeffs) f.c.push_back(fs.from_int(c));
  return p_trim(fs, std::move(f));
}

Poly p_from_zpoly(const FieldSpec& fs, const ZPoly& g) {
  Poly f;
  f.c.reserve(g.size());
  for (const auto& c : g) f.c.push_back(fs.from_rat(Rat(c)));
  return p_trim(fs, std::move(f));
}

Poly p_one(const FieldSpec& fs) { return Poly{{fs.one()}}; }

Poly p_linear(const FieldSpec& fs, const FieldElement& alpha) {
  return Poly{{fs.neg(alpha), fs.one()}};
}

Poly p_add(const FieldSpec& fs, const Poly& a, const Poly& b) {
  Poly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), fs.zero());
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = fs.add(r.c[i], b.c[i]);
  return p_trim(fs, std::move(r));
}

Poly p_sub(const FieldSpec& fs, const Poly& a, const Poly& b) {
  Poly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), fs.zero());
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = fs.sub(r.c[i], b.c[i]);
  return p_trim(fs, std::move(r));
}

Poly p_mul(const FieldSpec& fs, const Poly& a, const Poly& b) {
  if (a.c.empty() || b.c.empty()) return Poly{};
  Poly r;
  r.c.assign(a.c.size() + b.c.size() - 1, fs.zero());
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (fs.is_zero(a.c[i])) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = fs.add(r.c[i + j], fs.mul(a.c[i], b.c[j]));
  }
  return p_trim(fs, std::move(r));
}

void p_divmod(const FieldSpec& fs, const Poly& a, const Poly& b, Poly& quot,
              Poly& rem) {
  require(!p_is_zero(fs, b), "p_divmod: division by zero polynomial");
  Poly bb = p_trim(fs, b);
  rem = p_trim(fs, a);
  quot.c.clear();
  if (rem.c.size() >= bb.c.size())
    quot.c.assign(rem.c.size() - bb.c.size() + 1, fs.zero());
  FieldElement lead_inv = fs.inv(bb.c.back());
  while (rem.c.size() >= bb.c.size() && !rem.c.empty()) {
    FieldElement c = fs.mul(rem.c.back(), lead_inv);
    size_t shift = rem.c.size() - bb.c.size();
    quot.c[shift] = c;
    for (size_t i = 0; i < bb.c.size(); ++i)
      rem.c[shift + i] = fs.sub(rem.c[shift + i], fs.mul(c, bb.c[i]));
    rem = p_trim(fs, std::move(rem));
  }
  quot = p_trim(fs, std::move(quot));
}

Poly p_gcd(const FieldSpec& fs, Poly a, Poly b) {
  a = p_trim(fs, std::move(a));
  b = p_trim(fs, std::move(b));
  while (!b.c.empty()) {
    Poly q, r;
    p_divmod(fs, a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.c.empty()) {
    FieldElement inv = fs.inv(a.c.back());
    for (auto& c : a.c) c = fs.mul(c, inv);
  }
  return a;
}

FieldElement p_eval(const FieldSpec& fs, const Poly& f, const FieldElement& x) {
  FieldElement r = fs.zero();
  for (size_t i = f.c.size(); i-- > 0;) r = fs.add(fs.mul(r, x), f.c[i]);
  return r;
}

unsigned root_multiplicity(const FieldSpec& fs, const Poly& f,
                           const FieldElement& alpha) {
  require(!p_is_zero(fs, f), "root_multiplicity: zero polynomial");
  Poly g = p_trim(fs, f);
  Poly lin = p_linear(fs, alpha);
  unsigned l = 0;
  while (true) {
    if (!fs.is_zero(p_eval(fs, g, alpha))) return l;
    Poly q, r;
    p_divmod(fs, g, lin, q, r);
    g = std::move(q);
    ++l;
  }
}

FieldElement resultant(const FieldSpec& fs, const Poly& f, const Poly& g) {
  require(!p_is_zero(fs, f) && !p_is_zero(fs, g), "resultant: zero polynomial");
  Poly ff = p_trim(fs, f), gg = p_trim(fs, g);
  int m = p_deg(ff), n = p_deg(gg);
  if (m == 0 && n == 0) return fs.one();
  if (m == 0) return fs.pow(ff.c[0], n);
  if (n == 0) return fs.pow(gg.c[0], m);
  int N = m + n;
  std::vector<std::vector<FieldElement>> M(
      N, std::vector<FieldElement>(N, fs.zero()));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) M[r][r + i] = ff.c[m - i];
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) M[n + r][r + i] = gg.c[n - i];
  FieldElement det = fs.one();
  for (int k = 0; k < N; ++k) {
    int piv = -1;
    for (int i = k; i < N; ++i)
      if (!fs.is_zero(M[i][k])) {
        piv = i;
        break;
      }
    if (piv < 0) return fs.zero();
    if (piv != k) {
      std::swap(M[piv], M[k]);
      det = fs.neg(det);
    }
    det = fs.mul(det, M[k][k]);
    FieldElement inv = fs.inv(M[k][k]);
    for (int i = k + 1; i < N; ++i) {
      if (fs.is_zero(M[i][k])) continue;
      FieldElement c = fs.mul(M[i][k], inv);
      for (int j = k; j < N; ++j)
        M[i][j] = fs.sub(M[i][j], fs.mul(c, M[k][j]));
    }
  }
  return det;
}

std::string p_str(const FieldSpec& fs, const Poly& f) {
  if (f.c.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < f.c.size(); ++i) {
    if (fs.is_zero(f.c[i])) continue;
    if (!first) out << " + ";
    first = false;
    out << "(" << fs.str(f.c[i]) << ")";
    if (i == 1) out << "*u";
    if (i > 1) out << "*u^" << i;
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace hv
