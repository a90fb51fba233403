#include "fss/poly.hpp"

#include <algorithm>
#include <sstream>

namespace fss {

Poly::Poly(const FieldSpec& spec, std::vector<Scalar> coeffs) : spec_(spec), c_(std::move(coeffs)) {
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const Scalar& c) {
  Poly p(c.spec());
  if (!c.is_zero()) p.c_ = {c};
  return p;
}

Poly Poly::x(const FieldSpec& spec) {
  Poly p(spec);
  p.c_ = {Scalar::zero(spec), Scalar::one(spec)};
  return p;
}

const Scalar& Poly::lc() const {
  if (c_.empty()) fail(ErrorCode::Internal, "lc of zero polynomial");
  return c_.back();
}

Scalar Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Scalar::zero(spec_);
  return c_[static_cast<std::size_t>(i)];
}

Poly Poly::operator+(const Poly& o) const {
  Poly r(spec_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), Scalar::zero(spec_));
  for (std::size_t i = 0; i < r.c_.size(); ++i) {
    if (i < c_.size()) r.c_[i] += c_[i];
    if (i < o.c_.size()) r.c_[i] += o.c_[i];
  }
  r.trim();
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r(spec_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), Scalar::zero(spec_));
  for (std::size_t i = 0; i < r.c_.size(); ++i) {
    if (i < c_.size()) r.c_[i] += c_[i];
    if (i < o.c_.size()) r.c_[i] -= o.c_[i];
  }
  r.trim();
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly(spec_);
  Poly r(spec_);
  r.c_.assign(c_.size() + o.c_.size() - 1, Scalar::zero(spec_));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j].is_zero()) continue;
      r.c_[i + j] += c_[i] * o.c_[j];
    }
  }
  r.trim();
  return r;
}

Poly Poly::scaled(const Scalar& s) const {
  Poly r(spec_);
  if (s.is_zero()) return r;
  r.c_ = c_;
  for (Scalar& c : r.c_) c *= s;
  r.trim();
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(lc().inv());
}

Poly Poly::derivative() const {
  Poly r(spec_);
  for (std::size_t i = 1; i < c_.size(); ++i) {
    r.c_.push_back(c_[i] * Scalar::of_int(spec_, static_cast<long>(i)));
  }
  r.trim();
  return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  Poly q(spec_), r = *this;
  if (degree() < d.degree()) return {q, r};
  q.c_.assign(static_cast<std::size_t>(degree() - d.degree() + 1), Scalar::zero(spec_));
  Scalar dlc_inv = d.lc().inv();
  while (!r.is_zero() && r.degree() >= d.degree()) {
    int shift = r.degree() - d.degree();
    Scalar f = r.lc() * dlc_inv;
    q.c_[static_cast<std::size_t>(shift)] = f;
    for (int i = 0; i <= d.degree(); ++i) {
      r.c_[static_cast<std::size_t>(i + shift)] -= f * d.c_[static_cast<std::size_t>(i)];
    }
    r.trim();
  }
  q.trim();
  return {q, r};
}

bool Poly::divides(const Poly& other) const {
  if (is_zero()) return other.is_zero();
  return other.divmod(*this).second.is_zero();
}

Scalar Poly::eval(const Scalar& x) const {
  Scalar acc = Scalar::zero(spec_);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Matrix Poly::eval(const Matrix& m) const {
  if (m.rows() != m.cols()) fail(ErrorCode::ShapeMismatch, "poly eval on non-square matrix");
  Matrix acc = Matrix::zeros(m.rows(), m.rows(), spec_);
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc = acc * m;
    if (!c_[i].is_zero()) acc = acc + Matrix::identity(m.rows(), spec_).scaled(c_[i]);
  }
  return acc;
}

Poly Poly::pow_mod(const mpz_class& e, const Poly& m) const {
  if (e < 0) fail(ErrorCode::Internal, "negative exponent");
  Poly base = *this % m;
  Poly acc = Poly::constant(Scalar::one(spec_)) % m;
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return acc;
  for (std::size_t i = bits; i-- > 0;) {
    acc = (acc * acc) % m;
    if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) {
      acc = (acc * base) % m;
    }
  }
  return acc;
}

int Poly::cmp(const Poly& o) const {
  if (degree() != o.degree()) return degree() < o.degree() ? -1 : 1;
  for (int i = degree(); i >= 0; --i) {
    int c = coeff(i).cmp(o.coeff(i));
    if (c != 0) return c;
  }
  return 0;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Scalar& c = coeff(i);
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    if (i == 0 || !c.is_one()) os << "(" << c.str() << ")";
    if (i > 0) os << "x";
    if (i > 1) os << "^" << i;
    first = false;
  }
  return os.str();
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

PolyXgcd poly_xgcd(const Poly& a, const Poly& b) {
  FieldSpec spec = a.spec();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(Scalar::one(spec)), s1 = Poly::zero(spec);
  Poly t0 = Poly::zero(spec), t1 = Poly::constant(Scalar::one(spec));
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Scalar inv = r0.lc().inv();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

// ---------------------------------------------------------------------------
// characteristic polynomial via exact Hessenberg reduction
// ---------------------------------------------------------------------------

Poly charpoly(const Matrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::ShapeMismatch, "charpoly of non-square matrix");
  int n = m.rows();
  FieldSpec spec = m.spec();
  if (n == 0) return Poly::constant(Scalar::one(spec));
  Matrix h = m;
  // similarity reduction to upper Hessenberg form
  for (int j = 0; j + 2 < n; ++j) {
    int pivot = -1;
    for (int i = j + 1; i < n; ++i) {
      if (!h.at(i, j).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != j + 1) {
      for (int k = 0; k < n; ++k) std::swap(h.at(pivot, k), h.at(j + 1, k));
      for (int k = 0; k < n; ++k) std::swap(h.at(k, pivot), h.at(k, j + 1));
    }
    Scalar inv = h.at(j + 1, j).inv();
    for (int i = j + 2; i < n; ++i) {
      if (h.at(i, j).is_zero()) continue;
      Scalar f = h.at(i, j) * inv;
      for (int k = 0; k < n; ++k) h.at(i, k) -= f * h.at(j + 1, k);
      for (int k = 0; k < n; ++k) h.at(k, j + 1) += f * h.at(k, i);
    }
  }
  // expand det(xI - H) along last columns of leading submatrices
  std::vector<Poly> p(static_cast<std::size_t>(n) + 1, Poly(spec));
  p[0] = Poly::constant(Scalar::one(spec));
  Poly x = Poly::x(spec);
  for (int i = 1; i <= n; ++i) {
    Poly acc = (x - Poly::constant(h.at(i - 1, i - 1))) * p[static_cast<std::size_t>(i - 1)];
    Scalar subdiag = Scalar::one(spec);
    for (int k = 1; k < i; ++k) {
      subdiag *= h.at(i - k, i - k - 1);
      if (subdiag.is_zero()) break;
      Scalar coef = h.at(i - k - 1, i - 1) * subdiag;
      if (coef.is_zero()) continue;
      acc = acc - p[static_cast<std::size_t>(i - k - 1)].scaled(coef);
    }
    p[static_cast<std::size_t>(i)] = std::move(acc);
  }
  return p[static_cast<std::size_t>(n)];
}

// ---------------------------------------------------------------------------
// factorization over GF(p)
// ---------------------------------------------------------------------------

namespace {

Poly random_poly_below(const FieldSpec& spec, int degree_bound, Rng& rng) {
  // nonzero random polynomial of degree < degree_bound
  while (true) {
    std::vector<Scalar> c;
    for (int i = 0; i < degree_bound; ++i) {
      c.push_back(Scalar::residue(rng.below(spec.p), spec.p));
    }
    Poly r(spec, std::move(c));
    if (!r.is_zero()) return r;
  }
}

// g has only exponents divisible by p; return its p-th root
Poly fp_pth_root(const Poly& g) {
  const FieldSpec& spec = g.spec();
  long p = static_cast<long>(spec.p);
  std::vector<Scalar> c;
  for (int i = 0; i <= g.degree(); i += p) {
    c.push_back(g.coeff(i));  // Frobenius fixes GF(p)
  }
  return Poly(spec, std::move(c));
}

void fp_equal_degree_split(const Poly& g, int d, Rng& rng, std::vector<Poly>& out) {
  if (g.degree() == d) {
    out.push_back(g.monic());
    return;
  }
  const FieldSpec& spec = g.spec();
  mpz_class pd;
  mpz_ui_pow_ui(pd.get_mpz_t(), static_cast<unsigned long>(spec.p), static_cast<unsigned long>(d));
  while (true) {
    Poly r = random_poly_below(spec, g.degree(), rng);
    Poly split(spec);
    if (spec.p == 2) {
      // trace map r + r^2 + ... + r^(2^(d-1)) mod g
      Poly acc = r % g;
      Poly tr = acc;
      for (int i = 1; i < d; ++i) {
        acc = (acc * acc) % g;
        tr = tr + acc;
      }
      split = poly_gcd(tr, g);
    } else {
      mpz_class e = (pd - 1) / 2;
      Poly h = r.pow_mod(e, g) - Poly::constant(Scalar::one(spec));
      split = poly_gcd(h, g);
    }
    if (split.degree() > 0 && split.degree() < g.degree()) {
      fp_equal_degree_split(split, d, rng, out);
      fp_equal_degree_split((g / split).monic(), d, rng, out);
      return;
    }
  }
}

// distinct-degree then equal-degree factorization of a squarefree monic s
void fp_factor_squarefree(const Poly& s, Rng& rng, std::vector<Poly>& out) {
  const FieldSpec& spec = s.spec();
  Poly v = s;
  Poly h = Poly::x(spec) % v;
  int d = 0;
  while (!v.is_zero() && v.degree() >= 2 * (d + 1)) {
    ++d;
    h = h.pow_mod(mpz_class(static_cast<unsigned long>(spec.p)), v);
    Poly g = poly_gcd(h - Poly::x(spec), v);
    if (g.degree() > 0) {
      fp_equal_degree_split(g, d, rng, out);
      v = (v / g).monic();
      h = h % v;
    }
  }
  if (v.degree() > 0) out.push_back(v.monic());
}

std::vector<Poly> fp_distinct_factors(const Poly& f, Rng& rng) {
  std::vector<Poly> result;
  std::vector<Poly> stack{f.monic()};
  while (!stack.empty()) {
    Poly g = stack.back();
    stack.pop_back();
    if (g.degree() <= 0) continue;
    Poly d = g.derivative();
    if (d.is_zero()) {
      stack.push_back(fp_pth_root(g));
      continue;
    }
    Poly sq = (g / poly_gcd(g, d)).monic();
    std::vector<Poly> found;
    fp_factor_squarefree(sq, rng, found);
    Poly rest = g;
    for (const Poly& q : found) {
      bool seen = false;
      for (const Poly& r : result) {
        if (r == q) {
          seen = true;
          break;
        }
      }
      if (!seen) result.push_back(q);
      while (q.divides(rest)) rest = (rest / q).monic();
    }
    stack.push_back(rest);
  }
  std::sort(result.begin(), result.end(), [](const Poly& a, const Poly& b) { return a.cmp(b) < 0; });
  return result;
}

// ---------------------------------------------------------------------------
// factorization over Q: monic integer polynomials, Zassenhaus
// ---------------------------------------------------------------------------

using ZPoly = std::vector<mpz_class>;  // ascending coefficients

void zp_trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int zp_degree(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  zp_trim(r);
  return r;
}

ZPoly zp_add(const ZPoly& a, const ZPoly& b) {
  ZPoly r = a;
  if (r.size() < b.size()) r.resize(b.size(), mpz_class(0));
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  zp_trim(r);
  return r;
}

ZPoly zp_sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r = a;
  if (r.size() < b.size()) r.resize(b.size(), mpz_class(0));
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  zp_trim(r);
  return r;
}

ZPoly zp_mod(const ZPoly& a, const mpz_class& m) {
  ZPoly r = a;
  for (mpz_class& c : r) {
    c %= m;
    if (c < 0) c += m;
  }
  zp_trim(r);
  return r;
}

ZPoly zp_balanced(const ZPoly& a, const mpz_class& m) {
  ZPoly r = zp_mod(a, m);
  mpz_class half = m / 2;
  for (mpz_class& c : r) {
    if (c > half) c -= m;
  }
  zp_trim(r);
  return r;
}

// divmod of a by monic d over Z/m (all coefficients reduced mod m)
std::pair<ZPoly, ZPoly> zp_divmod_monic_mod(const ZPoly& a, const ZPoly& d, const mpz_class& m) {
  ZPoly r = zp_mod(a, m);
  int dd = zp_degree(d);
  if (dd < 0) fail(ErrorCode::Internal, "zp division by zero");
  ZPoly q;
  if (zp_degree(r) >= dd) q.assign(static_cast<std::size_t>(zp_degree(r) - dd + 1), mpz_class(0));
  while (zp_degree(r) >= dd) {
    int shift = zp_degree(r) - dd;
    mpz_class f = r.back();
    q[static_cast<std::size_t>(shift)] = f;
    for (int i = 0; i <= dd; ++i) {
      mpz_class& c = r[static_cast<std::size_t>(i + shift)];
      c -= f * d[static_cast<std::size_t>(i)];
      c %= m;
      if (c < 0) c += m;
    }
    zp_trim(r);
  }
  zp_trim(q);
  return {q, r};
}

// exact division test over Z with monic divisor
bool zp_divides_monic(const ZPoly& d, const ZPoly& a, ZPoly* quotient) {
  int dd = zp_degree(d);
  if (dd < 0) return false;
  ZPoly r = a;
  ZPoly q;
  if (zp_degree(r) >= dd) q.assign(static_cast<std::size_t>(zp_degree(r) - dd + 1), mpz_class(0));
  while (zp_degree(r) >= dd) {
    int shift = zp_degree(r) - dd;
    mpz_class f = r.back();
    q[static_cast<std::size_t>(shift)] = f;
    for (int i = 0; i <= dd; ++i) {
      r[static_cast<std::size_t>(i + shift)] -= f * d[static_cast<std::size_t>(i)];
    }
    zp_trim(r);
  }
  if (!r.empty()) return false;
  if (quotient) *quotient = q;
  return true;
}

Poly zp_to_fp(const ZPoly& a, const FieldSpec& spec) {
  std::vector<Scalar> c;
  c.reserve(a.size());
  for (const mpz_class& v : a) c.push_back(Scalar::of_mpz(spec, v));
  return Poly(spec, std::move(c));
}

ZPoly fp_to_zp(const Poly& a) {
  ZPoly r;
  for (int i = 0; i <= a.degree(); ++i) {
    r.push_back(mpz_class(static_cast<unsigned long>(a.coeff(i).res())));
  }
  return r;
}

// One quadratic Hensel step (vzG 15.10): given f = g*h (mod m) with
// g, h monic and s*g + t*h = 1 (mod m), produce the same data mod m^2.
struct HenselPair {
  ZPoly g, h, s, t;
};

HenselPair hensel_step(const ZPoly& f, const HenselPair& in, const mpz_class& m) {
  mpz_class m2 = m * m;
  ZPoly e = zp_mod(zp_sub(f, zp_mul(in.g, in.h)), m2);
  auto [q, r] = zp_divmod_monic_mod(zp_mul(in.s, e), in.h, m2);
  HenselPair out;
  out.g = zp_mod(zp_add(in.g, zp_add(zp_mul(in.t, e), zp_mul(q, in.g))), m2);
  out.h = zp_mod(zp_add(in.h, r), m2);
  ZPoly b = zp_mod(zp_sub(zp_add(zp_mul(in.s, out.g), zp_mul(in.t, out.h)), ZPoly{mpz_class(1)}), m2);
  auto [c, d] = zp_divmod_monic_mod(zp_mul(in.s, b), out.h, m2);
  out.s = zp_mod(zp_sub(in.s, d), m2);
  out.t = zp_mod(zp_sub(in.t, zp_add(zp_mul(in.t, b), zp_mul(c, out.g))), m2);
  return out;
}

// Lift a pair g*h = f from mod p to mod p^(2^j) >= target.
// Returns the lifted pair together with the final modulus.
std::pair<HenselPair, mpz_class> hensel_lift_pair(const ZPoly& f, const Poly& gbar,
                                                  const Poly& hbar, const mpz_class& p,
                                                  const mpz_class& target) {
  PolyXgcd bez = poly_xgcd(gbar, hbar);
  if (bez.g.degree() != 0) fail(ErrorCode::Internal, "hensel pair not coprime");
  HenselPair pair;
  pair.g = fp_to_zp(gbar);
  pair.h = fp_to_zp(hbar);
  pair.s = fp_to_zp(bez.s);
  pair.t = fp_to_zp(bez.t);
  mpz_class m = p;
  while (m < target) {
    pair = hensel_step(f, pair, m);
    m = m * m;
  }
  return {pair, m};
}

// Lift f = prod(modular) from mod p to mod >= target, multifactor.
std::vector<ZPoly> hensel_lift_all(const ZPoly& f, const std::vector<Poly>& modular,
                                   const mpz_class& p, const mpz_class& target) {
  if (modular.size() == 1) {
    // the factor is f itself reduced; keep full precision for the caller
    return {f};
  }
  std::size_t half = modular.size() / 2;
  std::vector<Poly> left(modular.begin(), modular.begin() + static_cast<long>(half));
  std::vector<Poly> right(modular.begin() + static_cast<long>(half), modular.end());
  const FieldSpec& spec = modular[0].spec();
  Poly gbar = Poly::constant(Scalar::one(spec));
  for (const Poly& q : left) gbar = gbar * q;
  Poly hbar = Poly::constant(Scalar::one(spec));
  for (const Poly& q : right) hbar = hbar * q;
  auto [pair, m] = hensel_lift_pair(f, gbar, hbar, p, target);
  std::vector<ZPoly> out = hensel_lift_all(pair.g, left, p, target);
  std::vector<ZPoly> out_r = hensel_lift_all(pair.h, right, p, target);
  out.insert(out.end(), out_r.begin(), out_r.end());
  return out;
}

mpz_class zp_coeff_bound(const ZPoly& f) {
  // Mignotte-style: any monic factor of monic f has coefficients
  // bounded by 2^n * ||f||_2
  mpz_class norm2 = 0;
  for (const mpz_class& c : f) norm2 += c * c;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  root += 1;
  mpz_class bound = root;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(zp_degree(f)));
  return bound;
}

// monic squarefree integer polynomial -> monic irreducible integer factors
std::vector<ZPoly> zassenhaus(const ZPoly& f, Rng& rng) {
  int n = zp_degree(f);
  if (n <= 1) return {f};

  // a prime where f stays squarefree
  static const unsigned long kPrimes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                          43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
                                          101, 103, 107, 109, 113, 127, 131, 137, 139, 149};
  FieldSpec spec;
  Poly fbar;
  bool found = false;
  for (unsigned long p : kPrimes) {
    spec = FieldSpec::gf(p);
    fbar = zp_to_fp(f, spec);
    if (fbar.degree() != n) continue;  // cannot happen for monic f
    if (poly_gcd(fbar, fbar.derivative()).degree() == 0) {
      found = true;
      break;
    }
  }
  if (!found) fail(ErrorCode::Internal, "no squarefree prime found for factorization");

  std::vector<Poly> modular = fp_distinct_factors(fbar, rng);
  if (modular.size() == 1) return {f};

  mpz_class p(static_cast<unsigned long>(spec.p));
  mpz_class target = 2 * zp_coeff_bound(f) + 1;
  std::vector<ZPoly> lifted = hensel_lift_all(f, modular, p, target);
  mpz_class m = p;
  while (m < target) m = m * m;

  // subset recombination
  std::vector<ZPoly> result;
  std::vector<ZPoly> active = lifted;
  ZPoly remaining = f;
  bool progress = true;
  while (progress && !active.empty()) {
    progress = false;
    std::size_t r = active.size();
    for (std::size_t size = 1; size <= r && !progress; ++size) {
      // enumerate subsets of the given cardinality in increasing mask order
      for (std::uint64_t mask = 1; mask < (1ULL << r) && !progress; ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) != size) continue;
        ZPoly cand{mpz_class(1)};
        for (std::size_t i = 0; i < r; ++i) {
          if (mask & (1ULL << i)) cand = zp_mod(zp_mul(cand, active[i]), m);
        }
        cand = zp_balanced(cand, m);
        if (cand.empty() || cand.back() != 1) continue;
        ZPoly quotient;
        if (zp_divides_monic(cand, remaining, &quotient)) {
          result.push_back(cand);
          remaining = quotient;
          std::vector<ZPoly> keep;
          for (std::size_t i = 0; i < r; ++i) {
            if (!(mask & (1ULL << i))) keep.push_back(active[i]);
          }
          active = std::move(keep);
          progress = true;
        }
      }
    }
  }
  if (zp_degree(remaining) > 0) result.push_back(remaining);
  return result;
}

std::vector<Poly> q_distinct_factors(const Poly& f, Rng& rng) {
  FieldSpec spec = f.spec();
  Poly sq = (f / poly_gcd(f, f.derivative())).monic();
  if (sq.degree() <= 1) return {sq};

  // substitute x -> y/c to reach a monic integer polynomial
  mpz_class c = 1;
  for (int i = 0; i <= sq.degree(); ++i) {
    mpz_class den = sq.coeff(i).rat().get_den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), den.get_mpz_t());
    c = c / g * den;
  }
  int n = sq.degree();
  ZPoly zf(static_cast<std::size_t>(n) + 1);
  mpz_class cpow = 1;  // c^(n-i)
  for (int i = n; i >= 0; --i) {
    mpq_class v = sq.coeff(i).rat() * mpq_class(cpow);
    if (v.get_den() != 1) fail(ErrorCode::Internal, "monic integerization failed");
    zf[static_cast<std::size_t>(i)] = v.get_num();
    cpow *= c;
  }

  std::vector<ZPoly> zfactors = zassenhaus(zf, rng);

  // map back: G(y) -> G(c x) / c^deg, monic over Q
  std::vector<Poly> result;
  for (const ZPoly& g : zfactors) {
    int d = zp_degree(g);
    std::vector<Scalar> coeffs;
    mpz_class cp = 1;  // c^i
    mpz_class cd;
    mpz_pow_ui(cd.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(d));
    for (int i = 0; i <= d; ++i) {
      mpq_class v(g[static_cast<std::size_t>(i)] * cp, cd);
      v.canonicalize();
      coeffs.push_back(Scalar::rational(v));
      cp *= c;
    }
    result.push_back(Poly(spec, std::move(coeffs)));
  }
  std::sort(result.begin(), result.end(), [](const Poly& a, const Poly& b) { return a.cmp(b) < 0; });
  return result;
}

}  // namespace

std::vector<Poly> distinct_irreducible_factors(const Poly& f, Rng& rng) {
  if (f.degree() < 1) fail(ErrorCode::Internal, "factoring a constant polynomial");
  if (f.spec().kind == FieldKind::prime) return fp_distinct_factors(f, rng);
  return q_distinct_factors(f, rng);
}

}  // namespace fss
