#pragma once

#include <vector>

#include "fss/matrix.hpp"
#include "fss/rng.hpp"

namespace fss {

// Dense univariate polynomial over the working field, coefficients
// ascending, no trailing zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const FieldSpec& spec) : spec_(spec) {}
  Poly(const FieldSpec& spec, std::vector<Scalar> coeffs);

  static Poly zero(const FieldSpec& spec) { return Poly(spec); }
  static Poly constant(const Scalar& c);
  static Poly x(const FieldSpec& spec);

  const FieldSpec& spec() const { return spec_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const Scalar& lc() const;
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar coeff(int i) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Scalar& s) const;
  Poly monic() const;
  Poly derivative() const;

  // quotient and remainder; divisor must be nonzero
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Poly operator%(const Poly& d) const { return divmod(d).second; }
  Poly operator/(const Poly& d) const { return divmod(d).first; }
  bool divides(const Poly& other) const;  // this | other

  Scalar eval(const Scalar& x) const;
  Matrix eval(const Matrix& m) const;

  // this^e mod m, e >= 0 arbitrary precision
  Poly pow_mod(const mpz_class& e, const Poly& m) const;

  bool operator==(const Poly& o) const { return spec_ == o.spec_ && c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }
  int cmp(const Poly& o) const;  // deterministic total order
  std::string str() const;

 private:
  FieldSpec spec_{};
  std::vector<Scalar> c_;
  void trim();
};

Poly poly_gcd(Poly a, Poly b);  // monic gcd
// g = gcd(a, b) monic together with s, t with s*a + t*b = g
struct PolyXgcd {
  Poly g, s, t;
};
PolyXgcd poly_xgcd(const Poly& a, const Poly& b);

// characteristic polynomial det(xI - m), via exact Hessenberg form;
// valid over any field
Poly charpoly(const Matrix& m);

// distinct monic irreducible factors, canonically sorted.
// GF(p): squarefree split + distinct-degree + Cantor-Zassenhaus
// (trace splitting for p = 2).  Q: primitive integer polynomial,
// Zassenhaus with Hensel lifting.
std::vector<Poly> distinct_irreducible_factors(const Poly& f, Rng& rng);

}  // namespace fss
