#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "fss/error.hpp"

namespace fss {

enum class FieldKind { rational, prime };

// The ground field: Q with arbitrary-precision fractions, or GF(p)
// for a machine-word prime p.  No floating point anywhere.
struct FieldSpec {
  FieldKind kind = FieldKind::rational;
  std::uint64_t p = 0;

  static FieldSpec rationals() { return FieldSpec{FieldKind::rational, 0}; }
  static FieldSpec gf(std::uint64_t p);  // rejects composite p

  bool operator==(const FieldSpec& o) const = default;
  std::string str() const;
};

bool is_prime_u64(std::uint64_t n);

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);  // DivisionByZero on a == 0

// One exact field element.  Rational values are kept canonical
// (gcd(num, den) = 1, den > 0) by GMP; prime-field values are kept
// reduced to [0, p).  Equality is structural.
class Scalar {
 public:
  Scalar() = default;  // rational zero

  static Scalar zero(const FieldSpec& spec);
  static Scalar one(const FieldSpec& spec);
  static Scalar of_int(const FieldSpec& spec, long v);
  static Scalar of_mpz(const FieldSpec& spec, const mpz_class& v);
  static Scalar rational(const mpq_class& q);
  static Scalar residue(std::uint64_t r, std::uint64_t p);

  // "a/b" or "a" over Q; a canonical decimal residue in [0, p) over GF(p)
  static Scalar parse(const FieldSpec& spec, const std::string& text);

  const FieldSpec& spec() const { return spec_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar inv() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // total order inside one field, used only for deterministic tie-breaks
  int cmp(const Scalar& o) const;

  std::string str() const;

  const mpq_class& rat() const { return q_; }
  std::uint64_t res() const { return r_; }

 private:
  FieldSpec spec_{};
  mpq_class q_{};
  std::uint64_t r_ = 0;

  void check_same(const Scalar& o) const;
};

}  // namespace fss
