#include "fss/scalar.hpp"

#include <array>

namespace fss {

namespace {

std::uint64_t pow_mod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, mod);
    base = mul_mod(base, base, mod);
    exp >>= 1;
  }
  return result;
}

}  // namespace

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  if (s >= p || s < a) s -= p;
  return s;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + (p - b);
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  if (a == 0) fail(ErrorCode::DivisionByZero, "inverse of 0 in GF(p)");
  // extended Euclid on (a, p)
  std::int64_t t = 0, new_t = 1;
  std::uint64_t r = p, new_r = a;
  while (new_r != 0) {
    std::uint64_t q = r / new_r;
    std::int64_t tmp_t = t - static_cast<std::int64_t>(q) * new_t;
    t = new_t;
    new_t = tmp_t;
    std::uint64_t tmp_r = r - q * new_r;
    r = new_r;
    new_r = tmp_r;
  }
  if (r != 1) fail(ErrorCode::Internal, "inv_mod: modulus not prime");
  return t < 0 ? static_cast<std::uint64_t>(t + static_cast<std::int64_t>(p)) : static_cast<std::uint64_t>(t);
}

// deterministic Miller-Rabin, valid for all 64-bit inputs
bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

FieldSpec FieldSpec::gf(std::uint64_t p) {
  if (!is_prime_u64(p)) {
    fail(ErrorCode::ParseError, "field modulus " + std::to_string(p) + " is not prime");
  }
  return FieldSpec{FieldKind::prime, p};
}

std::string FieldSpec::str() const {
  return kind == FieldKind::rational ? "Q" : "GF(" + std::to_string(p) + ")";
}

Scalar Scalar::zero(const FieldSpec& spec) {
  Scalar s;
  s.spec_ = spec;
  return s;
}

Scalar Scalar::one(const FieldSpec& spec) {
  Scalar s;
  s.spec_ = spec;
  if (spec.kind == FieldKind::rational) {
    s.q_ = 1;
  } else {
    s.r_ = 1 % spec.p;
  }
  return s;
}

Scalar Scalar::of_int(const FieldSpec& spec, long v) {
  Scalar s;
  s.spec_ = spec;
  if (spec.kind == FieldKind::rational) {
    s.q_ = v;
  } else {
    long m = v % static_cast<long>(spec.p);
    if (m < 0) m += static_cast<long>(spec.p);
    s.r_ = static_cast<std::uint64_t>(m);
  }
  return s;
}

Scalar Scalar::of_mpz(const FieldSpec& spec, const mpz_class& v) {
  Scalar s;
  s.spec_ = spec;
  if (spec.kind == FieldKind::rational) {
    s.q_ = v;
  } else {
    mpz_class m = v % mpz_class(static_cast<unsigned long>(spec.p));
    if (m < 0) m += static_cast<unsigned long>(spec.p);
    s.r_ = mpz_get_ui(m.get_mpz_t());
  }
  return s;
}

Scalar Scalar::rational(const mpq_class& q) {
  Scalar s;
  s.spec_ = FieldSpec::rationals();
  s.q_ = q;
  s.q_.canonicalize();
  return s;
}

Scalar Scalar::residue(std::uint64_t r, std::uint64_t p) {
  Scalar s;
  s.spec_ = FieldSpec{FieldKind::prime, p};
  s.r_ = r % p;
  return s;
}

Scalar Scalar::parse(const FieldSpec& spec, const std::string& text) {
  if (text.empty()) fail(ErrorCode::ParseError, "empty scalar literal");
  if (spec.kind == FieldKind::rational) {
    // accepted: optional sign, digits, optional "/digits"
    std::size_t slash = text.find('/');
    auto digits_ok = [](const std::string& t, bool sign_ok) {
      if (t.empty()) return false;
      std::size_t i = 0;
      if (sign_ok && (t[0] == '-' || t[0] == '+')) i = 1;
      if (i == t.size()) return false;
      for (; i < t.size(); ++i) {
        if (t[i] < '0' || t[i] > '9') return false;
      }
      return true;
    };
    std::string num = slash == std::string::npos ? text : text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!digits_ok(num, true) || !digits_ok(den, false)) {
      fail(ErrorCode::ParseError, "bad rational literal '" + text + "'");
    }
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0) {
      fail(ErrorCode::ParseError, "bad rational literal '" + text + "'");
    }
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0) {
      fail(ErrorCode::ParseError, "zero denominator in '" + text + "'");
    }
    q.canonicalize();
    return rational(q);
  }
  for (char c : text) {
    if (c < '0' || c > '9') fail(ErrorCode::ParseError, "bad GF(p) literal '" + text + "'");
  }
  mpz_class v(text);
  if (v >= mpz_class(static_cast<unsigned long>(spec.p))) {
    fail(ErrorCode::ParseError, "GF(p) literal '" + text + "' out of range [0, p)");
  }
  return residue(mpz_get_ui(v.get_mpz_t()), spec.p);
}

bool Scalar::is_zero() const {
  return spec_.kind == FieldKind::rational ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
  return spec_.kind == FieldKind::rational ? q_ == 1 : r_ == 1 % spec_.p;
}

void Scalar::check_same(const Scalar& o) const {
  if (spec_ != o.spec_) {
    fail(ErrorCode::MixedFields, "operands live in " + spec_.str() + " and " + o.spec_.str());
  }
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  Scalar s;
  s.spec_ = spec_;
  if (spec_.kind == FieldKind::rational) {
    s.q_ = q_ + o.q_;
  } else {
    s.r_ = add_mod(r_, o.r_, spec_.p);
  }
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  Scalar s;
  s.spec_ = spec_;
  if (spec_.kind == FieldKind::rational) {
    s.q_ = q_ - o.q_;
  } else {
    s.r_ = sub_mod(r_, o.r_, spec_.p);
  }
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar s;
  s.spec_ = spec_;
  if (spec_.kind == FieldKind::rational) {
    s.q_ = q_ * o.q_;
  } else {
    s.r_ = mul_mod(r_, o.r_, spec_.p);
  }
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
  return *this * o.inv();
}

Scalar Scalar::operator-() const {
  Scalar s;
  s.spec_ = spec_;
  if (spec_.kind == FieldKind::rational) {
    s.q_ = -q_;
  } else {
    s.r_ = r_ == 0 ? 0 : spec_.p - r_;
  }
  return s;
}

Scalar Scalar::inv() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of 0 in " + spec_.str());
  Scalar s;
  s.spec_ = spec_;
  if (spec_.kind == FieldKind::rational) {
    s.q_ = 1 / q_;
  } else {
    s.r_ = inv_mod(r_, spec_.p);
  }
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  if (spec_ != o.spec_) return false;
  return spec_.kind == FieldKind::rational ? q_ == o.q_ : r_ == o.r_;
}

int Scalar::cmp(const Scalar& o) const {
  check_same(o);
  if (spec_.kind == FieldKind::rational) {
    return mpq_cmp(q_.get_mpq_t(), o.q_.get_mpq_t());
  }
  return r_ < o.r_ ? -1 : (r_ > o.r_ ? 1 : 0);
}

std::string Scalar::str() const {
  if (spec_.kind == FieldKind::rational) return q_.get_str();
  return std::to_string(r_);
}

}  // namespace fss
