#ifndef SOLVCERT_FIELD_HPP
#define SOLVCERT_FIELD_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "solvcert/errors.hpp"

namespace solvcert {

/// Characteristic of the coefficient field: 0 for the rationals, otherwise a prime.
struct FieldSpec {
  std::uint64_t characteristic = 0;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t q = 3; q <= p / q; q += 2)
    if (p % q == 0) return false;
  return true;
}

inline FieldSpec make_field_spec(std::uint64_t characteristic) {
  if (characteristic != 0 && !is_prime(characteristic))
    throw FieldError("characteristic " + std::to_string(characteristic) +
                     " is neither 0 nor prime");
  return FieldSpec{characteristic};
}

/// The rationals, exact, coefficients kept in lowest terms by GMP.
class RationalField {
 public:
  using value_type = mpq_class;

  std::uint64_t characteristic() const { return 0; }
  FieldSpec spec() const { return {0}; }

  value_type zero() const { return value_type(0); }
  value_type one() const { return value_type(1); }
  value_type from_int(std::int64_t v) const { return value_type(static_cast<long>(v)); }
  value_type from_mpz(const mpz_class& num, const mpz_class& den) const {
    if (den == 0) throw FieldError("division by zero in rational literal");
    value_type q(num, den);
    q.canonicalize();
    return q;
  }

  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool is_one(const value_type& a) const { return a == 1; }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const {
    if (is_zero(a)) throw FieldError("inverse of zero");
    return value_type(1) / a;
  }
  value_type div(const value_type& a, const value_type& b) const { return mul(a, inv(b)); }

  // a -= b * c, the inner loop of every elimination.
  void sub_mul(value_type& a, const value_type& b, const value_type& c) const { a -= b * c; }

  std::string to_string(const value_type& a) const { return a.get_str(); }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

/// Z/pZ for a prime p < 2^32, elements stored reduced in [0, p).
class PrimeField {
 public:
  using value_type = std::uint64_t;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
    if (p >= (std::uint64_t{1} << 32)) throw FieldError("characteristic must be below 2^32");
  }

  std::uint64_t characteristic() const { return p_; }
  FieldSpec spec() const { return {p_}; }

  value_type zero() const { return 0; }
  value_type one() const { return 1 % p_; }
  value_type from_int(std::int64_t v) const {
    auto p = static_cast<std::int64_t>(p_);
    auto r = v % p;
    return static_cast<value_type>(r < 0 ? r + p : r);
  }
  value_type from_mpz(const mpz_class& num, const mpz_class& den) const {
    mpz_class p(static_cast<unsigned long>(p_));
    mpz_class n = num % p, d = den % p;
    if (n < 0) n += p;
    if (d < 0) d += p;
    if (d == 0) throw FieldError("denominator vanishes modulo " + std::to_string(p_));
    return mul(static_cast<value_type>(n.get_ui()), inv(static_cast<value_type>(d.get_ui())));
  }

  bool is_zero(value_type a) const { return a == 0; }
  bool is_one(value_type a) const { return a == one(); }

  value_type add(value_type a, value_type b) const {
    value_type s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
  value_type mul(value_type a, value_type b) const { return (a * b) % p_; }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type inv(value_type a) const {
    if (a == 0) throw FieldError("inverse of zero");
    // Fermat: a^(p-2).
    value_type result = 1 % p_, base = a, e = p_ - 2;
    while (e) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }
  void sub_mul(value_type& a, value_type b, value_type c) const { a = sub(a, mul(b, c)); }

  std::string to_string(value_type a) const { return std::to_string(a); }

  friend bool operator==(const PrimeField& x, const PrimeField& y) { return x.p_ == y.p_; }

 private:
  std::uint64_t p_;
};

}  // namespace solvcert

#endif  // SOLVCERT_FIELD_HPP
