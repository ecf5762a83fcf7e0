#pragma once

// Exact coefficient fields: the rationals (GMP-backed) and prime fields GF(p)
// with p < 2^31.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <variant>

#include "gradix/error.hpp"

namespace gradix {

class FieldElem;

class Field {
 public:
  enum class Kind { Rationals, PrimeField };

  static Field rationals() { return Field(Kind::Rationals, 0); }
  /// Throws InvalidField unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);

  Kind kind() const noexcept { return kind_; }
  bool is_rational() const noexcept { return kind_ == Kind::Rationals; }
  std::uint32_t characteristic() const noexcept { return characteristic_; }

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem from_int(long value) const;
  FieldElem from_integer(const mpz_class& value) const;
  FieldElem from_rational(const mpz_class& num, const mpz_class& den) const;

  /// "QQ" or "GF(p)", the literal accepted by the parser.
  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class FieldElem;
  Field(Kind kind, std::uint32_t characteristic) : kind_(kind), characteristic_(characteristic) {}

  Kind kind_;
  std::uint32_t characteristic_;
};

bool is_prime(std::uint64_t n);

/// Throws CharacteristicForbidden naming the offending prime if the
/// characteristic of `field` appears in `forbidden`.
void char_guard(const Field& field, std::initializer_list<std::uint32_t> forbidden);

struct Residue {
  std::uint32_t value;
  std::uint32_t modulus;
};

/// An element of QQ or GF(p). Rationals are kept canonical by GMP; residues are
/// always in [0, p).
class FieldElem {
 public:
  explicit FieldElem(mpq_class q) : v_(std::move(q)) { std::get<mpq_class>(v_).canonicalize(); }
  FieldElem(std::uint32_t value, std::uint32_t modulus) : v_(Residue{value % modulus, modulus}) {}

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  bool is_rational() const noexcept { return std::holds_alternative<mpq_class>(v_); }
  const mpq_class& rational() const { return std::get<mpq_class>(v_); }
  std::uint32_t residue() const { return std::get<Residue>(v_).value; }

  FieldElem inverse() const;

  FieldElem& operator+=(const FieldElem& rhs);
  FieldElem& operator-=(const FieldElem& rhs);
  FieldElem& operator*=(const FieldElem& rhs);
  FieldElem& operator/=(const FieldElem& rhs);

  friend FieldElem operator+(FieldElem lhs, const FieldElem& rhs) { return lhs += rhs; }
  friend FieldElem operator-(FieldElem lhs, const FieldElem& rhs) { return lhs -= rhs; }
  friend FieldElem operator*(FieldElem lhs, const FieldElem& rhs) { return lhs *= rhs; }
  friend FieldElem operator/(FieldElem lhs, const FieldElem& rhs) { return lhs /= rhs; }
  FieldElem operator-() const;

  friend bool operator==(const FieldElem& a, const FieldElem& b);

  /// Rationals print as "a" or "a/b"; residues print in the symmetric range
  /// (-p/2, p/2] so that -1 reads as "-1".
  std::string to_string() const;

  /// True when to_string() starts with '-'.
  bool prints_negative() const;

 private:
  std::variant<Residue, mpq_class> v_;
};

inline FieldElem field_add(const FieldElem& a, const FieldElem& b) { return a + b; }
inline FieldElem field_mul_inv(const FieldElem& a) { return a.inverse(); }

}  // namespace gradix
