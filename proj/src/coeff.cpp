#include "gradix/coeff.hpp"

#include <algorithm>
#include <utility>

namespace gradix {

namespace {

[[noreturn]] void mismatch() {
  throw Error(ErrorCode::FieldMismatch, "operands belong to different fields");
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31)) {
    throw Error(ErrorCode::InvalidField, "GF(" + std::to_string(p) + ") modulus must be below 2^31");
  }
  if (!is_prime(p)) {
    throw Error(ErrorCode::InvalidField, "GF(" + std::to_string(p) + ") modulus is not prime");
  }
  return Field(Kind::PrimeField, static_cast<std::uint32_t>(p));
}

FieldElem Field::zero() const { return from_int(0); }
FieldElem Field::one() const { return from_int(1); }

FieldElem Field::from_int(long value) const {
  if (is_rational()) return FieldElem(mpq_class(value));
  long r = value % static_cast<long>(characteristic_);
  if (r < 0) r += characteristic_;
  return FieldElem(static_cast<std::uint32_t>(r), characteristic_);
}

FieldElem Field::from_integer(const mpz_class& value) const {
  if (is_rational()) return FieldElem(mpq_class(value));
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), characteristic_);
  return FieldElem(static_cast<std::uint32_t>(r.get_ui()), characteristic_);
}

FieldElem Field::from_rational(const mpz_class& num, const mpz_class& den) const {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  if (is_rational()) return FieldElem(mpq_class(num, den));
  return from_integer(num) / from_integer(den);
}

std::string Field::to_string() const {
  if (is_rational()) return "QQ";
  return "GF(" + std::to_string(characteristic_) + ")";
}

void char_guard(const Field& field, std::initializer_list<std::uint32_t> forbidden) {
  if (field.is_rational()) return;
  if (std::find(forbidden.begin(), forbidden.end(), field.characteristic()) != forbidden.end()) {
    throw Error(ErrorCode::CharacteristicForbidden,
                "characteristic " + std::to_string(field.characteristic()) + " is not allowed here");
  }
}

Field FieldElem::field() const {
  if (is_rational()) return Field::rationals();
  return Field(Field::Kind::PrimeField, std::get<Residue>(v_).modulus);
}

bool FieldElem::is_zero() const {
  if (const auto* r = std::get_if<Residue>(&v_)) return r->value == 0;
  return sgn(std::get<mpq_class>(v_)) == 0;
}

bool FieldElem::is_one() const {
  if (const auto* r = std::get_if<Residue>(&v_)) return r->value == 1;
  return std::get<mpq_class>(v_) == 1;
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inversion of zero");
  if (const auto* r = std::get_if<Residue>(&v_)) {
    return FieldElem(inverse_mod(r->value, r->modulus), r->modulus);
  }
  return FieldElem(mpq_class(1) / std::get<mpq_class>(v_));
}

FieldElem& FieldElem::operator+=(const FieldElem& rhs) {
  if (auto* r = std::get_if<Residue>(&v_)) {
    const auto* s = std::get_if<Residue>(&rhs.v_);
    if (s == nullptr || s->modulus != r->modulus) mismatch();
    std::uint64_t sum = std::uint64_t{r->value} + s->value;
    r->value = static_cast<std::uint32_t>(sum >= r->modulus ? sum - r->modulus : sum);
    return *this;
  }
  if (!rhs.is_rational()) mismatch();
  std::get<mpq_class>(v_) += rhs.rational();
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& rhs) {
  if (auto* r = std::get_if<Residue>(&v_)) {
    const auto* s = std::get_if<Residue>(&rhs.v_);
    if (s == nullptr || s->modulus != r->modulus) mismatch();
    r->value = r->value >= s->value ? r->value - s->value : r->value + (r->modulus - s->value);
    return *this;
  }
  if (!rhs.is_rational()) mismatch();
  std::get<mpq_class>(v_) -= rhs.rational();
  return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& rhs) {
  if (auto* r = std::get_if<Residue>(&v_)) {
    const auto* s = std::get_if<Residue>(&rhs.v_);
    if (s == nullptr || s->modulus != r->modulus) mismatch();
    r->value = static_cast<std::uint32_t>((std::uint64_t{r->value} * s->value) % r->modulus);
    return *this;
  }
  if (!rhs.is_rational()) mismatch();
  std::get<mpq_class>(v_) *= rhs.rational();
  return *this;
}

FieldElem& FieldElem::operator/=(const FieldElem& rhs) { return *this *= rhs.inverse(); }

FieldElem FieldElem::operator-() const {
  if (const auto* r = std::get_if<Residue>(&v_)) {
    return FieldElem(r->value == 0 ? 0 : r->modulus - r->value, r->modulus);
  }
  return FieldElem(mpq_class(-std::get<mpq_class>(v_)));
}

bool operator==(const FieldElem& a, const FieldElem& b) {
  const auto* r = std::get_if<Residue>(&a.v_);
  const auto* s = std::get_if<Residue>(&b.v_);
  if (r != nullptr && s != nullptr) return r->modulus == s->modulus && r->value == s->value;
  if (r == nullptr && s == nullptr) return std::get<mpq_class>(a.v_) == std::get<mpq_class>(b.v_);
  return false;
}

std::string FieldElem::to_string() const {
  if (const auto* r = std::get_if<Residue>(&v_)) {
    if (r->value > r->modulus / 2) return "-" + std::to_string(r->modulus - r->value);
    return std::to_string(r->value);
  }
  return std::get<mpq_class>(v_).get_str();
}

bool FieldElem::prints_negative() const {
  if (const auto* r = std::get_if<Residue>(&v_)) return r->value > r->modulus / 2;
  return sgn(std::get<mpq_class>(v_)) < 0;
}

}  // namespace gradix
