#pragma once

// Monomials, monomial orders, Z-graded (Laurent) polynomial rings and sparse
// polynomials with exact coefficients.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gradix/coeff.hpp"

namespace gradix {

inline constexpr std::size_t kMaxVariables = 16;

/// Exponent vector over at most kMaxVariables presentation variables. Unused
/// slots stay zero, so comparisons never need the variable count.
class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(std::size_t index, std::uint32_t power = 1);
  static Monomial from_exponents(std::span<const std::uint32_t> exponents);

  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, std::uint32_t exponent);

  std::uint32_t total_degree() const { return total_; }
  bool is_one() const { return total_ == 0; }
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  /// Number of variables with a positive exponent.
  std::size_t support_size() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient; requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::array<std::uint16_t, kMaxVariables> e_{};
  std::uint32_t total_ = 0;
};

class MonomialOrder {
 public:
  enum class Kind { Lex, GrevLex, Block };

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::GrevLex, 0); }
  /// Elimination order: the variables in `eliminated` (bit i = variable i)
  /// form a leading grevlex block, the remaining variables a trailing one.
  static MonomialOrder block(std::uint32_t eliminated) { return MonomialOrder(Kind::Block, eliminated); }

  Kind kind() const { return kind_; }
  std::uint32_t eliminated() const { return eliminated_; }

  std::strong_ordering compare(const Monomial& u, const Monomial& v) const;
  bool greater(const Monomial& u, const Monomial& v) const { return compare(u, v) > 0; }

  std::string name() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
  friend auto operator<=>(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind kind, std::uint32_t eliminated) : kind_(kind), eliminated_(eliminated) {}

  Kind kind_;
  std::uint32_t eliminated_;
};

inline std::strong_ordering compare_monomials(const Monomial& u, const Monomial& v, const MonomialOrder& ord) {
  return ord.compare(u, v);
}

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// The ambient ring k[x_1..x_n, t_1^-1..t_r^-1] with a Z-grading given by one
/// weight per variable. Each invertible variable t gets a presentation
/// variable named "t^-1" of weight -deg t; ideals adjoin t*t^-1 - 1.
class Ring {
 public:
  static RingPtr create(Field field, std::vector<std::string> names, std::vector<std::int64_t> weights,
                        std::vector<bool> invertible = {});

  const Field& field() const { return field_; }
  std::size_t num_variables() const { return names_.size(); }
  std::size_t num_declared() const { return declared_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  std::int64_t weight(std::size_t i) const { return weights_[i]; }
  const std::vector<std::int64_t>& weights() const { return weights_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Presentation index of the inverse of declared variable i, if invertible.
  std::optional<std::size_t> inverse_variable(std::size_t i) const;
  /// For a presentation inverse variable, the declared variable it inverts.
  std::optional<std::size_t> base_of_inverse(std::size_t i) const;
  bool is_invertible(std::size_t i) const { return inverse_variable(i).has_value(); }
  bool has_laurent_variables() const;

  bool has_positive_weights() const;
  std::int64_t degree(const Monomial& m) const;

  /// Same ring with extra variables appended (used for tag and lambda
  /// variables in eliminations).
  RingPtr with_extra_variables(const std::vector<std::string>& names, const std::vector<std::int64_t>& weights) const;
  /// True if `other` starts with exactly this ring's variables.
  bool is_prefix_of(const Ring& other) const;

  /// Text form of the ring declaration, e.g. "QQ[x,y,t,t^-1] weights(0,1,1)".
  std::string to_string() const;

  bool same_as(const Ring& other) const;

 private:
  Ring() : field_(Field::rationals()) {}

  Field field_;
  std::vector<std::string> names_;
  std::vector<std::int64_t> weights_;
  std::vector<std::optional<std::size_t>> inverse_of_;  // declared -> inverse index
  std::vector<std::optional<std::size_t>> base_of_;     // inverse -> declared index
  std::size_t declared_ = 0;
};

void check_same_ring(const RingPtr& a, const RingPtr& b);

struct Term {
  Monomial monomial;
  FieldElem coeff;
};

/// Sparse polynomial; terms strictly descending in its order, no zero
/// coefficients.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring, MonomialOrder order = MonomialOrder::grevlex());

  static Polynomial constant(RingPtr ring, const FieldElem& c, MonomialOrder order = MonomialOrder::grevlex());
  static Polynomial variable(RingPtr ring, std::size_t index, MonomialOrder order = MonomialOrder::grevlex());
  static Polynomial term(RingPtr ring, const Monomial& m, const FieldElem& c,
                         MonomialOrder order = MonomialOrder::grevlex());
  /// Sorts and combines arbitrary terms.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms, MonomialOrder order = MonomialOrder::grevlex());
  /// Precondition: terms strictly descending in `order`, no zero coefficients.
  static Polynomial from_sorted_terms(RingPtr ring, std::vector<Term> terms, MonomialOrder order);

  const RingPtr& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  bool is_monomial() const { return terms_.size() == 1; }

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  const FieldElem& leading_coeff() const { return terms_.front().coeff; }

  Polynomial with_order(const MonomialOrder& order) const;
  Term pop_leading();
  Polynomial monic() const;
  Polynomial scaled(const FieldElem& c) const;
  Polynomial mul_term(const Monomial& m, const FieldElem& c) const;
  /// *this -= c * m * g, in one merge pass.
  void sub_mul_term(const FieldElem& c, const Monomial& m, const Polynomial& g);

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  Polynomial operator-() const;
  Polynomial pow(std::uint32_t e) const;

  bool is_homogeneous() const;
  /// Keys are weighted degrees; the components sum back to *this.
  std::map<std::int64_t, Polynomial> homogeneous_components() const;
  /// Weighted degree of a nonzero homogeneous polynomial.
  std::optional<std::int64_t> weighted_degree() const;
  std::uint32_t total_degree() const;
  bool uses_variable(std::size_t index) const;

  /// Same polynomial in a ring that extends this one by trailing variables.
  Polynomial embed(const RingPtr& larger) const;
  /// Inverse of embed; throws if a dropped variable occurs.
  Polynomial contract(const RingPtr& smaller) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  Polynomial(RingPtr ring, MonomialOrder order, std::vector<Term> sorted_terms);
  void merge(const Polynomial& rhs, bool subtract);

  RingPtr ring_;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

inline Polynomial poly_add(const Polynomial& f, const Polynomial& g) { return f + g; }
inline Polynomial poly_sub(const Polynomial& f, const Polynomial& g) { return f - g; }
inline Polynomial poly_mul(const Polynomial& f, const Polynomial& g) { return f * g; }

inline bool is_homogeneous(const Polynomial& f) { return f.is_homogeneous(); }
inline std::map<std::int64_t, Polynomial> homogeneous_components(const Polynomial& f) {
  return f.homogeneous_components();
}

/// Image of f under the ring map sending presentation variable i to images[i].
Polynomial substitute(const Polynomial& f, const RingPtr& target, std::span<const Polynomial> images);

std::string render_monomial(const Ring& ring, const Monomial& m);

}  // namespace gradix
