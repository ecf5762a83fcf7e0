#pragma once

// Buchberger's algorithm and the ideal operations built on it.

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gradix/poly.hpp"

namespace gradix {

/// A reduced Groebner basis: monic, interreduced, sorted by ascending leading
/// monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, MonomialOrder order, std::vector<Polynomial> elements);

  const RingPtr& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& elements() const { return elements_; }

  /// Complete reduction: no term of the result is divisible by a leading
  /// monomial of the basis.
  Polynomial reduce(const Polynomial& f) const;
  bool is_unit() const;
  bool is_homogeneous() const;
  bool is_zero_dimensional() const;
  /// Monomials outside the leading-term ideal, ascending; nullopt when that
  /// set is infinite.
  std::optional<std::vector<Monomial>> standard_monomials() const;

 private:
  RingPtr ring_;
  MonomialOrder order_;
  std::vector<Polynomial> elements_;
};

/// Reduced Groebner basis of the ideal generated by `generators`.
GroebnerBasis buchberger(const RingPtr& ring, const MonomialOrder& order, std::vector<Polynomial> generators);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);
/// Remainder of f on division by `divisors` (any order of use, full tail
/// reduction). Divisors must share f's order.
Polynomial reduce_by(const Polynomial& f, std::span<const Polynomial> divisors);

/// An ideal given by generators, with a per-order memo of reduced bases.
/// Copies share the memo; the first request for an order computes it under a
/// lock, later requests read it.
class Ideal {
 public:
  explicit Ideal(RingPtr ring, std::vector<Polynomial> generators = {});

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  /// Generators together with t*t^-1 - 1 for every Laurent variable t.
  std::vector<Polynomial> presentation_generators() const;

  const GroebnerBasis& basis(const MonomialOrder& order = MonomialOrder::grevlex()) const;

  /// "(g1, g2, ...)".
  std::string to_string() const;

 private:
  struct Cache;

  RingPtr ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

inline const std::vector<Polynomial>& groebner_basis(const Ideal& ideal,
                                                     const MonomialOrder& order = MonomialOrder::grevlex()) {
  return ideal.basis(order).elements();
}

Polynomial normal_form(const Polynomial& f, const Ideal& ideal, const MonomialOrder& order = MonomialOrder::grevlex());
bool contains(const Ideal& ideal, const Polynomial& f);
/// a ⊆ b.
bool is_subset(const Ideal& a, const Ideal& b);
bool ideal_equal(const Ideal& a, const Ideal& b);
bool is_unit_ideal(const Ideal& ideal);
/// Every element of the reduced basis is homogeneous for the ring weights.
bool is_graded(const Ideal& ideal);
bool is_zero_dimensional(const Ideal& ideal);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal add_generators(const Ideal& a, std::vector<Polynomial> extra);

/// a ∩ b by eliminating a tag u from u*a + (1-u)*b.
Ideal intersect(const Ideal& a, const Ideal& b);
Ideal intersect_all(std::span<const Ideal> parts);
/// (I : f).
Ideal quotient(const Ideal& ideal, const Polynomial& f);
/// (I : f^inf) by eliminating u from I + (u*f - 1).
Ideal saturate(const Ideal& ideal, const Polynomial& f);
/// I ∩ k[other variables]; the result lives in the same ring.
Ideal eliminate(const Ideal& ideal, std::span<const std::size_t> variables);

std::optional<std::vector<Monomial>> standard_monomials(const Ideal& ideal);

/// q with f = q*g; throws InvalidArgument if g does not divide f.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

/// A variable name not yet used in `ring`, derived from `base`.
std::string fresh_variable_name(const Ring& ring, const std::string& base);

}  // namespace gradix
