#pragma once

// Inverse systems under the contraction action x^e ∘ X^a = X^(a-e), and the
// irreducible decompositions they produce for (x_1..x_n)-primary ideals.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gradix/artin.hpp"

namespace gradix {

/// Σ c_a X^a, stored as a polynomial of the same ring (variable i read as
/// X_i).
struct DualPoly {
  Polynomial poly;

  bool is_zero() const { return poly.is_zero(); }
  /// Largest total degree of a term.
  std::uint32_t degree() const { return poly.total_degree(); }
  /// Dual variables print capitalized: "X^2-X*Y".
  std::string to_string() const;
};

/// g ∘ F.
DualPoly contract(const Polynomial& g, const DualPoly& f);

struct InverseSystem {
  Ideal ideal;
  std::uint32_t degree_bound = 0;  // least D with (x_1..x_n)^D ⊆ I
  std::vector<DualPoly> basis;     // k-basis of I^⊥, one per standard monomial
  std::vector<DualPoly> generators;
};

/// Throws NotPositivelyGraded or NotIrrelevantPrimary.
InverseSystem inverse_system(const Ideal& ideal);

/// {g : g ∘ F = 0}. Throws InvalidArgument for F = 0.
Ideal annihilator(const DualPoly& f, const RingPtr& ring);

/// Ideal annihilating every element of `generators`.
Ideal annihilator(const std::vector<DualPoly>& generators, const RingPtr& ring);

struct DecompReport {
  Ideal input;
  std::vector<Ideal> components;
  std::size_t r = 0;
  std::optional<std::size_t> r_graded;
  bool intersection_verified = false;
  bool irredundant = false;
  bool all_graded = false;
  bool all_irreducible_certified = false;
};

/// Components Ann(F_i) over the minimal generators of I^⊥. With graded =
/// true, I must be graded and every component is graded.
DecompReport decompose(const Ideal& ideal, bool graded);

struct DecompositionCheck {
  bool valid = false;
  bool irredundant = false;
  std::string reason;
  std::vector<Certainty> irreducible;  // per part
};

DecompositionCheck verify_decomposition(const Ideal& ideal, const std::vector<Ideal>& parts);

/// For a monomial ideal with a minimal generator m*m' (coprime, non-units),
/// the pair (I + (m), I + (m')); nullopt if every minimal generator is a pure
/// power. Throws NotMonomial.
std::optional<std::pair<Ideal, Ideal>> monomial_split(const Ideal& ideal);

}  // namespace gradix
