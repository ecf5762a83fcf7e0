#pragma once

// Brute force over tiny quotient algebras A = R/I over GF(p): every ideal of A
// is enumerated, and irreducibility and indices are read off the lattice.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gradix/artin.hpp"

namespace gradix {

struct FiniteAlgebra {
  RingPtr ring;                     // supplies the field and variable names
  std::optional<Ideal> source;      // the ideal A came from, if known
  std::vector<std::string> labels;  // basis vector names
  std::vector<Matrix> multiplication;
  std::vector<std::int64_t> degrees;
  bool graded = false;

  const Field& field() const { return ring->field(); }
  std::size_t dimension() const { return labels.size(); }
};

/// Throws InvalidField over QQ.
FiniteAlgebra finite_algebra(const QuotientBasis& q);
FiniteAlgebra finite_algebra(const Ideal& ideal);

inline constexpr double kDefaultOracleCap = 2e5;

/// Number of subspaces of GF(q)^n (sum of Gaussian binomials).
double subspace_estimate(std::uint32_t q, std::size_t n);

struct LatticeMember {
  std::vector<std::vector<std::uint32_t>> basis;  // reduced echelon rows, residues mod p
  std::vector<std::size_t> pivots;
  bool graded = false;

  std::size_t dimension() const { return basis.size(); }
};

/// Members sorted by dimension, then pivot pattern, then entries.
struct IdealLattice {
  std::vector<LatticeMember> members;
  std::vector<std::size_t> graded;  // indices of graded members
  std::size_t zero = 0;
  std::size_t whole = 0;
  std::vector<std::vector<std::uint32_t>> meet;  // index of the intersection

  std::size_t size() const { return members.size(); }
  bool contains(std::size_t big, std::size_t small) const { return meet[big][small] == small; }
};

/// Throws CapExceeded when the subspace estimate exceeds `cap`.
IdealLattice enumerate_ideals(const FiniteAlgebra& a, double cap = kDefaultOracleCap);

/// No two strictly larger members (graded ones if `graded`) meet in N. The
/// whole algebra counts as irreducible.
bool oracle_irreducible(const IdealLattice& lattice, std::size_t member, bool graded);

/// Least number of (graded-)irreducible members intersecting to 0.
std::size_t oracle_index(const IdealLattice& lattice, bool graded);
std::size_t oracle_index(const FiniteAlgebra& a, bool graded, double cap = kDefaultOracleCap);

/// dim of 0 :_A (x_1..x_n). Throws InvalidArgument unless every variable acts
/// nilpotently, i.e. A is local at the origin.
std::size_t socle_dimension(const FiniteAlgebra& a);

struct OracleReport {
  std::size_t lattice_size = 0;
  std::size_t graded_size = 0;
  std::size_t socle_dimension = 0;
  std::size_t index = 0;
  std::size_t graded_index = 0;
  std::vector<std::size_t> decomposition_lengths;  // distinct lengths seen, ascending
  std::size_t decompositions = 0;
  bool truncated = false;                          // decomposition search hit its budget
  std::vector<std::string> failures;
  std::string fixture;                             // dump of the algebra, set when something failed

  bool passed() const { return failures.empty(); }
};

/// Checks on a graded algebra: graded-irreducible ⇔ irreducible for every
/// graded ideal, r = r^g, r = socle dimension, and every irredundant
/// irreducible decomposition of 0 has the same length. Failures are data.
/// Throws NotGraded or CapExceeded.
OracleReport oracle_theorems(const FiniteAlgebra& a, double cap = kDefaultOracleCap);

/// A .gx document plus a `#!` block carrying the multiplication table:
///
///   ring GF(3)[x,y];
///   ideal I = x^2+x*y, x^2-y^2, y^3;
///   #! basis 1 y x y^2
///   #! degrees 0 1 1 2
///   #! graded 1
///   #! mult x
///   #! 0 0 0 0
///   ...            (one row per basis vector)
///
/// Lines starting with `#` are comments to the parser, so the file is also a
/// plain .gx document.
std::string dump_fixture(const FiniteAlgebra& a);
/// Uses the `#!` table when present, otherwise builds A from ideal I (or the
/// first ideal). Throws Parse on malformed tables.
FiniteAlgebra load_fixture(std::string_view text);

}  // namespace gradix
