#pragma once

// Indices of reducibility, irreducibility predicates, the r(I) vs r(I*)
// comparison and the corpus harness for r = r^g.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gradix/invsys.hpp"
#include "gradix/kernels.hpp"
#include "gradix/star.hpp"

namespace gradix {

inline constexpr std::uint64_t kDefaultSeed = 20151017;

/// A result that contradicts a theorem the library relies on. These are
/// reported, never thrown away.
struct TheoremEvent {
  std::string statement;
  std::string detail;
};

/// Type of R/I at its maximal radical. Throws NotZeroDimensional or
/// RadicalNotMaximal.
std::size_t index_of_reducibility(const Ideal& ideal);

struct GradedIndex {
  std::size_t value = 0;
  char branch = 'a';  // 'a': R/I finite; 'b': dehomogenized at a unit
  std::optional<Polynomial> nonzerodivisor;
  std::optional<Ideal> dehomogenized;
};

/// r^g of a graded ideal whose quotient is *Artinian. Branch (b) picks a
/// homogeneous nonzerodivisor l of nonzero degree (unit variables, then
/// variables, then seeded random forms), certified by (I : l) = I, and
/// returns the type of R/(I + (l - 1)). Throws NotGraded, NotStarArtinian,
/// NoNonzerodivisorFound.
GradedIndex graded_index_detail(const Ideal& ideal, std::uint64_t seed = kDefaultSeed);
std::size_t graded_index(const Ideal& ideal);

Verdict is_irreducible(const Ideal& ideal);
/// Throws NotGraded.
Verdict is_graded_irreducible(const Ideal& ideal);

struct ReducReport {
  DecompReport decomposition;
  std::vector<TheoremEvent> contradictions;
};

/// decompose() plus the indices; r != r^g on a graded ideal is recorded as a
/// contradiction.
ReducReport decompose_report(const Ideal& ideal, bool graded);

/// r(I*) with I* = star(I).
std::size_t index_of_star(const Ideal& ideal);

/// dim over R/at of I/(base + at*I). Throws ContainmentFailure unless
/// base ⊆ I ⊆ at; `at` must be zero-dimensional.
std::size_t local_min_generators(const Ideal& ideal, const Ideal& at, const std::optional<Ideal>& base = std::nullopt);

enum class Principal { Yes, No, Unknown };

struct StarComparison {
  std::size_t r = 0;
  std::size_t r_star = 0;
  Principal quotient_principal = Principal::Unknown;
  std::optional<std::size_t> quotient_generators;
  bool radical_graded = false;
  bool hypothesis_met = false;
  bool conclusion_holds = false;
  StarResult star;
  Ideal radical;
  std::vector<TheoremEvent> contradictions;
};

/// hypothesis: √I not graded and I/I* locally generated by at most one
/// element; conclusion: r(I) = r(I*).
StarComparison compare_star(const Ideal& ideal);

struct EquivalenceEntry {
  std::string fixture;  // .gx document of the input
  bool passed = false;
  std::size_t r = 0;
  std::size_t r_graded = 0;
  std::size_t components = 0;
  std::string failure;
};

struct EquivalenceReport {
  std::vector<EquivalenceEntry> entries;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::vector<TheoremEvent> contradictions;
};

/// For each graded ideal: r = r^g, a graded decomposition of length r whose
/// components all pass the ungraded irreducibility certificate.
EquivalenceReport verify_equivalence(const std::vector<Ideal>& corpus, Exec exec = default_exec());

}  // namespace gradix
