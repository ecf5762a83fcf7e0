#pragma once

// Finite-dimensional quotients R/I: multiplication matrices, socles, type,
// Hilbert function and certification that the radical is maximal.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gradix/groebner.hpp"
#include "gradix/kernels.hpp"
#include "gradix/linalg.hpp"

namespace gradix {

/// R/I on its grevlex standard monomials. Column j of multiplication(i) is
/// the coordinate vector of x_i * b_j.
class QuotientBasis {
 public:
  const Ideal& ideal() const { return ideal_; }
  const RingPtr& ring() const { return ideal_.ring(); }
  const Field& field() const { return ideal_.ring()->field(); }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  std::size_t dimension() const { return monomials_.size(); }
  const std::vector<Matrix>& multiplication() const { return mult_; }
  const Matrix& multiplication(std::size_t var) const { return mult_[var]; }
  const std::vector<std::int64_t>& degrees() const { return degrees_; }
  /// True when I is graded, so every basis monomial spans part of one graded
  /// piece.
  bool graded() const { return graded_; }

  std::optional<std::size_t> index_of(const Monomial& m) const;
  /// Coordinates of the class of f.
  Vector coordinates(const Polynomial& f) const;
  /// Normal-form representative of a coordinate vector.
  Polynomial element(const Vector& v) const;
  /// Matrix of multiplication by g.
  Matrix multiplication_by(const Polynomial& g, Exec exec = default_exec()) const;

 private:
  friend QuotientBasis quotient_basis(const Ideal&, Exec);
  explicit QuotientBasis(Ideal ideal) : ideal_(std::move(ideal)) {}

  Ideal ideal_;
  std::vector<Monomial> monomials_;
  std::vector<Matrix> mult_;
  std::vector<std::int64_t> degrees_;
  bool graded_ = false;
};

/// Throws NotZeroDimensional if R/I is infinite-dimensional.
QuotientBasis quotient_basis(const Ideal& ideal, Exec exec = default_exec());

struct SocleData {
  std::vector<Polynomial> basis;
  std::size_t dimension = 0;
  std::vector<bool> homogeneous;
  std::map<std::int64_t, std::size_t> degree_histogram;  // homogeneous vectors only
};

/// 0 :_{R/I} (x_1..x_n).
SocleData socle(const QuotientBasis& q);
/// 0 :_{R/I} m for an ideal m (normally the radical of I).
SocleData socle_at(const QuotientBasis& q, const Ideal& m);

struct RadicalCertificate {
  bool maximal = false;
  Ideal radical;
  std::size_t residue_dimension = 0;  // dim_k R/√I
  std::string detail;
};

/// √I for zero-dimensional I, with a decision whether it is maximal.
/// Throws NotZeroDimensional, or RadicalUncertified when maximality cannot
/// be decided over QQ.
RadicalCertificate radical_maximal_certify(const Ideal& ideal);

/// dim over R/√I of the socle at √I. Throws NotZeroDimensional or
/// RadicalNotMaximal.
std::size_t type_of_quotient(const Ideal& ideal);

struct GradedSocleRank {
  std::size_t rank = 0;
  std::map<std::int64_t, std::size_t> degree_histogram;
};

/// Rank of the socle over the graded residue field. Throws NotGraded.
GradedSocleRank graded_socle_rank(const QuotientBasis& q);

/// Dimensions of the graded pieces, ascending degree. Throws NotGraded or
/// NotPositivelyGraded.
std::vector<std::pair<std::int64_t, std::size_t>> hilbert_function(const QuotientBasis& q);

/// Monic minimal polynomial of g in R/I, as a polynomial in variable `var`.
Polynomial minimal_polynomial(const QuotientBasis& q, const Polynomial& g, std::size_t var);

enum class Certainty { True, False, Uncertified };

std::string to_string(Certainty c);

struct Verdict {
  Certainty value = Certainty::Uncertified;
  std::string diagnostic;
};

/// Irreducible iff the socle at the maximal radical is one-dimensional over
/// the residue field. Certified only for zero-dimensional I with maximal
/// radical; never throws for scope reasons.
Verdict certify_irreducible(const Ideal& ideal);

/// Least D with (x_1..x_n)^D ⊆ I, if I is primary to the variables.
std::optional<std::uint32_t> nilpotency_degree(const Ideal& ideal);

/// Monomials in n variables of total degree exactly d.
std::vector<Monomial> monomials_of_total_degree(std::size_t n, std::uint32_t d);

/// The ideal (x_1..x_n) of all presentation variables.
Ideal variables_ideal(const RingPtr& ring);

}  // namespace gradix
