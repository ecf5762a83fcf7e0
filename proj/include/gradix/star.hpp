#pragma once

// I*, the ideal generated by the homogeneous elements of I.

#include <cstdint>
#include <optional>
#include <string>

#include "gradix/groebner.hpp"

namespace gradix {

enum class StarMethod { Identity, TruncatedLinearAlgebra, LambdaElimination };
enum class StarCertificate { Certified, BoundedOnly, CertifiedLambda };

std::string to_string(StarMethod m);
std::string to_string(StarCertificate c);

struct StarResult {
  Ideal ideal;
  StarMethod method = StarMethod::Identity;
  StarCertificate certificate = StarCertificate::Certified;
  std::optional<std::int64_t> bound;  // degrees searched, when bounded
  bool finite_field = false;          // lambda method over GF(p)
};

/// Homogeneous elements of I of weighted degree <= bound (or up to the
/// certified bound when I is primary to the variables). Throws
/// NotPositivelyGraded or MissingBound.
StarResult star_truncated(const Ideal& ideal, std::optional<std::int64_t> bound = std::nullopt);

/// Eliminates λ from the saturation of (λ^N g(λ^w x)). Any weights.
StarResult star_lambda(const Ideal& ideal);

/// Identity for graded input, truncated for primary positively graded
/// input, otherwise lambda cross-checked against the truncated method up to
/// the largest generator degree + 2. Throws ConsistencyFailure.
StarResult star(const Ideal& ideal);

/// Homogeneous elements of I of weighted degree exactly d (positive
/// weights), as a k-basis.
std::vector<Polynomial> homogeneous_part(const Ideal& ideal, std::int64_t d);

}  // namespace gradix
