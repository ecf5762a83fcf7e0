#pragma once

// Dense univariate polynomials over a coefficient field, low degree first.
// Internal to the library.

#include <optional>
#include <utility>
#include <vector>

#include "gradix/coeff.hpp"
#include "gradix/linalg.hpp"
#include "gradix/poly.hpp"

namespace gradix::detail {

using UPoly = std::vector<FieldElem>;

void trim(UPoly& f);
inline bool is_zero(const UPoly& f) { return f.empty(); }
inline std::size_t degree(const UPoly& f) { return f.empty() ? 0 : f.size() - 1; }

UPoly monic(UPoly f);
UPoly derivative(const UPoly& f);
UPoly mul(const UPoly& a, const UPoly& b);
UPoly sub(UPoly a, const UPoly& b);
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(UPoly a, UPoly b);

/// Product of the distinct monic irreducible factors of f (f nonzero).
UPoly squarefree_part(const UPoly& f, const Field& field);

/// Ben-Or's test over GF(p). f monic of positive degree.
bool irreducible_mod_p(const UPoly& f, const Field& field);

/// Over QQ: false if f has a rational root (and degree > 1), true if f has
/// degree <= 3 and no rational root, nullopt otherwise or when the root
/// candidates are too many to enumerate.
std::optional<bool> irreducible_over_q(const UPoly& f);

/// Minimal monic p with p(M) v = 0 (Krylov dependency search).
UPoly minimal_polynomial(const Matrix& m, const Vector& v);

/// f(x_var) as a polynomial of `ring`.
Polynomial to_polynomial(const UPoly& f, const RingPtr& ring, std::size_t var);
/// f(M).
Matrix evaluate(const UPoly& f, const Matrix& m);

}  // namespace gradix::detail
