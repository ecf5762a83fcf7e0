#pragma once

// The .gx input language:
//
//   # comment
//   ring QQ[x,y,t,t^-1] weights(0,1,1);
//   order grevlex;
//   ideal I = x-y, t-1, x^2;
//
// Precedence, loosest first: binary +/-, then * and /, then unary minus,
// then ^. Multiplication is always explicit. `t^-1` in the variable list
// makes t invertible; `t^-k` is then allowed in expressions.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gradix/groebner.hpp"

namespace gradix {

struct Document {
  RingPtr ring;
  MonomialOrder order = MonomialOrder::grevlex();
  std::vector<std::string> ideal_names;  // declaration order
  std::map<std::string, Ideal> ideals;

  const Ideal& ideal(const std::string& name) const;
};

/// Throws ParseError (with line and column) on malformed input, unknown
/// variables, duplicate ideal names or a bad GF modulus.
Document parse_document(std::string_view text);
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);

std::string render(const Polynomial& f);
/// Comma-separated generators, "0" for the zero ideal.
std::string render(const Ideal& ideal);
/// A complete document declaring `ring` and the named ideals.
std::string render_document(const RingPtr& ring, const std::vector<std::pair<std::string, Ideal>>& ideals);

}  // namespace gradix
