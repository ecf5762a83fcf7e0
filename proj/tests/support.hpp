#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "gradix/groebner.hpp"
#include "gradix/parser.hpp"

namespace testing {

inline gradix::RingPtr ring_of(const std::string& decl) {
  return gradix::parse_document("ring " + decl + ";").ring;
}

inline gradix::Polynomial poly(const gradix::RingPtr& r, const std::string& text) {
  return gradix::parse_polynomial(r, text);
}

inline gradix::Ideal ideal(const gradix::RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<gradix::Polynomial> ps;
  for (const char* g : gens) ps.push_back(gradix::parse_polynomial(r, g));
  return gradix::Ideal(r, std::move(ps));
}

inline std::string basis_text(const gradix::Ideal& i) {
  std::string out;
  for (const auto& g : gradix::groebner_basis(i)) {
    if (!out.empty()) out += ", ";
    out += gradix::render(g);
  }
  return out;
}

}  // namespace testing
