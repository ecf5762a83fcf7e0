#include "gradix/star.hpp"

#include <algorithm>
#include <map>

#include "gradix/artin.hpp"
#include "gradix/kernels.hpp"
#include "gradix/linalg.hpp"

namespace gradix {

namespace {

const MonomialOrder kGrevlex = MonomialOrder::grevlex();

struct GrevlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return kGrevlex.compare(a, b) < 0; }
};

// Monomials of weighted degree exactly d; weights positive.
std::vector<Monomial> monomials_of_weight(const Ring& ring, std::int64_t d) {
  std::vector<Monomial> out;
  const std::size_t n = ring.num_variables();
  if (d < 0) return out;
  std::vector<std::uint32_t> e(n, 0);
  auto rec = [&](auto&& self, std::size_t i, std::int64_t left) -> void {
    if (i == n) {
      if (left == 0) out.push_back(Monomial::from_exponents(e));
      return;
    }
    const std::int64_t w = ring.weight(i);
    for (std::int64_t k = left / w; k >= 0; --k) {
      e[i] = static_cast<std::uint32_t>(k);
      self(self, i + 1, left - k * w);
    }
    e[i] = 0;
  };
  rec(rec, 0, d);
  return out;
}

Ideal reduced(const Ideal& i) { return Ideal(i.ring(), i.basis(kGrevlex).elements()); }

std::int64_t max_generator_degree(const Ideal& ideal) {
  std::int64_t d = 0;
  for (const auto& g : ideal.generators()) {
    for (const auto& t : g.terms()) d = std::max(d, ideal.ring()->degree(t.monomial));
  }
  return d;
}

void assert_star_invariants(const Ideal& input, const Ideal& star) {
  for (const auto& g : star.generators()) {
    if (!g.is_homogeneous() || !contains(input, g)) {
      throw Error(ErrorCode::ConsistencyFailure, "I* generator " + g.to_string() + " is not a homogeneous element of I");
    }
  }
}

}  // namespace

std::string to_string(StarMethod m) {
  switch (m) {
    case StarMethod::Identity:
      return "identity";
    case StarMethod::TruncatedLinearAlgebra:
      return "truncated";
    case StarMethod::LambdaElimination:
      break;
  }
  return "lambda";
}

std::string to_string(StarCertificate c) {
  switch (c) {
    case StarCertificate::Certified:
      return "certified";
    case StarCertificate::BoundedOnly:
      return "bounded";
    case StarCertificate::CertifiedLambda:
      break;
  }
  return "certified-lambda";
}

std::vector<Polynomial> homogeneous_part(const Ideal& ideal, std::int64_t d) {
  const RingPtr& ring = ideal.ring();
  const auto monos = monomials_of_weight(*ring, d);
  if (monos.empty()) return {};
  const auto nfs = monomial_normal_forms(ideal.basis(kGrevlex), monos);
  std::map<Monomial, std::size_t, GrevlexLess> rows;
  for (const auto& f : nfs) {
    for (const auto& t : f.terms()) rows.emplace(t.monomial, rows.size());
  }
  Matrix m(ring->field(), rows.size(), monos.size());
  for (std::size_t c = 0; c < monos.size(); ++c) {
    for (const auto& t : nfs[c].terms()) m(rows.at(t.monomial), c) = t.coeff;
  }
  std::vector<Polynomial> out;
  for (const auto& v : kernel(m)) {
    std::vector<Term> terms;
    for (std::size_t c = 0; c < monos.size(); ++c) {
      if (!v[c].is_zero()) terms.push_back({monos[c], v[c]});
    }
    out.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  return out;
}

StarResult star_truncated(const Ideal& ideal, std::optional<std::int64_t> bound) {
  const RingPtr& ring = ideal.ring();
  if (!ring->has_positive_weights()) {
    throw Error(ErrorCode::NotPositivelyGraded, "truncated I* needs positive weights");
  }
  if (is_unit_ideal(ideal)) return StarResult{reduced(ideal), StarMethod::TruncatedLinearAlgebra, StarCertificate::Certified};

  std::vector<Polynomial> gens;
  StarResult result{Ideal(ring), StarMethod::TruncatedLinearAlgebra, StarCertificate::Certified};
  std::int64_t top = 0;
  if (const auto d = nilpotency_degree(ideal)) {
    const std::int64_t wmax = *std::max_element(ring->weights().begin(), ring->weights().end());
    top = static_cast<std::int64_t>(*d) * wmax - 1;
    for (const auto& m : monomials_of_total_degree(ring->num_variables(), *d)) {
      gens.push_back(Polynomial::term(ring, m, ring->field().one()));
    }
  } else if (bound) {
    top = *bound;
    result.certificate = StarCertificate::BoundedOnly;
    result.bound = bound;
  } else {
    throw Error(ErrorCode::MissingBound, ideal.to_string() + " is not primary to the variables; give a degree bound");
  }
  for (std::int64_t d = 0; d <= top; ++d) {
    for (auto& g : homogeneous_part(ideal, d)) gens.push_back(std::move(g));
  }
  result.ideal = reduced(Ideal(ring, std::move(gens)));
  assert_star_invariants(ideal, result.ideal);
  return result;
}

StarResult star_lambda(const Ideal& ideal) {
  const RingPtr& ring = ideal.ring();
  const std::string lambda_name = fresh_variable_name(*ring, "lambda");
  const RingPtr big = ring->with_extra_variables({lambda_name}, {0});
  const std::size_t lam = ring->num_variables();
  std::vector<Polynomial> mapped;
  for (const auto& g : ideal.presentation_generators()) {
    std::int64_t low = 0;
    for (const auto& t : g.terms()) low = std::min(low, ring->degree(t.monomial));
    std::vector<Term> terms;
    for (const auto& t : g.terms()) {
      const auto shift = static_cast<std::uint32_t>(ring->degree(t.monomial) - low);
      terms.push_back({t.monomial * Monomial::variable(lam, shift), t.coeff});
    }
    mapped.push_back(Polynomial::from_terms(big, std::move(terms)));
  }
  const Ideal sat = saturate(Ideal(big, std::move(mapped)), Polynomial::variable(big, lam));
  const std::size_t elim[] = {lam};
  const Ideal e = eliminate(sat, elim);
  std::vector<Polynomial> gens;
  for (const auto& g : e.basis(kGrevlex).elements()) gens.push_back(g.contract(ring));
  StarResult result{reduced(Ideal(ring, std::move(gens))), StarMethod::LambdaElimination,
                    StarCertificate::CertifiedLambda};
  result.finite_field = !ring->field().is_rational();
  assert_star_invariants(ideal, result.ideal);
  return result;
}

StarResult star(const Ideal& ideal) {
  if (is_graded(ideal)) return StarResult{reduced(ideal), StarMethod::Identity, StarCertificate::Certified};
  const RingPtr& ring = ideal.ring();
  if (ring->has_positive_weights() && nilpotency_degree(ideal)) return star_truncated(ideal);
  StarResult lam = star_lambda(ideal);
  if (ring->has_positive_weights()) {
    const std::int64_t bound = max_generator_degree(ideal) + 2;
    const StarResult tr = star_truncated(ideal, bound);
    bool agree = is_subset(tr.ideal, lam.ideal);
    for (const auto& g : lam.ideal.generators()) {
      if (*g.weighted_degree() <= bound && !contains(tr.ideal, g)) agree = false;
    }
    if (!agree) {
      throw Error(ErrorCode::ConsistencyFailure, "lambda and truncated I* disagree up to degree " + std::to_string(bound));
    }
  }
  return lam;
}

}  // namespace gradix
