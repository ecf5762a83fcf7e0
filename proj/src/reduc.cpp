#include "gradix/reduc.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "gradix/artin.hpp"
#include "gradix/parser.hpp"

namespace gradix {

namespace {

const MonomialOrder kGrevlex = MonomialOrder::grevlex();

struct GrevlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return kGrevlex.compare(a, b) < 0; }
};

std::vector<Polynomial> nonzerodivisor_candidates(const RingPtr& ring, std::uint64_t seed) {
  std::vector<Polynomial> out;
  std::vector<bool> used(ring->num_variables(), false);
  for (std::size_t i = 0; i < ring->num_declared(); ++i) {
    if (ring->is_invertible(i) && ring->weight(i) != 0) {
      out.push_back(Polynomial::variable(ring, i));
      used[i] = true;
    }
  }
  std::map<std::int64_t, std::vector<std::size_t>> by_weight;
  for (std::size_t i = 0; i < ring->num_variables(); ++i) {
    if (ring->weight(i) == 0) continue;
    by_weight[ring->weight(i)].push_back(i);
    if (!used[i]) out.push_back(Polynomial::variable(ring, i));
  }
  if (by_weight.empty()) return out;
  std::mt19937_64 rng(seed);
  const Field& field = ring->field();
  const std::uint64_t range = field.is_rational() ? 19 : field.characteristic();
  for (int attempt = 0; attempt < 32; ++attempt) {
    auto it = by_weight.begin();
    std::advance(it, static_cast<long>(rng() % by_weight.size()));
    std::vector<Term> terms;
    for (std::size_t v : it->second) {
      const auto c = field.is_rational() ? field.from_int(static_cast<long>(rng() % range) - 9)
                                         : field.from_int(static_cast<long>(rng() % range));
      if (!c.is_zero()) terms.push_back({Monomial::variable(v), c});
    }
    if (terms.empty()) terms.push_back({Monomial::variable(it->second.front()), field.one()});
    out.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  return out;
}

std::string fixture_of(const Ideal& ideal) { return render_document(ideal.ring(), {{"I", ideal}}); }

}  // namespace

std::size_t index_of_reducibility(const Ideal& ideal) {
  try {
    return type_of_quotient(ideal);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::RadicalNotMaximal) {
      throw Error(ErrorCode::RadicalNotMaximal,
                  std::string(e.what()) + "; r(I) is only certified when R/I is Artinian local");
    }
    throw;
  }
}

GradedIndex graded_index_detail(const Ideal& ideal, std::uint64_t seed) {
  if (!is_graded(ideal)) throw Error(ErrorCode::NotGraded, ideal.to_string() + " is not graded");
  if (is_unit_ideal(ideal)) throw Error(ErrorCode::InvalidArgument, "the unit ideal has no index of reducibility");
  if (is_zero_dimensional(ideal)) {
    return GradedIndex{graded_socle_rank(quotient_basis(ideal)).rank, 'a', std::nullopt, std::nullopt};
  }
  const RingPtr& ring = ideal.ring();
  const Polynomial one = Polynomial::constant(ring, ring->field().one());
  std::optional<Error> last;
  for (const auto& l : nonzerodivisor_candidates(ring, seed)) {
    if (!ideal_equal(quotient(ideal, l), ideal)) continue;
    if (!is_unit_ideal(add_generators(ideal, {l}))) {
      throw Error(ErrorCode::NotStarArtinian, "the homogeneous nonzerodivisor " + l.to_string() +
                                                  " is not a unit, so R/I is not *Artinian");
    }
    const Ideal dehom = add_generators(ideal, {l - one});
    if (!is_zero_dimensional(dehom)) {
      throw Error(ErrorCode::NotStarArtinian, "R/(I + (" + l.to_string() + " - 1)) is not finite-dimensional");
    }
    try {
      return GradedIndex{type_of_quotient(dehom), 'b', l, dehom};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::RadicalNotMaximal) throw;
      last = e;
    }
  }
  if (last) throw *last;
  throw Error(ErrorCode::NoNonzerodivisorFound, "no homogeneous nonzerodivisor of nonzero degree modulo " +
                                                    ideal.to_string());
}

std::size_t graded_index(const Ideal& ideal) { return graded_index_detail(ideal).value; }

Verdict is_irreducible(const Ideal& ideal) { return certify_irreducible(ideal); }

Verdict is_graded_irreducible(const Ideal& ideal) {
  if (!is_graded(ideal)) throw Error(ErrorCode::NotGraded, ideal.to_string() + " is not graded");
  if (is_unit_ideal(ideal)) return {Certainty::False, "the unit ideal is not proper"};
  try {
    const std::size_t r = graded_index(ideal);
    return {r == 1 ? Certainty::True : Certainty::False, "graded index " + std::to_string(r)};
  } catch (const Error& e) {
    if (!is_scope_refusal(e.code())) throw;
    return {Certainty::Uncertified, e.what()};
  }
}

ReducReport decompose_report(const Ideal& ideal, bool graded) {
  ReducReport report{decompose(ideal, graded), {}};
  DecompReport& d = report.decomposition;
  const std::size_t r = index_of_reducibility(ideal);
  if (d.components.size() != r) {
    report.contradictions.push_back({"an irredundant irreducible decomposition has length r(I)",
                                     std::to_string(d.components.size()) + " components but r = " + std::to_string(r)});
  }
  d.r = r;
  if (graded) {
    const std::size_t rg = graded_index(ideal);
    d.r_graded = rg;
    if (rg != r) {
      report.contradictions.push_back(
          {"r(I) = r^g(I) for graded I", "r = " + std::to_string(r) + ", r^g = " + std::to_string(rg)});
    }
  }
  return report;
}

std::size_t index_of_star(const Ideal& ideal) { return graded_index(star(ideal).ideal); }

std::size_t local_min_generators(const Ideal& ideal, const Ideal& at, const std::optional<Ideal>& base) {
  check_same_ring(ideal.ring(), at.ring());
  if (!is_subset(ideal, at)) {
    throw Error(ErrorCode::ContainmentFailure, ideal.to_string() + " is not contained in " + at.to_string());
  }
  if (base) {
    check_same_ring(ideal.ring(), base->ring());
    if (!is_subset(*base, ideal)) {
      throw Error(ErrorCode::ContainmentFailure, base->to_string() + " is not contained in " + ideal.to_string());
    }
  }
  const auto residue = standard_monomials(at);
  if (!residue || residue->empty()) {
    throw Error(ErrorCode::NotZeroDimensional, at.to_string() + " is not a zero-dimensional proper ideal");
  }
  const RingPtr& ring = ideal.ring();
  Ideal modulus = ideal_product(at, ideal);
  if (base) modulus = ideal_sum(modulus, *base);
  const GroebnerBasis& gb = modulus.basis(kGrevlex);

  std::vector<Polynomial> images;
  for (const auto& g : ideal.basis(kGrevlex).elements()) {
    for (const auto& b : *residue) images.push_back(gb.reduce(g.mul_term(b, ring->field().one())));
  }
  std::map<Monomial, std::size_t, GrevlexLess> cols;
  for (const auto& f : images) {
    for (const auto& t : f.terms()) cols.emplace(t.monomial, cols.size());
  }
  Matrix m(ring->field(), images.size(), cols.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (const auto& t : images[i].terms()) m(i, cols.at(t.monomial)) = t.coeff;
  }
  const std::size_t dim = rank(m);
  if (dim % residue->size() != 0) throw Error(ErrorCode::Internal, "I/(at*I) is not a vector space over R/at");
  return dim / residue->size();
}

StarComparison compare_star(const Ideal& ideal) {
  StarComparison c{0, 0, Principal::Unknown, std::nullopt, false, false, false, star(ideal), Ideal(ideal.ring()), {}};
  c.r = index_of_reducibility(ideal);
  c.radical = radical_maximal_certify(ideal).radical;
  c.r_star = graded_index(c.star.ideal);
  c.radical_graded = is_graded(c.radical);
  c.quotient_generators = local_min_generators(ideal, c.radical, c.star.ideal);
  c.quotient_principal = *c.quotient_generators <= 1 ? Principal::Yes : Principal::No;
  c.hypothesis_met = !c.radical_graded && *c.quotient_generators <= 1;
  c.conclusion_holds = c.r == c.r_star;
  if (c.hypothesis_met && !c.conclusion_holds) {
    c.contradictions.push_back({"if √I is not graded and I/I* is principal then r(I) = r(I*)",
                                "r = " + std::to_string(c.r) + ", r* = " + std::to_string(c.r_star) + " for " +
                                    ideal.to_string()});
  }
  return c;
}

EquivalenceReport verify_equivalence(const std::vector<Ideal>& corpus, Exec exec) {
  EquivalenceReport report;
  report.entries.resize(corpus.size());
  std::vector<std::vector<TheoremEvent>> events(corpus.size());
  for_each_index(corpus.size(), exec, [&](std::size_t k) {
    const Ideal& ideal = corpus[k];
    EquivalenceEntry& e = report.entries[k];
    e.fixture = fixture_of(ideal);
    try {
      e.r = index_of_reducibility(ideal);
      e.r_graded = graded_index(ideal);
      const DecompReport d = decompose(ideal, true);
      e.components = d.components.size();
      std::vector<std::string> problems;
      if (e.r != e.r_graded) {
        problems.push_back("r != r^g");
        events[k].push_back({"r(I) = r^g(I) for graded I", "r = " + std::to_string(e.r) +
                                                                ", r^g = " + std::to_string(e.r_graded)});
      }
      if (e.components != e.r) problems.push_back("component count != r");
      if (!d.intersection_verified) problems.push_back("components do not intersect to I");
      if (!d.irredundant) problems.push_back("decomposition is redundant");
      if (!d.all_graded) problems.push_back("a component is not graded");
      for (const auto& comp : d.components) {
        const Verdict v = certify_irreducible(comp);
        if (v.value != Certainty::True) {
          problems.push_back("component " + comp.to_string() + " fails the irreducibility certificate");
          events[k].push_back({"graded-irreducible implies irreducible", comp.to_string() + ": " + v.diagnostic});
        }
      }
      for (const auto& p : problems) e.failure += (e.failure.empty() ? "" : "; ") + p;
      e.passed = problems.empty();
    } catch (const Error& err) {
      e.failure = err.what();
    }
  });
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    (report.entries[k].passed ? report.passed : report.failed) += 1;
    for (auto& ev : events[k]) report.contradictions.push_back(std::move(ev));
  }
  return report;
}

}  // namespace gradix
