#include "gradix/invsys.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace gradix {

namespace {

const MonomialOrder kGrevlex = MonomialOrder::grevlex();

struct GrevlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return kGrevlex.compare(a, b) < 0; }
};

std::vector<Monomial> monomials_up_to(std::size_t n, std::uint32_t d) {
  std::vector<Monomial> out;
  for (std::uint32_t k = 0; k <= d; ++k) {
    for (auto& m : monomials_of_total_degree(n, k)) out.push_back(m);
  }
  return out;
}

Polynomial monomial_poly(const RingPtr& ring, const Monomial& m) {
  return Polynomial::term(ring, m, ring->field().one());
}

// Leave-one-out intersections through prefix and suffix products.
std::vector<Ideal> leave_one_out(const std::vector<Ideal>& parts) {
  const std::size_t r = parts.size();
  std::vector<Ideal> out;
  if (r < 2) return out;
  std::vector<std::optional<Ideal>> prefix(r + 1), suffix(r + 1);
  for (std::size_t i = 0; i < r; ++i) prefix[i + 1] = prefix[i] ? intersect(*prefix[i], parts[i]) : parts[i];
  for (std::size_t i = r; i-- > 0;) suffix[i] = suffix[i + 1] ? intersect(parts[i], *suffix[i + 1]) : parts[i];
  for (std::size_t i = 0; i < r; ++i) {
    if (!prefix[i]) {
      out.push_back(*suffix[i + 1]);
    } else if (!suffix[i + 1]) {
      out.push_back(*prefix[i]);
    } else {
      out.push_back(intersect(*prefix[i], *suffix[i + 1]));
    }
  }
  return out;
}

bool irredundant(const Ideal& ideal, const std::vector<Ideal>& parts) {
  for (const Ideal& rest : leave_one_out(parts)) {
    if (ideal_equal(rest, ideal)) return false;
  }
  return !parts.empty();
}

Ideal reduced(const Ideal& i) { return Ideal(i.ring(), i.basis(kGrevlex).elements()); }

}  // namespace

std::string DualPoly::to_string() const {
  const Ring& r = *poly.ring();
  if (r.has_laurent_variables()) return poly.to_string();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < r.num_variables(); ++i) {
    std::string n = r.name(i);
    for (auto& c : n) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    names.push_back(n);
  }
  try {
    const RingPtr dual = Ring::create(r.field(), names, r.weights());
    return Polynomial::from_sorted_terms(dual, poly.terms(), poly.order()).to_string();
  } catch (const Error&) {
    return poly.to_string();
  }
}

DualPoly contract(const Polynomial& g, const DualPoly& f) {
  check_same_ring(g.ring(), f.poly.ring());
  std::vector<Term> terms;
  for (const auto& tg : g.terms()) {
    for (const auto& tf : f.poly.terms()) {
      if (tg.monomial.divides(tf.monomial)) terms.push_back({tf.monomial / tg.monomial, tg.coeff * tf.coeff});
    }
  }
  return DualPoly{Polynomial::from_terms(f.poly.ring(), std::move(terms), f.poly.order())};
}

InverseSystem inverse_system(const Ideal& ideal) {
  const RingPtr& ring = ideal.ring();
  if (!ring->has_positive_weights()) throw Error(ErrorCode::NotPositivelyGraded, "inverse systems need positive weights");
  const auto degree = nilpotency_degree(ideal);
  if (!degree) throw Error(ErrorCode::NotIrrelevantPrimary, ideal.to_string() + " is not primary to the variables");
  const std::uint32_t d = *degree;
  const GroebnerBasis& gb = ideal.basis(kGrevlex);
  const QuotientBasis q = quotient_basis(ideal);
  const std::size_t n = ring->num_variables();

  InverseSystem inv{ideal, d, {}, {}};
  const std::vector<Monomial> below = monomials_up_to(n, d - 1);
  const auto nfs = monomial_normal_forms(gb, below);
  std::vector<std::vector<Term>> dual_terms(q.dimension());
  for (std::size_t a = 0; a < below.size(); ++a) {
    for (const auto& t : nfs[a].terms()) dual_terms[*q.index_of(t.monomial)].push_back({below[a], t.coeff});
  }
  for (auto& terms : dual_terms) inv.basis.push_back(DualPoly{Polynomial::from_terms(ring, std::move(terms))});

  // Coordinates of dual polynomials on the monomials of degree < d.
  std::map<Monomial, std::size_t, GrevlexLess> index;
  for (std::size_t a = 0; a < below.size(); ++a) index.emplace(below[a], a);
  auto coords = [&](const DualPoly& f) {
    Vector v = zero_vector(ring->field(), below.size());
    for (const auto& t : f.poly.terms()) v[index.at(t.monomial)] = t.coeff;
    return v;
  };

  Subspace span(ring->field(), below.size());
  for (const auto& f : inv.basis) {
    for (std::size_t i = 0; i < n; ++i) span.insert(coords(contract(Polynomial::variable(ring, i), f)));
  }
  std::vector<std::size_t> order(inv.basis.size());
  for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
  const MonomialOrder lex = MonomialOrder::lex();
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& fa = inv.basis[a].poly;
    const auto& fb = inv.basis[b].poly;
    if (fa.total_degree() != fb.total_degree()) return fa.total_degree() > fb.total_degree();
    return lex.greater(fa.with_order(lex).leading_monomial(), fb.with_order(lex).leading_monomial());
  });
  for (std::size_t j : order) {
    if (span.insert(coords(inv.basis[j]))) inv.generators.push_back(inv.basis[j]);
  }
  return inv;
}

Ideal annihilator(const DualPoly& f, const RingPtr& ring) {
  if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "annihilator of the zero dual element");
  check_same_ring(ring, f.poly.ring());
  const std::size_t n = ring->num_variables();
  const std::uint32_t d = f.degree();
  const std::vector<Monomial> monos = monomials_up_to(n, d);
  std::map<Monomial, std::size_t, GrevlexLess> rows;
  std::vector<DualPoly> images;
  for (const auto& e : monos) {
    images.push_back(contract(monomial_poly(ring, e), f));
    for (const auto& t : images.back().poly.terms()) rows.emplace(t.monomial, rows.size());
  }
  Matrix m(ring->field(), rows.size(), monos.size());
  for (std::size_t c = 0; c < monos.size(); ++c) {
    for (const auto& t : images[c].poly.terms()) m(rows.at(t.monomial), c) = t.coeff;
  }
  std::vector<Polynomial> gens;
  for (const auto& v : kernel(m)) {
    std::vector<Term> terms;
    for (std::size_t c = 0; c < monos.size(); ++c) {
      if (!v[c].is_zero()) terms.push_back({monos[c], v[c]});
    }
    gens.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  for (const auto& e : monomials_of_total_degree(n, d + 1)) gens.push_back(monomial_poly(ring, e));
  return reduced(Ideal(ring, std::move(gens)));
}

Ideal annihilator(const std::vector<DualPoly>& generators, const RingPtr& ring) {
  std::vector<Ideal> parts;
  for (const auto& f : generators) parts.push_back(annihilator(f, ring));
  return reduced(intersect_all(parts));
}

DecompReport decompose(const Ideal& ideal, bool graded) {
  if (graded && !is_graded(ideal)) throw Error(ErrorCode::NotGraded, ideal.to_string() + " is not graded");
  const InverseSystem inv = inverse_system(ideal);
  DecompReport report{ideal, {}, 0, std::nullopt, false, false, false, false};
  for (const auto& f : inv.generators) report.components.push_back(annihilator(f, ideal.ring()));
  report.r = report.components.size();
  if (graded) report.r_graded = report.r;
  report.intersection_verified = ideal_equal(intersect_all(report.components), ideal);
  report.irredundant = irredundant(ideal, report.components);
  report.all_graded = std::all_of(report.components.begin(), report.components.end(),
                                  [](const Ideal& c) { return is_graded(c); });
  // Each component contains a power of every variable, so its socle at the
  // variables is the whole socle.
  report.all_irreducible_certified =
      std::all_of(report.components.begin(), report.components.end(),
                  [](const Ideal& c) { return socle(quotient_basis(c)).dimension == 1; });
  return report;
}

DecompositionCheck verify_decomposition(const Ideal& ideal, const std::vector<Ideal>& parts) {
  DecompositionCheck check;
  if (parts.empty()) {
    check.valid = is_unit_ideal(ideal);
    check.reason = "empty intersection is the unit ideal";
    return check;
  }
  for (const auto& p : parts) check_same_ring(ideal.ring(), p.ring());
  if (!ideal_equal(intersect_all(parts), ideal)) {
    check.reason = "intersection of the parts differs from the ideal";
    return check;
  }
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const Verdict v = certify_irreducible(parts[k]);
    check.irreducible.push_back(v.value);
    if (v.value == Certainty::False && check.reason.empty()) {
      check.reason = "part " + std::to_string(k + 1) + " is reducible (" + v.diagnostic + ")";
    }
  }
  check.valid = check.reason.empty();
  check.irredundant = irredundant(ideal, parts);
  if (check.valid && !check.irredundant) check.reason = "valid but redundant";
  return check;
}

std::optional<std::pair<Ideal, Ideal>> monomial_split(const Ideal& ideal) {
  for (const auto& g : ideal.generators()) {
    if (!g.is_monomial()) throw Error(ErrorCode::NotMonomial, g.to_string() + " is not a monomial");
  }
  if (ideal.ring()->has_laurent_variables()) throw Error(ErrorCode::NotMonomial, "Laurent rings are not supported");
  const RingPtr& ring = ideal.ring();
  for (const auto& g : ideal.basis(kGrevlex).elements()) {
    const Monomial& lm = g.leading_monomial();
    if (lm.support_size() < 2) continue;
    std::size_t i = 0;
    while (lm[i] == 0) ++i;
    const Monomial m = Monomial::variable(i, lm[i]);
    const Monomial rest = lm / m;
    Ideal a = reduced(add_generators(ideal, {monomial_poly(ring, m)}));
    Ideal b = reduced(add_generators(ideal, {monomial_poly(ring, rest)}));
    if (!ideal_equal(intersect(a, b), ideal)) throw Error(ErrorCode::Internal, "monomial splitting failed to verify");
    return std::make_pair(std::move(a), std::move(b));
  }
  return std::nullopt;
}

}  // namespace gradix
