#include "gradix/groebner.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>

namespace gradix {

namespace {

const Polynomial* find_divisor(const Monomial& m, std::span<const Polynomial> divisors) {
  for (const auto& g : divisors) {
    if (g.leading_monomial().divides(m)) return &g;
  }
  return nullptr;
}

const Polynomial* find_divisor(const Monomial& m, const std::vector<const Polynomial*>& divisors) {
  for (const auto* g : divisors) {
    if (g->leading_monomial().divides(m)) return g;
  }
  return nullptr;
}

template <typename Divisors>
Polynomial reduce_impl(const Polynomial& f, const MonomialOrder& order, const Divisors& divisors) {
  Polynomial h = f.with_order(order);
  std::vector<Term> remainder;
  while (!h.is_zero()) {
    const Polynomial* g = find_divisor(h.leading_monomial(), divisors);
    if (g == nullptr) {
      remainder.push_back(h.pop_leading());
      continue;
    }
    FieldElem c = h.leading_coeff() / g->leading_coeff();
    Monomial m = h.leading_monomial() / g->leading_monomial();
    h.sub_mul_term(c, m, *g);
  }
  return Polynomial::from_sorted_terms(f.ring(), std::move(remainder), order);
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

}  // namespace

Polynomial reduce_by(const Polynomial& f, std::span<const Polynomial> divisors) {
  if (divisors.empty()) return f;
  return reduce_impl(f, divisors.front().order(), divisors);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial a = f.mul_term(l / f.leading_monomial(), f.leading_coeff().inverse());
  a.sub_mul_term(g.leading_coeff().inverse(), l / g.leading_monomial(), g);
  return a;
}

// ---------------------------------------------------------------- Buchberger

GroebnerBasis buchberger(const RingPtr& ring, const MonomialOrder& order, std::vector<Polynomial> generators) {
  std::vector<Polynomial> polys;
  std::vector<bool> active;
  // Normal selection: smallest lcm first, then generator indices.
  auto pair_less = [&order](const Pair& a, const Pair& b) {
    if (auto c = order.compare(a.lcm, b.lcm); c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  };
  std::set<Pair, decltype(pair_less)> pairs(pair_less);

  auto active_set = [&] {
    std::vector<const Polynomial*> out;
    for (std::size_t k = 0; k < polys.size(); ++k) {
      if (active[k]) out.push_back(&polys[k]);
    }
    return out;
  };

  // Gebauer-Moeller installation of a new basis element.
  auto install = [&](Polynomial h) {
    const std::size_t hi = polys.size();
    const Monomial& lh = h.leading_monomial();
    std::vector<Pair> candidates;
    for (std::size_t k = 0; k < polys.size(); ++k) {
      if (active[k]) candidates.push_back(Pair{k, hi, lcm(polys[k].leading_monomial(), lh)});
    }
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const Pair& p = candidates[a];
      bool coprime = polys[p.i].leading_monomial().coprime(lh);
      bool dominated = false;
      if (!coprime) {
        for (std::size_t b = a + 1; b < candidates.size() && !dominated; ++b) {
          dominated = candidates[b].lcm.divides(p.lcm);
        }
        for (std::size_t b = 0; b < kept.size() && !dominated; ++b) dominated = kept[b].lcm.divides(p.lcm);
      }
      if (coprime || !dominated) kept.push_back(p);
    }
    // Chain criterion on the old pairs.
    for (auto it = pairs.begin(); it != pairs.end();) {
      if (lh.divides(it->lcm) && !(lcm(polys[it->i].leading_monomial(), lh) == it->lcm) &&
          !(lcm(polys[it->j].leading_monomial(), lh) == it->lcm)) {
        it = pairs.erase(it);
      } else {
        ++it;
      }
    }
    // Product criterion on the new pairs.
    for (const auto& p : kept) {
      if (!polys[p.i].leading_monomial().coprime(lh)) pairs.insert(p);
    }
    for (std::size_t k = 0; k < polys.size(); ++k) {
      if (active[k] && lh.divides(polys[k].leading_monomial())) active[k] = false;
    }
    polys.push_back(std::move(h));
    active.push_back(true);
  };

  for (auto& g : generators) {
    check_same_ring(g.ring(), ring);
    Polynomial r = reduce_impl(g, order, active_set());
    if (!r.is_zero()) install(r.monic());
  }
  while (!pairs.empty()) {
    Pair p = *pairs.begin();
    pairs.erase(pairs.begin());
    Polynomial r = reduce_impl(s_polynomial(polys[p.i], polys[p.j]), order, active_set());
    if (!r.is_zero()) install(r.monic());
  }

  // Interreduce the minimal basis.
  std::vector<Polynomial> minimal;
  for (std::size_t k = 0; k < polys.size(); ++k) {
    if (active[k]) minimal.push_back(polys[k]);
  }
  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<const Polynomial*> others;
    for (std::size_t o = 0; o < minimal.size(); ++o) {
      if (o != k) others.push_back(&minimal[o]);
    }
    Polynomial tail = minimal[k];
    Term lead = tail.pop_leading();
    Polynomial r = reduce_impl(tail, order, others);
    r += Polynomial::term(ring, lead.monomial, lead.coeff, order);
    reduced.push_back(r.monic());
  }
  return GroebnerBasis(ring, order, std::move(reduced));
}

GroebnerBasis::GroebnerBasis(RingPtr ring, MonomialOrder order, std::vector<Polynomial> elements)
    : ring_(std::move(ring)), order_(order), elements_(std::move(elements)) {}

Polynomial GroebnerBasis::reduce(const Polynomial& f) const {
  check_same_ring(f.ring(), ring_);
  if (elements_.empty()) return f.with_order(order_);
  return reduce_impl(f, order_, std::span<const Polynomial>(elements_));
}

bool GroebnerBasis::is_unit() const {
  return elements_.size() == 1 && elements_.front().is_constant() && !elements_.front().is_zero();
}

bool GroebnerBasis::is_homogeneous() const {
  return std::all_of(elements_.begin(), elements_.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
}

bool GroebnerBasis::is_zero_dimensional() const {
  if (is_unit()) return true;
  for (std::size_t v = 0; v < ring_->num_variables(); ++v) {
    bool has_pure_power = std::any_of(elements_.begin(), elements_.end(), [&](const Polynomial& g) {
      const Monomial& m = g.leading_monomial();
      return m[v] > 0 && m.support_size() == 1;
    });
    if (!has_pure_power) return false;
  }
  return true;
}

std::optional<std::vector<Monomial>> GroebnerBasis::standard_monomials() const {
  if (!is_zero_dimensional()) return std::nullopt;
  std::vector<Monomial> out;
  if (is_unit()) return out;
  const std::size_t n = ring_->num_variables();
  std::vector<std::uint32_t> bound(n, 0);
  for (const auto& g : elements_) {
    const Monomial& m = g.leading_monomial();
    if (m.support_size() != 1) continue;
    for (std::size_t v = 0; v < n; ++v) {
      if (m[v] > 0) bound[v] = bound[v] == 0 ? m[v] : std::min(bound[v], m[v]);
    }
  }
  auto standard = [&](const Monomial& m) {
    return std::none_of(elements_.begin(), elements_.end(),
                        [&](const Polynomial& g) { return g.leading_monomial().divides(m); });
  };
  // Standard monomials form an order ideal, so depth-first growth suffices.
  std::function<void(std::size_t, Monomial)> grow = [&](std::size_t v, Monomial m) {
    if (v == n) {
      out.push_back(m);
      return;
    }
    for (std::uint32_t e = 0; e < bound[v]; ++e) {
      m.set(v, e);
      if (!standard(m)) break;
      grow(v + 1, m);
    }
  };
  grow(0, Monomial());
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return order_.compare(a, b) < 0; });
  return out;
}

// --------------------------------------------------------------------- Ideal

struct Ideal::Cache {
  std::mutex mutex;
  std::map<MonomialOrder, std::unique_ptr<GroebnerBasis>> bases;
};

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    check_same_ring(g.ring(), ring_);
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

std::vector<Polynomial> Ideal::presentation_generators() const {
  std::vector<Polynomial> out = generators_;
  for (std::size_t i = 0; i < ring_->num_declared(); ++i) {
    if (auto inv = ring_->inverse_variable(i)) {
      Monomial m = Monomial::variable(i) * Monomial::variable(*inv);
      out.push_back(Polynomial::term(ring_, m, ring_->field().one()) -
                    Polynomial::constant(ring_, ring_->field().one()));
    }
  }
  return out;
}

const GroebnerBasis& Ideal::basis(const MonomialOrder& order) const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  auto it = cache_->bases.find(order);
  if (it == cache_->bases.end()) {
    auto gb = std::make_unique<GroebnerBasis>(buchberger(ring_, order, presentation_generators()));
    it = cache_->bases.emplace(order, std::move(gb)).first;
  }
  return *it->second;
}

std::string Ideal::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < generators_.size(); ++k) {
    if (k > 0) s += ", ";
    s += generators_[k].to_string();
  }
  if (generators_.empty()) s += "0";
  return s + ")";
}

// ---------------------------------------------------------------- operations

Polynomial normal_form(const Polynomial& f, const Ideal& ideal, const MonomialOrder& order) {
  return ideal.basis(order).reduce(f);
}

bool contains(const Ideal& ideal, const Polynomial& f) { return normal_form(f, ideal).is_zero(); }

bool is_subset(const Ideal& a, const Ideal& b) {
  check_same_ring(a.ring(), b.ring());
  const auto& gb = b.basis();
  for (const auto& g : a.basis().elements()) {
    if (!gb.reduce(g).is_zero()) return false;
  }
  return true;
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  check_same_ring(a.ring(), b.ring());
  const auto& x = a.basis().elements();
  const auto& y = b.basis().elements();
  return x.size() == y.size() && std::equal(x.begin(), x.end(), y.begin());
}

bool is_unit_ideal(const Ideal& ideal) { return ideal.basis().is_unit(); }
bool is_graded(const Ideal& ideal) { return ideal.basis().is_homogeneous(); }
bool is_zero_dimensional(const Ideal& ideal) { return ideal.basis().is_zero_dimensional(); }

Ideal add_generators(const Ideal& a, std::vector<Polynomial> extra) {
  std::vector<Polynomial> gens = a.generators();
  for (auto& g : extra) gens.push_back(std::move(g));
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  check_same_ring(a.ring(), b.ring());
  return add_generators(a, b.generators());
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  check_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> gens;
  for (const auto& f : a.presentation_generators()) {
    for (const auto& g : b.presentation_generators()) gens.push_back(f * g);
  }
  return Ideal(a.ring(), std::move(gens));
}

std::string fresh_variable_name(const Ring& ring, const std::string& base) {
  std::string name = base;
  while (ring.index_of(name)) name += "_";
  return name;
}

namespace {

// Generators of the elimination ideal for the trailing tag variable of
// `extended`, contracted back to `ring`.
Ideal eliminate_tag(const RingPtr& ring, const RingPtr& extended, std::vector<Polynomial> gens) {
  const std::size_t tag = extended->num_variables() - 1;
  auto order = MonomialOrder::block(1U << tag);
  GroebnerBasis gb = buchberger(extended, order, std::move(gens));
  std::vector<Polynomial> kept;
  for (const auto& g : gb.elements()) {
    if (!g.uses_variable(tag)) kept.push_back(g.contract(ring).with_order(MonomialOrder::grevlex()));
  }
  return Ideal(ring, std::move(kept));
}

}  // namespace

Ideal intersect(const Ideal& a, const Ideal& b) {
  check_same_ring(a.ring(), b.ring());
  const RingPtr& ring = a.ring();
  RingPtr ext = ring->with_extra_variables({fresh_variable_name(*ring, "_u")}, {0});
  const std::size_t u = ext->num_variables() - 1;
  Polynomial tag = Polynomial::variable(ext, u);
  Polynomial one_minus = Polynomial::constant(ext, ext->field().one()) - tag;
  std::vector<Polynomial> gens;
  for (const auto& f : a.presentation_generators()) gens.push_back(tag * f.embed(ext));
  for (const auto& g : b.presentation_generators()) gens.push_back(one_minus * g.embed(ext));
  return eliminate_tag(ring, ext, std::move(gens));
}

Ideal intersect_all(std::span<const Ideal> parts) {
  if (parts.empty()) throw Error(ErrorCode::InvalidArgument, "intersection of no ideals");
  Ideal acc = parts.front();
  for (std::size_t k = 1; k < parts.size(); ++k) acc = intersect(acc, parts[k]);
  return acc;
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero polynomial");
  Polynomial r = f.with_order(g.order());
  std::vector<Term> q;
  while (!r.is_zero()) {
    if (!g.leading_monomial().divides(r.leading_monomial())) {
      throw Error(ErrorCode::InvalidArgument, g.to_string() + " does not divide " + f.to_string());
    }
    FieldElem c = r.leading_coeff() / g.leading_coeff();
    Monomial m = r.leading_monomial() / g.leading_monomial();
    r.sub_mul_term(c, m, g);
    q.push_back(Term{m, c});
  }
  return Polynomial::from_sorted_terms(f.ring(), std::move(q), g.order());
}

Ideal quotient(const Ideal& ideal, const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorCode::DivisionByZero, "quotient by the zero polynomial");
  check_same_ring(ideal.ring(), f.ring());
  const RingPtr& ring = ideal.ring();
  // I ∩ (f) in the polynomial presentation; (f) must not pick up t*t^-1-1 or division fails
  RingPtr ext = ring->with_extra_variables({fresh_variable_name(*ring, "_u")}, {0});
  Polynomial tag = Polynomial::variable(ext, ext->num_variables() - 1);
  std::vector<Polynomial> tagged;
  for (const auto& g : ideal.presentation_generators()) tagged.push_back(tag * g.embed(ext));
  tagged.push_back((Polynomial::constant(ext, ext->field().one()) - tag) * f.embed(ext));
  Ideal meet = eliminate_tag(ring, ext, std::move(tagged));
  std::vector<Polynomial> gens;
  for (const auto& g : meet.generators()) gens.push_back(exact_divide(g, f));
  return Ideal(ideal.ring(), std::move(gens));
}

Ideal saturate(const Ideal& ideal, const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorCode::DivisionByZero, "saturation by the zero polynomial");
  check_same_ring(ideal.ring(), f.ring());
  const RingPtr& ring = ideal.ring();
  RingPtr ext = ring->with_extra_variables({fresh_variable_name(*ring, "_u")}, {0});
  Polynomial u = Polynomial::variable(ext, ext->num_variables() - 1);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.presentation_generators()) gens.push_back(g.embed(ext));
  gens.push_back(u * f.embed(ext) - Polynomial::constant(ext, ext->field().one()));
  return eliminate_tag(ring, ext, std::move(gens));
}

Ideal eliminate(const Ideal& ideal, std::span<const std::size_t> variables) {
  if (variables.empty()) return ideal;
  std::uint32_t mask = 0;
  for (auto v : variables) {
    if (v >= ideal.ring()->num_variables()) throw Error(ErrorCode::InvalidArgument, "variable index out of range");
    if (ideal.ring()->is_invertible(v) || ideal.ring()->base_of_inverse(v)) {
      throw Error(ErrorCode::InvalidArgument, "cannot eliminate the Laurent variable " + ideal.ring()->name(v));
    }
    mask |= 1U << v;
  }
  const auto& gb = ideal.basis(MonomialOrder::block(mask));
  std::vector<Polynomial> kept;
  for (const auto& g : gb.elements()) {
    bool free = std::none_of(variables.begin(), variables.end(), [&](std::size_t v) { return g.uses_variable(v); });
    if (free) kept.push_back(g.with_order(MonomialOrder::grevlex()));
  }
  return Ideal(ideal.ring(), std::move(kept));
}

std::optional<std::vector<Monomial>> standard_monomials(const Ideal& ideal) {
  return ideal.basis().standard_monomials();
}

}  // namespace gradix
