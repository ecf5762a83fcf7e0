#include "gradix/poly.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

namespace gradix {

// ---------------------------------------------------------------- Monomial

namespace {

std::uint16_t checked_exponent(std::uint64_t e) {
  if (e > std::numeric_limits<std::uint16_t>::max()) {
    throw Error(ErrorCode::ExponentOverflow, "exponent " + std::to_string(e) + " exceeds 65535");
  }
  return static_cast<std::uint16_t>(e);
}

}  // namespace

Monomial Monomial::variable(std::size_t index, std::uint32_t power) {
  Monomial m;
  m.set(index, power);
  return m;
}

Monomial Monomial::from_exponents(std::span<const std::uint32_t> exponents) {
  if (exponents.size() > kMaxVariables) {
    throw Error(ErrorCode::TooManyVariables, "at most " + std::to_string(kMaxVariables) + " variables");
  }
  Monomial m;
  for (std::size_t i = 0; i < exponents.size(); ++i) m.set(i, exponents[i]);
  return m;
}

void Monomial::set(std::size_t i, std::uint32_t exponent) {
  total_ -= e_[i];
  e_[i] = checked_exponent(exponent);
  total_ += e_[i];
}

bool Monomial::divides(const Monomial& other) const {
  if (total_ > other.total_) return false;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (e_[i] > other.e_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (e_[i] != 0 && other.e_[i] != 0) return false;
  }
  return true;
}

std::size_t Monomial::support_size() const {
  return static_cast<std::size_t>(std::count_if(e_.begin(), e_.end(), [](auto e) { return e != 0; }));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    m.e_[i] = checked_exponent(std::uint64_t{a.e_[i]} + b.e_[i]);
  }
  m.total_ = a.total_ + b.total_;
  return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    m.e_[i] = static_cast<std::uint16_t>(a.e_[i] - b.e_[i]);
  }
  m.total_ = a.total_ - b.total_;
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    m.e_[i] = std::max(a.e_[i], b.e_[i]);
    m.total_ += m.e_[i];
  }
  return m;
}

// ----------------------------------------------------------- MonomialOrder

namespace {

// Reverse-lex tie break on the variables selected by mask: the monomial with
// the smaller exponent in the last differing variable is larger.
std::strong_ordering revlex(const Monomial& u, const Monomial& v, std::uint32_t mask) {
  for (std::size_t i = kMaxVariables; i-- > 0;) {
    if (((mask >> i) & 1U) == 0) continue;
    if (u[i] != v[i]) return v[i] <=> u[i];
  }
  return std::strong_ordering::equal;
}

std::uint32_t masked_degree(const Monomial& m, std::uint32_t mask) {
  std::uint32_t d = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (((mask >> i) & 1U) != 0) d += m[i];
  }
  return d;
}

constexpr std::uint32_t kAll = 0xFFFFU;

}  // namespace

std::strong_ordering MonomialOrder::compare(const Monomial& u, const Monomial& v) const {
  switch (kind_) {
    case Kind::Lex:
      for (std::size_t i = 0; i < kMaxVariables; ++i) {
        if (u[i] != v[i]) return u[i] <=> v[i];
      }
      return std::strong_ordering::equal;
    case Kind::GrevLex:
      if (u.total_degree() != v.total_degree()) return u.total_degree() <=> v.total_degree();
      return revlex(u, v, kAll);
    case Kind::Block: {
      const std::uint32_t head = eliminated_;
      const std::uint32_t tail = kAll & ~eliminated_;
      auto du = masked_degree(u, head);
      auto dv = masked_degree(v, head);
      if (du != dv) return du <=> dv;
      if (auto c = revlex(u, v, head); c != 0) return c;
      du = u.total_degree() - du;
      dv = v.total_degree() - dv;
      if (du != dv) return du <=> dv;
      return revlex(u, v, tail);
    }
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::Lex: return "lex";
    case Kind::GrevLex: return "grevlex";
    case Kind::Block: return "block(" + std::to_string(eliminated_) + ")";
  }
  return "?";
}

// -------------------------------------------------------------------- Ring

RingPtr Ring::create(Field field, std::vector<std::string> names, std::vector<std::int64_t> weights,
                     std::vector<bool> invertible) {
  if (weights.empty()) weights.assign(names.size(), 1);
  if (weights.size() != names.size()) {
    throw Error(ErrorCode::InvalidArgument, "weight count " + std::to_string(weights.size()) +
                                                " does not match variable count " + std::to_string(names.size()));
  }
  if (invertible.empty()) invertible.assign(names.size(), false);
  if (invertible.size() != names.size()) throw Error(ErrorCode::InvalidArgument, "invertible flag count mismatch");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!seen.insert(n).second) throw Error(ErrorCode::InvalidArgument, "duplicate variable " + n);
  }

  std::shared_ptr<Ring> ring(new Ring());
  ring->field_ = field;
  ring->declared_ = names.size();
  ring->names_ = std::move(names);
  ring->weights_ = std::move(weights);
  ring->inverse_of_.assign(ring->declared_, std::nullopt);
  ring->base_of_.assign(ring->declared_, std::nullopt);
  for (std::size_t i = 0; i < ring->declared_; ++i) {
    if (!invertible[i]) continue;
    ring->inverse_of_[i] = ring->names_.size();
    ring->base_of_.push_back(i);
    ring->inverse_of_.push_back(std::nullopt);
    ring->names_.push_back(ring->names_[i] + "^-1");
    ring->weights_.push_back(-ring->weights_[i]);
  }
  if (ring->names_.size() > kMaxVariables) {
    throw Error(ErrorCode::TooManyVariables, "at most " + std::to_string(kMaxVariables) + " presentation variables");
  }
  return ring;
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> Ring::inverse_variable(std::size_t i) const {
  return i < inverse_of_.size() ? inverse_of_[i] : std::nullopt;
}

std::optional<std::size_t> Ring::base_of_inverse(std::size_t i) const {
  return i < base_of_.size() ? base_of_[i] : std::nullopt;
}

bool Ring::has_laurent_variables() const {
  return std::any_of(base_of_.begin(), base_of_.end(), [](const auto& b) { return b.has_value(); });
}

bool Ring::has_positive_weights() const {
  return std::all_of(weights_.begin(), weights_.end(), [](auto w) { return w > 0; });
}

std::int64_t Ring::degree(const Monomial& m) const {
  std::int64_t d = 0;
  for (std::size_t i = 0; i < names_.size(); ++i) d += weights_[i] * static_cast<std::int64_t>(m[i]);
  return d;
}

RingPtr Ring::with_extra_variables(const std::vector<std::string>& names,
                                   const std::vector<std::int64_t>& weights) const {
  std::shared_ptr<Ring> ring(new Ring(*this));
  for (std::size_t k = 0; k < names.size(); ++k) {
    if (index_of(names[k])) throw Error(ErrorCode::InvalidArgument, "variable " + names[k] + " already exists");
    ring->names_.push_back(names[k]);
    ring->weights_.push_back(weights.at(k));
    ring->inverse_of_.push_back(std::nullopt);
    ring->base_of_.push_back(std::nullopt);
  }
  if (ring->names_.size() > kMaxVariables) {
    throw Error(ErrorCode::TooManyVariables, "at most " + std::to_string(kMaxVariables) + " presentation variables");
  }
  return ring;
}

bool Ring::is_prefix_of(const Ring& other) const {
  if (!(field_ == other.field_) || other.names_.size() < names_.size()) return false;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] != other.names_[i] || weights_[i] != other.weights_[i]) return false;
  }
  return true;
}

std::string Ring::to_string() const {
  std::string s = field_.to_string() + "[";
  for (std::size_t i = 0; i < declared_; ++i) {
    if (i > 0) s += ",";
    s += names_[i];
    if (inverse_of_[i]) s += "," + names_[i] + "^-1";
  }
  s += "] weights(";
  for (std::size_t i = 0; i < declared_; ++i) {
    if (i > 0) s += ",";
    s += std::to_string(weights_[i]);
  }
  return s + ")";
}

bool Ring::same_as(const Ring& other) const {
  return this == &other || (field_ == other.field_ && names_ == other.names_ && weights_ == other.weights_ &&
                            inverse_of_ == other.inverse_of_ && declared_ == other.declared_);
}

void check_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a.get() != b.get() && !a->same_as(*b)) {
    throw Error(ErrorCode::RingMismatch, a->to_string() + " vs " + b->to_string());
  }
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(RingPtr ring, MonomialOrder order) : ring_(std::move(ring)), order_(order) {}

Polynomial::Polynomial(RingPtr ring, MonomialOrder order, std::vector<Term> sorted_terms)
    : ring_(std::move(ring)), order_(order), terms_(std::move(sorted_terms)) {}

Polynomial Polynomial::constant(RingPtr ring, const FieldElem& c, MonomialOrder order) {
  return term(std::move(ring), Monomial(), c, order);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index, MonomialOrder order) {
  auto one = ring->field().one();
  return term(std::move(ring), Monomial::variable(index), one, order);
}

Polynomial Polynomial::term(RingPtr ring, const Monomial& m, const FieldElem& c, MonomialOrder order) {
  Polynomial p(std::move(ring), order);
  if (!c.is_zero()) p.terms_.push_back(Term{m, c});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms, MonomialOrder order) {
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order.greater(a.monomial, b.monomial); });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
  return Polynomial(std::move(ring), order, std::move(out));
}

Polynomial Polynomial::from_sorted_terms(RingPtr ring, std::vector<Term> terms, MonomialOrder order) {
  return Polynomial(std::move(ring), order, std::move(terms));
}

Term Polynomial::pop_leading() {
  Term t = std::move(terms_.front());
  terms_.erase(terms_.begin());
  return t;
}

Polynomial Polynomial::with_order(const MonomialOrder& order) const {
  if (order == order_) return *this;
  std::vector<Term> terms = terms_;
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order.greater(a.monomial, b.monomial); });
  return Polynomial(ring_, order, std::move(terms));
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coeff().is_one()) return *this;
  return scaled(leading_coeff().inverse());
}

Polynomial Polynomial::scaled(const FieldElem& c) const {
  if (c.is_zero()) return Polynomial(ring_, order_);
  std::vector<Term> terms = terms_;
  for (auto& t : terms) t.coeff *= c;
  return Polynomial(ring_, order_, std::move(terms));
}

Polynomial Polynomial::mul_term(const Monomial& m, const FieldElem& c) const {
  if (c.is_zero()) return Polynomial(ring_, order_);
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) terms.push_back(Term{t.monomial * m, t.coeff * c});
  return Polynomial(ring_, order_, std::move(terms));
}

void Polynomial::sub_mul_term(const FieldElem& c, const Monomial& m, const Polynomial& g) {
  const bool reorder = !(g.order_ == order_);
  const Polynomial& h = reorder ? g.with_order(order_) : g;
  std::vector<Term> out;
  out.reserve(terms_.size() + h.terms_.size());
  auto a = terms_.begin();
  auto b = h.terms_.begin();
  while (a != terms_.end() || b != h.terms_.end()) {
    if (b == h.terms_.end()) {
      out.push_back(std::move(*a++));
      continue;
    }
    Monomial bm = b->monomial * m;
    if (a == terms_.end()) {
      out.push_back(Term{bm, -(b->coeff * c)});
      ++b;
      continue;
    }
    auto cmp = order_.compare(a->monomial, bm);
    if (cmp > 0) {
      out.push_back(std::move(*a++));
    } else if (cmp < 0) {
      out.push_back(Term{bm, -(b->coeff * c)});
      ++b;
    } else {
      FieldElem coeff = std::move(a->coeff);
      coeff -= b->coeff * c;
      if (!coeff.is_zero()) out.push_back(Term{bm, std::move(coeff)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

void Polynomial::merge(const Polynomial& rhs, bool subtract) {
  check_same_ring(ring_, rhs.ring_);
  sub_mul_term(subtract ? ring_->field().one() : -ring_->field().one(), Monomial(), rhs);
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  merge(rhs, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  merge(rhs, true);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  check_same_ring(ring_, rhs.ring_);
  std::vector<Term> products;
  products.reserve(terms_.size() * rhs.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : rhs.terms_) products.push_back(Term{a.monomial * b.monomial, a.coeff * b.coeff});
  }
  *this = from_terms(ring_, std::move(products), order_);
  return *this;
}

Polynomial Polynomial::operator-() const { return scaled(-ring_->field().one()); }

Polynomial Polynomial::pow(std::uint32_t e) const {
  Polynomial result = constant(ring_, ring_->field().one(), order_);
  Polynomial base = *this;
  while (e > 0) {
    if ((e & 1U) != 0) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.size() <= 1) return true;
  const auto d = ring_->degree(terms_.front().monomial);
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) { return ring_->degree(t.monomial) == d; });
}

std::map<std::int64_t, Polynomial> Polynomial::homogeneous_components() const {
  std::map<std::int64_t, Polynomial> out;
  for (const auto& t : terms_) {
    auto [it, inserted] = out.try_emplace(ring_->degree(t.monomial), Polynomial(ring_, order_));
    it->second.terms_.push_back(t);  // subsequence of a sorted list stays sorted
  }
  return out;
}

std::optional<std::int64_t> Polynomial::weighted_degree() const {
  if (is_zero() || !is_homogeneous()) return std::nullopt;
  return ring_->degree(terms_.front().monomial);
}

std::uint32_t Polynomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.total_degree());
  return d;
}

bool Polynomial::uses_variable(std::size_t index) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.monomial[index] != 0; });
}

Polynomial Polynomial::embed(const RingPtr& larger) const {
  if (!ring_->is_prefix_of(*larger)) throw Error(ErrorCode::RingMismatch, "cannot embed into " + larger->to_string());
  return Polynomial(larger, order_, terms_).with_order(order_);
}

Polynomial Polynomial::contract(const RingPtr& smaller) const {
  if (!smaller->is_prefix_of(*ring_)) throw Error(ErrorCode::RingMismatch, "cannot contract to " + smaller->to_string());
  for (std::size_t i = smaller->num_variables(); i < ring_->num_variables(); ++i) {
    if (uses_variable(i)) throw Error(ErrorCode::RingMismatch, "variable " + ring_->name(i) + " still occurs");
  }
  return Polynomial(smaller, order_, terms_);
}

std::string render_monomial(const Ring& ring, const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < ring.num_variables(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    if (auto base = ring.base_of_inverse(i)) {
      s += ring.name(*base) + "^-" + std::to_string(m[i]);
      continue;
    }
    s += ring.name(i);
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto& t = terms_[k];
    std::string piece;
    if (t.monomial.is_one()) {
      piece = t.coeff.to_string();
    } else if (t.coeff.is_one()) {
      piece = render_monomial(*ring_, t.monomial);
    } else if ((-t.coeff).is_one()) {
      piece = "-" + render_monomial(*ring_, t.monomial);
    } else {
      piece = t.coeff.to_string() + "*" + render_monomial(*ring_, t.monomial);
    }
    if (k > 0 && piece.front() != '-') s += "+";
    s += piece;
  }
  return s;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!a.ring_->same_as(*b.ring_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  const Polynomial& bb = a.order_ == b.order_ ? b : b.with_order(a.order_);
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].monomial == bb.terms_[i].monomial) || !(a.terms_[i].coeff == bb.terms_[i].coeff)) return false;
  }
  return true;
}

Polynomial substitute(const Polynomial& f, const RingPtr& target, std::span<const Polynomial> images) {
  const Ring& source = *f.ring();
  if (images.size() != source.num_variables()) {
    throw Error(ErrorCode::InvalidArgument, "substitution must assign every variable");
  }
  if (!(source.field() == target->field())) throw Error(ErrorCode::FieldMismatch, "substitution across fields");
  for (const auto& img : images) check_same_ring(img.ring(), target);
  // Power tables per variable, grown on demand.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t var, std::uint32_t e) -> const Polynomial& {
    auto& table = powers[var];
    if (table.empty()) table.push_back(Polynomial::constant(target, target->field().one()));
    while (table.size() <= e) table.push_back(table.back() * images[var]);
    return table[e];
  };
  Polynomial result(target);
  for (const auto& t : f.terms()) {
    Polynomial term = Polynomial::constant(target, t.coeff);
    for (std::size_t v = 0; v < source.num_variables(); ++v) {
      if (t.monomial[v] != 0) term *= power(v, t.monomial[v]);
    }
    result += term;
  }
  return result;
}

}  // namespace gradix
