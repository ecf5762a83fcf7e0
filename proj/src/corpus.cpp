#include "gradix/corpus.hpp"

#include "gradix/artin.hpp"

namespace gradix {

namespace {

const char* const kNames[] = {"x", "y", "z", "w", "v", "u"};

RingPtr standard_ring(const Field& field, std::size_t n) {
  if (n == 0 || n > std::size(kNames)) throw Error(ErrorCode::InvalidArgument, "corpus rings have 1 to 6 variables");
  return Ring::create(field, std::vector<std::string>(kNames, kNames + n), std::vector<std::int64_t>(n, 1));
}

FieldElem random_coeff(const Field& field, std::mt19937_64& rng) {
  if (field.is_rational()) return field.from_int(static_cast<long>(rng() % 19) - 9);
  return field.from_int(static_cast<long>(rng() % field.characteristic()));
}

}  // namespace

Ideal random_graded_primary(const RingPtr& ring, std::mt19937_64& rng, const CorpusOptions& options) {
  const std::size_t n = ring->num_variables();
  const Field& field = ring->field();
  while (true) {
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < n; ++i) {
      const auto e = 1 + static_cast<std::uint32_t>(rng() % options.max_power);
      gens.push_back(Polynomial::term(ring, Monomial::variable(i, e), field.one()));
    }
    const std::size_t forms = rng() % (options.max_forms + 1);
    for (std::size_t k = 0; k < forms; ++k) {
      const auto d = 1 + static_cast<std::uint32_t>(rng() % options.max_form_degree);
      std::vector<Term> terms;
      for (const auto& m : monomials_of_total_degree(n, d)) {
        FieldElem c = random_coeff(field, rng);
        if (!c.is_zero()) terms.push_back({m, std::move(c)});
      }
      if (!terms.empty()) gens.push_back(Polynomial::from_terms(ring, std::move(terms)));
    }
    Ideal ideal(ring, std::move(gens));
    const auto standard = standard_monomials(ideal);
    if (standard && !standard->empty() && standard->size() <= options.max_length) return ideal;
  }
}

std::vector<Ideal> random_graded_corpus(std::size_t count, std::uint64_t seed, const CorpusOptions& options) {
  std::mt19937_64 rng(seed);
  std::vector<RingPtr> rings;
  for (std::size_t n : options.variable_counts) rings.push_back(standard_ring(options.field, n));
  std::vector<Ideal> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(random_graded_primary(rings[k % rings.size()], rng, options));
  return out;
}

Ideal translate(const Ideal& ideal, std::span<const FieldElem> point) {
  const RingPtr& ring = ideal.ring();
  if (point.size() != ring->num_variables() || ring->has_laurent_variables()) {
    throw Error(ErrorCode::InvalidArgument, "translation needs one coordinate per variable of a polynomial ring");
  }
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < point.size(); ++i) {
    images.push_back(Polynomial::variable(ring, i) - Polynomial::constant(ring, point[i]));
  }
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(substitute(g, ring, images));
  return Ideal(ring, std::move(gens));
}

std::vector<Ideal> random_translated_corpus(std::size_t count, std::uint64_t seed, const CorpusOptions& options) {
  CorpusOptions over_q = options;
  over_q.field = Field::rationals();
  std::mt19937_64 rng(seed);
  std::vector<RingPtr> rings;
  for (std::size_t n : over_q.variable_counts) rings.push_back(standard_ring(over_q.field, n));
  std::vector<Ideal> out;
  for (std::size_t k = 0; k < count; ++k) {
    const RingPtr& ring = rings[k % rings.size()];
    const Ideal base = random_graded_primary(ring, rng, over_q);
    std::vector<FieldElem> point;
    bool nonzero = false;
    for (std::size_t i = 0; i < ring->num_variables(); ++i) {
      point.push_back(over_q.field.from_int(static_cast<long>(rng() % 5) - 2));
      nonzero = nonzero || !point.back().is_zero();
    }
    if (!nonzero) point[0] = over_q.field.one();
    out.push_back(translate(base, point));
  }
  return out;
}

std::vector<Ideal> random_laurent_corpus(std::size_t count, std::uint64_t seed, const CorpusOptions& options) {
  CorpusOptions over_q = options;
  over_q.field = Field::rationals();
  const RingPtr plain = standard_ring(over_q.field, 2);
  const RingPtr laurent = Ring::create(over_q.field, {"x", "y", "t"}, {0, 1, 1}, {false, false, true});
  const Field& k = over_q.field;
  std::mt19937_64 rng(seed);
  std::vector<Ideal> out;
  for (std::size_t n = 0; n < count; ++n) {
    const Ideal base = random_graded_primary(plain, rng, over_q);
    const long a = static_cast<long>(rng() % 5) - 2;
    const long b = static_cast<long>(rng() % 5) - 2;
    const long c = 1 + static_cast<long>(rng() % 3);
    const std::vector<Polynomial> images{
        Polynomial::variable(laurent, 0) - Polynomial::constant(laurent, k.from_int(a)),
        Polynomial::variable(laurent, 1) - Polynomial::constant(laurent, k.from_int(b))};
    std::vector<Polynomial> gens;
    for (const auto& g : base.generators()) gens.push_back(substitute(g, laurent, images));
    gens.push_back(Polynomial::variable(laurent, 2) - Polynomial::constant(laurent, k.from_int(c)));
    out.emplace_back(laurent, std::move(gens));
  }
  return out;
}

}  // namespace gradix
