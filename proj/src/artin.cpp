#include "gradix/artin.hpp"

#include <algorithm>
#include <random>

#include "univariate.hpp"

namespace gradix {

namespace {

const MonomialOrder kGrevlex = MonomialOrder::grevlex();

Polynomial one_of(const RingPtr& ring) { return Polynomial::constant(ring, ring->field().one()); }

// p-th power of a square matrix by repeated squaring.
Matrix matrix_power(const Matrix& m, std::uint64_t e) {
  Matrix result(m.field(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) result(i, i) = m.field().one();
  Matrix base = m;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

// dim of the Frobenius-fixed subalgebra of a reduced GF(p)-algebra; it is the
// number of field factors, so 1 exactly when the algebra is a field.
std::size_t frobenius_fixed_dimension(const QuotientBasis& q) {
  const Field& field = q.field();
  const std::size_t d = q.dimension();
  std::vector<Matrix> powered;
  for (const auto& m : q.multiplication()) powered.push_back(matrix_power(m, field.characteristic()));
  const Vector one = q.coordinates(one_of(q.ring()));
  Matrix frob_minus_id(field, d, d);
  for (std::size_t j = 0; j < d; ++j) {
    Vector v = one;
    const Monomial& b = q.monomials()[j];
    for (std::size_t i = 0; i < powered.size(); ++i) {
      for (std::uint32_t k = 0; k < b[i]; ++k) v = powered[i].apply(v);
    }
    v[j] -= field.one();
    frob_minus_id.set_column(j, v);
  }
  return kernel(frob_minus_id).size();
}

Matrix combination(const QuotientBasis& q, const std::vector<FieldElem>& coeffs) {
  Matrix m(q.field(), q.dimension(), q.dimension());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    const Matrix& mi = q.multiplication(i);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) += coeffs[i] * mi(r, c);
    }
  }
  return m;
}

}  // namespace

std::optional<std::size_t> QuotientBasis::index_of(const Monomial& m) const {
  auto it = std::lower_bound(monomials_.begin(), monomials_.end(), m,
                             [](const Monomial& a, const Monomial& b) { return kGrevlex.compare(a, b) < 0; });
  if (it == monomials_.end() || !(*it == m)) return std::nullopt;
  return static_cast<std::size_t>(it - monomials_.begin());
}

Vector QuotientBasis::coordinates(const Polynomial& f) const {
  Vector v = zero_vector(field(), dimension());
  const Polynomial nf = ideal_.basis(kGrevlex).reduce(f.with_order(kGrevlex));
  for (const auto& t : nf.terms()) {
    auto idx = index_of(t.monomial);
    if (!idx) throw Error(ErrorCode::Internal, "normal form left the standard monomials");
    v[*idx] = t.coeff;
  }
  return v;
}

Polynomial QuotientBasis::element(const Vector& v) const {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) terms.push_back({monomials_[i], v[i]});
  }
  return Polynomial::from_terms(ring(), std::move(terms), kGrevlex);
}

Matrix QuotientBasis::multiplication_by(const Polynomial& g, Exec exec) const {
  const std::size_t d = dimension();
  std::vector<Polynomial> products;
  products.reserve(d);
  const Polynomial gg = g.with_order(kGrevlex);
  for (const auto& b : monomials_) products.push_back(gg.mul_term(b, field().one()));
  const auto nfs = batch_normal_forms(ideal_.basis(kGrevlex), products, exec);
  Matrix m(field(), d, d);
  for (std::size_t j = 0; j < d; ++j) {
    for (const auto& t : nfs[j].terms()) m(*index_of(t.monomial), j) = t.coeff;
  }
  return m;
}

QuotientBasis quotient_basis(const Ideal& ideal, Exec exec) {
  const GroebnerBasis& gb = ideal.basis(kGrevlex);
  auto std_monomials = gb.standard_monomials();
  if (!std_monomials) {
    throw Error(ErrorCode::NotZeroDimensional, "R/I is not finite-dimensional for I = " + ideal.to_string());
  }
  QuotientBasis q(ideal);
  q.monomials_ = std::move(*std_monomials);
  std::sort(q.monomials_.begin(), q.monomials_.end(),
            [](const Monomial& a, const Monomial& b) { return kGrevlex.compare(a, b) < 0; });
  const RingPtr& ring = ideal.ring();
  const std::size_t n = ring->num_variables();
  const std::size_t d = q.monomials_.size();
  for (const auto& b : q.monomials_) q.degrees_.push_back(ring->degree(b));
  q.graded_ = gb.is_homogeneous();

  std::vector<Monomial> products;
  products.reserve(n * d);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& b : q.monomials_) products.push_back(Monomial::variable(i) * b);
  }
  const auto nfs = monomial_normal_forms(gb, products, exec);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix m(ring->field(), d, d);
    for (std::size_t j = 0; j < d; ++j) {
      for (const auto& t : nfs[i * d + j].terms()) m(*q.index_of(t.monomial), j) = t.coeff;
    }
    q.mult_.push_back(std::move(m));
  }
  return q;
}

SocleData socle_at(const QuotientBasis& q, const Ideal& m) {
  check_same_ring(q.ring(), m.ring());
  const auto& gens = m.basis(kGrevlex).elements();
  std::vector<Matrix> mats;
  for (const auto& g : gens) mats.push_back(q.multiplication_by(g));
  const std::size_t d = q.dimension();
  const Field& field = q.field();

  std::vector<std::vector<std::size_t>> blocks;
  const bool per_degree = q.graded() && std::all_of(gens.begin(), gens.end(), [](const Polynomial& g) {
                            return g.is_homogeneous();
                          });
  if (per_degree) {
    std::map<std::int64_t, std::vector<std::size_t>> by_degree;
    for (std::size_t j = 0; j < d; ++j) by_degree[q.degrees()[j]].push_back(j);
    for (auto& [deg, idx] : by_degree) blocks.push_back(std::move(idx));
  } else {
    std::vector<std::size_t> all(d);
    for (std::size_t j = 0; j < d; ++j) all[j] = j;
    if (d > 0) blocks.push_back(std::move(all));
  }

  SocleData out;
  for (const auto& block : blocks) {
    Matrix stacked(field, d * mats.size(), block.size());
    for (std::size_t g = 0; g < mats.size(); ++g) {
      for (std::size_t c = 0; c < block.size(); ++c) {
        for (std::size_t r = 0; r < d; ++r) stacked(g * d + r, c) = mats[g](r, block[c]);
      }
    }
    for (const auto& kv : kernel(stacked)) {
      Vector full = zero_vector(field, d);
      for (std::size_t c = 0; c < block.size(); ++c) full[block[c]] = kv[c];
      Polynomial p = q.element(full);
      const auto deg = p.weighted_degree();
      const bool homogeneous = p.is_homogeneous();
      out.homogeneous.push_back(homogeneous);
      if (homogeneous && deg) ++out.degree_histogram[*deg];
      out.basis.push_back(std::move(p));
    }
  }
  out.dimension = out.basis.size();
  return out;
}

std::vector<Monomial> monomials_of_total_degree(std::size_t n, std::uint32_t d) {
  std::vector<Monomial> out;
  std::vector<std::uint32_t> e(n, 0);
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      out.push_back(Monomial::from_exponents(e));
      return;
    }
    for (std::uint32_t k = left + 1; k-- > 0;) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  if (n > 0) {
    rec(rec, 0, d);
  } else if (d == 0) {
    out.emplace_back();
  }
  return out;
}

std::optional<std::uint32_t> nilpotency_degree(const Ideal& ideal) {
  const RingPtr& ring = ideal.ring();
  const GroebnerBasis& gb = ideal.basis(kGrevlex);
  if (gb.is_unit() || !gb.is_zero_dimensional()) return std::nullopt;
  const auto sm = gb.standard_monomials();
  const auto len = static_cast<std::uint32_t>(sm->size());
  const std::size_t n = ring->num_variables();
  for (std::size_t i = 0; i < n; ++i) {
    const Polynomial p = Polynomial::term(ring, Monomial::variable(i, len), ring->field().one());
    if (!gb.reduce(p).is_zero()) return std::nullopt;
  }
  std::uint32_t d = 0;
  for (const auto& b : *sm) d = std::max(d, b.total_degree() + 1);
  for (;; ++d) {
    const auto top = monomials_of_total_degree(n, d);
    const auto nfs = monomial_normal_forms(gb, top);
    if (std::all_of(nfs.begin(), nfs.end(), [](const Polynomial& p) { return p.is_zero(); })) return d;
  }
}

Ideal variables_ideal(const RingPtr& ring) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < ring->num_variables(); ++i) gens.push_back(Polynomial::variable(ring, i));
  return Ideal(ring, std::move(gens));
}

SocleData socle(const QuotientBasis& q) { return socle_at(q, variables_ideal(q.ring())); }

RadicalCertificate radical_maximal_certify(const Ideal& ideal) {
  const QuotientBasis q = quotient_basis(ideal);
  const RingPtr& ring = ideal.ring();
  const Field& field = ring->field();
  if (q.dimension() == 0) return RadicalCertificate{false, ideal, 0, "unit ideal"};

  const Vector one = q.coordinates(one_of(ring));
  std::vector<Polynomial> extra;
  for (std::size_t i = 0; i < ring->num_variables(); ++i) {
    const auto mu = detail::minimal_polynomial(q.multiplication(i), one);
    extra.push_back(detail::to_polynomial(detail::squarefree_part(mu, field), ring, i));
  }
  Ideal sum = add_generators(ideal, std::move(extra));
  Ideal radical(ring, sum.basis(kGrevlex).elements());
  const QuotientBasis rq = quotient_basis(radical);
  const std::size_t res = rq.dimension();
  RadicalCertificate cert{false, radical, res, ""};
  if (res == 1) {
    cert.maximal = true;
    cert.detail = "residue field is k";
    return cert;
  }

  if (!field.is_rational()) {
    const std::size_t factors = frobenius_fixed_dimension(rq);
    cert.maximal = factors == 1;
    cert.detail = "Frobenius-fixed subalgebra has dimension " + std::to_string(factors);
    return cert;
  }

  const Vector rone = rq.coordinates(one_of(ring));
  const std::size_t n = ring->num_variables();
  std::mt19937_64 rng(0x6a09e667f3bcc908ULL);
  for (std::size_t attempt = 0; attempt < n + 32; ++attempt) {
    std::vector<FieldElem> coeffs(n, field.zero());
    if (attempt < n) {
      coeffs[attempt] = field.one();
    } else {
      for (auto& c : coeffs) c = field.from_int(static_cast<long>(rng() % 19) - 9);
    }
    const auto mu = detail::minimal_polynomial(combination(rq, coeffs), rone);
    const auto irreducible = detail::irreducible_over_q(mu);
    if (irreducible && !*irreducible) {
      cert.detail = "an element has a reducible minimal polynomial";
      return cert;
    }
    if (irreducible && *irreducible && detail::degree(mu) == res) {
      cert.maximal = true;
      cert.detail = "primitive element with irreducible minimal polynomial of degree " + std::to_string(res);
      return cert;
    }
  }
  throw Error(ErrorCode::RadicalUncertified,
              "cannot decide whether R/√I (dimension " + std::to_string(res) + " over QQ) is a field");
}

std::size_t type_of_quotient(const Ideal& ideal) {
  const RadicalCertificate cert = radical_maximal_certify(ideal);
  if (!cert.maximal) {
    throw Error(ErrorCode::RadicalNotMaximal,
                "√I = " + cert.radical.to_string() + " is not maximal (" + cert.detail + ")");
  }
  const SocleData s = socle_at(quotient_basis(ideal), cert.radical);
  if (s.dimension % cert.residue_dimension != 0) {
    throw Error(ErrorCode::Internal, "socle dimension not divisible by residue degree");
  }
  return s.dimension / cert.residue_dimension;
}

GradedSocleRank graded_socle_rank(const QuotientBasis& q) {
  if (!q.graded()) throw Error(ErrorCode::NotGraded, q.ideal().to_string() + " is not graded");
  const RadicalCertificate cert = radical_maximal_certify(q.ideal());
  if (!cert.maximal) {
    throw Error(ErrorCode::RadicalNotMaximal, "√I = " + cert.radical.to_string() + " is not maximal");
  }
  const SocleData s = socle_at(q, cert.radical);
  return GradedSocleRank{s.dimension / cert.residue_dimension, s.degree_histogram};
}

std::vector<std::pair<std::int64_t, std::size_t>> hilbert_function(const QuotientBasis& q) {
  if (!q.graded()) throw Error(ErrorCode::NotGraded, q.ideal().to_string() + " is not graded");
  if (!q.ring()->has_positive_weights()) throw Error(ErrorCode::NotPositivelyGraded, "weights must be positive");
  std::map<std::int64_t, std::size_t> counts;
  for (auto d : q.degrees()) ++counts[d];
  return {counts.begin(), counts.end()};
}

std::string to_string(Certainty c) {
  switch (c) {
    case Certainty::True:
      return "true";
    case Certainty::False:
      return "false";
    case Certainty::Uncertified:
      break;
  }
  return "uncertified";
}

Verdict certify_irreducible(const Ideal& ideal) {
  if (is_unit_ideal(ideal)) return {Certainty::False, "the unit ideal is not proper"};
  try {
    const std::size_t t = type_of_quotient(ideal);
    return {t == 1 ? Certainty::True : Certainty::False, "type " + std::to_string(t)};
  } catch (const Error& e) {
    if (!is_scope_refusal(e.code())) throw;
    return {Certainty::Uncertified, e.what()};
  }
}

Polynomial minimal_polynomial(const QuotientBasis& q, const Polynomial& g, std::size_t var) {
  const auto mu = detail::minimal_polynomial(q.multiplication_by(g), q.coordinates(one_of(q.ring())));
  return detail::to_polynomial(mu, q.ring(), var);
}

}  // namespace gradix
