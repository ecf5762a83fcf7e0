#include "univariate.hpp"

#include <cstdlib>

namespace gradix::detail {

void trim(UPoly& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

UPoly monic(UPoly f) {
  trim(f);
  if (f.empty()) return f;
  const FieldElem inv = f.back().inverse();
  for (auto& c : f) c *= inv;
  return f;
}

UPoly derivative(const UPoly& f) {
  UPoly d;
  for (std::size_t i = 1; i < f.size(); ++i) {
    d.push_back(f[i] * f[i].field().from_int(static_cast<long>(i)));
  }
  trim(d);
  return d;
}

UPoly mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, a[0].field().zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

UPoly sub(UPoly a, const UPoly& b) {
  if (b.empty()) return a;
  if (a.size() < b.size()) a.resize(b.size(), b[0].field().zero());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.empty()) throw Error(ErrorCode::DivisionByZero, "univariate division by zero");
  UPoly r = a;
  trim(r);
  if (r.size() < b.size()) return {UPoly{}, r};
  UPoly q(r.size() - b.size() + 1, b[0].field().zero());
  const FieldElem lead_inv = b.back().inverse();
  while (!r.empty() && r.size() >= b.size()) {
    const std::size_t shift = r.size() - b.size();
    const FieldElem c = r.back() * lead_inv;
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
    trim(r);
  }
  trim(q);
  return {q, r};
}

UPoly gcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a));
}

namespace {

UPoly lcm(const UPoly& a, const UPoly& b) { return monic(divmod(mul(a, b), gcd(a, b)).first); }

UPoly squarefree_mod_p(const UPoly& f, std::uint32_t p) {
  if (degree(f) == 0) return monic(f);
  const UPoly d = derivative(f);
  if (d.empty()) {
    // f = g(x^p) = g(x)^p since coefficients are fixed by Frobenius.
    UPoly g;
    for (std::size_t i = 0; i < f.size(); i += p) g.push_back(f[i]);
    return squarefree_mod_p(g, p);
  }
  const UPoly c = gcd(f, d);
  const UPoly w = monic(divmod(f, c).first);
  if (degree(c) == 0) return w;
  return lcm(w, squarefree_mod_p(c, p));
}

UPoly mulmod(const UPoly& a, const UPoly& b, const UPoly& m) { return divmod(mul(a, b), m).second; }

UPoly powmod(UPoly base, std::uint64_t e, const UPoly& m) {
  UPoly result{base.empty() ? m[0].field().one() : base[0].field().one()};
  base = divmod(base, m).second;
  while (e > 0) {
    if (e & 1U) result = mulmod(result, base, m);
    e >>= 1U;
    if (e > 0) base = mulmod(base, base, m);
  }
  return result;
}

std::vector<mpz_class> divisors(mpz_class n, std::size_t limit, bool& ok) {
  ok = true;
  if (n < 0) n = -n;
  std::vector<mpz_class> out;
  if (n > mpz_class("1000000000000")) {
    ok = false;
    return out;
  }
  const unsigned long v = n.get_ui();
  for (unsigned long d = 1; d * d <= v; ++d) {
    if (v % d != 0) continue;
    out.emplace_back(d);
    if (d != v / d) out.emplace_back(v / d);
    if (out.size() > limit) {
      ok = false;
      return out;
    }
  }
  return out;
}

}  // namespace

UPoly squarefree_part(const UPoly& f, const Field& field) {
  UPoly g = monic(f);
  if (g.empty()) throw Error(ErrorCode::InvalidArgument, "squarefree part of zero");
  if (field.is_rational()) {
    if (degree(g) == 0) return g;
    return monic(divmod(g, gcd(g, derivative(g))).first);
  }
  return squarefree_mod_p(g, field.characteristic());
}

bool irreducible_mod_p(const UPoly& f, const Field& field) {
  const UPoly g = monic(f);
  const std::size_t n = degree(g);
  if (n == 0) return false;
  if (n == 1) return true;
  const UPoly x{field.zero(), field.one()};
  UPoly h = x;
  for (std::size_t i = 1; i <= n / 2; ++i) {
    h = powmod(h, field.characteristic(), g);
    if (degree(gcd(sub(h, x), g)) > 0) return false;
  }
  return true;
}

std::optional<bool> irreducible_over_q(const UPoly& f) {
  const UPoly g = monic(f);
  const std::size_t n = degree(g);
  if (n == 0) return false;
  if (n == 1) return true;
  mpz_class den = 1;
  for (const auto& c : g) den = lcm(den, mpz_class(c.rational().get_den()));
  std::vector<mpz_class> a;
  for (const auto& c : g) a.push_back(mpz_class(c.rational() * den));
  if (a[0] == 0) return false;
  bool ok0 = false;
  bool okn = false;
  const auto num = divisors(a[0], 5000, ok0);
  const auto lead = divisors(a[n], 5000, okn);
  if (!ok0 || !okn) return std::nullopt;
  for (const auto& p : num) {
    for (const auto& q : lead) {
      for (int sign : {1, -1}) {
        const mpq_class r(sign * p, q);
        mpq_class value = 0;
        for (std::size_t i = n + 1; i-- > 0;) value = value * r + mpq_class(a[i]);
        if (value == 0) return false;
      }
    }
  }
  if (n <= 3) return true;
  return std::nullopt;
}

UPoly minimal_polynomial(const Matrix& m, const Vector& v) {
  const Field& field = m.field();
  const std::size_t n = m.rows();
  std::vector<Vector> rows;
  std::vector<UPoly> combos;
  std::vector<std::size_t> pivots;
  Vector w = v;
  for (std::size_t k = 0; k <= n; ++k) {
    Vector r = w;
    UPoly c(k + 1, field.zero());
    c[k] = field.one();
    for (std::size_t j = 0; j < rows.size(); ++j) {
      const FieldElem f = r[pivots[j]];
      if (f.is_zero()) continue;
      for (std::size_t i = 0; i < n; ++i) r[i] -= f * rows[j][i];
      for (std::size_t i = 0; i < combos[j].size(); ++i) c[i] -= f * combos[j][i];
    }
    std::size_t piv = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!r[i].is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv == n) return monic(c);
    const FieldElem inv = r[piv].inverse();
    for (auto& e : r) e *= inv;
    for (auto& e : c) e *= inv;
    rows.push_back(std::move(r));
    combos.push_back(std::move(c));
    pivots.push_back(piv);
    w = m.apply(w);
  }
  throw Error(ErrorCode::Internal, "Krylov sequence did not become dependent");
}

Polynomial to_polynomial(const UPoly& f, const RingPtr& ring, std::size_t var) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!f[i].is_zero()) terms.push_back({Monomial::variable(var, static_cast<std::uint32_t>(i)), f[i]});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

Matrix evaluate(const UPoly& f, const Matrix& m) {
  Matrix result(m.field(), m.rows(), m.cols());
  for (std::size_t k = f.size(); k-- > 0;) {
    result = result * m;
    for (std::size_t i = 0; i < m.rows(); ++i) result(i, i) += f[k];
  }
  return result;
}

}  // namespace gradix::detail
