#include "gradix/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <sstream>

#include "gradix/parser.hpp"

namespace gradix {

namespace {

using Row = std::vector<std::uint32_t>;

// Residue arithmetic mod a small prime; all matrices here are tiny.
struct Zp {
  std::uint64_t p;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return static_cast<std::uint32_t>((a + b) % p); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : static_cast<std::uint32_t>(p - a); }
  std::uint32_t inv(std::uint32_t a) const {
    std::uint64_t r = 1, b = a, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
  }
};

// Reduced echelon span, kept sorted by pivot.
struct Span {
  std::vector<Row> rows;
  std::vector<std::size_t> pivots;

  Row reduce(Row v, const Zp& z) const {
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const std::uint32_t c = v[pivots[k]];
      if (c == 0) continue;
      const std::uint32_t m = z.neg(c);
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = z.add(v[j], z.mul(m, rows[k][j]));
    }
    return v;
  }

  bool insert(Row v, const Zp& z) {
    v = reduce(std::move(v), z);
    auto lead = std::find_if(v.begin(), v.end(), [](std::uint32_t c) { return c != 0; });
    if (lead == v.end()) return false;
    const std::size_t piv = static_cast<std::size_t>(lead - v.begin());
    const std::uint32_t s = z.inv(*lead);
    for (auto& c : v) c = z.mul(c, s);
    for (auto& r : rows) {
      const std::uint32_t c = r[piv];
      if (c == 0) continue;
      const std::uint32_t m = z.neg(c);
      for (std::size_t j = 0; j < r.size(); ++j) r[j] = z.add(r[j], z.mul(m, v[j]));
    }
    const auto at = std::lower_bound(pivots.begin(), pivots.end(), piv) - pivots.begin();
    rows.insert(rows.begin() + at, std::move(v));
    pivots.insert(pivots.begin() + at, piv);
    return true;
  }

  std::vector<std::uint32_t> key() const {
    std::vector<std::uint32_t> k{static_cast<std::uint32_t>(rows.size())};
    for (auto p : pivots) k.push_back(static_cast<std::uint32_t>(p));
    for (const auto& r : rows) k.insert(k.end(), r.begin(), r.end());
    return k;
  }
};

struct Tables {
  Zp z;
  std::size_t n;
  std::vector<std::vector<Row>> mult;  // mult[i][j] = x_i * e_j

  Row apply(std::size_t var, const Row& v) const {
    Row out(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j] == 0) continue;
      for (std::size_t r = 0; r < n; ++r) out[r] = z.add(out[r], z.mul(v[j], mult[var][j][r]));
    }
    return out;
  }
};

Tables tables_of(const FiniteAlgebra& a) {
  if (a.field().is_rational()) throw Error(ErrorCode::InvalidField, "the oracle needs a finite field");
  Tables t{Zp{a.field().characteristic()}, a.dimension(), {}};
  for (const auto& m : a.multiplication) {
    std::vector<Row> cols(t.n, Row(t.n, 0));
    for (std::size_t j = 0; j < t.n; ++j) {
      for (std::size_t r = 0; r < t.n; ++r) cols[j][r] = m(r, j).residue();
    }
    t.mult.push_back(std::move(cols));
  }
  return t;
}

// Smallest ideal containing `base` and v.
Span closure(const Tables& t, Span base, const Row& v) {
  std::deque<Row> todo{v};
  while (!todo.empty()) {
    Row w = base.reduce(std::move(todo.front()), t.z);
    todo.pop_front();
    if (!base.insert(w, t.z)) continue;
    for (std::size_t i = 0; i < t.mult.size(); ++i) todo.push_back(t.apply(i, w));
  }
  return base;
}

Span intersect(const Span& a, const Span& b, const Zp& z, std::size_t n) {
  // Zassenhaus: rows (a|a) and (b|0); the rows with zero left half give a ∩ b
  Span big;
  for (const auto& r : a.rows) {
    Row w(r);
    w.insert(w.end(), r.begin(), r.end());
    big.insert(std::move(w), z);
  }
  for (const auto& r : b.rows) {
    Row w(r);
    w.insert(w.end(), n, 0);
    big.insert(std::move(w), z);
  }
  Span out;
  for (std::size_t k = 0; k < big.rows.size(); ++k) {
    if (big.pivots[k] >= n) out.insert(Row(big.rows[k].begin() + static_cast<long>(n), big.rows[k].end()), z);
  }
  return out;
}

bool graded_span(const Span& s, const std::vector<std::int64_t>& degrees, const Zp& z) {
  for (const auto& r : s.rows) {
    std::map<std::int64_t, Row> parts;
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (r[j] == 0) continue;
      auto& part = parts.try_emplace(degrees[j], Row(r.size(), 0)).first->second;
      part[j] = r[j];
    }
    if (parts.size() <= 1) continue;
    for (auto& [d, part] : parts) {
      const Row rest = s.reduce(part, z);
      if (std::any_of(rest.begin(), rest.end(), [](std::uint32_t c) { return c != 0; })) return false;
    }
  }
  return true;
}

std::vector<Row> all_vectors_avoiding(std::size_t n, std::uint32_t p, const std::vector<std::size_t>& pivots) {
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < n; ++j) {
    if (!std::binary_search(pivots.begin(), pivots.end(), j)) free.push_back(j);
  }
  std::vector<Row> out;
  Row v(n, 0);
  // odometer over the free coordinates, skipping 0
  while (true) {
    std::size_t k = 0;
    while (k < free.size() && v[free[k]] == p - 1) v[free[k++]] = 0;
    if (k == free.size()) break;
    ++v[free[k]];
    out.push_back(v);
  }
  return out;
}

Span span_of(const LatticeMember& m) { return Span{m.basis, m.pivots}; }

std::string label_of(const RingPtr& ring, const Monomial& m) {
  return render(Polynomial::term(ring, m, ring->field().one()));
}

void nilpotent_or_throw(const FiniteAlgebra& a) {
  for (std::size_t i = 0; i < a.multiplication.size(); ++i) {
    Matrix p = a.multiplication[i];
    for (std::size_t k = 1; k < a.dimension(); ++k) p = p * a.multiplication[i];
    for (std::size_t r = 0; r < a.dimension(); ++r) {
      for (std::size_t c = 0; c < a.dimension(); ++c) {
        if (!p(r, c).is_zero()) {
          throw Error(ErrorCode::InvalidArgument,
                      a.ring->name(i) + " is not nilpotent: the algebra is not local at the origin");
        }
      }
    }
  }
}

}  // namespace

FiniteAlgebra finite_algebra(const QuotientBasis& q) {
  if (q.field().is_rational()) throw Error(ErrorCode::InvalidField, "the oracle needs a finite field");
  FiniteAlgebra a{q.ring(), q.ideal(), {}, q.multiplication(), q.degrees(), q.graded()};
  for (const auto& m : q.monomials()) a.labels.push_back(label_of(q.ring(), m));
  return a;
}

FiniteAlgebra finite_algebra(const Ideal& ideal) { return finite_algebra(quotient_basis(ideal)); }

double subspace_estimate(std::uint32_t q, std::size_t n) {
  // [n choose k]_q via the recurrence over k
  double total = 0, g = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    total += g;
    g *= (std::pow(double(q), double(n - k)) - 1) / (std::pow(double(q), double(k + 1)) - 1);
  }
  return total;
}

IdealLattice enumerate_ideals(const FiniteAlgebra& a, double cap) {
  const Tables t = tables_of(a);
  const double estimate = subspace_estimate(a.field().characteristic(), t.n);
  if (estimate > cap) {
    throw Error(ErrorCode::CapExceeded, "about " + std::to_string(static_cast<long long>(estimate)) +
                                            " subspaces in dimension " + std::to_string(t.n) + " over " +
                                            a.field().to_string());
  }
  std::map<std::vector<std::uint32_t>, Span> found;
  std::deque<Span> todo{Span{}};
  found.emplace(Span{}.key(), Span{});
  while (!todo.empty()) {
    const Span j = std::move(todo.front());
    todo.pop_front();
    for (const Row& v : all_vectors_avoiding(t.n, a.field().characteristic(), j.pivots)) {
      Span c = closure(t, j, v);
      auto key = c.key();
      if (found.emplace(std::move(key), c).second) todo.push_back(std::move(c));
    }
  }

  IdealLattice lat;
  // map order on keys = (dimension, pivots, entries)
  std::map<std::vector<std::uint32_t>, std::size_t> index;
  for (auto& [key, span] : found) {
    index.emplace(key, lat.members.size());
    const bool graded = a.graded && graded_span(span, a.degrees, t.z);
    if (graded) lat.graded.push_back(lat.members.size());
    lat.members.push_back(LatticeMember{span.rows, span.pivots, graded});
  }
  lat.zero = 0;
  lat.whole = lat.members.size() - 1;
  const std::size_t size = lat.members.size();
  lat.meet.assign(size, std::vector<std::uint32_t>(size, 0));
  for (std::size_t i = 0; i < size; ++i) {
    lat.meet[i][i] = static_cast<std::uint32_t>(i);
    for (std::size_t j = i + 1; j < size; ++j) {
      const Span m = intersect(span_of(lat.members[i]), span_of(lat.members[j]), t.z, t.n);
      const auto it = index.find(m.key());
      if (it == index.end()) throw Error(ErrorCode::Internal, "intersection of two ideals left the lattice");
      lat.meet[i][j] = lat.meet[j][i] = static_cast<std::uint32_t>(it->second);
    }
  }
  return lat;
}

bool oracle_irreducible(const IdealLattice& lattice, std::size_t member, bool graded) {
  if (member == lattice.whole) return true;
  std::vector<std::size_t> above;
  auto consider = [&](std::size_t k) {
    if (k != member && lattice.contains(k, member)) above.push_back(k);
  };
  if (graded) {
    for (std::size_t k : lattice.graded) consider(k);
  } else {
    for (std::size_t k = 0; k < lattice.size(); ++k) consider(k);
  }
  for (std::size_t i = 0; i < above.size(); ++i) {
    for (std::size_t j = i + 1; j < above.size(); ++j) {
      if (lattice.meet[above[i]][above[j]] == member) return false;
    }
  }
  return true;
}

namespace {

std::vector<std::size_t> irreducible_members(const IdealLattice& lattice, bool graded) {
  std::vector<std::size_t> out;
  auto consider = [&](std::size_t k) {
    if (k != lattice.whole && oracle_irreducible(lattice, k, graded)) out.push_back(k);
  };
  if (graded) {
    for (std::size_t k : lattice.graded) consider(k);
  } else {
    for (std::size_t k = 0; k < lattice.size(); ++k) consider(k);
  }
  return out;
}

}  // namespace

std::size_t oracle_index(const IdealLattice& lattice, bool graded) {
  if (lattice.zero == lattice.whole) return 0;
  const auto irr = irreducible_members(lattice, graded);
  std::vector<std::size_t> frontier{lattice.whole};
  std::vector<bool> seen(lattice.size(), false);
  seen[lattice.whole] = true;
  for (std::size_t depth = 1; !frontier.empty(); ++depth) {
    std::vector<std::size_t> next;
    for (std::size_t cur : frontier) {
      for (std::size_t k : irr) {
        const std::size_t m = lattice.meet[cur][k];
        if (m == lattice.zero) return depth;
        if (!seen[m]) {
          seen[m] = true;
          next.push_back(m);
        }
      }
    }
    frontier = std::move(next);
  }
  throw Error(ErrorCode::Internal, "0 is not an intersection of irreducible ideals");
}

std::size_t oracle_index(const FiniteAlgebra& a, bool graded, double cap) {
  return oracle_index(enumerate_ideals(a, cap), graded);
}

std::size_t socle_dimension(const FiniteAlgebra& a) {
  nilpotent_or_throw(a);
  const std::size_t n = a.dimension();
  Matrix stacked(a.field(), 0, n);
  for (const auto& m : a.multiplication) stacked = Matrix::stack(stacked, m);
  return n - rank(stacked);
}

OracleReport oracle_theorems(const FiniteAlgebra& a, double cap) {
  if (!a.graded) throw Error(ErrorCode::NotGraded, "the algebra carries no grading");
  const IdealLattice lat = enumerate_ideals(a, cap);
  OracleReport rep;
  rep.lattice_size = lat.size();
  rep.graded_size = lat.graded.size();
  rep.socle_dimension = socle_dimension(a);
  rep.index = oracle_index(lat, false);
  rep.graded_index = oracle_index(lat, true);

  for (std::size_t k : lat.graded) {
    const bool g = oracle_irreducible(lat, k, true);
    const bool u = oracle_irreducible(lat, k, false);
    if (g != u) {
      rep.failures.push_back("graded ideal #" + std::to_string(k) + " is " + (g ? "" : "not ") +
                             "graded-irreducible but " + (u ? "" : "not ") + "irreducible");
    }
  }
  if (rep.index != rep.graded_index) {
    rep.failures.push_back("r = " + std::to_string(rep.index) + " but r^g = " + std::to_string(rep.graded_index));
  }
  if (rep.index != rep.socle_dimension) {
    rep.failures.push_back("r = " + std::to_string(rep.index) + " but the socle has dimension " +
                           std::to_string(rep.socle_dimension));
  }

  // every irredundant decomposition of 0 into irreducibles, by depth-first search
  const auto irr = irreducible_members(lat, false);
  std::vector<std::size_t> chosen;
  std::vector<bool> lengths(a.dimension() + 2, false);
  std::size_t budget = 2000000;
  auto irredundant = [&] {
    for (std::size_t drop = 0; drop < chosen.size(); ++drop) {
      std::size_t acc = lat.whole;
      for (std::size_t k = 0; k < chosen.size(); ++k) {
        if (k != drop) acc = lat.meet[acc][chosen[k]];
      }
      if (acc == lat.zero) return false;
    }
    return true;
  };
  auto dfs = [&](auto&& self, std::size_t start, std::size_t current) -> void {
    for (std::size_t j = start; j < irr.size(); ++j) {
      if (budget == 0) {
        rep.truncated = true;
        return;
      }
      --budget;
      const std::size_t m = lat.meet[current][irr[j]];
      if (m == current) continue;
      chosen.push_back(irr[j]);
      if (m == lat.zero) {
        if (irredundant()) {
          ++rep.decompositions;
          lengths[std::min(chosen.size(), lengths.size() - 1)] = true;
        }
      } else if (chosen.size() < a.dimension()) {
        self(self, j + 1, m);
      }
      chosen.pop_back();
    }
  };
  dfs(dfs, 0, lat.whole);
  for (std::size_t l = 0; l < lengths.size(); ++l) {
    if (lengths[l]) rep.decomposition_lengths.push_back(l);
  }
  if (rep.decomposition_lengths.size() > 1 ||
      (rep.decomposition_lengths.size() == 1 && rep.decomposition_lengths[0] != rep.index)) {
    std::string seen;
    for (auto l : rep.decomposition_lengths) seen += (seen.empty() ? "" : ", ") + std::to_string(l);
    rep.failures.push_back("irredundant irreducible decompositions of 0 have lengths {" + seen + "}");
  }
  if (!rep.failures.empty()) rep.fixture = dump_fixture(a);
  return rep;
}

std::string dump_fixture(const FiniteAlgebra& a) {
  std::vector<std::pair<std::string, Ideal>> ideals;
  if (a.source) ideals.emplace_back("I", *a.source);
  std::ostringstream out;
  out << render_document(a.ring, ideals);
  out << "#! basis";
  for (const auto& l : a.labels) out << ' ' << l;
  out << "\n#! degrees";
  for (auto d : a.degrees) out << ' ' << d;
  out << "\n#! graded " << (a.graded ? 1 : 0) << '\n';
  for (std::size_t i = 0; i < a.multiplication.size(); ++i) {
    out << "#! mult " << a.ring->name(i) << '\n';
    const Matrix& m = a.multiplication[i];
    for (std::size_t r = 0; r < m.rows(); ++r) {
      out << "#!";
      for (std::size_t c = 0; c < m.cols(); ++c) out << ' ' << m(r, c).residue();
      out << '\n';
    }
  }
  return out.str();
}

FiniteAlgebra load_fixture(std::string_view text) {
  const Document doc = parse_document(text);
  std::vector<std::pair<std::size_t, std::string>> table;
  std::istringstream in{std::string(text)};
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    if (line.rfind("#!", 0) == 0) table.emplace_back(no, line.substr(2));
  }
  std::optional<Ideal> source;
  if (doc.ideals.count("I")) {
    source = doc.ideal("I");
  } else if (!doc.ideal_names.empty()) {
    source = doc.ideal(doc.ideal_names.front());
  }
  if (table.empty()) {
    if (!source) throw ParseError(1, 1, "a fixture needs an ideal or a #! multiplication table");
    return finite_algebra(*source);
  }
  const RingPtr& ring = doc.ring;
  if (ring->field().is_rational()) throw Error(ErrorCode::InvalidField, "the oracle needs a finite field");
  FiniteAlgebra a{ring, source, {}, {}, {}, false};
  std::size_t k = 0;
  auto fail = [&](const std::string& msg) -> ParseError {
    return ParseError(k < table.size() ? table[k].first : table.back().first, 1, msg);
  };
  auto words = [](const std::string& s) {
    std::istringstream ws(s);
    std::vector<std::string> out;
    for (std::string w; ws >> w;) out.push_back(w);
    return out;
  };
  auto expect = [&](const std::string& head) {
    if (k >= table.size()) throw fail("missing '#! " + head + "'");
    auto w = words(table[k].second);
    if (w.empty() || w[0] != head) throw fail("expected '#! " + head + "'");
    w.erase(w.begin());
    ++k;
    return w;
  };
  a.labels = expect("basis");
  const std::size_t n = a.labels.size();
  auto number = [&](const std::string& w) -> long {
    try {
      std::size_t used = 0;
      const long v = std::stol(w, &used);
      if (used == w.size()) return v;
    } catch (const std::exception&) {
    }
    throw fail("'" + w + "' is not an integer");
  };
  for (const auto& d : expect("degrees")) a.degrees.push_back(number(d));
  const auto g = expect("graded");
  if (a.degrees.size() != n || g.size() != 1) throw fail("basis, degrees and graded lines disagree");
  a.graded = g[0] == "1";
  for (std::size_t i = 0; i < ring->num_variables(); ++i) {
    const auto name = expect("mult");
    if (name.size() != 1 || name[0] != ring->name(i)) throw fail("expected the table of " + ring->name(i));
    Matrix m(ring->field(), n, n);
    for (std::size_t r = 0; r < n; ++r, ++k) {
      if (k >= table.size()) throw fail("multiplication table too short");
      const auto row = words(table[k].second);
      if (row.size() != n) throw fail("row of length " + std::to_string(row.size()) + ", expected " + std::to_string(n));
      for (std::size_t c = 0; c < n; ++c) m(r, c) = ring->field().from_int(number(row[c]));
    }
    a.multiplication.push_back(std::move(m));
  }
  if (k != table.size()) throw fail("trailing #! lines");
  return a;
}

}  // namespace gradix
