#include <random>

#include "doctest.h"
#include "gradix/artin.hpp"
#include "gradix/reduc.hpp"
#include "gradix/star.hpp"
#include "support.hpp"

using namespace gradix;
using testing::ideal;
using testing::poly;
using testing::ring_of;

namespace {

Ideal i9(const RingPtr& r) { return ideal(r, {"x^2+x*y", "x^2-y^2", "y^3"}); }

Ideal laurent_input(const RingPtr& r) { return ideal(r, {"x-y", "t-1", "x^2"}); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("index of reducibility") {
  auto r = ring_of("QQ[x,y]");
  CHECK(index_of_reducibility(i9(r)) == 2);
  CHECK(index_of_reducibility(ideal(r, {"x", "y"})) == 1);
  CHECK(index_of_reducibility(ideal(r, {"x^3", "x^2*y", "x*y^2", "y^3"})) == 3);
  CHECK(index_of_reducibility(ideal(r, {"x^2-x-y", "x*y+x+y"})) == 1);
  CHECK(code_of([&] { index_of_reducibility(ideal(r, {"x+y^2"})); }) == ErrorCode::NotZeroDimensional);
  // two points: radical is not maximal
  CHECK(code_of([&] { index_of_reducibility(ideal(r, {"x^2-x", "y"})); }) == ErrorCode::RadicalNotMaximal);
}

TEST_CASE("graded index, artinian branch") {
  auto r = ring_of("QQ[x,y]");
  const GradedIndex g = graded_index_detail(i9(r));
  CHECK(g.value == 2);
  CHECK(g.branch == 'a');
  CHECK(graded_index(ideal(r, {"x^2", "y"})) == 1);
  CHECK(graded_index(ideal(r, {"x", "y"})) == 1);
  CHECK(code_of([&] { graded_index(ideal(r, {"x^2-x-y", "x*y+x+y"})); }) == ErrorCode::NotGraded);
  // y is a nonzerodivisor of positive degree that is not a unit
  CHECK(code_of([&] { graded_index(ideal(r, {"x"})); }) == ErrorCode::NotStarArtinian);
}

TEST_CASE("graded index through a unit nonzerodivisor") {
  auto r = ring_of("QQ[x,y,t,t^-1] weights(0,1,1)");
  const Ideal s = star(laurent_input(r)).ideal;
  const GradedIndex g = graded_index_detail(s);
  CHECK(g.value == 1);
  CHECK(g.branch == 'b');
  REQUIRE(g.nonzerodivisor);
  CHECK(*g.nonzerodivisor == poly(r, "t"));
  CHECK(index_of_star(laurent_input(r)) == 1);
}

TEST_CASE("graded index does not depend on the nonzerodivisor") {
  auto r = ring_of("QQ[x,y,t,t^-1] weights(0,1,1)");
  const Ideal s = ideal(r, {"x^2", "x*t-y"});
  const Polynomial one = poly(r, "1");
  std::vector<std::size_t> values;
  for (const char* text : {"t", "t+y", "2*t-3*y", "t-5*y"}) {
    const Polynomial l = poly(r, text);
    REQUIRE(ideal_equal(quotient(s, l), s));
    values.push_back(type_of_quotient(add_generators(s, {l - one})));
  }
  for (std::size_t v : values) CHECK(v == values.front());
  for (std::uint64_t seed : {std::uint64_t{1}, std::uint64_t{7}, kDefaultSeed}) CHECK(graded_index_detail(s, seed).value == values.front());

  // a sample of graded ideals with a unit of degree one
  std::mt19937_64 rng(3);
  auto g = ring_of("GF(5)[x,y,t,t^-1] weights(0,1,1)");
  for (int trial = 0; trial < 6; ++trial) {
    const long a = 1 + static_cast<long>(rng() % 4);
    const Ideal j(g, {poly(g, "x^3"), poly(g, "x*t-y") * poly(g, std::to_string(a)) + poly(g, "x^2*t")});
    REQUIRE(is_graded(j));
    const std::size_t reference = graded_index_detail(j).value;
    for (const char* text : {"t+y", "t-2*y"}) {
      const Polynomial l = poly(g, text);
      if (!ideal_equal(quotient(j, l), j)) continue;
      CHECK(type_of_quotient(add_generators(j, {l - poly(g, "1")})) == reference);
    }
  }
}

TEST_CASE("irreducibility verdicts") {
  auto r = ring_of("QQ[x,y]");
  CHECK(is_irreducible(ideal(r, {"x^2-x-y", "x*y+x+y"})).value == Certainty::True);
  CHECK(is_irreducible(i9(r)).value == Certainty::False);
  CHECK(is_irreducible(ideal(r, {"x+y^2"})).value == Certainty::Uncertified);
  CHECK(is_graded_irreducible(ideal(r, {"x+y", "y^3"})).value == Certainty::True);
  CHECK(is_graded_irreducible(i9(r)).value == Certainty::False);
  CHECK(is_graded_irreducible(ideal(r, {"x", "y"})).value == Certainty::True);
  CHECK(is_graded_irreducible(ideal(r, {"x"})).value == Certainty::Uncertified);
  CHECK(code_of([&] { is_graded_irreducible(ideal(r, {"x+y^2"})); }) == ErrorCode::NotGraded);
}

TEST_CASE("decomposition reports") {
  auto r = ring_of("QQ[x,y]");
  const ReducReport rep = decompose_report(i9(r), true);
  CHECK(rep.contradictions.empty());
  CHECK(rep.decomposition.r == 2);
  CHECK(rep.decomposition.r_graded == 2);
  bool found = false;
  for (const auto& c : rep.decomposition.components) found = found || ideal_equal(c, ideal(r, {"x+y", "y^3"}));
  CHECK(found);
  CHECK(decompose_report(ideal(r, {"x^3", "x^2*y", "x*y^2", "y^3"}), true).decomposition.r == 3);
  const ReducReport single = decompose_report(ideal(r, {"x^2", "y"}), true);
  CHECK(single.decomposition.r == 1);
  CHECK(single.decomposition.components.size() == 1);
}

TEST_CASE("r equals r^g on random graded ideals") {
  std::mt19937_64 rng(11);
  auto r = ring_of("GF(3)[x,y]");
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<Polynomial> gens{poly(r, "x^" + std::to_string(2 + rng() % 3)), poly(r, "y^" + std::to_string(2 + rng() % 3))};
    const std::uint32_t d = 2 + static_cast<std::uint32_t>(rng() % 2);
    std::vector<Term> terms;
    for (std::uint32_t i = 0; i <= d; ++i) {
      std::uint32_t e[2] = {i, d - i};
      terms.push_back({Monomial::from_exponents(e), r->field().from_int(static_cast<long>(rng() % 3))});
    }
    gens.push_back(Polynomial::from_terms(r, terms));
    const Ideal i(r, gens);
    CHECK(index_of_reducibility(i) == graded_index(i));
  }
}

TEST_CASE("local minimal generator counts") {
  auto r = ring_of("QQ[x,y]");
  const Ideal m = ideal(r, {"x", "y"});
  CHECK(local_min_generators(m, m) == 2);
  CHECK(local_min_generators(ideal(r, {"x^2", "x*y", "y^2"}), m) == 3);
  CHECK(local_min_generators(ideal(r, {"x^2", "x^2+x*y", "y^2", "x*y"}), m) == 3);
  CHECK(local_min_generators(ideal(r, {"x"}), m, ideal(r, {"x^2"})) == 1);
  CHECK(code_of([&] { local_min_generators(m, ideal(r, {"x", "y-1"})); }) == ErrorCode::ContainmentFailure);
  CHECK(code_of([&] { local_min_generators(ideal(r, {"x^2"}), m, ideal(r, {"x"})); }) ==
        ErrorCode::ContainmentFailure);

  auto l = ring_of("QQ[x,y,t,t^-1] weights(0,1,1)");
  const Ideal i = laurent_input(l);
  const Ideal rad = radical_maximal_certify(i).radical;
  CHECK(local_min_generators(i, rad, ideal(l, {"x^2", "y^2"})) == 2);
  CHECK(local_min_generators(i, rad, ideal(l, {"x^2", "x*t-y"})) == 1);
}

TEST_CASE("comparison with the star ideal") {
  auto r = ring_of("QQ[x,y,z]");
  const Ideal a = ideal(r, {"x^3-y^3", "y^3-z^3", "x*y", "x*z", "y*z", "x^2-y^3"});
  const StarComparison ca = compare_star(a);
  CHECK(ca.r == 3);
  // the input is graded, so the star ideal is the input itself
  CHECK(ca.r_star == 3);
  CHECK(ca.radical_graded);
  CHECK_FALSE(ca.hypothesis_met);
  CHECK(ca.conclusion_holds);
  CHECK(graded_index(ideal(r, {"x^3-y^3", "y^3-z^3", "x*y", "x*z", "y*z"})) == 1);

  const Ideal b = ideal(r, {"x^3+x*y", "z^3", "y^3", "x^3*y^2", "x^5*y", "x^7"});
  const StarComparison cb = compare_star(b);
  CHECK(cb.r == 1);
  CHECK(cb.r_star == 3);
  CHECK(cb.radical_graded);
  CHECK_FALSE(cb.hypothesis_met);
  CHECK_FALSE(cb.conclusion_holds);
  CHECK(cb.contradictions.empty());
  CHECK(index_of_star(b) == 3);

  auto l = ring_of("QQ[x,y,t,t^-1] weights(0,1,1)");
  const StarComparison cl = compare_star(laurent_input(l));
  CHECK(cl.r == 1);
  CHECK(cl.r_star == 1);
  CHECK_FALSE(cl.radical_graded);
  CHECK(cl.quotient_generators == 1);
  CHECK(cl.quotient_principal == Principal::Yes);
  CHECK(cl.hypothesis_met);
  CHECK(cl.conclusion_holds);
  CHECK(cl.contradictions.empty());

  auto q = ring_of("QQ[x,y]");
  const StarComparison cg = compare_star(i9(q));
  CHECK(cg.r == cg.r_star);
  CHECK(cg.quotient_generators == 0);
}

TEST_CASE("equivalence over a corpus") {
  const EquivalenceReport empty = verify_equivalence({});
  CHECK(empty.passed == 0);
  CHECK(empty.failed == 0);
  CHECK(empty.entries.empty());

  auto r = ring_of("QQ[x,y]");
  const EquivalenceReport one = verify_equivalence({i9(r)});
  REQUIRE(one.entries.size() == 1);
  CHECK(one.passed == 1);
  CHECK(one.entries[0].r == 2);
  CHECK(one.entries[0].r_graded == 2);
  CHECK(one.entries[0].components == 2);
  CHECK(one.entries[0].fixture.find("ring") != std::string::npos);
  CHECK(one.contradictions.empty());

  auto g = ring_of("GF(3)[x,y,z]");
  std::vector<Ideal> corpus{ideal(g, {"x^2", "y^2", "z^2"}), ideal(g, {"x^2", "x*y", "y^3", "z"}),
                            ideal(g, {"x+y", "x^3", "z^2"}), ideal(g, {"x"})};
  const EquivalenceReport serial = verify_equivalence(corpus, Exec::Serial);
  const EquivalenceReport parallel = verify_equivalence(corpus, Exec::Parallel);
  CHECK(serial.passed == 3);
  CHECK(serial.failed == 1);
  CHECK_FALSE(serial.entries[3].failure.empty());
  REQUIRE(parallel.entries.size() == serial.entries.size());
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    CHECK(parallel.entries[k].passed == serial.entries[k].passed);
    CHECK(parallel.entries[k].r == serial.entries[k].r);
    CHECK(parallel.entries[k].components == serial.entries[k].components);
  }
}
