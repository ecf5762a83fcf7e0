#include <random>

#include "doctest.h"
#include "gradix/parser.hpp"
#include "gradix/star.hpp"
#include "support.hpp"

using namespace gradix;
using testing::ideal;
using testing::poly;
using testing::ring_of;

namespace {

void check_invariants(const Ideal& input, const StarResult& s) {
  for (const auto& g : s.ideal.generators()) {
    CHECK(g.is_homogeneous());
    CHECK(contains(input, g));
  }
  CHECK(is_graded(s.ideal));
  CHECK(is_subset(s.ideal, input));
}

}  // namespace

TEST_CASE("graded input is a fixed point") {
  auto r = ring_of("QQ[x,y]");
  const Ideal i9 = ideal(r, {"x^2+x*y", "x^2-y^2", "y^3"});
  for (const StarResult& s : {star(i9), star_truncated(i9), star_lambda(i9)}) {
    CHECK(ideal_equal(s.ideal, i9));
    check_invariants(i9, s);
  }
  CHECK(star(i9).method == StarMethod::Identity);
  CHECK(star_truncated(i9).certificate == StarCertificate::Certified);
}

TEST_CASE("first pair of three-variable examples") {
  auto r = ring_of("QQ[x,y,z]");
  const Ideal smaller = ideal(r, {"x^3-y^3", "y^3-z^3", "x*y", "x*z", "y*z"});
  const Ideal i = add_generators(smaller, {poly(r, "x^2-y^3")});
  // x^3 = x*(x^2-y^3) + y^2*(x*y), so y^3 and then x^2 lie in I: I is graded
  CHECK(contains(i, poly(r, "y^3")));
  CHECK(contains(i, poly(r, "x^2")));
  CHECK(is_graded(i));
  CHECK(ideal_equal(i, ideal(r, {"x^2", "x*y", "x*z", "y*z", "y^3", "z^3"})));
  const StarResult s = star(i);
  CHECK(s.method == StarMethod::Identity);
  CHECK(ideal_equal(s.ideal, i));
  CHECK(ideal_equal(star_truncated(i).ideal, i));
  CHECK(ideal_equal(star_lambda(i).ideal, i));
  CHECK(is_subset(smaller, s.ideal));
  CHECK_FALSE(ideal_equal(smaller, s.ideal));
  CHECK(ideal_equal(star(smaller).ideal, smaller));
}

TEST_CASE("second pair of three-variable examples") {
  auto r = ring_of("QQ[x,y,z]");
  const Ideal expected = ideal(r, {"z^3", "y^3", "x^3*y^2", "x^5*y", "x^7"});
  const Ideal i = add_generators(expected, {poly(r, "x^3+x*y")});
  const StarResult s = star(i);
  CHECK(ideal_equal(s.ideal, expected));
  check_invariants(i, s);
  CHECK(ideal_equal(star_lambda(i).ideal, expected));
}

TEST_CASE("Laurent example") {
  auto r = ring_of("QQ[x,y,t,t^-1] weights(0,1,1)");
  const Ideal i = ideal(r, {"x-y", "t-1", "x^2"});
  // x*t - y = x*(t-1) + (x-y) is homogeneous of degree 1
  CHECK(contains(i, poly(r, "x*t-y")));
  CHECK(poly(r, "x*t-y").is_homogeneous());
  const StarResult l = star_lambda(i);
  CHECK(ideal_equal(l.ideal, ideal(r, {"x^2", "x*t-y"})));
  CHECK(is_subset(ideal(r, {"x^2", "y^2"}), l.ideal));
  CHECK_FALSE(contains(ideal(r, {"x^2", "y^2"}), poly(r, "x*t-y")));
  check_invariants(i, l);
  CHECK(star(i).method == StarMethod::LambdaElimination);
  CHECK_THROWS_AS(star_truncated(i, 5), Error);
  auto g = ring_of("GF(3)[x,y,t,t^-1] weights(0,1,1)");
  const StarResult lg = star_lambda(ideal(g, {"x-y", "t-1", "x^2"}));
  CHECK(lg.finite_field);
  CHECK(ideal_equal(lg.ideal, ideal(g, {"x^2", "x*t-y"})));
}

TEST_CASE("ideals without homogeneous elements") {
  auto r = ring_of("QQ[x,y]");
  const Ideal i = ideal(r, {"x+y^2"});
  const StarResult t = star_truncated(i, 10);
  CHECK(t.certificate == StarCertificate::BoundedOnly);
  CHECK(t.bound == 10);
  CHECK(t.ideal.generators().empty());
  CHECK(star_lambda(i).ideal.generators().empty());
  CHECK(star(i).ideal.generators().empty());
  try {
    star_truncated(i);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MissingBound);
  }
}

TEST_CASE("truncated star grows with the bound") {
  auto r = ring_of("QQ[x,y,z]");
  const Ideal i = ideal(r, {"x^2-y*z", "x*y-z"});
  Ideal previous(r);
  for (std::int64_t b = 0; b <= 6; ++b) {
    const StarResult s = star_truncated(i, b);
    CHECK(is_subset(previous, s.ideal));
    previous = s.ideal;
  }
  CHECK(is_subset(previous, star_lambda(i).ideal));
}

TEST_CASE("methods agree on random positively graded inputs") {
  std::mt19937_64 rng(101);
  auto r = ring_of("GF(5)[x,y] weights(1,2)");
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 2; ++k) {
      std::vector<Term> terms;
      for (int j = 0; j < 3; ++j) {
        std::uint32_t e[2] = {static_cast<std::uint32_t>(rng() % 4), static_cast<std::uint32_t>(rng() % 3)};
        terms.push_back({Monomial::from_exponents(e), r->field().from_int(1 + static_cast<long>(rng() % 4))});
      }
      gens.push_back(Polynomial::from_terms(r, terms));
    }
    gens.push_back(poly(r, "x^5"));
    gens.push_back(poly(r, "y^3"));
    const Ideal i(r, gens);
    const StarResult t = star_truncated(i);
    const StarResult l = star_lambda(i);
    CHECK(ideal_equal(t.ideal, l.ideal));
    check_invariants(i, t);
  }
}
