#include <random>

#include "doctest.h"
#include "gradix/parser.hpp"
#include "support.hpp"

using namespace gradix;
using testing::poly;
using testing::ring_of;

TEST_CASE("documents") {
  const Document d = parse_document("ring QQ[x,y] weights(1,1); ideal I = x^2+x*y, x^2-y^2, y^3;");
  REQUIRE(d.ideal_names == std::vector<std::string>{"I"});
  CHECK(d.ideal("I").generators().size() == 3);
  CHECK(d.ideal("I").generators()[0] == poly(d.ring, "x*y+x^2"));

  const Document l = parse_document(
      "# Laurent ring\n"
      "ring QQ[x,y,t,t^-1] weights(0,1,1);\n"
      "ideal I = x-y, t-1, x^2;\n");
  CHECK(l.ring->num_declared() == 3);
  CHECK(l.ring->num_variables() == 4);
  CHECK(l.ring->is_invertible(2));
  CHECK(l.ring->weight(3) == -1);
  CHECK(l.ideal("I").presentation_generators().size() == 4);

  const Document e = parse_document("ring GF(3)[x];");
  CHECK(e.ideals.empty());
  CHECK(e.ring->field() == Field::prime(3));

  CHECK(parse_document("ring QQ[x,y]; order lex;").order == MonomialOrder::lex());
  CHECK(parse_document("ring QQ[x]; ideal Z = ;").ideal("Z").generators().empty());
}

TEST_CASE("parse errors carry positions") {
  auto expect_error = [](const std::string& text, std::size_t line, std::size_t column) {
    try {
      parse_document(text);
      FAIL("no error for: " << text);
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
      CHECK(e.column() == column);
    }
  };
  expect_error("ring QQ[x];\nideal I = x+z;", 2, 13);
  expect_error("ring QQ[x];\nideal I = x;\nideal I = x;", 3, 7);
  expect_error("ring GF(4)[x];", 1, 9);
  expect_error("ring QQ[x]; ideal I = x y;", 1, 25);
  CHECK_THROWS_AS(parse_document("ideal I = x;"), ParseError);
  CHECK_THROWS_AS(parse_document("ring QQ[x,x];"), ParseError);
  CHECK_THROWS_AS(parse_document("ring QQ[x]; ideal I = x^-1;"), ParseError);
  CHECK_THROWS_AS(parse_document("ring QQ[x]; ideal I = x/(x+1);"), ParseError);
  CHECK_THROWS_AS(parse_document("ring QQ[x]; ideal I = x/0;"), ParseError);
  CHECK_THROWS_AS(parse_document("ring QQ[x] weights(1,2);"), ParseError);
}

TEST_CASE("precedence table") {
  auto r = ring_of("QQ[x,y]");
  struct Row {
    const char* text;
    const char* expected;
  };
  const Row rows[] = {
      {"x-y*x", "-x*y+x"},
      {"-x^2", "-x^2"},
      {"(-x)^2", "x^2"},
      {"2*x^2*y^0", "2*x^2"},
      {"x-y-x", "-y"},
      {"x*y/2", "1/2*x*y"},
      {"-x*-y", "x*y"},
      {"x^2*y^3-(x-y)^2", "x^2*y^3-x^2+2*x*y-y^2"},
      {"1/2/3", "1/6"},
  };
  for (const auto& row : rows) {
    CAPTURE(row.text);
    CHECK(poly(r, row.text) == poly(r, row.expected));
  }
}

TEST_CASE("rendering") {
  auto r = ring_of("QQ[x,y]");
  CHECK(render(poly(r, "x^2+x*y")) == "x^2+x*y");
  CHECK(render(Polynomial(r)) == "0");
  CHECK(render(Ideal(r)) == "0");
  CHECK(render(poly(r, "-x+1/2")) == "-x+1/2");
  auto g = ring_of("GF(5)[x]");
  CHECK(render(poly(g, "4*x+3")) == "-x-2");
  auto l = ring_of("QQ[x,t,t^-1]");
  CHECK(render(poly(l, "x*t^-2")) == "x*t^-2");
}

TEST_CASE("round trip on star generators") {
  auto r = ring_of("QQ[x,y,z]");
  const Ideal star = testing::ideal(r, {"x^3-y^3", "y^3-z^3", "x*y", "x*z", "y*z"});
  const std::string text = render_document(r, {{"S", star}});
  const Document back = parse_document(text);
  CHECK(ideal_equal(back.ideal("S"), Ideal(back.ring, [&] {
                      std::vector<Polynomial> gens;
                      for (const auto& g : star.generators()) gens.push_back(parse_polynomial(back.ring, render(g)));
                      return gens;
                    }())));
  for (std::size_t i = 0; i < star.generators().size(); ++i) {
    CHECK(render(back.ideal("S").generators()[i]) == render(star.generators()[i]));
  }
}

TEST_CASE("round trip on random polynomials") {
  std::mt19937_64 rng(5);
  for (const char* decl : {"QQ[x,y,z] weights(1,2,3)", "GF(3)[a,b]", "GF(32003)[x,y,t,t^-1] weights(0,1,1)"}) {
    auto r = ring_of(decl);
    for (int i = 0; i < 100; ++i) {
      std::vector<Term> terms;
      const int n = static_cast<int>(rng() % 5);
      for (int k = 0; k < n; ++k) {
        std::uint32_t e[4];
        for (std::size_t v = 0; v < 4; ++v) e[v] = v < r->num_variables() ? static_cast<std::uint32_t>(rng() % 4) : 0;
        const long num = static_cast<long>(rng() % 41) - 20;
        const long den = r->field().is_rational() ? static_cast<long>(rng() % 5) + 1 : 1;
        terms.push_back({Monomial::from_exponents(e), r->field().from_rational(num, den)});
      }
      const Polynomial f = Polynomial::from_terms(r, terms);
      CAPTURE(render(f));
      CHECK(parse_polynomial(r, render(f)) == f);
    }
  }
}
