#include "pdrank/combinatorics.hpp"
#include "pdrank/corpus.hpp"
#include "pdrank/poly.hpp"

#include <doctest.h>

#include <random>

using namespace pdrank;

TEST_SUITE("polyio") {

TEST_CASE("parse_poly merges, cancels and orders variables by first appearance") {
  auto f = parse_poly("x1*x2 + x3");
  CHECK(f.size() == 2);
  CHECK(f.vars() == std::vector<std::string>{"x1", "x2", "x3"});

  CHECK(parse_poly("2*x1 - 2*x1").is_zero());
  CHECK(parse_poly("2*x1 - 2*x1").vars() == std::vector<std::string>{"x1"});

  auto g = parse_poly("x1^2*x2 + x1^2*x2");
  REQUIRE(g.size() == 1);
  CHECK(g.terms()[0].coef == 2);
  CHECK(g.terms()[0].exps == ExponentVector{2, 1});
}

TEST_CASE("parse_poly coefficient forms") {
  auto f = parse_poly("3/2*a^2*c - 0.25*b + 7");
  CHECK(f.vars() == std::vector<std::string>{"a", "c", "b"});
  CHECK(*f.coefficient(ExponentVector{2, 1, 0}) == Rational(3, 2));
  CHECK(*f.coefficient(ExponentVector{0, 0, 1}) == Rational(-1, 4));
  CHECK(*f.coefficient(ExponentVector{0, 0, 0}) == 7);
  CHECK(parse_poly("-x + y").terms().size() == 2);
  CHECK(parse_poly("x*x*y^2").terms()[0].exps == ExponentVector{2, 2});
}

TEST_CASE("vars header pins the order") {
  auto f = parse_poly("vars: z y x\nx*y + z^3\n");
  CHECK(f.vars() == std::vector<std::string>{"z", "y", "x"});
  CHECK(f.contains(ExponentVector{0, 1, 1}));
  CHECK(f.contains(ExponentVector{3, 0, 0}));
  CHECK(parse_poly("vars: a b c\na").nvars() == 3);
}

TEST_CASE("parse errors carry positions") {
  auto fails_at = [](const char* text, std::size_t line, std::size_t column) {
    try {
      parse_poly(text);
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
      CHECK(e.column() == column);
      return;
    }
    FAIL("expected a parse error for " << text);
  };
  fails_at("x1 + + x2", 1, 6);
  fails_at("x1^-2", 1, 4);
  fails_at("vars: a b\na + c", 2, 5);
  fails_at("1.5e3*x", 1, 4);
  fails_at("x1\n  + 2/*y", 2, 7);
  CHECK_THROWS_AS(parse_poly(""), ParseError);
  CHECK_THROWS_AS(parse_poly("2 x"), ParseError);
  CHECK_THROWS_AS(parse_poly("vars: a a\na"), ParseError);
}

TEST_CASE("to_scaled multiplies by factorial products") {
  CHECK(to_scaled(parse_poly("x1^2")).terms()[0].coef == 2);
  CHECK(to_scaled(parse_poly("3*x1^2*x2^3")).terms()[0].coef == 36);
  auto ml = parse_poly("2*a*b - 5/3*c + a*b*c");
  auto scaled = to_scaled(ml);
  CHECK(scaled.basis() == Basis::scaled);
  for (std::size_t i = 0; i < ml.size(); ++i) CHECK(scaled.terms()[i].coef == ml.terms()[i].coef);
  CHECK(to_scaled(scaled) == scaled);
}

TEST_CASE("round trips on a random corpus") {
  for (const auto& f : random_corpus(7, 60)) {
    CHECK(parse_poly(format_poly(f)) == f);
    CHECK(poly_from_json(poly_to_json(f)) == f);
    CHECK(to_ordinary(to_scaled(f)) == f);
    CHECK(SparsePoly(f.vars(), f.terms()) == f);  // canonicalization is idempotent
  }
  CHECK(read_poly(poly_to_json(parse_poly("x^2 - 1/3*y")).dump()) == parse_poly("x^2 - 1/3*y"));
  CHECK(parse_poly(format_poly(parse_poly("2*x - 2*x"))) == parse_poly("2*x - 2*x"));
}

TEST_CASE("lex order is total and compatible with addition") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::uint32_t> e(0, 3);
  auto draw = [&] {
    ExponentVector v(4);
    for (std::size_t i = 0; i < 4; ++i) v[i] = e(rng);
    return v;
  };
  for (int i = 0; i < 2000; ++i) {
    auto a = draw(), b = draw(), c = draw();
    CHECK(((a < b) + (b < a) + (a == b)) == 1);
    if (a < b) CHECK(a + c < b + c);
    if (a.divides(b)) CHECK(subtract(b, a).has_value());
  }
}

TEST_CASE("graph parsing") {
  auto k3 = parse_graph("p 3\n1 2\n2 3\n1 3\n");
  CHECK(k3.vertex_count() == 3);
  CHECK(k3.edge_count() == 3);
  CHECK(parse_graph("1 2\n3 4").vertex_count() == 4);
  CHECK_THROWS_AS(parse_graph("p 3\n1 4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph("p 3\n2 2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph("p 3\n1 2\n2 1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph("p 3\n1 x"), ParseError);
  CHECK(parse_graph(format_graph(k3)).edges() == k3.edges());
}

TEST_CASE("complex parsing prunes redundant facets") {
  auto c = parse_complex("1 2\n2 3");
  CHECK(c.ground() == 3);
  CHECK(c.facets().size() == 2);
  CHECK(c.is_pure());

  auto pruned = parse_complex("1 2\n1");
  REQUIRE(pruned.facets().size() == 1);
  CHECK(pruned.facets()[0] == SimplicialComplex::Facet{1, 2});

  auto mixed = parse_complex("ground 5\n1 2 3\n4\n3 2 1");
  CHECK(mixed.ground() == 5);
  CHECK(mixed.facets().size() == 2);
  CHECK_FALSE(mixed.is_pure());

  CHECK_THROWS_AS(parse_complex("ground 3\n1 4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_complex("ground 3\n0 1"), ParseError);
  CHECK_THROWS_AS(SimplicialComplex(3, {{}}), std::invalid_argument);
}

}
