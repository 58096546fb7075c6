#include "oracles.hpp"

#include "pdrank/corpus.hpp"
#include "pdrank/exact.hpp"
#include "pdrank/reductions.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace pdrank;

namespace {

// Random homogeneous polynomial with small integer coefficients.
SparsePoly random_homogeneous(std::mt19937_64& rng, std::size_t n, std::uint32_t d, std::size_t s) {
  std::vector<std::string> vars;
  for (std::size_t i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
  std::uniform_int_distribution<std::size_t> var(0, n - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::vector<Term> terms;
  for (std::size_t t = 0; t < s; ++t) {
    ExponentVector e(n);
    for (std::uint32_t j = 0; j < d; ++j) e[var(rng)] += 1;
    int c = coef(rng);
    terms.push_back({Rational(c == 0 ? 1 : c), e});
  }
  return SparsePoly(vars, terms);
}

}  // namespace

TEST_SUITE("exact") {

TEST_CASE("derivative in the scaled basis") {
  auto f = to_scaled(parse_poly("x1*x2"));
  auto d = derivative(f, ExponentVector{1, 0});
  REQUIRE(d.size() == 1);
  CHECK(d.terms()[0].exps == ExponentVector{0, 1});
  CHECK(d.terms()[0].coef == 1);
  CHECK(derivative(f, ExponentVector{0, 0}) == f);
  CHECK(derivative(f, ExponentVector{2, 0}).is_zero());

  // d^2/dx1^2 (x1^2 x2) = 2 x2, checked against ordinary calculus.
  auto g = parse_poly("x1^2*x2");
  auto dg = derivative(to_scaled(g), ExponentVector{2, 0});
  CHECK(dg.terms()[0].coef == 2);
  auto ordinary = oracle::ordinary_derivative(g, ExponentVector{2, 0});
  CHECK(to_ordinary(dg) == SparsePoly(g.vars(), {{ordinary.begin()->second, ordinary.begin()->first}}));
  CHECK(to_ordinary(dg) == parse_poly("vars: x1 x2\n2*x2"));
  CHECK_THROWS_AS(derivative(g, ExponentVector{1, 0}), std::invalid_argument);
}

TEST_CASE("derivative agrees with ordinary calculus on a corpus") {
  std::mt19937_64 rng(3);
  for (const auto& f : random_corpus(21, 40)) {
    const auto scaled = to_scaled(f);
    for (const auto& beta : oracle::all_multi_indices(f.nvars(), 0, 2)) {
      const auto expected = oracle::ordinary_derivative(f, beta);
      std::vector<Term> terms;
      for (const auto& [e, c] : expected) terms.push_back({c, e});
      CHECK(to_ordinary(derivative(scaled, beta)) == SparsePoly(f.vars(), terms));
    }
  }
}

TEST_CASE("build_matrix shapes") {
  auto m = build_matrix(parse_poly("x1*x2"), OrderSpec::exact_order(1));
  CHECK(m.rows == std::vector<ExponentVector>{{0, 1}, {1, 0}});
  CHECK(m.cols == std::vector<ExponentVector>{{0, 1}, {1, 0}});
  CHECK(m.entries(0, 1) == 1);
  CHECK(m.entries(1, 0) == 1);
  CHECK(m.entries(0, 0) == 0);
  CHECK(rank_exact(m) == 2);

  auto mono = build_matrix(parse_poly("a^2*b*c^3"), OrderSpec::all_orders());
  CHECK(mono.rows.size() == 3 * 2 * 4);

  auto three = build_matrix(parse_poly("x1*x2 + x3"), OrderSpec::exact_order(1));
  CHECK(three.rows.size() == 3);
  CHECK(three.cols.size() == 3);
  CHECK(rank_exact(three) == 3);
  CHECK(oracle::span_dim(parse_poly("x1*x2 + x3"), 1, 1) == 3);

  auto rational = build_matrix(parse_poly("1/2*x^2 + 1/3*y"), OrderSpec::exact_order(0));
  CHECK(rational.denominator == 3);
  CHECK_THROWS_AS(build_matrix(parse_poly("x + y"), OrderSpec::interior_orders()), std::invalid_argument);
  CHECK_THROWS_AS(build_matrix(parse_poly("x - x"), OrderSpec::exact_order(0)), std::invalid_argument);
}

TEST_CASE("resource caps") {
  ExactCaps tight{5, 5, 100};
  CHECK_THROWS_AS(build_matrix(parse_poly("a^3*b^3"), OrderSpec::all_orders(), tight), ResourceLimitError);
  try {
    build_matrix(parse_poly("a^3*b^3"), OrderSpec::all_orders(), tight);
  } catch (const ResourceLimitError& e) {
    CHECK(e.dimension() == "rows");
    CHECK(e.limit() == 5);
  }
  IntMatrix big = IntMatrix::Constant(30, 30, BigInt(0));
  for (int i = 0; i < 30; ++i)
    for (int j = 0; j < 30; ++j) big(i, j) = (i * 7 + j * 3) % 11 + 1;
  CHECK_THROWS_AS(rank_exact(big, ExactCaps{100, 100, 50}), ResourceLimitError);
  CHECK_THROWS_AS(rank_exact(big, ExactCaps{10, 100, 100000}), ResourceLimitError);
}

TEST_CASE("rank_exact basics") {
  IntMatrix id = IntMatrix::Identity(6, 6);
  CHECK(rank_exact(id) == 6);
  IntMatrix dup(3, 3);
  dup << 1, 2, 3, 1, 2, 3, 0, 1, 1;
  CHECK(rank_exact(dup) == 2);
  IntMatrix zero = IntMatrix::Zero(4, 2);
  CHECK(rank_exact(zero) == 0);
  RationalMatrix q(2, 2);
  q << Rational(1, 2), Rational(1, 3), Rational(3, 2), Rational(1);
  CHECK(rank_exact(q) == 1);
}

TEST_CASE("rank_exact matches Gauss-Jordan and is preserved by Gram products") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> entry(-2, 2), dim(1, 7);
  for (int trial = 0; trial < 300; ++trial) {
    const int r = dim(rng), c = dim(rng), true_rank = std::min({r, c, dim(rng)});
    // Product of random r x t and t x c factors keeps rank <= t.
    IntMatrix a(r, true_rank), b(true_rank, c);
    for (int i = 0; i < a.size(); ++i) a.data()[i] = entry(rng);
    for (int i = 0; i < b.size(); ++i) b.data()[i] = entry(rng);
    IntMatrix m = a * b;
    if (trial % 3 == 0) m.row(0) = m.row(r - 1);
    std::vector<std::vector<Rational>> rows(r, std::vector<Rational>(c));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) rows[i][j] = Rational(m(i, j));
    const auto rank = rank_exact(m);
    CHECK(rank == oracle::gauss_rank(rows));
    CHECK(rank == rank_exact(IntMatrix(m.transpose() * m)));
    CHECK(rank == rank_exact(IntMatrix(m.transpose())));
  }
}

TEST_CASE("product plus pure powers") {
  auto f = parse_poly("x1*x2*x3*x4*x5 + x1^5 + x2^5 + x3^5 + x4^5 + x5^5");
  CHECK(dim_partials(f, OrderSpec::exact_order(2)).dim == 15);
  CHECK(dim_partials(f, OrderSpec::exact_order(0)).dim == 1);
  CHECK(dim_partials(f, OrderSpec::exact_order(1)).dim == 5);
  CHECK(dim_partials(f, OrderSpec::exact_order(5)).dim == 1);
  CHECK(dim_partials(f, OrderSpec::exact_order(6)).dim == 0);
}

TEST_CASE("zero polynomial is flagged, not rejected") {
  auto z = dim_partials(parse_poly("x - x"), OrderSpec::all_orders());
  CHECK(z.dim == 0);
  CHECK(z.zero_polynomial);
}

TEST_CASE("graph reduction polynomial of K3") {
  auto f = graph_to_poly(parse_graph("p 3\n1 2\n2 3\n1 3"));
  CHECK(dim_partials(f, OrderSpec::interior_orders()).dim == 6);
  CHECK(oracle::span_dim(f, 1, f.degree() - 1) == 6);
}

TEST_CASE("dim_partials matches the ordinary-calculus oracle") {
  for (const auto& f : random_corpus(99, 60)) {
    const auto deg = f.degree();
    for (std::uint64_t k = 0; k <= deg; ++k) {
      CHECK(dim_partials(f, OrderSpec::exact_order(k)).dim == oracle::span_dim(f, k, k));
    }
    CHECK(dim_partials(f, OrderSpec::all_orders()).dim == oracle::span_dim(f, 0, deg));
  }
}

TEST_CASE("homogeneous invariants") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::size_t> nv(2, 5), ns(1, 6);
  std::uniform_int_distribution<std::uint32_t> dd(2, 4);
  for (int trial = 0; trial < 60; ++trial) {
    auto f = random_homogeneous(rng, nv(rng), dd(rng), ns(rng));
    if (f.is_zero()) continue;
    const auto deg = f.degree();
    std::size_t sum = 0;
    for (std::uint64_t k = 0; k <= deg; ++k) sum += dim_partials(f, OrderSpec::exact_order(k)).dim;
    const auto all = dim_partials(f, OrderSpec::all_orders()).dim;
    CHECK(all == sum);
    CHECK(dim_partials(f, OrderSpec::interior_orders()).dim == all - 2);

    const std::uint64_t k = trial % (deg + 1);
    const auto base = dim_partials(f, OrderSpec::exact_order(k)).dim;
    CHECK(dim_partials(scale(f, Rational(-7, 3)), OrderSpec::exact_order(k)).dim == base);
    std::vector<std::size_t> perm(f.nvars());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(dim_partials(permute_variables(f, perm), OrderSpec::exact_order(k)).dim == base);
  }
}

TEST_CASE("product of linear forms keeps C(d,k)") {
  for (std::size_t d = 1; d <= 3; ++d) {
    for (std::size_t q = 1; q <= 3; ++q) {
      std::vector<std::string> vars;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < q; ++j) vars.push_back("x" + std::to_string(i) + "_" + std::to_string(j));
      std::vector<Term> terms;
      // Expand prod_i sum_j x_ij: one monomial per choice function.
      std::vector<std::size_t> choice(d, 0);
      while (true) {
        ExponentVector e(d * q);
        for (std::size_t i = 0; i < d; ++i) e[i * q + choice[i]] = 1;
        terms.push_back({Rational(1), e});
        std::size_t i = 0;
        while (i < d && ++choice[i] == q) choice[i++] = 0;
        if (i == d) break;
      }
      SparsePoly f(vars, terms);
      for (std::size_t k = 0; k <= d; ++k) {
        CHECK(dim_partials(f, OrderSpec::exact_order(k)).dim == binomial(d, k));
      }
    }
  }
}

}
