#include "oracles.hpp"

#include "pdrank/symmetric.hpp"
#include "pdrank/trace.hpp"

#include <doctest.h>

#include <algorithm>

using namespace pdrank;

TEST_SUITE("symmetric") {

TEST_CASE("sym_poly") {
  CHECK(sym_poly(3, 2) == parse_poly("vars: x1 x2 x3\nx1*x2 + x1*x3 + x2*x3"));
  CHECK(sym_poly(4, 4).size() == 1);
  CHECK(sym_poly(6, 3).size() == 20);
  CHECK_THROWS_AS(sym_poly(5, 0), std::invalid_argument);
  CHECK_THROWS_AS(sym_poly(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(sym_poly(30, 15, 1000), ResourceLimitError);
}

TEST_CASE("disjointness matrix") {
  auto m = disjointness_matrix(4, 2, 1);
  CHECK(m.rows() == 4);
  CHECK(m.cols() == 4);
  for (Eigen::Index i = 0; i < 4; ++i) CHECK(m(i, i) == 0);
  CHECK(m.sum() == 12);
  CHECK(rank_exact(m) == 4);
}

TEST_CASE("closed forms agree with the generic trace module") {
  for (std::uint64_t n = 2; n <= 8; ++n) {
    for (std::uint64_t d = 1; d <= n; ++d) {
      const auto f = sym_poly(n, d);
      for (std::uint64_t k = 0; k <= d; ++k) {
        CHECK(Rational(sym_trace_B(n, d, k)) == trace_B(f, k));
        CHECK(Rational(sym_trace_B2(n, d, k)) == trace_B2(f, k));
        const auto exact = sym_exact_dim(n, d, k);
        CHECK(exact.value == std::min(binomial(n, k), binomial(n, d - k)));
        REQUIRE(exact.oracle_rank.has_value());
        CHECK(BigInt(*exact.oracle_rank) == exact.value);
        CHECK(BigInt(dim_partials(f, OrderSpec::exact_order(k)).dim) == exact.value);
      }
    }
  }
}

TEST_CASE("known trace values") {
  CHECK(sym_trace_B(6, 3, 1) == 60);
  CHECK(sym_trace_B2(6, 3, 1) == 1680);
  CHECK(sym_trace_B(8, 3, 1) == 168);
  CHECK(sym_trace_B2(8, 3, 1) == 16128);
  CHECK(sym_trace_B(16, 6, 2) == 120120);
  CHECK(sym_trace_B2(16, 6, 2) == BigInt("4513629120"));
}

TEST_CASE("upper_v bounds the proxy") {
  CHECK(*sym_upper_v(4, 3, 1) == 12);
  CHECK(*sym_upper_v(5, 3, 1) == 5);
  CHECK(*sym_upper_v(6, 3, 1) == Rational(10, 3));
  CHECK(*sym_upper_v(9, 3, 1) == 2);
  CHECK_FALSE(sym_upper_v(3, 3, 1).has_value());
  for (std::uint64_t n = 4; n <= 12; ++n) {
    for (std::uint64_t d = 2; d < n; ++d) {
      for (std::uint64_t k = 1; k < d; ++k) {
        auto up = sym_upper_v(n, d, k);
        if (!up) continue;
        CHECK(sym_gap_point(n, d, k).v <= *up);
      }
    }
  }
  Rational prev = *sym_upper_v(4, 3, 1);
  for (std::uint64_t n = 5; n <= 200; ++n) {
    Rational cur = *sym_upper_v(n, 3, 1);
    CHECK(cur <= prev);
    prev = cur;
  }
  CHECK(prev < Rational(11, 10));
  CHECK(prev > 1);
}

TEST_CASE("gap points") {
  auto p = sym_gap_point(8, 3, 1);
  CHECK(p.u == 8);
  CHECK(p.v == Rational(7, 4));
  CHECK(p.ratio == Rational(7, 32));
  // u and v are symmetric under k -> d - k.
  for (std::uint64_t n = 5; n <= 9; ++n) {
    for (std::uint64_t d = 2; d < n; ++d) {
      for (std::uint64_t k = 0; k <= d; ++k) {
        auto a = sym_gap_point(n, d, k);
        auto b = sym_gap_point(n, d, d - k);
        CHECK(a.u == b.u);
        CHECK(a.v == b.v);
      }
    }
  }
  CHECK_THROWS_AS(sym_gap_fixed(3, 1, 2, 5), std::invalid_argument);
  CHECK(sym_gap_fixed(3, 1, 4, 10).size() == 7);
}

TEST_CASE("scaled family ratio decreases") {
  auto pts = sym_gap_scaled(1, 3, 8, 1, 3);
  REQUIRE(pts.size() == 3);
  CHECK(pts[0].k == 1);
  CHECK(pts[1].n == 16);
  CHECK(pts[1].d == 6);
  CHECK(pts[1].u == 120);
  CHECK(pts[1].v == Rational(195, 61));
  CHECK(pts[1].ratio == Rational(13, 488));
  CHECK(pts[2].u == 2024);
  CHECK(pts[2].v == Rational(134596, 23029));
  for (std::size_t i = 1; i < pts.size(); ++i) CHECK(pts[i].ratio < pts[i - 1].ratio);

  // 2k' > d' is normalized to d' - k'.
  auto swapped = sym_gap_scaled(2, 3, 8, 1, 2);
  CHECK(swapped[0].k == 1);
  CHECK(swapped[1].v == pts[1].v);
  CHECK_THROWS_AS(sym_gap_scaled(1, 4, 8, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(sym_gap_scaled(3, 3, 8, 1, 2), std::invalid_argument);
}

}
