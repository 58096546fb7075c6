#include "oracles.hpp"

#include "pdrank/corpus.hpp"
#include "pdrank/reductions.hpp"

#include <doctest.h>

using namespace pdrank;

namespace {

Graph cycle(std::size_t n) {
  std::vector<Graph::Edge> edges;
  for (std::size_t i = 1; i <= n; ++i) edges.emplace_back(i, i % n + 1);
  return Graph(n, edges);
}

}  // namespace

TEST_SUITE("reductions") {

TEST_CASE("independent sets") {
  CHECK(count_independent_sets(Graph(4, {})) == 16);
  CHECK(count_independent_sets(Graph(3, {{1, 2}})) == 6);
  CHECK(count_independent_sets(Graph(2, {{1, 2}})) == 3);
  CHECK(count_independent_sets(cycle(3)) == 4);
  CHECK(count_independent_sets(cycle(4)) == 7);
  CHECK(count_independent_sets(Graph(3, {{1, 2}, {2, 3}})) == 5);
  for (const auto& g : all_graphs(5)) CHECK(count_independent_sets(g) == oracle::independent_sets(g));
  CHECK_THROWS_AS(count_independent_sets(Graph(30, {}), EnumerationCaps{24}), ResourceLimitError);
}

TEST_CASE("graph complex") {
  auto k3 = graph_complex(cycle(3));
  CHECK(k3.facets() == std::vector<SimplicialComplex::Facet>{{1}, {2}, {3}});
  auto path = graph_complex(Graph(3, {{1, 2}, {2, 3}}));
  CHECK(path.facets() == std::vector<SimplicialComplex::Facet>{{1}, {3}});
  auto c4 = graph_complex(cycle(4));
  CHECK(c4.facets().size() == 4);
  CHECK(c4.facet_size() == 2);
  CHECK(count_faces(c4) == 8);
  CHECK_THROWS_AS(graph_complex(Graph(2, {{1, 2}})), std::invalid_argument);
}

TEST_CASE("face counts and listing") {
  SimplicialComplex tri(4, {{1, 2, 3}});
  CHECK(count_faces(tri) == 7);
  SimplicialComplex two(4, {{1, 2}, {2, 3}, {1, 2}});
  CHECK(two.facets().size() == 2);
  CHECK(count_faces(two) == 5);
  auto faces = list_faces(two);
  CHECK(faces == std::vector<SimplicialComplex::Facet>{{1}, {2}, {1, 2}, {3}, {2, 3}});
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto c = random_pure_complex(seed, 7, 5, 3);
    CHECK(count_faces(c) == oracle::faces(c));
    CHECK(list_faces(c).size() == count_faces(c));
  }
}

TEST_CASE("polynomials from complexes and graphs") {
  SimplicialComplex c(3, {{1, 2}, {2, 3}});
  auto f = complex_to_poly(c);
  CHECK(f == parse_poly("vars: X1 X2 X3 Y1 Y2\nY1*X1*X2 + Y2*X2*X3"));
  CHECK(f.is_multilinear());
  CHECK_THROWS_AS(complex_to_poly(SimplicialComplex(3, {{1, 2}, {3}})), std::invalid_argument);

  auto g = graph_to_poly(cycle(3));
  CHECK(g == parse_poly("vars: X1 X2 X3 Y_1_2 Y_1_3 Y_2_3\nY_1_2*X3 + Y_1_3*X2 + Y_2_3*X1"));
  CHECK(graph_to_poly(Graph(4, {})).is_zero());
  CHECK_THROWS_AS(graph_to_poly(Graph(2, {{1, 2}})), std::invalid_argument);
}

TEST_CASE("partial_plus basis") {
  SimplicialComplex c(4, {{1, 2}, {2, 3}, {3, 4}});
  auto basis = partial_plus_basis(c);
  CHECK(basis.size() == 2 * count_faces(c));
  CHECK(rank_exact(coefficient_matrix(basis)) == basis.size());
  // Each derivative lies in the span computed by brute force.
  const auto f = complex_to_poly(c);
  CHECK(oracle::span_dim(f, 1, f.degree() - 1) == basis.size());
}

TEST_CASE("verify_reduction examples") {
  auto k3 = verify_reduction(cycle(3));
  CHECK(k3.ind_count == 4);
  CHECK(k3.face_count == 3);
  CHECK(k3.dim_plus == 6);
  CHECK(k3.identity_holds);
  CHECK(k3.basis_verified);

  auto path = verify_reduction(Graph(3, {{1, 2}, {2, 3}}));
  CHECK(path.ind_count == 5);
  CHECK(path.face_count == 2);
  CHECK(path.dim_plus == 4);
  CHECK(path.identity_holds);

  auto c4 = verify_reduction(cycle(4));
  CHECK(c4.ind_count == 7);
  CHECK(c4.dim_plus == 16);
  CHECK(c4.identity_holds);

  auto empty = verify_reduction(Graph(4, {}));
  CHECK_FALSE(empty.identity_applicable);
  CHECK(empty.ind_count == 16);
  CHECK_FALSE(empty.note.empty());
  CHECK_FALSE(verify_reduction(SimplicialComplex(3, {})).identity_applicable);
}

TEST_CASE("exhaustive small graphs") {
  for (std::size_t n : {3u, 4u}) {
    const auto graphs = all_graphs(n);
    CHECK(graphs.size() == (std::size_t{1} << (n * (n - 1) / 2)) - 1);
    for (const auto& g : graphs) {
      auto r = verify_reduction(g);
      CHECK(r.identity_holds);
      CHECK(r.basis_verified);
      CHECK(r.dim_plus == 2 * ((std::uint64_t{1} << n) - *r.ind_count - 1));
    }
  }
}

TEST_CASE("random pure complexes: full derivative space") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    auto c = random_pure_complex(seed, 6, 4, 1 + seed % 3);
    auto r = verify_reduction(c);
    CHECK(r.identity_holds);
    CHECK(r.basis_verified);
    const auto f = complex_to_poly(c);
    CHECK(dim_partials(f, OrderSpec::all_orders()).dim == 2 * r.face_count + 2);
  }
}

TEST_CASE("extra edges enlarge the derivative space") {
  // More edges means fewer independent sets, hence more faces.
  auto sparse = verify_reduction(Graph(4, {{1, 2}}));
  auto dense = verify_reduction(Graph(4, {{1, 2}, {3, 4}}));
  CHECK(*sparse.ind_count > *dense.ind_count);
  CHECK(sparse.dim_plus < dense.dim_plus);
}

}
