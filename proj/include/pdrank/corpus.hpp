#pragma once

#include "pdrank/combinatorics.hpp"
#include "pdrank/poly.hpp"

#include <cstdint>
#include <vector>

namespace pdrank {

struct CorpusShape {
  std::size_t max_vars = 8;
  std::size_t max_terms = 10;
  std::uint32_t max_degree = 4;
  /// Share of polynomials whose coefficients are all 1.
  double unit_share = 0.25;
};

/// Deterministic corpus of nonzero random polynomials for a given seed.
std::vector<SparsePoly> random_corpus(std::uint64_t seed, std::size_t count,
                                      const CorpusShape& shape = {});

/// Random pure complex over [n] with at most `max_facets` facets of size d.
SimplicialComplex random_pure_complex(std::uint64_t seed, std::size_t n, std::size_t max_facets,
                                      std::size_t d);

}  // namespace pdrank
