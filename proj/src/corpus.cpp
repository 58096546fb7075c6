#include "pdrank/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace pdrank {

std::vector<SparsePoly> random_corpus(std::uint64_t seed, std::size_t count,
                                      const CorpusShape& shape) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
  };
  std::vector<SparsePoly> out;
  out.reserve(count);
  while (out.size() < count) {
    const std::size_t n = uniform(1, shape.max_vars);
    const std::size_t s = uniform(1, shape.max_terms);
    const bool unit = std::uniform_real_distribution<double>(0, 1)(rng) < shape.unit_share;
    std::vector<std::string> vars;
    for (std::size_t i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
    std::vector<Term> terms;
    for (std::size_t t = 0; t < s; ++t) {
      ExponentVector e(n);
      const auto deg = uniform(1, shape.max_degree);
      for (std::uint64_t j = 0; j < deg; ++j) e[uniform(0, n - 1)] += 1;
      Rational c = 1;
      if (!unit) {
        std::int64_t num = static_cast<std::int64_t>(uniform(1, 6));
        if (uniform(0, 1) == 1) num = -num;
        c = Rational(BigInt(num), BigInt(uniform(1, 4)));
      }
      terms.push_back({std::move(c), std::move(e)});
    }
    SparsePoly f(std::move(vars), std::move(terms));
    if (!f.is_zero()) out.push_back(std::move(f));
  }
  return out;
}

SimplicialComplex random_pure_complex(std::uint64_t seed, std::size_t n, std::size_t max_facets,
                                      std::size_t d) {
  if (d < 1 || d > n) throw std::invalid_argument("facet size must be in [1, n]");
  std::mt19937_64 rng(seed);
  const std::size_t m = std::uniform_int_distribution<std::size_t>(1, max_facets)(rng);
  std::vector<std::size_t> ground(n);
  std::iota(ground.begin(), ground.end(), std::size_t{1});
  std::vector<SimplicialComplex::Facet> facets;
  for (std::size_t i = 0; i < m; ++i) {
    std::shuffle(ground.begin(), ground.end(), rng);
    facets.emplace_back(ground.begin(), ground.begin() + static_cast<std::ptrdiff_t>(d));
  }
  return SimplicialComplex(n, std::move(facets));
}

}  // namespace pdrank
