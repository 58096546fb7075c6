#pragma once

#include "pdrank/exact.hpp"
#include "pdrank/numeric.hpp"
#include "pdrank/poly.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pdrank {

/// dim of order-k derivatives of x^alpha for k = 0..|alpha|: the coefficients
/// of prod_i (1 + t + ... + t^{alpha_i}).
std::vector<BigInt> monomial_dim_profile(const ExponentVector& alpha);

/// Lexicographic order after a variable permutation: position i of the
/// permuted tuple holds coordinate permutation[i]. `min` selects the
/// smallest permuted tuple.
struct MonomialOrderSpec {
  enum class Direction { min, max };

  std::vector<std::size_t> permutation;
  Direction direction = Direction::min;

  static MonomialOrderSpec identity(std::size_t n, Direction dir = Direction::min);
  static MonomialOrderSpec reversed(std::size_t n, Direction dir = Direction::min);

  std::string describe() const;
};

ExponentVector extremal_monomial(const SparsePoly& f, const MonomialOrderSpec& order);

/// A certified Newton-polytope vertex: `vertex` is the unique maximizer of
/// <weights, gamma> over the support of f.
struct VertexCertificate {
  std::vector<std::int64_t> weights;
  ExponentVector vertex;
};

struct VertexSample {
  std::vector<ExponentVector> vertices;  // sorted, unique
  std::vector<VertexCertificate> certificates;
  std::size_t rejected_trials = 0;
};

/// Draws `trials` integer functionals with entries uniform in [-2^31, 2^31]
/// and keeps the unique maximizers. Ties reject the trial.
VertexSample vertex_sample(const SparsePoly& f, std::size_t trials, std::uint64_t seed);

/// True when `cert.vertex` is a term of f and the unique maximizer of the
/// certificate's functional.
bool check_vertex_certificate(const SparsePoly& f, const VertexCertificate& cert);

struct ExtremalOptions {
  /// Empty means the default family: identity and reversed permutations,
  /// each in both directions.
  std::vector<MonomialOrderSpec> orders;
  std::size_t vertex_trials = 32;
  std::uint64_t seed = 0;
};

struct ExtremalBound {
  BigInt value;
  ExponentVector witness;
  std::string provenance;
};

/// max over candidate monomials m of dim d^{=k} m.
ExtremalBound lower_bound_extremal(const SparsePoly& f, std::uint64_t k,
                                   const ExtremalOptions& options = {});

struct LinearityBound {
  BigInt value;
  BigInt profile_sum;
  /// Row/column label counts of the order-k matrix; zero when over caps.
  std::uint64_t distinct_rows = 0;
  std::uint64_t distinct_cols = 0;
  bool label_counts_computed = false;
  std::string provenance;
};

/// min(sum over terms of dim d^{=k} x^alpha, #rows, #cols) of the order-k
/// derivative matrix.
LinearityBound upper_bound_linearity(const SparsePoly& f, std::uint64_t k,
                                     const ExactCaps& caps = {});

}  // namespace pdrank
