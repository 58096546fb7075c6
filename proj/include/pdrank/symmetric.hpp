#pragma once

#include "pdrank/exact.hpp"
#include "pdrank/numeric.hpp"
#include "pdrank/poly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pdrank {

/// Elementary symmetric polynomial of degree d in x1..xn (all coefficients 1).
SparsePoly sym_poly(std::uint64_t n, std::uint64_t d, std::uint64_t max_terms = 200000);

/// 0/1 matrix with rows the k-subsets and columns the (d-k)-subsets of [n],
/// both in lexicographic order of their indicator vectors; entry 1 iff the
/// two sets are disjoint.
IntMatrix disjointness_matrix(std::uint64_t n, std::uint64_t d, std::uint64_t k,
                              const ExactCaps& caps = {});

struct SymExactDim {
  BigInt value;  // min(C(n,k), C(n,d-k))
  std::optional<std::size_t> oracle_rank;
  std::string note;
};

/// Closed-form dimension of order-k derivatives of Sym_{d,n}; cross-checked
/// by exact rank of the disjointness matrix when it fits the caps.
SymExactDim sym_exact_dim(std::uint64_t n, std::uint64_t d, std::uint64_t k,
                          const ExactCaps& caps = {}, bool cross_check = true);

/// Tr(B) = C(n-k, d-k) C(n, k).
BigInt sym_trace_B(std::uint64_t n, std::uint64_t d, std::uint64_t k);

/// Tr(B^2) summed over overlap classes t = |I cap J|:
/// sum_t C(n,k) C(k,t) C(n-k,k-t) C(n-2k+t, d-k)^2.
BigInt sym_trace_B2(std::uint64_t n, std::uint64_t d, std::uint64_t k);

/// Upper bound on the proxy rank from the disjoint-pairs subsum of Tr(B^2):
/// C(n-k,d-k)^2 C(n,k)^2 / (C(n-2k,d-k)^2 C(n-k,k) C(n,k)).
/// Empty when the subsum vanishes (n - 2k < d - k).
std::optional<Rational> sym_upper_v(std::uint64_t n, std::uint64_t d, std::uint64_t k);

struct SymGapPoint {
  std::uint64_t n = 0, d = 0, k = 0;
  BigInt u;
  Rational v;
  std::optional<Rational> upper_v;
  Rational ratio;  // v / u
};

SymGapPoint sym_gap_point(std::uint64_t n, std::uint64_t d, std::uint64_t k);

/// Fixed (d, k), n over [n_from, n_to]; requires k < d < n at every point.
std::vector<SymGapPoint> sym_gap_fixed(std::uint64_t d, std::uint64_t k, std::uint64_t n_from,
                                       std::uint64_t n_to);

/// (k, d, n) = (k'm, d'm, n'm) for m in [m_from, m_to]; requires
/// k' < d' < n'/2. When 2k' > d' the order k' is replaced by d' - k', which
/// leaves both u and v unchanged.
std::vector<SymGapPoint> sym_gap_scaled(std::uint64_t kp, std::uint64_t dp, std::uint64_t np,
                                        std::uint64_t m_from, std::uint64_t m_to);

}  // namespace pdrank
