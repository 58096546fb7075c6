#pragma once

#include "pdrank/exact.hpp"
#include "pdrank/numeric.hpp"
#include "pdrank/poly.hpp"

#include <cstdint>
#include <vector>

namespace pdrank {

// Trace-method quantities for the matrix M whose rows are the 0/1
// differentiation patterns I with |I| = k and whose entries are the scaled
// coefficients M_{I,J} = a_{I+J}; B = M^T M. Every function accepts f in
// either basis and works on its scaled form.

/// Tr(B) = sum_P C(sup P, k) a_P^2.
Rational trace_B(const SparsePoly& f, std::uint64_t k);

/// Number of rows I with (P, Q, R, I) contributing to Tr(B^2), together with
/// the position counts it is derived from.
struct QuadCount {
  std::uint64_t ones = 0;
  std::uint64_t zeros = 0;
  BigInt N = 0;
};

/// N(P, Q, R) for terms P, Q, R of `f`; zero when Q + R - P is not a term.
QuadCount count_N(const ExponentVector& P, const ExponentVector& Q, const ExponentVector& R,
                  std::uint64_t k, const SparsePoly& f);

struct TraceConfig {
  /// Upper bound on |M|^3, the number of (P, Q, R) triples visited.
  std::uint64_t budget = 1'000'000'000;
  /// Worker threads for the outer loop of trace_B2; 1 runs inline.
  std::size_t threads = 1;
};

/// Tr(B^2) = sum over term triples of N(P,Q,R) a_P a_Q a_R a_{Q+R-P}.
Rational trace_B2(const SparsePoly& f, std::uint64_t k, const TraceConfig& config = {});

struct TraceStats {
  Rational trB;
  Rational trB2;
  /// trB^2 / trB2, or 0 when B = 0 (then `vacuous` is set).
  Rational proxy;
  bool vacuous = false;
  std::uint64_t k = 0;
  std::size_t monomial_count = 0;
};

TraceStats trace_stats(const SparsePoly& f, std::uint64_t k, const TraceConfig& config = {});

/// Tr(B)^2 / Tr(B^2), 0 when B = 0.
Rational proxy_rank(const SparsePoly& f, std::uint64_t k, const TraceConfig& config = {});

/// L(f) = sum_P C(sup P, k) a_P^2 / (|M| sum_P a_P^2) on scaled coefficients.
Rational closed_form_L(const SparsePoly& f, std::uint64_t k);

/// The same expression evaluated on the ordinary coefficients, reported for
/// comparison only (it is not a certified bound for non-multilinear f).
Rational closed_form_L_ordinary(const SparsePoly& f, std::uint64_t k);

/// L for explicit coefficient values attached to a support.
Rational closed_form_L(const std::vector<ExponentVector>& support,
                       const std::vector<Rational>& coefs, std::uint64_t k);

/// Materialized M and B for cross-checking. B = gram / denominator^2.
struct ExplicitTrace {
  DerivMatrix M;
  IntMatrix gram;
  TraceStats stats;
  std::size_t rank_B = 0;
};

ExplicitTrace explicit_B_oracle(const SparsePoly& f, std::uint64_t k, const ExactCaps& caps = {});

struct SemirandomResult {
  Rational mean;
  Rational expected;  // sum_P C(sup P, k) / |M|^2
  std::size_t samples = 0;
};

/// Mean of L over `samples` i.i.d. draws of nonzero integer coefficients,
/// uniform on [-2^30, 2^30] \ {0}, attached to `support`.
SemirandomResult semirandom_estimate(const std::vector<ExponentVector>& support, std::uint64_t k,
                                     std::size_t samples, std::uint64_t seed);

}  // namespace pdrank
