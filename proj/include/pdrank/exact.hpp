#pragma once

#include "pdrank/numeric.hpp"
#include "pdrank/poly.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace pdrank {

/// Which derivative orders span the space being measured.
struct OrderSpec {
  enum class Mode { exact, all, interior };

  Mode mode = Mode::exact;
  std::uint64_t k = 0;

  static OrderSpec exact_order(std::uint64_t k) { return {Mode::exact, k}; }
  /// Orders 0..deg f.
  static OrderSpec all_orders() { return {Mode::all, 0}; }
  /// Orders 1..deg f - 1; needs deg f >= 2.
  static OrderSpec interior_orders() { return {Mode::interior, 0}; }

  std::string describe() const;
};

struct ExactCaps {
  std::uint64_t max_rows = 20000;
  std::uint64_t max_cols = 20000;
  /// Upper bound on entry updates performed by one elimination.
  std::uint64_t elimination_budget = 100'000'000;
};

/// Derivative matrix in the scaled basis: entry (beta, gamma) is
/// a_{beta+gamma} * denominator, where `denominator` clears every coefficient.
/// Rows and columns are sorted lexicographically by label.
struct DerivMatrix {
  std::vector<ExponentVector> rows;
  std::vector<ExponentVector> cols;
  IntMatrix entries;
  BigInt denominator = 1;
  std::string provenance;
};

/// d^beta f for f in the scaled basis. The result is in the scaled basis.
SparsePoly derivative(const SparsePoly& scaled, const ExponentVector& beta);

/// Builds the derivative matrix of f (either basis; converted to scaled)
/// for the requested orders. Only rows with a nonzero derivative are kept.
DerivMatrix build_matrix(const SparsePoly& f, OrderSpec spec, const ExactCaps& caps = {});

/// Stacks the coefficient vectors (scaled basis, common denominator
/// cleared) of a family of polynomials over the same variables.
DerivMatrix coefficient_matrix(const std::vector<SparsePoly>& family, const ExactCaps& caps = {});

namespace detail {
void check_elimination_budget(std::uint64_t used, const ExactCaps& caps);
}

/// Exact rank of an integer (or rational) matrix by fraction-free Bareiss
/// elimination.
///
/// Pivoting is deterministic: columns are scanned left to right and the
/// pivot is the first remaining row with a nonzero entry in that column.
/// Throws ResourceLimitError when the matrix exceeds the caps or the
/// elimination budget runs out.
template <typename Derived>
std::size_t rank_exact(const Eigen::MatrixBase<Derived>& input, const ExactCaps& caps = {}) {
  using Scalar = typename Derived::Scalar;
  if (static_cast<std::uint64_t>(input.rows()) > caps.max_rows) {
    throw ResourceLimitError("rows", input.rows(), caps.max_rows);
  }
  if (static_cast<std::uint64_t>(input.cols()) > caps.max_cols) {
    throw ResourceLimitError("cols", input.cols(), caps.max_cols);
  }
  DenseMatrix<Scalar> a = input;
  const Eigen::Index m = a.rows(), n = a.cols();
  Scalar previous(1);
  Eigen::Index rank = 0;
  std::uint64_t work = 0;
  for (Eigen::Index c = 0; c < n && rank < m; ++c) {
    Eigen::Index pivot = rank;
    while (pivot < m && a(pivot, c) == 0) ++pivot;
    if (pivot == m) continue;
    if (pivot != rank) a.row(pivot).swap(a.row(rank));
    const Scalar p = a(rank, c);
    for (Eigen::Index i = rank + 1; i < m; ++i) {
      const Scalar lead = a(i, c);
      for (Eigen::Index j = c + 1; j < n; ++j) {
        if (lead == 0 && a(i, j) == 0) continue;
        a(i, j) = (p * a(i, j) - lead * a(rank, j)) / previous;
        ++work;
      }
      a(i, c) = 0;
    }
    detail::check_elimination_budget(work, caps);
    previous = p;
    ++rank;
  }
  return static_cast<std::size_t>(rank);
}

inline std::size_t rank_exact(const DerivMatrix& m, const ExactCaps& caps = {}) {
  return rank_exact(m.entries, caps);
}

struct PartialsDim {
  std::size_t dim = 0;
  bool zero_polynomial = false;
};

/// dim of the span of the derivatives selected by `spec`. Returns 0 with
/// `zero_polynomial` set for f = 0.
PartialsDim dim_partials(const SparsePoly& f, OrderSpec spec, const ExactCaps& caps = {});

}  // namespace pdrank
