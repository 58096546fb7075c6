#include "pdrank/exact.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pdrank {

std::string OrderSpec::describe() const {
  switch (mode) {
    case Mode::exact:
      return "order " + std::to_string(k);
    case Mode::all:
      return "all orders";
    case Mode::interior:
      return "orders 1..deg-1";
  }
  return {};
}

SparsePoly derivative(const SparsePoly& scaled, const ExponentVector& beta) {
  if (scaled.basis() != Basis::scaled) {
    throw std::invalid_argument("derivative expects a scaled-basis polynomial");
  }
  if (beta.size() != scaled.nvars()) throw std::invalid_argument("beta length mismatch");
  std::vector<Term> terms;
  for (const auto& t : scaled.terms()) {
    if (auto rest = subtract(t.exps, beta)) terms.push_back({t.coef, std::move(*rest)});
  }
  return SparsePoly(scaled.vars(), std::move(terms), Basis::scaled);
}

namespace detail {
void check_elimination_budget(std::uint64_t used, const ExactCaps& caps) {
  if (used > caps.elimination_budget) {
    throw ResourceLimitError("elimination-budget", used, caps.elimination_budget);
  }
}
}  // namespace detail

namespace {

BigInt common_denominator(const std::vector<const SparsePoly*>& polys) {
  BigInt den = 1;
  for (const auto* p : polys) {
    for (const auto& t : p->terms()) den = lcm(den, denominator(t.coef));
  }
  return den;
}

BigInt cleared(const Rational& q, const BigInt& den) {
  return numerator(q) * (den / denominator(q));
}

template <typename Label>
std::size_t index_in(const std::vector<Label>& sorted, const Label& label) {
  return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), label) -
                                   sorted.begin());
}

}  // namespace

DerivMatrix build_matrix(const SparsePoly& f, OrderSpec spec, const ExactCaps& caps) {
  if (f.is_zero()) throw std::invalid_argument("derivative matrix of the zero polynomial");
  const SparsePoly g = to_scaled(f);
  const std::uint64_t deg = g.degree();
  std::uint64_t lo = 0, hi = deg;
  switch (spec.mode) {
    case OrderSpec::Mode::exact:
      lo = hi = spec.k;
      break;
    case OrderSpec::Mode::all:
      break;
    case OrderSpec::Mode::interior:
      if (deg < 2) {
        throw std::invalid_argument("orders 1..deg-1 need deg f >= 2 (deg f = " +
                                    std::to_string(deg) + ")");
      }
      lo = 1;
      hi = deg - 1;
      break;
  }

  std::set<ExponentVector> row_set, col_set;
  for (const auto& t : g.terms()) {
    for_each_divisor(t.exps, lo, hi, [&](const ExponentVector& beta) {
      if (row_set.insert(beta).second && row_set.size() > caps.max_rows) {
        throw ResourceLimitError("rows", row_set.size(), caps.max_rows);
      }
      if (col_set.insert(*subtract(t.exps, beta)).second && col_set.size() > caps.max_cols) {
        throw ResourceLimitError("cols", col_set.size(), caps.max_cols);
      }
    });
  }

  DerivMatrix m;
  m.rows.assign(row_set.begin(), row_set.end());
  m.cols.assign(col_set.begin(), col_set.end());
  m.denominator = common_denominator({&g});
  m.entries = IntMatrix::Zero(static_cast<Eigen::Index>(m.rows.size()),
                              static_cast<Eigen::Index>(m.cols.size()));
  for (const auto& t : g.terms()) {
    const BigInt value = cleared(t.coef, m.denominator);
    for_each_divisor(t.exps, lo, hi, [&](const ExponentVector& beta) {
      const auto r = index_in(m.rows, beta);
      const auto c = index_in(m.cols, *subtract(t.exps, beta));
      m.entries(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = value;
    });
  }
  m.provenance = "scaled-basis derivative matrix, " + spec.describe() + ", " +
                 std::to_string(g.size()) + " terms in " + std::to_string(g.nvars()) +
                 " variables";
  return m;
}

DerivMatrix coefficient_matrix(const std::vector<SparsePoly>& family, const ExactCaps& caps) {
  if (static_cast<std::uint64_t>(family.size()) > caps.max_rows) {
    throw ResourceLimitError("rows", family.size(), caps.max_rows);
  }
  std::vector<SparsePoly> scaled;
  scaled.reserve(family.size());
  std::vector<const SparsePoly*> ptrs;
  std::set<ExponentVector> col_set;
  for (const auto& p : family) {
    if (!family.empty() && p.vars() != family.front().vars()) {
      throw std::invalid_argument("coefficient_matrix needs a common variable list");
    }
    scaled.push_back(to_scaled(p));
  }
  for (const auto& p : scaled) {
    ptrs.push_back(&p);
    for (const auto& t : p.terms()) {
      col_set.insert(t.exps);
      if (col_set.size() > caps.max_cols) {
        throw ResourceLimitError("cols", col_set.size(), caps.max_cols);
      }
    }
  }
  DerivMatrix m;
  m.cols.assign(col_set.begin(), col_set.end());
  m.denominator = common_denominator(ptrs);
  m.entries = IntMatrix::Zero(static_cast<Eigen::Index>(scaled.size()),
                              static_cast<Eigen::Index>(m.cols.size()));
  for (std::size_t r = 0; r < scaled.size(); ++r) {
    for (const auto& t : scaled[r].terms()) {
      m.entries(static_cast<Eigen::Index>(r),
                static_cast<Eigen::Index>(index_in(m.cols, t.exps))) =
          cleared(t.coef, m.denominator);
    }
  }
  m.provenance = "stacked scaled-basis coefficients of " + std::to_string(family.size()) +
                 " polynomials";
  return m;
}

PartialsDim dim_partials(const SparsePoly& f, OrderSpec spec, const ExactCaps& caps) {
  if (f.is_zero()) return {0, true};
  if (spec.mode == OrderSpec::Mode::exact && spec.k > f.degree()) return {0, false};
  return {rank_exact(build_matrix(f, spec, caps), caps), false};
}

}  // namespace pdrank
