#include "pdrank/symmetric.hpp"

#include <algorithm>

namespace pdrank {

namespace {

std::int64_t s64(std::uint64_t v) { return static_cast<std::int64_t>(v); }

void check_order(std::uint64_t n, std::uint64_t d, std::uint64_t k) {
  if (k > d || d > n) {
    throw std::invalid_argument("need 0 <= k <= d <= n (got n=" + std::to_string(n) +
                                ", d=" + std::to_string(d) + ", k=" + std::to_string(k) + ")");
  }
}

// All 0/1 vectors of length n and weight w in lexicographic order.
std::vector<ExponentVector> weight_vectors(std::uint64_t n, std::uint64_t w) {
  ExponentVector ones(n);
  for (std::size_t i = 0; i < n; ++i) ones[i] = 1;
  std::vector<ExponentVector> out;
  for_each_divisor(ones, w, w, [&](const ExponentVector& v) { out.push_back(v); });
  return out;
}

}  // namespace

SparsePoly sym_poly(std::uint64_t n, std::uint64_t d, std::uint64_t max_terms) {
  if (d < 1 || d > n) throw std::invalid_argument("sym_poly needs 1 <= d <= n");
  const BigInt count = binomial(s64(n), s64(d));
  if (count > max_terms) {
    throw ResourceLimitError("terms", count.convert_to<std::uint64_t>(), max_terms);
  }
  std::vector<std::string> vars;
  for (std::uint64_t i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
  std::vector<Term> terms;
  for (auto& e : weight_vectors(n, d)) terms.push_back({Rational(1), std::move(e)});
  return SparsePoly(std::move(vars), std::move(terms));
}

IntMatrix disjointness_matrix(std::uint64_t n, std::uint64_t d, std::uint64_t k,
                              const ExactCaps& caps) {
  check_order(n, d, k);
  const BigInt rows = binomial(s64(n), s64(k)), cols = binomial(s64(n), s64(d - k));
  if (rows > caps.max_rows) throw ResourceLimitError("rows", rows.convert_to<std::uint64_t>(), caps.max_rows);
  if (cols > caps.max_cols) throw ResourceLimitError("cols", cols.convert_to<std::uint64_t>(), caps.max_cols);
  const auto row_sets = weight_vectors(n, k);
  const auto col_sets = weight_vectors(n, d - k);
  IntMatrix m = IntMatrix::Zero(static_cast<Eigen::Index>(row_sets.size()),
                                static_cast<Eigen::Index>(col_sets.size()));
  for (std::size_t r = 0; r < row_sets.size(); ++r) {
    for (std::size_t c = 0; c < col_sets.size(); ++c) {
      bool disjoint = true;
      for (std::size_t i = 0; i < n && disjoint; ++i) disjoint = !(row_sets[r][i] && col_sets[c][i]);
      if (disjoint) m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = 1;
    }
  }
  return m;
}

SymExactDim sym_exact_dim(std::uint64_t n, std::uint64_t d, std::uint64_t k,
                          const ExactCaps& caps, bool cross_check) {
  check_order(n, d, k);
  SymExactDim out;
  out.value = std::min(binomial(s64(n), s64(k)), binomial(s64(n), s64(d - k)));
  if (!cross_check) {
    out.note = "closed form only";
    return out;
  }
  try {
    out.oracle_rank = rank_exact(disjointness_matrix(n, d, k, caps), caps);
    out.note = "closed form cross-checked by exact rank";
  } catch (const ResourceLimitError& e) {
    out.note = std::string("cross-check skipped: ") + e.what();
  }
  return out;
}

BigInt sym_trace_B(std::uint64_t n, std::uint64_t d, std::uint64_t k) {
  check_order(n, d, k);
  return binomial(s64(n - k), s64(d - k)) * binomial(s64(n), s64(k));
}

BigInt sym_trace_B2(std::uint64_t n, std::uint64_t d, std::uint64_t k) {
  check_order(n, d, k);
  const std::int64_t N = s64(n), D = s64(d), K = s64(k);
  BigInt sum = 0;
  for (std::int64_t t = 0; t <= K; ++t) {
    const BigInt entry = binomial(N - 2 * K + t, D - K);
    sum += binomial(N, K) * binomial(K, t) * binomial(N - K, K - t) * entry * entry;
  }
  return sum;
}

std::optional<Rational> sym_upper_v(std::uint64_t n, std::uint64_t d, std::uint64_t k) {
  check_order(n, d, k);
  const std::int64_t N = s64(n), D = s64(d), K = s64(k);
  const BigInt a = binomial(N - K, D - K), b = binomial(N, K);
  const BigInt c = binomial(N - 2 * K, D - K);
  const BigInt denom = c * c * binomial(N - K, K) * b;
  if (denom == 0) return std::nullopt;
  return Rational(a * a * b * b, denom);
}

SymGapPoint sym_gap_point(std::uint64_t n, std::uint64_t d, std::uint64_t k) {
  SymGapPoint p;
  p.n = n;
  p.d = d;
  p.k = k;
  p.u = sym_exact_dim(n, d, k, {}, false).value;
  const BigInt tr = sym_trace_B(n, d, k);
  const BigInt tr2 = sym_trace_B2(n, d, k);
  p.v = tr2 == 0 ? Rational(0) : Rational(tr * tr, tr2);
  p.upper_v = sym_upper_v(n, d, k);
  p.ratio = p.v / Rational(p.u);
  return p;
}

std::vector<SymGapPoint> sym_gap_fixed(std::uint64_t d, std::uint64_t k, std::uint64_t n_from,
                                       std::uint64_t n_to) {
  if (!(k < d && d < n_from)) throw std::invalid_argument("fixed series needs k < d < n");
  if (n_to < n_from) throw std::invalid_argument("empty n range");
  std::vector<SymGapPoint> out;
  for (std::uint64_t n = n_from; n <= n_to; ++n) out.push_back(sym_gap_point(n, d, k));
  return out;
}

std::vector<SymGapPoint> sym_gap_scaled(std::uint64_t kp, std::uint64_t dp, std::uint64_t np,
                                        std::uint64_t m_from, std::uint64_t m_to) {
  if (!(kp >= 1 && kp < dp && 2 * dp < np)) {
    throw std::invalid_argument("scaled series needs 1 <= k' < d' < n'/2");
  }
  if (m_from < 1 || m_to < m_from) throw std::invalid_argument("empty m range");
  if (2 * kp > dp) kp = dp - kp;
  std::vector<SymGapPoint> out;
  for (std::uint64_t m = m_from; m <= m_to; ++m) out.push_back(sym_gap_point(np * m, dp * m, kp * m));
  return out;
}

}  // namespace pdrank
