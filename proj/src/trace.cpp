#include "pdrank/trace.hpp"

#include <algorithm>
#include <future>
#include <random>
#include <set>

namespace pdrank {

namespace {

BigInt support_binomial(const ExponentVector& p, std::uint64_t k) {
  return binomial(static_cast<std::int64_t>(p.support()), static_cast<std::int64_t>(k));
}

}  // namespace

Rational trace_B(const SparsePoly& f, std::uint64_t k) {
  const SparsePoly g = to_scaled(f);
  Rational sum = 0;
  for (const auto& t : g.terms()) sum += Rational(support_binomial(t.exps, k)) * t.coef * t.coef;
  return sum;
}

QuadCount count_N(const ExponentVector& P, const ExponentVector& Q, const ExponentVector& R,
                  std::uint64_t k, const SparsePoly& f) {
  const std::size_t n = P.size();
  QuadCount out;
  // Q + R - P must be a term of f.
  ExponentVector S(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t s = std::int64_t{Q[i]} + R[i] - P[i];
    if (s < 0) return out;
    S[i] = static_cast<ExponentVector::value_type>(s);
  }
  if (!f.contains(S)) return out;

  std::uint64_t minus = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t diff = std::int64_t{P[i]} - R[i];
    const bool positive_min = std::min(P[i], Q[i]) > 0;
    if (diff > 1 || diff < -1) return {};
    if (diff == 1) {
      if (!positive_min) return {};
      ++out.ones;
    } else if (diff == -1) {
      ++minus;
    } else if (positive_min) {
      ++out.zeros;
    }
  }
  if (out.ones != minus) return {};
  if (out.ones <= k) {
    out.N = binomial(static_cast<std::int64_t>(out.zeros), static_cast<std::int64_t>(k - out.ones));
  }
  return out;
}

Rational trace_B2(const SparsePoly& f, std::uint64_t k, const TraceConfig& config) {
  const SparsePoly g = to_scaled(f);
  const auto& terms = g.terms();
  const std::uint64_t s = terms.size();
  if (s != 0 && (s > 1'000'000 || s * s * s > config.budget)) {
    throw ResourceLimitError("monomial-triples", s > 1'000'000 ? ~std::uint64_t{0} : s * s * s,
                             config.budget);
  }
  auto partial = [&](std::size_t begin, std::size_t end) {
    Rational sum = 0;
    for (std::size_t p = begin; p < end; ++p) {
      const auto& P = terms[p];
      for (const auto& Q : terms) {
        for (const auto& R : terms) {
          QuadCount c = count_N(P.exps, Q.exps, R.exps, k, g);
          if (c.N == 0) continue;
          ExponentVector S = Q.exps + R.exps;
          S = *subtract(S, P.exps);
          sum += Rational(c.N) * P.coef * Q.coef * R.coef * *g.coefficient(S);
        }
      }
    }
    return sum;
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(config.threads, s));
  if (workers == 1) return partial(0, s);
  std::vector<std::future<Rational>> parts;
  const std::size_t chunk = (s + workers - 1) / workers;
  for (std::size_t begin = 0; begin < s; begin += chunk) {
    parts.push_back(std::async(std::launch::async, partial, begin, std::min(s, begin + chunk)));
  }
  Rational sum = 0;
  for (auto& part : parts) sum += part.get();
  return sum;
}

TraceStats trace_stats(const SparsePoly& f, std::uint64_t k, const TraceConfig& config) {
  TraceStats out;
  out.k = k;
  out.monomial_count = f.size();
  out.trB = trace_B(f, k);
  out.trB2 = trace_B2(f, k, config);
  if (out.trB2 == 0) {
    out.vacuous = true;
    out.proxy = 0;
  } else {
    out.proxy = out.trB * out.trB / out.trB2;
  }
  return out;
}

Rational proxy_rank(const SparsePoly& f, std::uint64_t k, const TraceConfig& config) {
  return trace_stats(f, k, config).proxy;
}

Rational closed_form_L(const std::vector<ExponentVector>& support,
                       const std::vector<Rational>& coefs, std::uint64_t k) {
  if (support.empty() || support.size() != coefs.size()) {
    throw std::invalid_argument("closed_form_L needs one coefficient per support monomial");
  }
  Rational weighted = 0, total = 0;
  for (std::size_t i = 0; i < support.size(); ++i) {
    const Rational sq = coefs[i] * coefs[i];
    weighted += Rational(support_binomial(support[i], k)) * sq;
    total += sq;
  }
  return weighted / (Rational(support.size()) * total);
}

namespace {
Rational closed_form_on(const SparsePoly& g, std::uint64_t k) {
  if (g.is_zero()) throw std::invalid_argument("closed_form_L of the zero polynomial");
  std::vector<ExponentVector> support;
  std::vector<Rational> coefs;
  for (const auto& t : g.terms()) {
    support.push_back(t.exps);
    coefs.push_back(t.coef);
  }
  return closed_form_L(support, coefs, k);
}
}  // namespace

Rational closed_form_L(const SparsePoly& f, std::uint64_t k) {
  return closed_form_on(to_scaled(f), k);
}

Rational closed_form_L_ordinary(const SparsePoly& f, std::uint64_t k) {
  return closed_form_on(to_ordinary(f), k);
}

ExplicitTrace explicit_B_oracle(const SparsePoly& f, std::uint64_t k, const ExactCaps& caps) {
  if (f.is_zero()) throw std::invalid_argument("explicit trace oracle of the zero polynomial");
  const SparsePoly g = to_scaled(f);
  const std::size_t n = g.nvars();
  const BigInt all_rows = binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k));
  if (all_rows > caps.max_rows) {
    throw ResourceLimitError("rows", all_rows.convert_to<std::uint64_t>(), caps.max_rows);
  }

  // Rows: every k-subset I of [n]; columns: every J = P - I with I inside supp P.
  std::set<ExponentVector> row_set, col_set;
  ExponentVector ones(n);
  for (std::size_t i = 0; i < n; ++i) ones[i] = 1;
  for_each_divisor(ones, k, k, [&](const ExponentVector& I) { row_set.insert(I); });
  for (const auto& t : g.terms()) {
    for_each_support_subset(t.exps, k, [&](const ExponentVector& I) {
      col_set.insert(*subtract(t.exps, I));
      if (col_set.size() > caps.max_cols) {
        throw ResourceLimitError("cols", col_set.size(), caps.max_cols);
      }
    });
  }

  ExplicitTrace out;
  auto& M = out.M;
  M.cols.assign(col_set.begin(), col_set.end());
  for (const auto& t : g.terms()) M.denominator = lcm(M.denominator, denominator(t.coef));
  std::vector<ExponentVector> all_rows_sorted(row_set.begin(), row_set.end());
  IntMatrix full = IntMatrix::Zero(static_cast<Eigen::Index>(all_rows_sorted.size()),
                                   static_cast<Eigen::Index>(M.cols.size()));
  for (std::size_t r = 0; r < all_rows_sorted.size(); ++r) {
    for (std::size_t c = 0; c < M.cols.size(); ++c) {
      if (const Rational* a = g.coefficient(all_rows_sorted[r] + M.cols[c])) {
        full(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
            numerator(*a) * (M.denominator / denominator(*a));
      }
    }
  }
  // Drop identically zero rows; they do not change B.
  std::vector<Eigen::Index> keep;
  for (Eigen::Index r = 0; r < full.rows(); ++r) {
    bool nonzero = false;
    for (Eigen::Index c = 0; c < full.cols() && !nonzero; ++c) nonzero = full(r, c) != 0;
    if (nonzero) {
      keep.push_back(r);
      M.rows.push_back(all_rows_sorted[static_cast<std::size_t>(r)]);
    }
  }
  M.entries = IntMatrix(static_cast<Eigen::Index>(keep.size()), full.cols());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    M.entries.row(static_cast<Eigen::Index>(i)) = full.row(keep[i]);
  }
  M.provenance = "0/1 differentiation patterns of size " + std::to_string(k);

  out.gram = M.entries.transpose() * M.entries;
  const IntMatrix gram_sq = out.gram * out.gram;
  const BigInt d2 = M.denominator * M.denominator;
  out.stats.k = k;
  out.stats.monomial_count = g.size();
  out.stats.trB = Rational(out.gram.trace(), d2);
  out.stats.trB2 = Rational(gram_sq.trace(), d2 * d2);
  out.stats.vacuous = out.stats.trB2 == 0;
  out.stats.proxy = out.stats.vacuous ? Rational(0) : out.stats.trB * out.stats.trB / out.stats.trB2;
  out.rank_B = rank_exact(out.gram, caps);
  return out;
}

SemirandomResult semirandom_estimate(const std::vector<ExponentVector>& support, std::uint64_t k,
                                     std::size_t samples, std::uint64_t seed) {
  if (support.empty()) throw std::invalid_argument("semirandom support is empty");
  if (samples == 0) throw std::invalid_argument("semirandom needs at least one sample");
  std::set<ExponentVector> distinct(support.begin(), support.end());
  if (distinct.size() != support.size()) {
    throw std::invalid_argument("semirandom support has repeated monomials");
  }
  std::mt19937_64 rng(seed);
  const std::int64_t bound = std::int64_t{1} << 30;
  // Draw from [-2^30, 2^30 - 1] and map 0 to 2^30: uniform over the 2^31
  // nonzero values.
  std::uniform_int_distribution<std::int64_t> draw(-bound, bound - 1);
  SemirandomResult out;
  out.samples = samples;
  std::vector<Rational> coefs(support.size());
  Rational total = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    for (auto& c : coefs) {
      std::int64_t v = draw(rng);
      c = v == 0 ? bound : v;
    }
    total += closed_form_L(support, coefs, k);
  }
  out.mean = total / Rational(samples);
  Rational expected = 0;
  for (const auto& p : support) expected += Rational(support_binomial(p, k));
  const Rational m(support.size());
  out.expected = expected / (m * m);
  return out;
}

}  // namespace pdrank
