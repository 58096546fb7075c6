#include "pdrank/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace pdrank {

std::vector<BigInt> monomial_dim_profile(const ExponentVector& alpha) {
  std::vector<BigInt> profile{BigInt(1)};
  for (auto a : alpha) {
    if (a == 0) continue;
    // Multiply by (1 + t + ... + t^a) with a running window sum.
    std::vector<BigInt> next(profile.size() + a, BigInt(0));
    BigInt window = 0;
    for (std::size_t j = 0; j < next.size(); ++j) {
      if (j < profile.size()) window += profile[j];
      if (j >= static_cast<std::size_t>(a) + 1 && j - a - 1 < profile.size()) {
        window -= profile[j - a - 1];
      }
      next[j] = window;
    }
    profile = std::move(next);
  }
  return profile;
}

MonomialOrderSpec MonomialOrderSpec::identity(std::size_t n, Direction dir) {
  MonomialOrderSpec spec;
  spec.permutation.resize(n);
  std::iota(spec.permutation.begin(), spec.permutation.end(), std::size_t{0});
  spec.direction = dir;
  return spec;
}

MonomialOrderSpec MonomialOrderSpec::reversed(std::size_t n, Direction dir) {
  auto spec = identity(n, dir);
  std::reverse(spec.permutation.begin(), spec.permutation.end());
  return spec;
}

std::string MonomialOrderSpec::describe() const {
  std::ostringstream out;
  out << "lex-" << (direction == Direction::min ? "min" : "max") << " perm=";
  for (std::size_t i = 0; i < permutation.size(); ++i) {
    out << (i ? "," : "") << permutation[i] + 1;
  }
  return out.str();
}

namespace {

void validate(const MonomialOrderSpec& order, std::size_t n) {
  if (order.permutation.size() != n) {
    throw std::invalid_argument("order permutation has length " +
                                std::to_string(order.permutation.size()) + ", expected " +
                                std::to_string(n));
  }
  std::vector<bool> seen(n, false);
  for (auto p : order.permutation) {
    if (p >= n || seen[p]) throw std::invalid_argument("order permutation is not a bijection");
    seen[p] = true;
  }
}

ExponentVector permuted(const ExponentVector& e, const std::vector<std::size_t>& perm) {
  ExponentVector out(e.size());
  for (std::size_t i = 0; i < perm.size(); ++i) out[i] = e[perm[i]];
  return out;
}

BigInt dot(const std::vector<std::int64_t>& w, const ExponentVector& e) {
  BigInt s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += BigInt(w[i]) * e[i];
  return s;
}

}  // namespace

ExponentVector extremal_monomial(const SparsePoly& f, const MonomialOrderSpec& order) {
  if (f.is_zero()) throw std::invalid_argument("extremal monomial of the zero polynomial");
  validate(order, f.nvars());
  const Term* best = &f.terms().front();
  ExponentVector best_key = permuted(best->exps, order.permutation);
  for (const auto& t : f.terms()) {
    ExponentVector key = permuted(t.exps, order.permutation);
    bool better = order.direction == MonomialOrderSpec::Direction::min ? key < best_key
                                                                       : key > best_key;
    if (better) {
      best = &t;
      best_key = std::move(key);
    }
  }
  return best->exps;
}

VertexSample vertex_sample(const SparsePoly& f, std::size_t trials, std::uint64_t seed) {
  if (f.is_zero()) throw std::invalid_argument("vertex sample of the zero polynomial");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> draw(-(std::int64_t{1} << 31),
                                                   std::int64_t{1} << 31);
  VertexSample out;
  std::set<ExponentVector> found;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::vector<std::int64_t> w(f.nvars());
    for (auto& x : w) x = draw(rng);
    const Term* best = nullptr;
    BigInt best_value;
    bool tie = false;
    for (const auto& t : f.terms()) {
      BigInt value = dot(w, t.exps);
      if (best == nullptr || value > best_value) {
        best = &t;
        best_value = std::move(value);
        tie = false;
      } else if (value == best_value) {
        tie = true;
      }
    }
    if (tie) {
      ++out.rejected_trials;
      continue;
    }
    if (found.insert(best->exps).second) {
      out.certificates.push_back({std::move(w), best->exps});
    }
  }
  out.vertices.assign(found.begin(), found.end());
  return out;
}

bool check_vertex_certificate(const SparsePoly& f, const VertexCertificate& cert) {
  if (!f.contains(cert.vertex) || cert.weights.size() != f.nvars()) return false;
  const BigInt target = dot(cert.weights, cert.vertex);
  for (const auto& t : f.terms()) {
    if (t.exps != cert.vertex && dot(cert.weights, t.exps) >= target) return false;
  }
  return true;
}

ExtremalBound lower_bound_extremal(const SparsePoly& f, std::uint64_t k,
                                   const ExtremalOptions& options) {
  if (f.is_zero()) throw std::invalid_argument("extremal bound of the zero polynomial");
  if (k > f.degree()) throw std::invalid_argument("k exceeds deg f");
  const std::size_t n = f.nvars();
  std::vector<std::pair<ExponentVector, std::string>> candidates;
  auto orders = options.orders;
  if (orders.empty()) {
    using D = MonomialOrderSpec::Direction;
    orders = {MonomialOrderSpec::identity(n, D::min), MonomialOrderSpec::identity(n, D::max),
              MonomialOrderSpec::reversed(n, D::min), MonomialOrderSpec::reversed(n, D::max)};
  }
  for (const auto& order : orders) {
    candidates.emplace_back(extremal_monomial(f, order), order.describe());
  }
  if (options.vertex_trials > 0) {
    auto sample = vertex_sample(f, options.vertex_trials, options.seed);
    for (const auto& cert : sample.certificates) {
      candidates.emplace_back(cert.vertex, "newton-vertex (sampled functional)");
    }
  }
  ExtremalBound best{BigInt(-1), {}, {}};
  for (const auto& [m, how] : candidates) {
    auto profile = monomial_dim_profile(m);
    BigInt value = k < profile.size() ? profile[k] : BigInt(0);
    if (value > best.value) best = {std::move(value), m, how};
  }
  best.provenance = "max over " + std::to_string(candidates.size()) +
                    " extremal/vertex candidates; best from " + best.provenance;
  return best;
}

LinearityBound upper_bound_linearity(const SparsePoly& f, std::uint64_t k,
                                     const ExactCaps& caps) {
  if (f.is_zero()) throw std::invalid_argument("linearity bound of the zero polynomial");
  if (k > f.degree()) throw std::invalid_argument("k exceeds deg f");
  LinearityBound out;
  for (const auto& t : f.terms()) {
    auto profile = monomial_dim_profile(t.exps);
    if (k < profile.size()) out.profile_sum += profile[k];
  }
  out.value = out.profile_sum;
  out.provenance = "sum of monomial profiles";
  try {
    std::set<ExponentVector> rows, cols;
    for (const auto& t : f.terms()) {
      for_each_divisor(t.exps, k, k, [&](const ExponentVector& beta) {
        if (rows.insert(beta).second && rows.size() > caps.max_rows) {
          throw ResourceLimitError("rows", rows.size(), caps.max_rows);
        }
        if (cols.insert(*subtract(t.exps, beta)).second && cols.size() > caps.max_cols) {
          throw ResourceLimitError("cols", cols.size(), caps.max_cols);
        }
      });
    }
    out.distinct_rows = rows.size();
    out.distinct_cols = cols.size();
    out.label_counts_computed = true;
    if (out.distinct_rows < out.value) {
      out.value = out.distinct_rows;
      out.provenance = "distinct derivative rows";
    }
    if (out.distinct_cols < out.value) {
      out.value = out.distinct_cols;
      out.provenance = "distinct result monomials";
    }
  } catch (const ResourceLimitError&) {
    out.provenance += " (row/column counts skipped: over caps)";
  }
  return out;
}

}  // namespace pdrank
