#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

namespace pdrank {

/// Dense exponent tuple over the ambient variable list of a polynomial.
///
/// Ordering (`<=>`) is lexicographic, coordinate 0 first; it is total and
/// compatible with addition. The componentwise partial order is exposed
/// separately through `divides`.
class ExponentVector {
 public:
  using value_type = std::uint32_t;

  ExponentVector() = default;
  explicit ExponentVector(std::size_t n) : exps_(n, 0) {}
  ExponentVector(std::initializer_list<value_type> exps) : exps_(exps) {}
  explicit ExponentVector(std::vector<value_type> exps) : exps_(std::move(exps)) {}

  std::size_t size() const { return exps_.size(); }
  value_type operator[](std::size_t i) const { return exps_[i]; }
  value_type& operator[](std::size_t i) { return exps_[i]; }
  auto begin() const { return exps_.begin(); }
  auto end() const { return exps_.end(); }
  const std::vector<value_type>& values() const { return exps_; }

  /// Total degree.
  std::uint64_t degree() const;
  /// Number of strictly positive entries.
  std::size_t support() const;
  bool is_zero() const { return degree() == 0; }
  bool is_multilinear() const;

  /// Componentwise `*this <= other`.
  bool divides(const ExponentVector& other) const;

  ExponentVector& operator+=(const ExponentVector& other);

  friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) {
    a += b;
    return a;
  }

  auto operator<=>(const ExponentVector&) const = default;
  bool operator==(const ExponentVector&) const = default;

 private:
  std::vector<value_type> exps_;
};

/// a - b when b divides a, nullopt otherwise.
std::optional<ExponentVector> subtract(const ExponentVector& a, const ExponentVector& b);

/// Coordinatewise minimum.
ExponentVector meet(const ExponentVector& a, const ExponentVector& b);

/// Calls `visit(beta)` for every beta dividing `alpha` with
/// `min_degree <= |beta| <= max_degree`, in lexicographic order.
template <typename Visitor>
void for_each_divisor(const ExponentVector& alpha, std::uint64_t min_degree,
                      std::uint64_t max_degree, Visitor&& visit) {
  const std::size_t n = alpha.size();
  ExponentVector beta(n);
  // Suffix sums bound the degree still reachable from coordinate i onwards.
  std::vector<std::uint64_t> tail(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) tail[i] = tail[i + 1] + alpha[i];

  auto recurse = [&](auto&& self, std::size_t i, std::uint64_t deg) -> void {
    if (i == n) {
      if (deg >= min_degree) visit(static_cast<const ExponentVector&>(beta));
      return;
    }
    for (std::uint32_t e = 0; e <= alpha[i]; ++e) {
      if (deg + e > max_degree) break;
      if (deg + e + tail[i + 1] < min_degree) continue;
      beta[i] = e;
      self(self, i + 1, deg + e);
    }
    beta[i] = 0;
  };
  recurse(recurse, 0, 0);
}

/// Calls `visit(mask_vector)` for every 0/1 vector of weight k dominated by
/// `alpha` (i.e. every k-subset of its support), in lexicographic order.
template <typename Visitor>
void for_each_support_subset(const ExponentVector& alpha, std::size_t k,
                             Visitor&& visit) {
  ExponentVector capped(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) capped[i] = alpha[i] > 0 ? 1 : 0;
  for_each_divisor(capped, k, k, visit);
}

}  // namespace pdrank
