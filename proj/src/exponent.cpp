#include "pdrank/exponent.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace pdrank {

std::uint64_t ExponentVector::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

std::size_t ExponentVector::support() const {
  return static_cast<std::size_t>(
      std::count_if(exps_.begin(), exps_.end(), [](value_type e) { return e > 0; }));
}

bool ExponentVector::is_multilinear() const {
  return std::all_of(exps_.begin(), exps_.end(), [](value_type e) { return e <= 1; });
}

bool ExponentVector::divides(const ExponentVector& other) const {
  assert(size() == other.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

ExponentVector& ExponentVector::operator+=(const ExponentVector& other) {
  assert(size() == other.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] += other.exps_[i];
  return *this;
}

std::optional<ExponentVector> subtract(const ExponentVector& a, const ExponentVector& b) {
  if (!b.divides(a)) return std::nullopt;
  ExponentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

ExponentVector meet(const ExponentVector& a, const ExponentVector& b) {
  assert(a.size() == b.size());
  ExponentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::min(a[i], b[i]);
  return out;
}

}  // namespace pdrank
