#pragma once

// Exact scalar types shared by every module, plus the Eigen aliases built on
// them. Expression templates are disabled so the types behave as plain values
// inside Eigen kernels.

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pdrank {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntMatrix = DenseMatrix<BigInt>;
using RationalMatrix = DenseMatrix<Rational>;

/// Binomial coefficient with C(n, k) = 0 whenever k < 0, k > n or n < 0.
BigInt binomial(std::int64_t n, std::int64_t k);

/// Product of factorials of the entries, i.e. alpha_1! * ... * alpha_n!.
template <typename Range>
BigInt factorial_product(const Range& exps) {
  BigInt out = 1;
  for (auto e : exps) {
    for (std::uint64_t i = 2; i <= static_cast<std::uint64_t>(e); ++i) {
      out *= i;
    }
  }
  return out;
}

/// "p/q" form, always with an explicit denominator.
std::string to_fraction_string(const Rational& q);

/// Parses "p", "p/q" or a finite decimal such as "-1.25" exactly.
/// Throws std::invalid_argument on anything else (including exponents).
Rational parse_rational(const std::string& text);

/// Decimal rendering with the given number of significant digits.
std::string to_decimal_string(const Rational& q, int significant_digits = 12);

// Error categories. The CLI maps each one onto an exit code.

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class ResourceLimitError : public std::runtime_error {
 public:
  ResourceLimitError(const std::string& dimension, std::uint64_t requested,
                     std::uint64_t limit);
  const std::string& dimension() const { return dimension_; }
  std::uint64_t requested() const { return requested_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::string dimension_;
  std::uint64_t requested_;
  std::uint64_t limit_;
};

class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace pdrank
