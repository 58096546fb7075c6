#pragma once

#include "pdrank/exponent.hpp"
#include "pdrank/numeric.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace pdrank {

/// Coefficient convention of a SparsePoly.
///
/// In the scaled basis a term (a, gamma) stands for a * x^gamma / gamma!, so
/// that differentiation is plain exponent subtraction.
enum class Basis { ordinary, scaled };

struct Term {
  Rational coef;
  ExponentVector exps;

  bool operator==(const Term&) const = default;
};

/// Canonical sparse polynomial with exact rational coefficients.
///
/// Terms are kept strictly increasing in lexicographic exponent order, with
/// like terms merged and zero coefficients dropped. The zero polynomial has
/// no terms.
class SparsePoly {
 public:
  SparsePoly() = default;
  SparsePoly(std::vector<std::string> vars, std::vector<Term> terms,
             Basis basis = Basis::ordinary);

  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  Basis basis() const { return basis_; }

  std::size_t nvars() const { return vars_.size(); }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Maximum total degree over the terms. Throws std::domain_error for zero.
  std::uint64_t degree() const;
  bool is_homogeneous() const;
  bool is_multilinear() const;

  /// Coefficient of x^exps, or nullptr when the monomial is absent.
  const Rational* coefficient(const ExponentVector& exps) const;
  bool contains(const ExponentVector& exps) const { return coefficient(exps) != nullptr; }

  bool operator==(const SparsePoly&) const = default;

 private:
  std::vector<std::string> vars_;
  std::vector<Term> terms_;
  Basis basis_ = Basis::ordinary;
};

/// Ordinary -> scaled (a_gamma = c_gamma * gamma!). Identity on scaled input.
SparsePoly to_scaled(const SparsePoly& f);
/// Scaled -> ordinary. Identity on ordinary input.
SparsePoly to_ordinary(const SparsePoly& f);

/// c * f, same basis.
SparsePoly scale(const SparsePoly& f, const Rational& c);

/// Renames nothing but reorders coordinates: variable i of the result is
/// variable perm[i] of the input.
SparsePoly permute_variables(const SparsePoly& f, const std::vector<std::size_t>& perm);

/// Parses the text polynomial grammar. An optional first line
/// `vars: x1 x2 ...` fixes the variable order; otherwise variables are listed
/// by first appearance.
SparsePoly parse_poly(std::string_view text);

/// Canonical text form, always with a `vars:` header, so that
/// parse_poly(format_poly(f)) == f for ordinary-basis f.
std::string format_poly(const SparsePoly& f);

/// JSON form: {"vars": [...], "terms": [{"coef": "p/q", "exps": [...]}]}.
nlohmann::json poly_to_json(const SparsePoly& f);
SparsePoly poly_from_json(const nlohmann::json& j);

/// Dispatches on content: JSON when the first non-blank character is '{'.
SparsePoly read_poly(std::string_view text);

}  // namespace pdrank
