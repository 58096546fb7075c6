#include "pdrank/numeric.hpp"

#include <cctype>
#include <sstream>

namespace pdrank {

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt out = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

std::string to_fraction_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_rational(const std::string& text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  auto digits = [&](std::size_t from) {
    std::size_t to = from;
    while (to < text.size() && std::isdigit(static_cast<unsigned char>(text[to]))) ++to;
    return to;
  };
  std::size_t int_end = digits(pos);
  if (int_end == pos) throw std::invalid_argument("malformed rational '" + text + "'");
  BigInt num(text.substr(pos, int_end - pos));
  BigInt den = 1;
  pos = int_end;
  if (pos < text.size() && text[pos] == '/') {
    std::size_t den_end = digits(pos + 1);
    if (den_end == pos + 1 || den_end != text.size()) {
      throw std::invalid_argument("malformed rational '" + text + "'");
    }
    den = BigInt(text.substr(pos + 1, den_end - pos - 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  } else if (pos < text.size() && text[pos] == '.') {
    std::size_t frac_end = digits(pos + 1);
    if (frac_end == pos + 1 || frac_end != text.size()) {
      throw std::invalid_argument("malformed decimal '" + text + "'");
    }
    for (std::size_t i = pos + 1; i < frac_end; ++i) {
      num = num * 10 + (text[i] - '0');
      den *= 10;
    }
  } else if (pos != text.size()) {
    throw std::invalid_argument("malformed rational '" + text + "'");
  }
  Rational out(num, den);
  return negative ? Rational(-out) : out;
}

std::string to_decimal_string(const Rational& q, int significant_digits) {
  boost::multiprecision::mpf_float_100 value(q);
  return value.str(significant_digits);
}

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

ResourceLimitError::ResourceLimitError(const std::string& dimension,
                                       std::uint64_t requested, std::uint64_t limit)
    : std::runtime_error("resource limit exceeded: " + dimension + " = " +
                         std::to_string(requested) + " > " + std::to_string(limit)),
      dimension_(dimension),
      requested_(requested),
      limit_(limit) {}

}  // namespace pdrank
