#include "pdrank/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace pdrank {

namespace {

std::vector<Term> canonicalize(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.exps < b.exps; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().exps == t.exps) {
      out.back().coef += t.coef;
    } else {
      out.push_back(std::move(t));
    }
  }
  std::erase_if(out, [](const Term& t) { return t.coef == 0; });
  return out;
}

}  // namespace

SparsePoly::SparsePoly(std::vector<std::string> vars, std::vector<Term> terms, Basis basis)
    : vars_(std::move(vars)), basis_(basis) {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    for (std::size_t j = i + 1; j < vars_.size(); ++j) {
      if (vars_[i] == vars_[j]) {
        throw std::invalid_argument("duplicate variable '" + vars_[i] + "'");
      }
    }
  }
  for (const auto& t : terms) {
    if (t.exps.size() != vars_.size()) {
      throw std::invalid_argument("exponent vector length does not match variable count");
    }
  }
  terms_ = canonicalize(std::move(terms));
}

std::uint64_t SparsePoly::degree() const {
  if (terms_.empty()) throw std::domain_error("degree of the zero polynomial is undefined");
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exps.degree());
  return d;
}

bool SparsePoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const auto d = terms_.front().exps.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const Term& t) { return t.exps.degree() == d; });
}

bool SparsePoly::is_multilinear() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.exps.is_multilinear(); });
}

const Rational* SparsePoly::coefficient(const ExponentVector& exps) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exps,
                             [](const Term& t, const ExponentVector& e) { return t.exps < e; });
  if (it == terms_.end() || it->exps != exps) return nullptr;
  return &it->coef;
}

SparsePoly to_scaled(const SparsePoly& f) {
  if (f.basis() == Basis::scaled) return f;
  std::vector<Term> terms = f.terms();
  for (auto& t : terms) t.coef *= Rational(factorial_product(t.exps));
  return SparsePoly(f.vars(), std::move(terms), Basis::scaled);
}

SparsePoly to_ordinary(const SparsePoly& f) {
  if (f.basis() == Basis::ordinary) return f;
  std::vector<Term> terms = f.terms();
  for (auto& t : terms) t.coef /= Rational(factorial_product(t.exps));
  return SparsePoly(f.vars(), std::move(terms), Basis::ordinary);
}

SparsePoly scale(const SparsePoly& f, const Rational& c) {
  std::vector<Term> terms = f.terms();
  for (auto& t : terms) t.coef *= c;
  return SparsePoly(f.vars(), std::move(terms), f.basis());
}

SparsePoly permute_variables(const SparsePoly& f, const std::vector<std::size_t>& perm) {
  const std::size_t n = f.nvars();
  if (perm.size() != n) throw std::invalid_argument("permutation length mismatch");
  std::vector<bool> seen(n, false);
  for (auto p : perm) {
    if (p >= n || seen[p]) throw std::invalid_argument("not a permutation");
    seen[p] = true;
  }
  std::vector<std::string> vars(n);
  for (std::size_t i = 0; i < n; ++i) vars[i] = f.vars()[perm[i]];
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    ExponentVector e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = t.exps[perm[i]];
    terms.push_back({t.coef, std::move(e)});
  }
  return SparsePoly(std::move(vars), std::move(terms), f.basis());
}

// ---------------------------------------------------------------------------
// Text grammar

namespace {

bool is_var_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_var_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t first_line)
      : text_(text), line_(first_line) {}

  void declare(const std::vector<std::string>& vars) {
    for (const auto& v : vars) index_of(v, line_, 1);
    fixed_ = true;
  }

  SparsePoly parse() {
    struct RawTerm {
      Rational coef;
      std::vector<std::pair<std::size_t, std::uint32_t>> factors;
    };
    std::vector<RawTerm> raw;
    skip_ws();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      advance();
    }
    while (true) {
      RawTerm t;
      t.coef = negative ? Rational(-1) : Rational(1);
      skip_ws();
      if (is_digit(peek())) {
        t.coef *= parse_coef();
        skip_ws();
        if (peek() == '*') {
          advance();
          skip_ws();
          t.factors.push_back(parse_factor());
        }
      } else {
        t.factors.push_back(parse_factor());
      }
      skip_ws();
      while (peek() == '*') {
        advance();
        skip_ws();
        t.factors.push_back(parse_factor());
        skip_ws();
      }
      raw.push_back(std::move(t));
      if (at_end()) break;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        advance();
        continue;
      }
      fail(std::string("unexpected character '") + peek() + "'");
    }
    std::vector<Term> terms;
    terms.reserve(raw.size());
    for (auto& r : raw) {
      ExponentVector e(names_.size());
      for (auto [var, power] : r.factors) e[var] += power;
      terms.push_back({std::move(r.coef), std::move(e)});
    }
    return SparsePoly(names_, std::move(terms), Basis::ordinary);
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, col_); }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  std::string take_digits() {
    std::string out;
    while (is_digit(peek())) {
      out.push_back(peek());
      advance();
    }
    return out;
  }

  Rational parse_coef() {
    std::string literal = take_digits();
    if (peek() == '/') {
      literal.push_back('/');
      advance();
      std::string den = take_digits();
      if (den.empty()) fail("malformed rational: missing denominator");
      literal += den;
    } else if (peek() == '.') {
      literal.push_back('.');
      advance();
      std::string frac = take_digits();
      if (frac.empty()) fail("malformed decimal literal");
      literal += frac;
    }
    if (peek() == 'e' || peek() == 'E') fail("floating-point literals are not accepted");
    try {
      return parse_rational(literal);
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }

  std::pair<std::size_t, std::uint32_t> parse_factor() {
    const std::size_t line = line_, col = col_;
    if (!is_var_start(peek())) fail("expected variable name");
    std::string name;
    while (is_var_char(peek())) {
      name.push_back(peek());
      advance();
    }
    std::size_t var = index_of(name, line, col);
    std::uint32_t power = 1;
    skip_ws();
    if (peek() == '^') {
      advance();
      skip_ws();
      if (peek() == '-') fail("negative exponent");
      std::string digits = take_digits();
      if (digits.empty()) fail("expected exponent");
      if (digits.size() > 9) fail("exponent too large");
      power = static_cast<std::uint32_t>(std::stoul(digits));
    }
    return {var, power};
  }

  std::size_t index_of(const std::string& name, std::size_t line, std::size_t col) {
    auto it = lookup_.find(name);
    if (it != lookup_.end()) return it->second;
    if (fixed_) {
      throw ParseError("variable '" + name + "' not declared in vars header", line, col);
    }
    lookup_.emplace(name, names_.size());
    names_.push_back(name);
    return names_.size() - 1;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t col_ = 1;
  bool fixed_ = false;
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> lookup_;
};

std::string_view trim_left(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  return s;
}

}  // namespace

SparsePoly parse_poly(std::string_view text) {
  // Leading blank lines are skipped; the header, if any, must be the first
  // non-blank line.
  std::size_t line = 1;
  while (!text.empty()) {
    auto nl = text.find('\n');
    auto first = text.substr(0, nl);
    if (!trim_left(first).empty()) break;
    if (nl == std::string_view::npos) {
      text = {};
      break;
    }
    text.remove_prefix(nl + 1);
    ++line;
  }
  std::vector<std::string> header;
  bool has_header = false;
  if (trim_left(text).starts_with("vars:")) {
    has_header = true;
    auto nl = text.find('\n');
    std::string head(trim_left(text.substr(0, nl)).substr(5));
    std::istringstream ss(head);
    std::string v;
    std::size_t col = 6;
    while (ss >> v) {
      if (!is_var_start(v.front()) ||
          !std::all_of(v.begin(), v.end(), [](char c) { return is_var_char(c); })) {
        throw ParseError("invalid variable name '" + v + "' in header", line, col);
      }
      if (std::find(header.begin(), header.end(), v) != header.end()) {
        throw ParseError("duplicate variable '" + v + "' in header", line, col);
      }
      header.push_back(v);
      col += v.size() + 1;
    }
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line;
  }
  if (trim_left(text).empty()) throw ParseError("empty polynomial", line, 1);
  PolyParser parser(text, line);
  if (has_header) parser.declare(header);
  return parser.parse();
}

std::string format_poly(const SparsePoly& f) {
  const auto ordinary = to_ordinary(f);
  std::ostringstream out;
  out << "vars:";
  for (const auto& v : ordinary.vars()) out << ' ' << v;
  out << '\n';
  if (ordinary.is_zero()) {
    out << "0\n";
    return out.str();
  }
  bool first = true;
  for (const auto& t : ordinary.terms()) {
    Rational c = t.coef;
    if (c < 0) {
      out << (first ? "-" : " - ");
      c = -c;
    } else if (!first) {
      out << " + ";
    }
    first = false;
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < t.exps.size(); ++i) {
      if (t.exps[i] == 0) continue;
      std::string factor = ordinary.vars()[i];
      if (t.exps[i] > 1) factor += "^" + std::to_string(t.exps[i]);
      factors.push_back(std::move(factor));
    }
    bool wrote = false;
    if (c != 1 || factors.empty()) {
      out << numerator(c);
      if (denominator(c) != 1) out << '/' << denominator(c);
      wrote = true;
    }
    for (const auto& factor : factors) {
      if (wrote) out << '*';
      out << factor;
      wrote = true;
    }
  }
  out << '\n';
  return out.str();
}

nlohmann::json poly_to_json(const SparsePoly& f) {
  const auto ordinary = to_ordinary(f);
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : ordinary.terms()) {
    terms.push_back({{"coef", to_fraction_string(t.coef)}, {"exps", t.exps.values()}});
  }
  return {{"vars", ordinary.vars()}, {"terms", std::move(terms)}};
}

SparsePoly poly_from_json(const nlohmann::json& j) {
  try {
    auto vars = j.at("vars").get<std::vector<std::string>>();
    std::vector<Term> terms;
    for (const auto& t : j.at("terms")) {
      const auto& coef = t.at("coef");
      Rational c = coef.is_string() ? parse_rational(coef.get<std::string>())
                                    : Rational(coef.get<std::int64_t>());
      std::vector<std::int64_t> raw = t.at("exps").get<std::vector<std::int64_t>>();
      std::vector<ExponentVector::value_type> exps;
      for (auto e : raw) {
        if (e < 0) throw std::invalid_argument("negative exponent");
        exps.push_back(static_cast<ExponentVector::value_type>(e));
      }
      terms.push_back({std::move(c), ExponentVector(std::move(exps))});
    }
    return SparsePoly(std::move(vars), std::move(terms), Basis::ordinary);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON polynomial: ") + e.what());
  }
}

SparsePoly read_poly(std::string_view text) {
  auto rest = trim_left(text);
  if (!rest.empty() && rest.front() == '{') {
    try {
      return poly_from_json(nlohmann::json::parse(rest));
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(e.what(), 1, e.byte);
    }
  }
  return parse_poly(text);
}

}  // namespace pdrank
