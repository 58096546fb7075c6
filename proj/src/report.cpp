#include "pdrank/report.hpp"

#include <chrono>
#include <sstream>

namespace pdrank {

namespace {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

nlohmann::json big_json(const BigInt& v) { return v.str(); }

}  // namespace

BoundReport make_bound_report(const SparsePoly& f, std::uint64_t k, const ReportOptions& options) {
  BoundReport r;
  r.nvars = f.nvars();
  r.nterms = f.size();
  r.k = k;
  r.multilinear = f.is_multilinear();
  r.homogeneous = f.is_homogeneous();
  if (f.is_zero()) {
    r.exact_status = "zero-poly";
    r.exact_dim = 0;
    r.trace_status = "zero-poly";
    r.notes.push_back("zero polynomial: every derivative space is {0}");
    return r;
  }
  r.degree = f.degree();
  if (k > r.degree) throw std::invalid_argument("k exceeds deg f");
  r.notes.push_back("matrix and trace quantities use scaled-basis coefficients a = c * gamma!");

  if (options.compute_exact) {
    Stopwatch sw;
    try {
      r.exact_dim = dim_partials(f, OrderSpec::exact_order(k), options.caps).dim;
      r.exact_status = "computed";
    } catch (const ResourceLimitError& e) {
      r.exact_status = "skipped:caps";
      r.notes.push_back(std::string("exact dimension skipped: ") + e.what());
    }
    r.timings_ms.emplace_back("exact", sw.elapsed_ms());
  } else {
    r.exact_status = "not-requested";
  }

  {
    Stopwatch sw;
    r.extremal = lower_bound_extremal(f, k, options.extremal);
    r.linearity = upper_bound_linearity(f, k, options.caps);
    r.timings_ms.emplace_back("elementary", sw.elapsed_ms());
  }

  r.L = closed_form_L(f, k);
  if (!r.multilinear) {
    r.L_ordinary = closed_form_L_ordinary(f, k);
    r.notes.push_back("L_ordinary evaluates the same formula on ordinary coefficients; it is "
                      "informational only");
  }

  if (options.compute_trace) {
    Stopwatch sw;
    try {
      r.trace = trace_stats(f, k, options.trace);
      r.trace_status = "computed";
      if (r.trace->vacuous) r.notes.push_back("B = 0 for this k: proxy bound is vacuous");
    } catch (const ResourceLimitError& e) {
      r.trace_status = "skipped:budget";
      r.notes.push_back(std::string("proxy rank skipped: ") + e.what());
    }
    r.timings_ms.emplace_back("trace", sw.elapsed_ms());
  } else {
    r.trace_status = "not-requested";
  }

  if (options.oracle) {
    Stopwatch sw;
    auto ex = explicit_B_oracle(f, k, options.caps);
    OracleCheck check{ex.stats.trB, ex.stats.trB2, ex.rank_B, true};
    if (r.trace) check.matches = ex.stats.trB == r.trace->trB && ex.stats.trB2 == r.trace->trB2;
    r.oracle = check;
    if (!check.matches) r.violations.push_back("trace counting disagrees with explicit B");
    r.timings_ms.emplace_back("oracle", sw.elapsed_ms());
  }

  // Self-check of the bound chain.
  if (r.exact_dim) {
    const BigInt exact = *r.exact_dim;
    const Rational exact_q(exact);
    if (r.extremal->value > exact) r.violations.push_back("extremal lower bound exceeds exact dim");
    if (*r.L > exact_q) r.violations.push_back("L(f) exceeds exact dim");
    if (r.trace && r.trace->proxy > exact_q) r.violations.push_back("proxy rank exceeds exact dim");
    if (r.linearity->value < exact) r.violations.push_back("linearity upper bound below exact dim");
    if (r.oracle && r.oracle->rank_B > *r.exact_dim) r.violations.push_back("rank(B) exceeds exact dim");
  }
  if (r.trace && *r.L > r.trace->proxy && !r.trace->vacuous) {
    r.violations.push_back("L(f) exceeds proxy rank");
  }
  return r;
}

nlohmann::json rational_json(const Rational& q) {
  return {{"exact", to_fraction_string(q)}, {"decimal", to_decimal_string(q, 12)}};
}

nlohmann::json to_json(const TraceStats& s) {
  return {{"k", s.k},
          {"monomial_count", s.monomial_count},
          {"trB", to_fraction_string(s.trB)},
          {"trB2", to_fraction_string(s.trB2)},
          {"proxy", rational_json(s.proxy)},
          {"vacuous", s.vacuous}};
}

nlohmann::json to_json(const BoundReport& r, bool include_timings) {
  nlohmann::json j;
  j["input"] = {{"vars", r.nvars},
                {"terms", r.nterms},
                {"degree", r.nterms == 0 ? nlohmann::json(nullptr) : nlohmann::json(r.degree)},
                {"multilinear", r.multilinear},
                {"homogeneous", r.homogeneous}};
  j["k"] = r.k;
  j["exact_dim"] = {{"status", r.exact_status},
                    {"value", r.exact_dim ? nlohmann::json(*r.exact_dim) : nlohmann::json(nullptr)}};
  nlohmann::json bounds = nlohmann::json::object();
  if (r.extremal) {
    bounds["extremal_lower"] = {{"value", big_json(r.extremal->value)},
                                {"witness", r.extremal->witness.values()},
                                {"provenance", r.extremal->provenance}};
  }
  if (r.L) {
    bounds["L_lower"] = rational_json(*r.L);
    bounds["L_lower"]["provenance"] = "closed form on scaled coefficients";
    if (r.L_ordinary) bounds["L_lower"]["ordinary_coefficients"] = rational_json(*r.L_ordinary);
  }
  if (r.trace) {
    bounds["proxy_lower"] = rational_json(r.trace->proxy);
    bounds["proxy_lower"]["provenance"] = r.trace->vacuous ? "vacuous (B = 0)" : "Tr(B)^2/Tr(B^2)";
  }
  if (r.linearity) {
    bounds["linearity_upper"] = {{"value", big_json(r.linearity->value)},
                                 {"profile_sum", big_json(r.linearity->profile_sum)},
                                 {"provenance", r.linearity->provenance}};
    if (r.linearity->label_counts_computed) {
      bounds["linearity_upper"]["distinct_rows"] = r.linearity->distinct_rows;
      bounds["linearity_upper"]["distinct_cols"] = r.linearity->distinct_cols;
    }
  }
  j["bounds"] = std::move(bounds);
  j["trace"] = {{"status", r.trace_status}};
  if (r.trace) j["trace"].update(to_json(*r.trace));
  if (r.oracle) {
    j["oracle"] = {{"trB", to_fraction_string(r.oracle->trB)},
                   {"trB2", to_fraction_string(r.oracle->trB2)},
                   {"rank_B", r.oracle->rank_B},
                   {"matches", r.oracle->matches}};
  }
  j["notes"] = r.notes;
  j["self_check"] = {{"ok", r.violations.empty()}, {"violations", r.violations}};
  if (include_timings) {
    nlohmann::json t = nlohmann::json::object();
    for (const auto& [stage, ms] : r.timings_ms) t[stage] = ms;
    j["timings_ms"] = std::move(t);
  }
  return j;
}

std::string to_text(const BoundReport& r) {
  std::ostringstream out;
  out << "k = " << r.k << "  (n = " << r.nvars << ", s = " << r.nterms;
  if (r.nterms > 0) out << ", deg = " << r.degree;
  out << ")\n";
  out << "  exact dim          : ";
  if (r.exact_dim) {
    out << *r.exact_dim;
  } else {
    out << "-";
  }
  out << "  [" << r.exact_status << "]\n";
  if (r.extremal) out << "  extremal lower     : " << r.extremal->value << '\n';
  if (r.L) out << "  L(f) lower         : " << to_fraction_string(*r.L) << " ~ " << to_decimal_string(*r.L) << '\n';
  if (r.trace) {
    out << "  proxy lower        : " << to_fraction_string(r.trace->proxy) << " ~ "
        << to_decimal_string(r.trace->proxy) << (r.trace->vacuous ? " (vacuous)" : "") << '\n';
    out << "  Tr(B), Tr(B^2)     : " << to_fraction_string(r.trace->trB) << ", "
        << to_fraction_string(r.trace->trB2) << '\n';
  } else {
    out << "  proxy lower        : - [" << r.trace_status << "]\n";
  }
  if (r.linearity) out << "  linearity upper    : " << r.linearity->value << '\n';
  if (r.oracle) {
    out << "  oracle rank(B)     : " << r.oracle->rank_B
        << (r.oracle->matches ? " (traces match)" : " (TRACE MISMATCH)") << '\n';
  }
  for (const auto& note : r.notes) out << "  note: " << note << '\n';
  for (const auto& v : r.violations) out << "  VIOLATION: " << v << '\n';
  return out.str();
}

nlohmann::json to_json(const ReductionReport& r) {
  nlohmann::json j = {{"n", r.n},
                      {"m", r.m},
                      {"ind_count", r.ind_count ? nlohmann::json(*r.ind_count) : nlohmann::json(nullptr)},
                      {"face_count", r.face_count},
                      {"dim_plus", r.dim_plus},
                      {"identity_applicable", r.identity_applicable},
                      {"identity_holds", r.identity_holds},
                      {"basis_verified", r.basis_verified}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

nlohmann::json to_json(const SymGapPoint& p) {
  nlohmann::json j = {{"n", p.n},
                      {"d", p.d},
                      {"k", p.k},
                      {"u", big_json(p.u)},
                      {"v", rational_json(p.v)},
                      {"ratio", rational_json(p.ratio)}};
  j["upper_v"] = p.upper_v ? rational_json(*p.upper_v) : nlohmann::json(nullptr);
  return j;
}

}  // namespace pdrank
