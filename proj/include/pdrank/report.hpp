#pragma once

#include "pdrank/bounds.hpp"
#include "pdrank/exact.hpp"
#include "pdrank/reductions.hpp"
#include "pdrank/symmetric.hpp"
#include "pdrank/trace.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace pdrank {

struct ReportOptions {
  bool compute_exact = true;
  bool compute_trace = true;
  /// Materialize B and compare it with the counting formulas.
  bool oracle = false;
  ExactCaps caps;
  TraceConfig trace;
  ExtremalOptions extremal;
};

struct OracleCheck {
  Rational trB;
  Rational trB2;
  std::size_t rank_B = 0;
  bool matches = false;
};

/// Everything known about dim d^{=k} f for one (f, k).
///
/// Whenever `exact_dim` is present every lower bound must be <= it and
/// every upper bound >= it; failures land in `violations`.
struct BoundReport {
  std::size_t nvars = 0;
  std::size_t nterms = 0;
  std::uint64_t degree = 0;
  bool multilinear = false;
  bool homogeneous = false;
  std::uint64_t k = 0;

  std::string exact_status;  // computed | skipped:caps | zero-poly | not-requested
  std::optional<std::size_t> exact_dim;

  std::optional<ExtremalBound> extremal;
  std::optional<Rational> L;
  std::optional<Rational> L_ordinary;
  std::string trace_status;  // computed | skipped:budget | not-requested | zero-poly
  std::optional<TraceStats> trace;
  std::optional<LinearityBound> linearity;
  std::optional<OracleCheck> oracle;

  std::vector<std::string> notes;
  std::vector<std::string> violations;
  std::vector<std::pair<std::string, double>> timings_ms;
};

BoundReport make_bound_report(const SparsePoly& f, std::uint64_t k, const ReportOptions& options);

/// "p/q" plus a 12-significant-digit decimal.
nlohmann::json rational_json(const Rational& q);

nlohmann::json to_json(const BoundReport& r, bool include_timings = false);
std::string to_text(const BoundReport& r);

nlohmann::json to_json(const TraceStats& s);
nlohmann::json to_json(const ReductionReport& r);
nlohmann::json to_json(const SymGapPoint& p);

}  // namespace pdrank
