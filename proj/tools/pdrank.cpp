// pdrank: exact dimensions and fast bounds for spaces of partial derivatives.

#include "pdrank/corpus.hpp"
#include "pdrank/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <thread>

namespace {

using namespace pdrank;
using nlohmann::json;

enum ExitCode { kOk = 0, kInputError = 2, kResourceError = 3, kInvariantError = 4 };

struct Settings {
  std::string format = "json";
  std::uint64_t seed = 0;
  std::size_t threads = 1;
  std::uint64_t budget = 1'000'000'000;
  std::uint64_t max_rows = 20000;
  std::uint64_t max_cols = 20000;
  std::uint64_t elimination_budget = 100'000'000;
  bool timings = false;

  std::string input;
  std::optional<std::uint64_t> k;
  std::string order;
  std::string order_dir = "min";
  std::size_t vertex_trials = 32;
  bool oracle = false;
  std::size_t samples = 2000;
  std::size_t count = 100;
  std::string exhaustive;
  std::vector<std::string> fixed;
  std::vector<std::string> scaled;

  ExactCaps caps() const { return {max_rows, max_cols, elimination_budget}; }
  TraceConfig trace() const { return {budget, threads}; }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const Settings& s, const json& j, const std::string& text) {
  if (s.format == "json") {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << text;
  }
}

// "perm=3,1,2" (1-based) -> zero-based permutation.
MonomialOrderSpec parse_order(const std::string& spec, const std::string& dir, std::size_t n) {
  MonomialOrderSpec order;
  order.direction = dir == "max" ? MonomialOrderSpec::Direction::max : MonomialOrderSpec::Direction::min;
  std::string body = spec;
  if (body.rfind("perm=", 0) == 0) body = body.substr(5);
  if (body == "identity" || body.empty()) return MonomialOrderSpec::identity(n, order.direction);
  if (body == "reversed") return MonomialOrderSpec::reversed(n, order.direction);
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto v = std::stoul(item);
    if (v < 1) throw std::invalid_argument("--order uses 1-based variable positions");
    order.permutation.push_back(v - 1);
  }
  return order;
}

std::vector<std::uint64_t> orders_for(const SparsePoly& f, const Settings& s) {
  if (f.is_zero()) return {s.k.value_or(0)};
  if (s.k) {
    if (*s.k > f.degree()) throw std::invalid_argument("--k exceeds deg f = " + std::to_string(f.degree()));
    return {*s.k};
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 0; k <= f.degree(); ++k) out.push_back(k);
  return out;
}

json input_json(const SparsePoly& f) {
  return {{"vars", f.vars()}, {"terms", f.size()}};
}

int run_reports(const Settings& s, const std::string& command, bool exact, bool trace) {
  const SparsePoly f = read_poly(slurp(s.input));
  ReportOptions options;
  options.compute_exact = exact;
  options.compute_trace = trace;
  options.oracle = s.oracle;
  options.caps = s.caps();
  options.trace = s.trace();
  options.extremal.vertex_trials = s.vertex_trials;
  options.extremal.seed = s.seed;
  if (!s.order.empty() && !f.is_zero()) {
    options.extremal.orders.push_back(parse_order(s.order, s.order_dir, f.nvars()));
  }
  json reports = json::array();
  std::string text;
  bool violated = false;
  for (auto k : orders_for(f, s)) {
    auto r = make_bound_report(f, k, options);
    violated = violated || !r.violations.empty();
    reports.push_back(to_json(r, s.timings));
    text += to_text(r);
  }
  json out = {{"command", command},
              {"input", input_json(f)},
              {"coefficient_convention", "scaled basis: a_gamma = c_gamma * prod(gamma_i!)"},
              {"reports", std::move(reports)}};
  emit(s, out, text);
  return violated ? kInvariantError : kOk;
}

int run_semirandom(const Settings& s) {
  const SparsePoly f = read_poly(slurp(s.input));
  if (f.is_zero()) throw std::invalid_argument("semirandom needs a nonzero polynomial (its support is used)");
  std::vector<ExponentVector> support;
  for (const auto& t : f.terms()) support.push_back(t.exps);
  const auto k = s.k.value_or(1);
  auto r = semirandom_estimate(support, k, s.samples, s.seed);
  const Rational rel = r.expected == 0 ? Rational(0) : abs(r.mean - r.expected) / r.expected;
  json out = {{"command", "semirandom"},
              {"k", k},
              {"samples", r.samples},
              {"seed", s.seed},
              {"mean", rational_json(r.mean)},
              {"expected", rational_json(r.expected)},
              {"relative_error", rational_json(rel)}};
  std::ostringstream text;
  text << "mean L = " << to_decimal_string(r.mean) << ", expected = " << to_decimal_string(r.expected)
       << ", relative error = " << to_decimal_string(rel) << '\n';
  emit(s, out, text.str());
  return kOk;
}

std::string text_of(const ReductionReport& r) {
  std::ostringstream out;
  out << "n = " << r.n << ", m = " << r.m;
  if (r.ind_count) out << ", Ind = " << *r.ind_count;
  out << ", faces = " << r.face_count << ", dim d+ f = " << r.dim_plus << '\n';
  out << "identity " << (!r.identity_applicable ? "not applicable" : r.identity_holds ? "holds" : "FAILS")
      << ", basis " << (r.basis_verified ? "verified" : "not verified") << '\n';
  if (!r.note.empty()) out << "note: " << r.note << '\n';
  return out.str();
}

int run_reduce(const Settings& s, const std::string& kind) {
  ReductionReport r;
  json extra;
  if (kind == "graph") {
    const Graph g = parse_graph(slurp(s.input));
    r = verify_reduction(g, {}, s.caps());
    extra = poly_to_json(graph_to_poly(g));
  } else {
    const SimplicialComplex c = parse_complex(slurp(s.input));
    r = verify_reduction(c, {}, s.caps());
    if (!c.facets().empty()) extra = poly_to_json(complex_to_poly(c));
  }
  json out = to_json(r);
  out["command"] = "reduce " + kind;
  if (!extra.is_null()) out["polynomial"] = extra;
  emit(s, out, text_of(r));
  const bool ok = !r.identity_applicable || (r.identity_holds && r.basis_verified);
  return ok ? kOk : kInvariantError;
}

std::map<std::string, std::string> key_values(const std::vector<std::string>& items) {
  std::map<std::string, std::string> out;
  for (const auto& item : items) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("expected key=value, got '" + item + "'");
    out[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

std::uint64_t need_uint(const std::map<std::string, std::string>& kv, const std::string& key) {
  auto it = kv.find(key);
  if (it == kv.end()) throw std::invalid_argument("missing " + key + "=...");
  return std::stoull(it->second);
}

std::pair<std::uint64_t, std::uint64_t> need_range(const std::map<std::string, std::string>& kv,
                                                   const std::string& key) {
  auto it = kv.find(key);
  if (it == kv.end()) throw std::invalid_argument("missing " + key + "=a..b");
  static const std::regex range(R"((\d+)(?:\.\.(\d+))?)");
  std::smatch m;
  if (!std::regex_match(it->second, m, range)) throw std::invalid_argument("malformed range '" + it->second + "'");
  const auto lo = std::stoull(m[1]);
  return {lo, m[2].matched ? std::stoull(m[2]) : lo};
}

int run_verify(const Settings& s) {
  auto kv = key_values({s.exhaustive});
  const auto n = need_uint(kv, "n");
  if (n < 3) throw std::invalid_argument("exhaustive verification needs n >= 3");
  const auto graphs = all_graphs(n);
  std::vector<ReductionReport> reports(graphs.size());
  const std::size_t workers = std::max<std::size_t>(1, s.threads);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < graphs.size(); i += workers) reports[i] = verify_reduction(graphs[i], {}, s.caps());
    });
  }
  for (auto& t : pool) t.join();
  std::size_t identity_ok = 0, basis_ok = 0;
  json failures = json::array();
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    identity_ok += reports[i].identity_holds;
    basis_ok += reports[i].basis_verified;
    if (!reports[i].identity_holds || !reports[i].basis_verified) {
      json f = to_json(reports[i]);
      f["edges"] = graphs[i].edges();
      failures.push_back(std::move(f));
    }
  }
  json out = {{"command", "verify"},
              {"n", n},
              {"graphs", graphs.size()},
              {"identity_holds", identity_ok},
              {"basis_verified", basis_ok},
              {"all_pass", failures.empty()},
              {"failures", std::move(failures)}};
  std::ostringstream text;
  text << "n = " << n << ": " << graphs.size() << " graphs, identity holds for " << identity_ok
       << ", basis verified for " << basis_ok << '\n';
  emit(s, out, text.str());
  return out["all_pass"].get<bool>() ? kOk : kInvariantError;
}

int run_sym_gap(const Settings& s) {
  std::vector<SymGapPoint> points;
  std::string mode;
  if (!s.fixed.empty()) {
    auto kv = key_values(s.fixed);
    auto [lo, hi] = need_range(kv, "n");
    points = sym_gap_fixed(need_uint(kv, "d"), need_uint(kv, "k"), lo, hi);
    mode = "fixed";
  } else if (!s.scaled.empty()) {
    auto kv = key_values(s.scaled);
    auto [lo, hi] = need_range(kv, "m");
    points = sym_gap_scaled(need_uint(kv, "kp"), need_uint(kv, "dp"), need_uint(kv, "np"), lo, hi);
    mode = "scaled";
  } else {
    throw std::invalid_argument("sym gap needs --fixed or --scaled");
  }
  if (s.format == "csv") {
    std::cout << "n,d,k,u,v,v_decimal,upper_v,upper_v_decimal,ratio,ratio_decimal\n";
    for (const auto& p : points) {
      std::cout << p.n << ',' << p.d << ',' << p.k << ',' << p.u << ',' << to_fraction_string(p.v) << ','
                << to_decimal_string(p.v) << ',';
      if (p.upper_v) {
        std::cout << to_fraction_string(*p.upper_v) << ',' << to_decimal_string(*p.upper_v);
      } else {
        std::cout << ',';
      }
      std::cout << ',' << to_fraction_string(p.ratio) << ',' << to_decimal_string(p.ratio) << '\n';
    }
    return kOk;
  }
  json series = json::array();
  std::ostringstream text;
  for (const auto& p : points) {
    series.push_back(to_json(p));
    text << "n=" << p.n << " d=" << p.d << " k=" << p.k << "  u=" << p.u << "  v~" << to_decimal_string(p.v)
         << "  upper_v~" << (p.upper_v ? to_decimal_string(*p.upper_v) : "-") << "  v/u~"
         << to_decimal_string(p.ratio) << '\n';
  }
  emit(s, {{"command", "sym gap"}, {"mode", mode}, {"series", std::move(series)}}, text.str());
  return kOk;
}

int run_corpus(const Settings& s) {
  const auto corpus = random_corpus(s.seed, s.count);
  json polys = json::array();
  std::string text;
  for (const auto& f : corpus) {
    polys.push_back(poly_to_json(f));
    text += format_poly(f);
    text += "---\n";
  }
  emit(s, {{"command", "random-corpus"}, {"seed", s.seed}, {"count", corpus.size()}, {"polynomials", polys}},
       text);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  Settings s;
  CLI::App app{"pdrank: dimensions of spaces of partial derivatives, exact and bounded"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "Config file with the same keys as the flags")->envname("PDRANK_CONFIG");
  app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"json", "text", "csv"}));
  app.add_option("--seed", s.seed, "RNG seed");
  app.add_option("--threads", s.threads, "Worker threads where supported")->check(CLI::PositiveNumber);
  app.add_option("--budget", s.budget, "Max number of monomial triples for Tr(B^2)");
  app.add_option("--max-rows", s.max_rows, "Row cap for explicit matrices");
  app.add_option("--max-cols", s.max_cols, "Column cap for explicit matrices");
  app.add_option("--elimination-budget", s.elimination_budget, "Entry-update budget per elimination");
  app.add_flag("--timings", s.timings, "Include wall-time per stage (output no longer reproducible)");

  auto add_poly_cmd = [&](const std::string& name, const std::string& help) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("file", s.input, "Polynomial file (text grammar or JSON)")->required();
    cmd->add_option("--k", s.k, "Derivative order (default: every order 0..deg)");
    return cmd;
  };
  auto add_order_flags = [&](CLI::App* cmd) {
    cmd->add_option("--order", s.order, "Monomial order for the extremal bound, e.g. perm=2,1,3");
    cmd->add_option("--order-dir", s.order_dir, "min or max")->check(CLI::IsMember({"min", "max"}));
    cmd->add_option("--vertex-trials", s.vertex_trials, "Random functionals for Newton-polytope vertices");
  };
  auto* dim = add_poly_cmd("dim", "Exact dimension plus every bound");
  add_order_flags(dim);
  dim->add_flag("--oracle", s.oracle, "Cross-check traces against an explicit B");
  auto* bounds = add_poly_cmd("bounds", "Polynomial-time bounds only");
  add_order_flags(bounds);
  auto* trace = add_poly_cmd("trace", "Trace statistics Tr(B), Tr(B^2) and the proxy rank");
  trace->add_flag("--oracle", s.oracle, "Cross-check against explicit materialization");
  auto* semi = add_poly_cmd("semirandom", "Mean of L(f) under random coefficients on the support of f");
  semi->add_option("--samples", s.samples, "Number of samples")->check(CLI::PositiveNumber);

  auto* reduce = app.add_subcommand("reduce", "Graph / complex to polynomial reductions");
  reduce->require_subcommand(1);
  auto* reduce_graph = reduce->add_subcommand("graph", "Edge list input");
  reduce_graph->add_option("file", s.input)->required();
  auto* reduce_complex = reduce->add_subcommand("complex", "Facet list input");
  reduce_complex->add_option("file", s.input)->required();

  auto* verify = app.add_subcommand("verify", "Exhaustive reduction identity check over all graphs");
  verify->add_option("--exhaustive", s.exhaustive, "n=<N>")->required();

  auto* sym = app.add_subcommand("sym", "Elementary symmetric polynomial experiments");
  sym->require_subcommand(1);
  auto* gap = sym->add_subcommand("gap", "Proxy rank versus exact dimension series");
  gap->add_option("--fixed", s.fixed, "d=<d> k=<k> n=<a>..<b>")->expected(1, 3);
  gap->add_option("--scaled", s.scaled, "kp=<k'> dp=<d'> np=<n'> m=<a>..<b>")->expected(1, 4);

  auto* corpus = app.add_subcommand("random-corpus", "Deterministic random polynomial corpus");
  corpus->add_option("--count", s.count, "Number of polynomials");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*dim) return run_reports(s, "dim", true, true);
    if (*bounds) return run_reports(s, "bounds", false, false);
    if (*trace) {
      s.vertex_trials = 0;
      return run_reports(s, "trace", false, true);
    }
    if (*semi) return run_semirandom(s);
    if (*reduce_graph) return run_reduce(s, "graph");
    if (*reduce_complex) return run_reduce(s, "complex");
    if (*verify) return run_verify(s);
    if (*gap) return run_sym_gap(s);
    if (*corpus) return run_corpus(s);
  } catch (const ResourceLimitError& e) {
    std::cerr << "pdrank: " << e.what() << '\n';
    return kResourceError;
  } catch (const InvariantViolation& e) {
    std::cerr << "pdrank: invariant violation: " << e.what() << '\n';
    return kInvariantError;
  } catch (const ParseError& e) {
    std::cerr << "pdrank: parse error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "pdrank: " << e.what() << '\n';
    return kInputError;
  } catch (const std::domain_error& e) {
    std::cerr << "pdrank: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
