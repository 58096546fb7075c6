#include "pdrank/combinatorics.hpp"

#include "pdrank/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

namespace pdrank {

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n) {
  for (auto& [u, v] : edges) {
    if (u < 1 || v < 1 || u > n || v > n) {
      throw std::invalid_argument("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                  "} out of range for n = " + std::to_string(n));
    }
    if (u == v) throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw std::invalid_argument("duplicate edge");
  }
  edges_ = std::move(edges);
}

SimplicialComplex::SimplicialComplex(std::size_t ground, std::vector<Facet> facets)
    : ground_(ground) {
  for (auto& f : facets) {
    if (f.empty()) throw std::invalid_argument("empty facet");
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    if (f.front() < 1 || f.back() > ground) {
      throw std::invalid_argument("facet vertex out of range for ground set of size " +
                                  std::to_string(ground));
    }
  }
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  for (std::size_t i = 0; i < facets.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < facets.size() && !redundant; ++j) {
      redundant = i != j && facets[i].size() < facets[j].size() &&
                  std::includes(facets[j].begin(), facets[j].end(), facets[i].begin(),
                                facets[i].end());
    }
    if (!redundant) facets_.push_back(facets[i]);
  }
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Facet& f) { return f.size() == facets_.front().size(); });
}

std::size_t SimplicialComplex::facet_size() const {
  if (facets_.empty()) return 0;
  if (!is_pure()) throw std::invalid_argument("complex is not pure");
  return facets_.front().size();
}

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++number;
    std::istringstream ls(raw);
    Line line{number, {}};
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (line.tokens.empty() || line.tokens[0][0] == '#' || line.tokens[0] == "c") continue;
    out.push_back(std::move(line));
  }
  return out;
}

std::size_t to_index(const std::string& tok, std::size_t line) {
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(),
                                  [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw ParseError("expected a non-negative integer, got '" + tok + "'", line, 1);
  }
  if (tok.size() > 9) throw ParseError("vertex id too large: " + tok, line, 1);
  return std::stoul(tok);
}

}  // namespace

Graph parse_graph(std::string_view text) {
  auto lines = tokenize(text);
  std::size_t n = 0;
  bool has_header = false;
  std::size_t first = 0;
  if (!lines.empty() && lines[0].tokens[0] == "p") {
    if (lines[0].tokens.size() != 2) {
      throw ParseError("header must read 'p <n>'", lines[0].number, 1);
    }
    n = to_index(lines[0].tokens[1], lines[0].number);
    has_header = true;
    first = 1;
  }
  std::vector<Graph::Edge> edges;
  std::size_t max_id = 0;
  for (std::size_t i = first; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.tokens.size() != 2) throw ParseError("edge line must have two vertex ids", l.number, 1);
    std::size_t u = to_index(l.tokens[0], l.number);
    std::size_t v = to_index(l.tokens[1], l.number);
    max_id = std::max({max_id, u, v});
    edges.emplace_back(u, v);
  }
  if (!has_header) n = max_id;
  return Graph(n, std::move(edges));
}

SimplicialComplex parse_complex(std::string_view text) {
  auto lines = tokenize(text);
  std::size_t n = 0;
  bool has_header = false;
  std::size_t first = 0;
  if (!lines.empty() && lines[0].tokens[0] == "ground") {
    if (lines[0].tokens.size() != 2) {
      throw ParseError("header must read 'ground <n>'", lines[0].number, 1);
    }
    n = to_index(lines[0].tokens[1], lines[0].number);
    has_header = true;
    first = 1;
  }
  std::vector<SimplicialComplex::Facet> facets;
  std::size_t max_id = 0;
  for (std::size_t i = first; i < lines.size(); ++i) {
    SimplicialComplex::Facet f;
    for (const auto& tok : lines[i].tokens) {
      std::size_t v = to_index(tok, lines[i].number);
      if (v == 0) throw ParseError("vertex ids are 1-based", lines[i].number, 1);
      max_id = std::max(max_id, v);
      f.push_back(v);
    }
    facets.push_back(std::move(f));
  }
  if (!has_header) n = max_id;
  return SimplicialComplex(n, std::move(facets));
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << "p " << g.vertex_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string format_complex(const SimplicialComplex& c) {
  std::ostringstream out;
  out << "ground " << c.ground() << '\n';
  for (const auto& f : c.facets()) {
    for (std::size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << f[i];
    out << '\n';
  }
  return out.str();
}

}  // namespace pdrank
