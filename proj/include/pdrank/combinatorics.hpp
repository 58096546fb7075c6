#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace pdrank {

/// Simple undirected graph on vertices 1..n.
class Graph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  Graph() = default;
  /// Edges are normalized to u < v and sorted; loops, duplicates and
  /// out-of-range endpoints throw std::invalid_argument.
  Graph(std::size_t n, std::vector<Edge> edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

/// Abstract simplicial complex given by its generating facets over [n].
///
/// Facets are stored as sorted vertex lists, deduplicated, with generators
/// contained in another generator removed.
class SimplicialComplex {
 public:
  using Facet = std::vector<std::size_t>;

  SimplicialComplex() = default;
  SimplicialComplex(std::size_t ground, std::vector<Facet> facets);

  std::size_t ground() const { return ground_; }
  const std::vector<Facet>& facets() const { return facets_; }
  bool is_pure() const;
  /// Common facet size of a pure complex; 0 when there are no facets.
  std::size_t facet_size() const;

 private:
  std::size_t ground_ = 0;
  std::vector<Facet> facets_;
};

/// "p <n>" header (optional) followed by one "u v" edge per line. Without a
/// header n is the largest vertex id. Blank lines and lines starting with
/// 'c' or '#' are ignored.
Graph parse_graph(std::string_view text);

/// One facet per line; optional "ground <n>" header.
SimplicialComplex parse_complex(std::string_view text);

std::string format_graph(const Graph& g);
std::string format_complex(const SimplicialComplex& c);

}  // namespace pdrank
