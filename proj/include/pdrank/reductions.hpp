#pragma once

#include "pdrank/combinatorics.hpp"
#include "pdrank/exact.hpp"
#include "pdrank/poly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pdrank {

struct EnumerationCaps {
  /// Largest vertex / ground-set size for exponential enumeration.
  std::size_t max_ground = 24;
};

/// Ind(G): vertex subsets (including the empty set) spanning no edge.
std::uint64_t count_independent_sets(const Graph& g, const EnumerationCaps& caps = {});

/// Complex generated by the complements V \ {u, v} of the edges uv. Needs n >= 3.
SimplicialComplex graph_complex(const Graph& g);

/// Nonempty subsets of [n] contained in some facet.
std::uint64_t count_faces(const SimplicialComplex& c, const EnumerationCaps& caps = {});

/// All faces as sorted vertex lists, ordered by bitmask value.
std::vector<SimplicialComplex::Facet> list_faces(const SimplicialComplex& c,
                                                 const EnumerationCaps& caps = {});

/// f = sum_i Y_i * prod_{j in F_i} X_j over variables X1..Xn, Y1..Ym.
/// Requires a pure complex.
SparsePoly complex_to_poly(const SimplicialComplex& c);

/// f = sum_{uv in E} Y_u_v * prod_{w not in {u,v}} X_w. Requires n >= 3; the
/// edgeless graph yields the zero polynomial.
SparsePoly graph_to_poly(const Graph& g);

/// The 2|Delta| polynomials prod_{j in F} X_j and df/dF over the faces F,
/// in the variables of complex_to_poly(c).
std::vector<SparsePoly> partial_plus_basis(const SimplicialComplex& c,
                                           const EnumerationCaps& caps = {});

struct ReductionReport {
  std::size_t n = 0;
  std::size_t m = 0;
  std::optional<std::uint64_t> ind_count;  // graph inputs only
  std::uint64_t face_count = 0;
  std::uint64_t dim_plus = 0;
  bool identity_applicable = true;
  bool identity_holds = false;
  bool basis_verified = false;
  std::string note;
};

ReductionReport verify_reduction(const Graph& g, const EnumerationCaps& enum_caps = {},
                                 const ExactCaps& caps = {});
ReductionReport verify_reduction(const SimplicialComplex& c, const EnumerationCaps& enum_caps = {},
                                 const ExactCaps& caps = {});

/// All graphs on n vertices with at least one edge, in edge-set bitmask order.
std::vector<Graph> all_graphs(std::size_t n);

}  // namespace pdrank
