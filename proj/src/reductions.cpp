#include "pdrank/reductions.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace pdrank {

namespace {

void check_ground(std::size_t n, const EnumerationCaps& caps) {
  if (n > caps.max_ground) throw ResourceLimitError("ground-set", n, caps.max_ground);
}

std::uint64_t facet_mask(const SimplicialComplex::Facet& f) {
  std::uint64_t mask = 0;
  for (auto v : f) mask |= std::uint64_t{1} << (v - 1);
  return mask;
}

std::vector<std::uint64_t> face_masks(const SimplicialComplex& c, const EnumerationCaps& caps) {
  check_ground(c.ground(), caps);
  std::vector<std::uint64_t> facets;
  for (const auto& f : c.facets()) facets.push_back(facet_mask(f));
  // Per-facet enumeration when the facets are small in aggregate, otherwise a
  // sweep over all subsets of the ground set.
  std::uint64_t per_facet = 0;
  for (const auto& f : c.facets()) per_facet += std::uint64_t{1} << f.size();
  const std::uint64_t sweep = std::uint64_t{1} << c.ground();
  std::vector<std::uint64_t> out;
  if (per_facet < sweep) {
    std::unordered_set<std::uint64_t> seen;
    for (auto mask : facets) {
      for (std::uint64_t sub = mask; sub != 0; sub = (sub - 1) & mask) {
        if (seen.insert(sub).second) out.push_back(sub);
      }
    }
    std::sort(out.begin(), out.end());
  } else {
    for (std::uint64_t y = 1; y < sweep; ++y) {
      if (std::any_of(facets.begin(), facets.end(), [y](std::uint64_t f) { return (y & ~f) == 0; })) {
        out.push_back(y);
      }
    }
  }
  return out;
}

SimplicialComplex::Facet mask_to_set(std::uint64_t mask) {
  SimplicialComplex::Facet out;
  for (std::size_t v = 0; mask != 0; ++v, mask >>= 1) {
    if (mask & 1) out.push_back(v + 1);
  }
  return out;
}

SparsePoly facet_poly(std::size_t n, const std::vector<std::string>& y_names,
                      const std::vector<SimplicialComplex::Facet>& facets) {
  std::vector<std::string> vars;
  for (std::size_t j = 1; j <= n; ++j) vars.push_back("X" + std::to_string(j));
  vars.insert(vars.end(), y_names.begin(), y_names.end());
  std::vector<Term> terms;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    ExponentVector e(vars.size());
    for (auto v : facets[i]) e[v - 1] = 1;
    e[n + i] = 1;
    terms.push_back({Rational(1), std::move(e)});
  }
  return SparsePoly(std::move(vars), std::move(terms));
}

}  // namespace

std::uint64_t count_independent_sets(const Graph& g, const EnumerationCaps& caps) {
  const std::size_t n = g.vertex_count();
  check_ground(n, caps);
  std::vector<std::uint64_t> adjacency(n, 0);
  for (auto [u, v] : g.edges()) {
    adjacency[u - 1] |= std::uint64_t{1} << (v - 1);
    adjacency[v - 1] |= std::uint64_t{1} << (u - 1);
  }
  std::uint64_t count = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    bool independent = true;
    for (std::uint64_t rest = s; rest != 0 && independent; rest &= rest - 1) {
      independent = (adjacency[std::countr_zero(rest)] & s) == 0;
    }
    if (independent) ++count;
  }
  return count;
}

SimplicialComplex graph_complex(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 3) throw std::invalid_argument("graph reduction needs n >= 3 vertices");
  std::vector<SimplicialComplex::Facet> facets;
  for (auto [u, v] : g.edges()) {
    SimplicialComplex::Facet f;
    for (std::size_t w = 1; w <= n; ++w) {
      if (w != u && w != v) f.push_back(w);
    }
    facets.push_back(std::move(f));
  }
  return SimplicialComplex(n, std::move(facets));
}

std::uint64_t count_faces(const SimplicialComplex& c, const EnumerationCaps& caps) {
  return face_masks(c, caps).size();
}

std::vector<SimplicialComplex::Facet> list_faces(const SimplicialComplex& c,
                                                 const EnumerationCaps& caps) {
  std::vector<SimplicialComplex::Facet> out;
  for (auto mask : face_masks(c, caps)) out.push_back(mask_to_set(mask));
  return out;
}

SparsePoly complex_to_poly(const SimplicialComplex& c) {
  if (!c.is_pure()) throw std::invalid_argument("complex_to_poly needs a pure complex");
  std::vector<std::string> ys;
  for (std::size_t i = 1; i <= c.facets().size(); ++i) ys.push_back("Y" + std::to_string(i));
  return facet_poly(c.ground(), ys, c.facets());
}

SparsePoly graph_to_poly(const Graph& g) {
  if (g.vertex_count() < 3) throw std::invalid_argument("graph reduction needs n >= 3 vertices");
  // One Y variable per edge, in sorted edge order.
  std::vector<std::string> ys;
  std::vector<SimplicialComplex::Facet> facets;
  for (auto [u, v] : g.edges()) {
    ys.push_back("Y_" + std::to_string(u) + "_" + std::to_string(v));
    SimplicialComplex::Facet f;
    for (std::size_t w = 1; w <= g.vertex_count(); ++w) {
      if (w != u && w != v) f.push_back(w);
    }
    facets.push_back(std::move(f));
  }
  return facet_poly(g.vertex_count(), ys, facets);
}

std::vector<SparsePoly> partial_plus_basis(const SimplicialComplex& c,
                                           const EnumerationCaps& caps) {
  const SparsePoly f = complex_to_poly(c);
  const std::size_t n = c.ground();
  const auto faces = face_masks(c, caps);
  std::vector<SparsePoly> out;
  out.reserve(2 * faces.size());
  for (auto mask : faces) {
    ExponentVector e(f.nvars());
    for (std::size_t j = 0; j < n; ++j) e[j] = (mask >> j) & 1;
    out.emplace_back(f.vars(), std::vector<Term>{{Rational(1), e}});
  }
  const SparsePoly scaled = to_scaled(f);
  for (auto mask : faces) {
    ExponentVector beta(f.nvars());
    for (std::size_t j = 0; j < n; ++j) beta[j] = (mask >> j) & 1;
    out.push_back(to_ordinary(derivative(scaled, beta)));
  }
  return out;
}

namespace {

void fill_from_complex(ReductionReport& report, const SimplicialComplex& c,
                       const EnumerationCaps& enum_caps, const ExactCaps& caps) {
  report.face_count = count_faces(c, enum_caps);
  const SparsePoly f = complex_to_poly(c);
  report.dim_plus = dim_partials(f, OrderSpec::interior_orders(), caps).dim;
  const auto basis = partial_plus_basis(c, enum_caps);
  report.basis_verified =
      basis.size() == 2 * report.face_count &&
      rank_exact(coefficient_matrix(basis, caps), caps) == basis.size();
}

}  // namespace

ReductionReport verify_reduction(const Graph& g, const EnumerationCaps& enum_caps,
                                 const ExactCaps& caps) {
  ReductionReport report;
  report.n = g.vertex_count();
  report.m = g.edge_count();
  if (report.n < 3) throw std::invalid_argument("graph reduction needs n >= 3 vertices");
  report.ind_count = count_independent_sets(g, enum_caps);
  if (g.edge_count() == 0) {
    report.identity_applicable = false;
    report.note = "identity not applicable: empty edge set gives the empty complex and f = 0";
    return report;
  }
  const auto complex = graph_complex(g);
  fill_from_complex(report, complex, enum_caps, caps);
  const std::uint64_t expected_faces = (std::uint64_t{1} << report.n) - *report.ind_count - 1;
  report.identity_holds =
      report.face_count == expected_faces && report.dim_plus == 2 * report.face_count;
  report.note = "facets have n-2 elements, i.e. face dimension n-3";
  return report;
}

ReductionReport verify_reduction(const SimplicialComplex& c, const EnumerationCaps& enum_caps,
                                 const ExactCaps& caps) {
  ReductionReport report;
  report.n = c.ground();
  report.m = c.facets().size();
  if (c.facets().empty()) {
    report.identity_applicable = false;
    report.note = "identity not applicable: empty complex";
    return report;
  }
  if (!c.is_pure()) throw std::invalid_argument("reduction needs a pure complex");
  fill_from_complex(report, c, enum_caps, caps);
  report.identity_holds = report.dim_plus == 2 * report.face_count;
  return report;
}

std::vector<Graph> all_graphs(std::size_t n) {
  std::vector<Graph::Edge> slots;
  for (std::size_t u = 1; u <= n; ++u) {
    for (std::size_t v = u + 1; v <= n; ++v) slots.emplace_back(u, v);
  }
  if (slots.size() > 20) throw ResourceLimitError("edge-slots", slots.size(), 20);
  std::vector<Graph> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<Graph::Edge> edges;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if ((mask >> i) & 1) edges.push_back(slots[i]);
    }
    out.emplace_back(n, std::move(edges));
  }
  return out;
}

}  // namespace pdrank
