#include "dowker/complexes.hpp"

#include <algorithm>
#include <unordered_set>

#include "dowker/error.hpp"

namespace dowker {

std::optional<std::size_t> Hypergraph::find_edge(const Bits& edge) const {
  auto it = std::find(edges.begin(), edges.end(), edge);
  if (it == edges.end()) return std::nullopt;
  return static_cast<std::size_t>(it - edges.begin());
}

std::size_t CollapsedHypergraph::multiplicity(std::size_t edge) const {
  return static_cast<std::size_t>(std::count(edge_of_attribute.begin(), edge_of_attribute.end(), edge));
}

CollapsedHypergraph collapse(const FormalContext& ctx) {
  CollapsedHypergraph out;
  out.hypergraph.vertices = ctx.objects();
  std::unordered_map<Bits, std::size_t, BitsHash> seen;
  for (std::size_t m = 0; m < ctx.num_attributes(); ++m) {
    auto [it, inserted] = seen.emplace(ctx.column(m), out.hypergraph.edges.size());
    if (inserted) out.hypergraph.edges.push_back(ctx.column(m));
    out.edge_of_attribute.push_back(it->second);
  }
  return out;
}

Hypergraph top(const Hypergraph& h) {
  Hypergraph out = h;
  Bits all = full_bits(h.vertices.size());
  if (!out.find_edge(all)) out.edges.push_back(std::move(all));
  return out;
}

Poset edge_poset(const Hypergraph& h) {
  std::vector<std::string> names;
  names.reserve(h.edges.size());
  for (const auto& e : h.edges) names.push_back(compact_labels(h.vertices, e));
  // Two distinct edges may share a rendering only when labels are ambiguous;
  // index suffixes keep identifiers unique.
  {
    std::unordered_map<std::string, std::size_t> seen;
    for (auto& n : names)
      if (seen[n]++ > 0) n += "#" + std::to_string(seen[n] - 1);
  }
  return Poset::from_relation(std::move(names), [&](std::size_t i, std::size_t j) {
    return h.edges[i].is_subset_of(h.edges[j]);
  });
}

Hypergraph intersection_complex(const Hypergraph& h) {
  std::unordered_set<Bits, BitsHash> family(h.edges.begin(), h.edges.end());
  std::vector<Bits> frontier(h.edges.begin(), h.edges.end());
  std::vector<Bits> added;
  // Every intersection of a nonempty subfamily arises from repeated pairwise
  // intersections with original edges.
  while (!frontier.empty()) {
    std::vector<Bits> next;
    for (const auto& f : frontier) {
      for (const auto& e : h.edges) {
        Bits x = f & e;
        if (family.insert(x).second) {
          added.push_back(x);
          next.push_back(std::move(x));
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(added.begin(), added.end(), graded_lex_less);
  Hypergraph out = h;
  out.edges.insert(out.edges.end(), added.begin(), added.end());
  return out;
}

Poset int_close_lattice(const Hypergraph& h) { return edge_poset(top(intersection_complex(h))); }

SimplicialComplex SimplicialComplex::from_generators(std::vector<std::string> vertices,
                                                     std::span<const Bits> generators, std::size_t face_budget) {
  SimplicialComplex asc;
  asc.vertices_ = std::move(vertices);
  const auto n = asc.vertices_.size();
  std::vector<Bits> gens;
  for (const auto& g : generators) {
    if (g.size() != n) throw Error(Errc::UniverseMismatch, "generator universe differs from vertex count");
    if (g.any()) gens.push_back(g);
  }
  std::sort(gens.begin(), gens.end(), graded_lex_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = i + 1; j < gens.size() && maximal; ++j)
      if (gens[i].is_subset_of(gens[j])) maximal = false;
    if (maximal) asc.facets_.push_back(gens[i]);
  }
  std::unordered_set<Bits, BitsHash> faces;
  for (const auto& facet : asc.facets_) {
    const auto verts = members(facet);
    if (verts.size() >= 63 || (std::uint64_t{1} << verts.size()) - 1 > face_budget)
      throw Error(Errc::Exhausted, "facet with " + std::to_string(verts.size()) + " vertices exceeds face budget " +
                                       std::to_string(face_budget));
    const std::uint64_t limit = std::uint64_t{1} << verts.size();
    for (std::uint64_t mask = 1; mask < limit; ++mask) {
      Bits face(n);
      for (std::size_t b = 0; b < verts.size(); ++b)
        if ((mask >> b) & 1U) face.set(verts[b]);
      faces.insert(std::move(face));
    }
    if (faces.size() > face_budget)
      throw Error(Errc::Exhausted, "more than " + std::to_string(face_budget) + " faces");
  }
  asc.faces_.assign(faces.begin(), faces.end());
  std::sort(asc.faces_.begin(), asc.faces_.end(), graded_lex_less);
  for (std::size_t i = 0; i < asc.faces_.size(); ++i) {
    asc.index_.emplace(asc.faces_[i], i);
    const auto dim = asc.faces_[i].count() - 1;
    while (asc.first_of_dim_.size() <= dim) asc.first_of_dim_.push_back(i);
  }
  return asc;
}

std::size_t SimplicialComplex::first_face(std::size_t k) const {
  return k < first_of_dim_.size() ? first_of_dim_[k] : faces_.size();
}

std::optional<std::size_t> SimplicialComplex::find(const Bits& face) const {
  auto it = index_.find(face);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SimplicialComplex dowker_complex(const Hypergraph& h, std::size_t face_budget) {
  return SimplicialComplex::from_generators(h.vertices, h.edges, face_budget);
}

SimplicialComplex dowker_complex(const FormalContext& ctx, std::size_t face_budget) {
  return dowker_complex(collapse(ctx).hypergraph, face_budget);
}

Poset face_poset(const SimplicialComplex& asc, bool topped) {
  Hypergraph h{asc.vertices(), asc.faces()};
  if (topped && !asc.vertices().empty()) h = top(h);
  return edge_poset(h);
}

bool is_simplicial_map(const SimplicialComplex& source, const SimplicialComplex& target,
                       const std::vector<std::size_t>& vertex_map) {
  if (vertex_map.size() != source.vertices().size()) return false;
  for (auto v : vertex_map)
    if (v >= target.vertices().size()) return false;
  // Faces are downward closed, so images of facets suffice.
  for (const auto& facet : source.facets()) {
    Bits image(target.vertices().size());
    for_each_member(facet, [&](std::size_t v) { image.set(vertex_map[v]); });
    if (!target.contains(image)) return false;
  }
  return true;
}

Theorem1Report verify_theorem1(const Hypergraph& collapsed, const ConceptLattice& lattice, std::uint64_t iso_budget) {
  Theorem1Report report;
  const Hypergraph closed = top(intersection_complex(collapsed));
  const Poset edge_lattice = edge_poset(closed);
  report.lattice_size = closed.edges.size();
  report.concept_count = lattice.size();

  for (std::size_t e = 0; e < closed.edges.size(); ++e) {
    const auto c = lattice.find_extent(ObjectSet(closed.edges[e]));
    if (!c) {
      report.witness_extent = closed.edges[e];
      report.detail = "edge {" + compact_labels(closed.vertices, closed.edges[e]) + "} is not a concept extent";
      return report;
    }
    report.matching.emplace_back(e, *c);
  }
  for (std::size_t c = 0; c < lattice.size(); ++c) {
    if (!closed.find_edge(lattice[c].extent.bits())) {
      report.matching.clear();
      report.witness_extent = lattice[c].extent.bits();
      report.detail = "extent {" + compact_labels(closed.vertices, lattice[c].extent.bits()) +
                      "} is missing from the intersection closure";
      return report;
    }
  }
  std::vector<std::size_t> f(report.matching.size());
  for (auto [e, c] : report.matching) f[e] = c;
  if (!is_order_isomorphism(edge_lattice, lattice.order(), f)) {
    report.detail = "families agree but the inclusion matching is not an order isomorphism";
    return report;
  }
  // Independent confirmation by search, which does not use the labels.
  const auto iso = order_isomorphism(edge_lattice, lattice.order(), iso_budget);
  if (!iso.found()) {
    report.detail = iso.verdict == IsoVerdict::Exhausted ? "isomorphism search exhausted its budget"
                                                         : "isomorphism search found no isomorphism";
    return report;
  }
  report.holds = true;
  return report;
}

Theorem1Report verify_theorem1(const FormalContext& ctx, std::uint64_t iso_budget) {
  return verify_theorem1(collapse(ctx).hypergraph, enumerate_concepts(ctx), iso_budget);
}

}  // namespace dowker
