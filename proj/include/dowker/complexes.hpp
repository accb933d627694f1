#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dowker/concept.hpp"
#include "dowker/context.hpp"
#include "dowker/order.hpp"

namespace dowker {

/// H = (V, E): a duplicate-free family of vertex subsets. The empty set and
/// the full vertex set are legal edges.
struct Hypergraph {
  std::vector<std::string> vertices;
  std::vector<Bits> edges;

  std::optional<std::size_t> find_edge(const Bits& edge) const;
};

/// The deduplicated column family {m'} of a context. `edge_of_attribute[m]`
/// is the index of m' in `hypergraph.edges`; edges appear in order of their
/// first attribute.
struct CollapsedHypergraph {
  Hypergraph hypergraph;
  std::vector<std::size_t> edge_of_attribute;

  std::size_t multiplicity(std::size_t edge) const;
};

CollapsedHypergraph collapse(const FormalContext& ctx);
/// Same edge family as collapse(): each attribute m contributes e_m = m'.
inline CollapsedHypergraph hyp_rep(const FormalContext& ctx) { return collapse(ctx); }

/// Adds the full vertex set as an edge when absent.
Hypergraph top(const Hypergraph& h);

/// (E, subset).
Poset edge_poset(const Hypergraph& h);

/// Closes the edge family under intersections of every nonempty subfamily.
/// Input edges keep their positions; new edges follow in graded-lex order.
Hypergraph intersection_complex(const Hypergraph& h);

/// Edge poset of top(intersection_complex(h)).
Poset int_close_lattice(const Hypergraph& h);

inline constexpr std::size_t kDefaultFaceBudget = std::size_t{1} << 20;

/// Downward-closed family of nonempty vertex sets. Faces are materialized in
/// (dimension, lexicographic) order; facets are the maximal faces.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Downward closure of `generators` (empty generators are dropped).
  /// Throws Exhausted when more than `face_budget` faces would be produced.
  static SimplicialComplex from_generators(std::vector<std::string> vertices, std::span<const Bits> generators,
                                           std::size_t face_budget = kDefaultFaceBudget);

  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<Bits>& facets() const noexcept { return facets_; }
  const std::vector<Bits>& faces() const noexcept { return faces_; }
  std::size_t num_faces() const noexcept { return faces_.size(); }

  /// -1 for the empty complex.
  int dimension() const noexcept { return static_cast<int>(first_of_dim_.size()) - 1; }
  /// Faces of dimension k occupy [first_face(k), first_face(k + 1)).
  std::size_t first_face(std::size_t k) const;
  std::size_t count_of_dimension(std::size_t k) const { return first_face(k + 1) - first_face(k); }

  std::optional<std::size_t> find(const Bits& face) const;
  bool contains(const Bits& face) const { return find(face).has_value(); }

 private:
  std::vector<std::string> vertices_;
  std::vector<Bits> facets_;
  std::vector<Bits> faces_;
  std::vector<std::size_t> first_of_dim_;
  std::unordered_map<Bits, std::size_t, BitsHash> index_;
};

/// All nonempty subsets of the edges of `h`.
SimplicialComplex dowker_complex(const Hypergraph& h, std::size_t face_budget = kDefaultFaceBudget);
/// D(G, M, I): the Dowker complex of the collapsed column hypergraph.
SimplicialComplex dowker_complex(const FormalContext& ctx, std::size_t face_budget = kDefaultFaceBudget);

/// Faces under inclusion; `topped` adjoins the full vertex set when absent.
Poset face_poset(const SimplicialComplex& asc, bool topped);

/// Every face of `source` maps (after dropping repeated vertices) onto a
/// face of `target`.
bool is_simplicial_map(const SimplicialComplex& source, const SimplicialComplex& target,
                       const std::vector<std::size_t>& vertex_map);

struct Theorem1Report {
  bool holds = false;
  /// Pairs (index in the topped intersection lattice, concept index).
  std::vector<std::pair<std::size_t, std::size_t>> matching;
  std::size_t lattice_size = 0;
  std::size_t concept_count = 0;
  std::optional<Bits> witness_extent;  ///< first object set found on one side only
  std::string detail;
};

/// Compares the topped intersection closure of the collapsed column family
/// with the extent lattice of the concept lattice: equal families and an
/// order isomorphism between them.
Theorem1Report verify_theorem1(const FormalContext& ctx, std::uint64_t iso_budget = kDefaultIsoBudget);
/// Same check against an externally supplied lattice (used to audit
/// lattices that did not come from enumerate_concepts).
Theorem1Report verify_theorem1(const Hypergraph& collapsed, const ConceptLattice& lattice,
                               std::uint64_t iso_budget = kDefaultIsoBudget);

}  // namespace dowker
