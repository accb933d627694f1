#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dowker/complexes.hpp"
#include "dowker/concept.hpp"
#include "dowker/context.hpp"
#include "dowker/order.hpp"

namespace dowker {

/// One cell of the topped face poset of D(G, M, I). The costalk is the full
/// simplex on `costalk`; `is_top` marks the adjoined G when G itself is not a
/// Dowker face.
struct CosheafCell {
  ObjectSet face;
  AttributeSet costalk;
  bool is_concept = false;
  bool is_top = false;
};

/// Simplicial map between costalks induced by a face inclusion
/// sigma <= tau: the vertices of tau' (local order) sent into sigma'.
struct Extension {
  std::size_t source_cell;  ///< tau
  std::size_t target_cell;  ///< sigma
  std::vector<std::size_t> vertex_map;
};

/// Dowker cosheaf over the topped face poset. Cells are listed in
/// (dimension, lexicographic) order, followed by the adjoined top if any.
class DowkerCosheaf {
 public:
  /// Throws EmptyDowkerComplex when no object has an attribute.
  explicit DowkerCosheaf(const FormalContext& ctx, std::size_t face_budget = kDefaultFaceBudget);

  const FormalContext& context() const noexcept { return ctx_; }
  const SimplicialComplex& base_complex() const noexcept { return base_complex_; }
  /// Topped face poset; element i is cell i.
  const Poset& base() const noexcept { return base_; }
  const std::vector<CosheafCell>& cells() const noexcept { return cells_; }
  const CosheafCell& cell(std::size_t i) const { return cells_[i]; }
  std::size_t size() const noexcept { return cells_.size(); }

  std::optional<std::size_t> find_cell(const ObjectSet& face) const;

  /// R^0(sigma) = sigma'.
  const AttributeSet& vertex_restriction(std::size_t cell) const { return cells_[cell].costalk; }
  /// Full simplex on sigma', vertices labeled by attribute.
  SimplicialComplex costalk(std::size_t cell) const;
  /// <sigma | sigma'>
  GaloisPair galois_label(std::size_t cell) const;

 private:
  FormalContext ctx_;
  SimplicialComplex base_complex_;
  Poset base_;
  std::vector<CosheafCell> cells_;
};

inline DowkerCosheaf dowker_cosheaf(const FormalContext& ctx, std::size_t face_budget = kDefaultFaceBudget) {
  return DowkerCosheaf(ctx, face_budget);
}

/// Throws NotAFacePair unless face(sigma) is contained in face(tau).
Extension extension(const DowkerCosheaf& cs, std::size_t sigma, std::size_t tau);

/// {A subset of G : A nonempty, A' nonempty} under inclusion, by exhaustive
/// scan of 2^G (parallel). Throws TooLarge past `max_bits` objects.
Poset pos_rep(const FormalContext& ctx, std::size_t max_bits = 24);

struct CostalkLattice {
  std::vector<AttributeSet> costalks;         ///< unique costalks, first-seen cell order
  std::vector<AttributeSet> extremes_added;   ///< intents with no cell (M when M' is empty)
  Poset order;                                ///< inclusion on costalks then extremes
  bool raw_matches = false;        ///< costalks equal the intents minus the added extremes
  bool completed_matches = false;  ///< costalks plus extremes order-isomorphic to the intents
  std::string witness;
};

CostalkLattice unique_costalk_lattice(const DowkerCosheaf& cs, std::uint64_t iso_budget = kDefaultIsoBudget);

struct RecoveredConcepts {
  std::vector<GaloisPair> concepts;
  std::vector<std::optional<std::size_t>> source_cell;  ///< nullopt for the empty-extent extreme
  Poset order;                                          ///< extent inclusion
};

/// Cells whose label satisfies sigma'' = sigma, plus <{}|M> when the empty
/// set is closed.
RecoveredConcepts recover_concepts(const DowkerCosheaf& cs);

struct Theorem2Report {
  bool holds = false;
  std::size_t recovered = 0;
  std::size_t concepts = 0;
  std::string detail;
};

/// recover_concepts(dowker_cosheaf(ctx)) against enumerate_concepts(ctx):
/// same Galois pairs and an order isomorphism found by search.
Theorem2Report verify_theorem2(const FormalContext& ctx, std::uint64_t iso_budget = kDefaultIsoBudget);

/// {m : m' = sigma}
AttributeSet m_hat(const FormalContext& ctx, const ObjectSet& sigma);

}  // namespace dowker
