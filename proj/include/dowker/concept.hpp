#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "dowker/context.hpp"
#include "dowker/order.hpp"

namespace dowker {

struct GaloisPair {
  ObjectSet extent;
  AttributeSet intent;
  friend bool operator==(const GaloisPair&, const GaloisPair&) = default;
};

/// "ad|012" for single-character labels, "a,d|0,1,2" otherwise.
std::string galois_notation(const FormalContext& ctx, const GaloisPair& pair);

bool is_concept(const FormalContext& ctx, const GaloisPair& pair);

/// All concepts of a context ordered by extent inclusion. Concepts are stored
/// in the lectic order of their intents; identity is the extent.
class ConceptLattice {
 public:
  ConceptLattice(FormalContext ctx, std::vector<GaloisPair> concepts);

  const FormalContext& context() const noexcept { return ctx_; }
  const std::vector<GaloisPair>& concepts() const noexcept { return concepts_; }
  const GaloisPair& operator[](std::size_t i) const { return concepts_[i]; }
  std::size_t size() const noexcept { return concepts_.size(); }

  /// Poset over concept indices; element identifiers are Galois notation.
  const Poset& order() const noexcept { return order_; }

  std::optional<std::size_t> find_extent(const ObjectSet& extent) const;
  std::optional<std::size_t> find_intent(const AttributeSet& intent) const;

  std::size_t bottom() const;
  std::size_t top() const;

 private:
  FormalContext ctx_;
  std::vector<GaloisPair> concepts_;
  Poset order_;
  std::unordered_map<Bits, std::size_t, BitsHash> by_extent_;
  std::unordered_map<Bits, std::size_t, BitsHash> by_intent_;
};

/// NextClosure over attribute sets.
ConceptLattice enumerate_concepts(const FormalContext& ctx);

/// <A''|A'>
GaloisPair concept_of_objects(const FormalContext& ctx, const ObjectSet& objects);
/// <B'|B''>
GaloisPair concept_of_attributes(const FormalContext& ctx, const AttributeSet& attributes);

/// Join: extent (union of extents)'', intent intersection of intents. The
/// empty family joins to the bottom concept.
GaloisPair join(const ConceptLattice& lattice, std::span<const std::size_t> concepts);
/// Meet: extent intersection, intent (union of intents)''. The empty family
/// meets to the top concept.
GaloisPair meet(const ConceptLattice& lattice, std::span<const std::size_t> concepts);

/// Objects not inherited from strictly smaller concepts, attributes not
/// inherited from strictly larger ones.
std::vector<GaloisPair> reduced_labels(const ConceptLattice& lattice);

/// Concept <g''|g'>. Throws UnknownLabel for an unknown object label.
std::size_t gamma(const ConceptLattice& lattice, std::size_t object);
std::size_t gamma(const ConceptLattice& lattice, std::string_view object);
/// Concept <m'|m''>.
std::size_t mu(const ConceptLattice& lattice, std::size_t attribute);
std::size_t mu(const ConceptLattice& lattice, std::string_view attribute);

/// (L, L, <=). Throws NotALattice unless `lattice` is a complete lattice.
FormalContext context_from_lattice(const Poset& lattice);

}  // namespace dowker
