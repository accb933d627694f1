#include "dowker/concept.hpp"

#include "dowker/error.hpp"

namespace dowker {

std::string galois_notation(const FormalContext& ctx, const GaloisPair& pair) {
  return compact_labels(ctx.objects(), pair.extent.bits()) + "|" + compact_labels(ctx.attributes(), pair.intent.bits());
}

bool is_concept(const FormalContext& ctx, const GaloisPair& pair) {
  return derive_objects(ctx, pair.extent) == pair.intent && derive_attributes(ctx, pair.intent) == pair.extent;
}

ConceptLattice::ConceptLattice(FormalContext ctx, std::vector<GaloisPair> concepts)
    : ctx_(std::move(ctx)), concepts_(std::move(concepts)) {
  std::vector<std::string> names;
  names.reserve(concepts_.size());
  for (std::size_t i = 0; i < concepts_.size(); ++i) {
    if (!by_extent_.emplace(concepts_[i].extent.bits(), i).second)
      throw Error(Errc::Mismatch, "duplicate extent " + galois_notation(ctx_, concepts_[i]));
    by_intent_.emplace(concepts_[i].intent.bits(), i);
    names.push_back(galois_notation(ctx_, concepts_[i]));
  }
  order_ = Poset::from_relation(std::move(names), [&](std::size_t i, std::size_t j) {
    return concepts_[i].extent.is_subset_of(concepts_[j].extent);
  });
}

std::optional<std::size_t> ConceptLattice::find_extent(const ObjectSet& extent) const {
  auto it = by_extent_.find(extent.bits());
  if (it == by_extent_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> ConceptLattice::find_intent(const AttributeSet& intent) const {
  auto it = by_intent_.find(intent.bits());
  if (it == by_intent_.end()) return std::nullopt;
  return it->second;
}

std::size_t ConceptLattice::bottom() const {
  return *find_extent(derive_attributes(ctx_, AttributeSet::full(ctx_.num_attributes())));
}

std::size_t ConceptLattice::top() const { return *find_extent(ObjectSet::full(ctx_.num_objects())); }

ConceptLattice enumerate_concepts(const FormalContext& ctx) {
  const auto n = ctx.num_attributes();
  std::vector<GaloisPair> concepts;
  AttributeSet intent = close_attributes(ctx, AttributeSet(n));
  concepts.push_back({derive_attributes(ctx, intent), intent});
  while (true) {
    bool advanced = false;
    AttributeSet prefix = intent;
    for (std::size_t k = n; k-- > 0;) {
      if (prefix.contains(k)) {
        prefix.erase(k);
        continue;
      }
      AttributeSet candidate = prefix;
      candidate.insert(k);
      candidate = close_attributes(ctx, candidate);
      // Accept when the closure adds nothing below k.
      const auto added = (candidate - prefix).bits().find_first();
      if (added == k) {
        intent = std::move(candidate);
        concepts.push_back({derive_attributes(ctx, intent), intent});
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return ConceptLattice(ctx, std::move(concepts));
}

GaloisPair concept_of_objects(const FormalContext& ctx, const ObjectSet& objects) {
  auto intent = derive_objects(ctx, objects);
  return {derive_attributes(ctx, intent), std::move(intent)};
}

GaloisPair concept_of_attributes(const FormalContext& ctx, const AttributeSet& attributes) {
  auto extent = derive_attributes(ctx, attributes);
  return {extent, derive_objects(ctx, extent)};
}

GaloisPair join(const ConceptLattice& lattice, std::span<const std::size_t> concepts) {
  const auto& ctx = lattice.context();
  ObjectSet extents(ctx.num_objects());
  AttributeSet intents = AttributeSet::full(ctx.num_attributes());
  for (auto i : concepts) {
    extents |= lattice[i].extent;
    intents &= lattice[i].intent;
  }
  return {close_objects(ctx, extents), intents};
}

GaloisPair meet(const ConceptLattice& lattice, std::span<const std::size_t> concepts) {
  const auto& ctx = lattice.context();
  ObjectSet extents = ObjectSet::full(ctx.num_objects());
  AttributeSet intents(ctx.num_attributes());
  for (auto i : concepts) {
    extents &= lattice[i].extent;
    intents |= lattice[i].intent;
  }
  return {extents, close_attributes(ctx, intents)};
}

std::vector<GaloisPair> reduced_labels(const ConceptLattice& lattice) {
  const auto& order = lattice.order();
  std::vector<GaloisPair> out;
  out.reserve(lattice.size());
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    ObjectSet inherited_objects(lattice.context().num_objects());
    AttributeSet inherited_attributes(lattice.context().num_attributes());
    for_each_member(order.down_set(i), [&](std::size_t j) {
      if (j != i) inherited_objects |= lattice[j].extent;
    });
    for_each_member(order.up_set(i), [&](std::size_t j) {
      if (j != i) inherited_attributes |= lattice[j].intent;
    });
    out.push_back({lattice[i].extent - inherited_objects, lattice[i].intent - inherited_attributes});
  }
  return out;
}

std::size_t gamma(const ConceptLattice& lattice, std::size_t object) {
  const auto& ctx = lattice.context();
  if (object >= ctx.num_objects()) throw Error(Errc::UnknownLabel, "object index " + std::to_string(object));
  const auto pair = concept_of_objects(ctx, ObjectSet::of(ctx.num_objects(), {object}));
  return *lattice.find_extent(pair.extent);
}

std::size_t gamma(const ConceptLattice& lattice, std::string_view object) {
  return gamma(lattice, lattice.context().object_index(object));
}

std::size_t mu(const ConceptLattice& lattice, std::size_t attribute) {
  const auto& ctx = lattice.context();
  if (attribute >= ctx.num_attributes())
    throw Error(Errc::UnknownLabel, "attribute index " + std::to_string(attribute));
  const auto pair = concept_of_attributes(ctx, AttributeSet::of(ctx.num_attributes(), {attribute}));
  return *lattice.find_extent(pair.extent);
}

std::size_t mu(const ConceptLattice& lattice, std::string_view attribute) {
  return mu(lattice, lattice.context().attribute_index(attribute));
}

FormalContext context_from_lattice(const Poset& lattice) {
  if (auto verdict = is_complete_lattice(lattice); !verdict)
    throw Error(Errc::NotALattice, verdict.reason);
  std::vector<Bits> rows(lattice.size());
  for (std::size_t i = 0; i < lattice.size(); ++i) rows[i] = lattice.up_set(i);
  return FormalContext::from_rows(lattice.elements(), lattice.elements(), std::move(rows));
}

}  // namespace dowker
