#include "dowker/cosheaf.hpp"

#include <algorithm>
#include <unordered_set>

#include "dowker/error.hpp"

namespace dowker {

DowkerCosheaf::DowkerCosheaf(const FormalContext& ctx, std::size_t face_budget)
    : ctx_(ctx), base_complex_(dowker_complex(ctx, face_budget)) {
  if (base_complex_.num_faces() == 0) throw Error(Errc::EmptyDowkerComplex, "no object has any attribute");
  for (const auto& face : base_complex_.faces()) {
    ObjectSet sigma(face);
    auto costalk = derive_objects(ctx_, sigma);
    const bool closed = derive_attributes(ctx_, costalk) == sigma;
    cells_.push_back({std::move(sigma), std::move(costalk), closed, false});
  }
  const auto all = ObjectSet::full(ctx_.num_objects());
  if (!base_complex_.contains(all.bits())) cells_.push_back({all, derive_objects(ctx_, all), true, true});
  base_ = face_poset(base_complex_, true);
}

std::optional<std::size_t> DowkerCosheaf::find_cell(const ObjectSet& face) const {
  if (auto i = base_complex_.find(face.bits())) return i;
  if (cells_.back().is_top && cells_.back().face == face) return cells_.size() - 1;
  return std::nullopt;
}

SimplicialComplex DowkerCosheaf::costalk(std::size_t cell) const {
  const auto& stalk = cells_[cell].costalk;
  const auto verts = stalk.members();
  std::vector<std::string> labels;
  for (auto m : verts) labels.push_back(ctx_.attributes()[m]);
  const std::vector<Bits> full{full_bits(verts.size())};
  return SimplicialComplex::from_generators(std::move(labels), full);
}

GaloisPair DowkerCosheaf::galois_label(std::size_t cell) const {
  return {cells_[cell].face, cells_[cell].costalk};
}

Extension extension(const DowkerCosheaf& cs, std::size_t sigma, std::size_t tau) {
  if (sigma >= cs.size() || tau >= cs.size() || !cs.cell(sigma).face.is_subset_of(cs.cell(tau).face))
    throw Error(Errc::NotAFacePair, "cell " + std::to_string(sigma) + " is not a face of cell " + std::to_string(tau));
  const auto from = cs.cell(tau).costalk.members();
  const auto to = cs.cell(sigma).costalk.members();
  Extension ext{tau, sigma, {}};
  ext.vertex_map.reserve(from.size());
  for (auto m : from) {
    // tau' is contained in sigma' whenever sigma is contained in tau.
    auto it = std::lower_bound(to.begin(), to.end(), m);
    ext.vertex_map.push_back(static_cast<std::size_t>(it - to.begin()));
  }
  return ext;
}

Poset pos_rep(const FormalContext& ctx, std::size_t max_bits) {
  const auto n = ctx.num_objects();
  if (n > std::min<std::size_t>(max_bits, 30))
    throw Error(Errc::TooLarge, "posrep scan over " + std::to_string(n) + " objects");
  const auto total = static_cast<std::int64_t>(std::int64_t{1} << n);
  std::vector<char> keep(static_cast<std::size_t>(total), 0);
#pragma omp parallel for schedule(static)
  for (std::int64_t mask = 1; mask < total; ++mask) {
    const ObjectSet a(bits_from_mask(n, static_cast<std::uint64_t>(mask)));
    keep[static_cast<std::size_t>(mask)] = derive_objects(ctx, a).empty() ? 0 : 1;
  }
  std::vector<Bits> sets;
  for (std::int64_t mask = 1; mask < total; ++mask)
    if (keep[static_cast<std::size_t>(mask)]) sets.push_back(bits_from_mask(n, static_cast<std::uint64_t>(mask)));
  std::sort(sets.begin(), sets.end(), graded_lex_less);
  return edge_poset(Hypergraph{ctx.objects(), std::move(sets)});
}

CostalkLattice unique_costalk_lattice(const DowkerCosheaf& cs, std::uint64_t iso_budget) {
  const auto& ctx = cs.context();
  CostalkLattice out;
  std::unordered_set<Bits, BitsHash> seen;
  for (const auto& cell : cs.cells())
    if (seen.insert(cell.costalk.bits()).second) out.costalks.push_back(cell.costalk);
  const auto all = AttributeSet::full(ctx.num_attributes());
  if (!seen.contains(all.bits())) out.extremes_added.push_back(all);

  std::vector<Bits> family;
  for (const auto& c : out.costalks) family.push_back(c.bits());
  for (const auto& c : out.extremes_added) family.push_back(c.bits());
  out.order = edge_poset(Hypergraph{ctx.attributes(), family});

  const auto lattice = enumerate_concepts(ctx);
  std::unordered_set<Bits, BitsHash> intents;
  for (const auto& k : lattice.concepts()) intents.insert(k.intent.bits());
  std::unordered_set<Bits, BitsHash> completed(family.begin(), family.end());

  auto describe = [&](const Bits& b) { return "{" + compact_labels(ctx.attributes(), b) + "}"; };
  for (const auto& b : family) {
    if (!intents.contains(b)) {
      out.witness = "costalk " + describe(b) + " is not an intent";
      return out;
    }
  }
  for (const auto& b : intents) {
    if (!completed.contains(b)) {
      out.witness = "intent " + describe(b) + " has no costalk";
      return out;
    }
  }
  out.raw_matches = out.costalks.size() + out.extremes_added.size() == intents.size();

  Hypergraph intent_family{ctx.attributes(), {}};
  for (const auto& k : lattice.concepts()) intent_family.edges.push_back(k.intent.bits());
  const auto iso = order_isomorphism(out.order, edge_poset(intent_family), iso_budget);
  out.completed_matches = iso.found();
  if (!iso.found()) out.witness = "costalk order is not isomorphic to the intent order";
  return out;
}

RecoveredConcepts recover_concepts(const DowkerCosheaf& cs) {
  const auto& ctx = cs.context();
  RecoveredConcepts out;
  const ObjectSet none(ctx.num_objects());
  if (close_objects(ctx, none) == none) {
    out.concepts.push_back({none, AttributeSet::full(ctx.num_attributes())});
    out.source_cell.push_back(std::nullopt);
  }
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (!cs.cell(i).is_concept) continue;
    out.concepts.push_back(cs.galois_label(i));
    out.source_cell.push_back(i);
  }
  std::vector<std::string> names;
  for (const auto& k : out.concepts) names.push_back(galois_notation(ctx, k));
  out.order = Poset::from_relation(std::move(names), [&](std::size_t i, std::size_t j) {
    return out.concepts[i].extent.is_subset_of(out.concepts[j].extent);
  });
  return out;
}

Theorem2Report verify_theorem2(const FormalContext& ctx, std::uint64_t iso_budget) {
  Theorem2Report report;
  const auto recovered = recover_concepts(DowkerCosheaf(ctx));
  const auto lattice = enumerate_concepts(ctx);
  report.recovered = recovered.concepts.size();
  report.concepts = lattice.size();
  for (const auto& k : recovered.concepts) {
    const auto i = lattice.find_extent(k.extent);
    if (!i || lattice[*i].intent != k.intent) {
      report.detail = "recovered pair " + galois_notation(ctx, k) + " is not a concept";
      return report;
    }
  }
  if (report.recovered != report.concepts) {
    report.detail = "recovered " + std::to_string(report.recovered) + " of " + std::to_string(report.concepts) +
                    " concepts";
    return report;
  }
  const auto iso = order_isomorphism(recovered.order, lattice.order(), iso_budget);
  if (!iso.found()) {
    report.detail = "recovered order is not isomorphic to the concept lattice";
    return report;
  }
  report.holds = true;
  return report;
}

AttributeSet m_hat(const FormalContext& ctx, const ObjectSet& sigma) {
  if (sigma.universe() != ctx.num_objects()) throw Error(Errc::UniverseMismatch, "sigma over the wrong object universe");
  AttributeSet out(ctx.num_attributes());
  for (std::size_t m = 0; m < ctx.num_attributes(); ++m)
    if (ctx.column(m) == sigma.bits()) out.insert(m);
  return out;
}

}  // namespace dowker
