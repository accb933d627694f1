#include "dowker/homology.hpp"

#include <algorithm>

#include "dowker/cosheaf.hpp"
#include "dowker/error.hpp"

namespace dowker {

namespace {

void require_total(const FormalContext& ctx) {
  if (!is_total(ctx)) throw Error(Errc::NotTotal, "context has an empty row or column (or is empty)");
}

std::string cell_chain_label(const FormalContext& ctx, const Bits& face, const Bits& chain) {
  return compact_labels(ctx.objects(), face) + ":" + compact_labels(ctx.attributes(), chain);
}

}  // namespace

ChainComplex dowker_sheaf_cochain(const FormalContext& ctx, std::size_t face_budget) {
  require_total(ctx);
  const auto base = dowker_complex(ctx, face_budget);
  const auto degrees = static_cast<std::size_t>(base.dimension() + 1);

  // offset[f]: first coordinate of face f's stalk inside its degree.
  std::vector<std::size_t> offset(base.num_faces());
  std::vector<Bits> stalk(base.num_faces());
  std::vector<std::size_t> dims(degrees, 0);
  std::vector<std::vector<std::string>> labels(degrees);
  for (std::size_t k = 0; k < degrees; ++k) {
    for (std::size_t f = base.first_face(k); f < base.first_face(k + 1); ++f) {
      stalk[f] = derive_objects(ctx, ObjectSet(base.faces()[f])).bits();
      offset[f] = dims[k];
      dims[k] += stalk[f].count();
      for_each_member(stalk[f], [&](std::size_t m) {
        labels[k].push_back(cell_chain_label(ctx, base.faces()[f], make_bits(ctx.num_attributes(), {m})));
      });
    }
  }
  auto coordinate = [&](std::size_t f, std::size_t m) {
    std::size_t local = 0;
    for (auto i = stalk[f].find_first(); i != m; i = stalk[f].find_next(i)) ++local;
    return offset[f] + local;
  };

  std::vector<RationalMatrix> d;
  for (std::size_t k = 0; k < degrees; ++k) {
    if (k + 1 == degrees) {
      d.emplace_back(0, dims[k]);
      continue;
    }
    RationalMatrix dk(dims[k + 1], dims[k]);
    for (std::size_t t = base.first_face(k + 1); t < base.first_face(k + 2); ++t) {
      const auto& tau = base.faces()[t];
      long sign = 1;
      for_each_member(tau, [&](std::size_t v) {
        Bits face = tau;
        face.reset(v);
        const auto f = *base.find(face);
        // Restriction projects sigma' onto tau', which is a subset.
        for_each_member(stalk[t], [&](std::size_t m) { dk(coordinate(t, m), coordinate(f, m)) += sign; });
        sign = -sign;
      });
    }
    d.push_back(std::move(dk));
  }
  return ChainComplex(Grading::Cochain, std::move(dims), std::move(d), std::move(labels));
}

SheafCohomology sheaf_cohomology(const FormalContext& ctx, std::size_t face_budget) {
  SheafCohomology out;
  out.cochain = dowker_sheaf_cochain(ctx, face_budget);
  out.betti = betti(out.cochain);

  const auto base = dowker_complex(ctx, face_budget);
  for (const auto& face : base.faces()) {
    auto hat = m_hat(ctx, ObjectSet(face));
    if (!hat.empty()) out.decomposition.emplace_back(ObjectSet(face), std::move(hat));
  }

  // Vertex stalks come first in C^0, in face order, attributes ascending.
  const auto n_vertices = base.count_of_dimension(0);
  std::vector<std::size_t> vertex_offset(ctx.num_objects(), 0);
  std::size_t running = 0;
  for (std::size_t f = 0; f < n_vertices; ++f) {
    const auto g = base.faces()[f].find_first();
    vertex_offset[g] = running;
    running += ctx.row(g).count();
  }
  out.generators = RationalMatrix(running, ctx.num_attributes());
  for (std::size_t m = 0; m < ctx.num_attributes(); ++m) {
    for_each_member(ctx.column(m), [&](std::size_t g) {
      std::size_t local = 0;
      for (auto i = ctx.row(g).find_first(); i != m; i = ctx.row(g).find_next(i)) ++local;
      out.generators(vertex_offset[g] + local, m) = 1;
    });
  }
  const auto& d0 = out.cochain.differential(0);
  out.generators_span_h0 =
      (d0 * out.generators).is_zero() && rank(out.generators) == ctx.num_attributes() &&
      !out.betti.empty() && out.betti[0] == ctx.num_attributes();
  return out;
}

CosheafOfChainComplexes::CosheafOfChainComplexes(const FormalContext& ctx, std::size_t face_budget)
    : ctx_(ctx) {
  require_total(ctx_);
  base_ = dowker_complex(ctx_, face_budget);
  const auto cells = base_.num_faces();
  const auto p_degrees = static_cast<std::size_t>(base_.dimension() + 1);

  std::size_t q_degrees = 0;
  costalks_.reserve(cells);
  for (const auto& face : base_.faces()) {
    const std::vector<Bits> gen{derive_objects(ctx_, ObjectSet(face)).bits()};
    costalks_.push_back(SimplicialComplex::from_generators(ctx_.attributes(), gen, face_budget));
    q_degrees = std::max(q_degrees, static_cast<std::size_t>(costalks_.back().dimension() + 1));
  }

  blocks_.assign(p_degrees, std::vector<Block>(q_degrees));
  offsets_.assign(cells, std::vector<std::size_t>(q_degrees, 0));
  for (std::size_t c = 0; c < cells; ++c) {
    const auto p = base_.faces()[c].count() - 1;
    for (std::size_t q = 0; q < q_degrees; ++q) {
      auto& block = blocks_[p][q];
      offsets_[c][q] = block.basis.size();
      const auto& costalk = costalks_[c];
      for (std::size_t f = costalk.first_face(q); f < costalk.first_face(q + 1); ++f)
        block.basis.push_back({c, costalk.faces()[f]});
    }
  }

  for (std::size_t p = 0; p < p_degrees; ++p) {
    for (std::size_t q = 0; q < q_degrees; ++q) {
      auto& block = blocks_[p][q];
      const auto n = block.basis.size();
      block.horizontal = RationalMatrix(q == 0 ? 0 : blocks_[p][q - 1].basis.size(), n);
      block.vertical = RationalMatrix(p == 0 ? 0 : blocks_[p - 1][q].basis.size(), n);
      for (std::size_t j = 0; j < n; ++j) {
        const auto& [cell, chain] = block.basis[j];
        if (q > 0) {
          long sign = 1;
          for_each_member(chain, [&](std::size_t m) {
            Bits sub = chain;
            sub.reset(m);
            block.horizontal(position(cell, q - 1, sub), j) = sign;
            sign = -sign;
          });
        }
        if (p > 0) {
          const auto& sigma = base_.faces()[cell];
          long sign = 1;
          for_each_member(sigma, [&](std::size_t g) {
            Bits face = sigma;
            face.reset(g);
            block.vertical(position(*base_.find(face), q, chain), j) = sign;
            sign = -sign;
          });
        }
      }
    }
  }
}

std::size_t CosheafOfChainComplexes::position(std::size_t cell, std::size_t q, const Bits& chain) const {
  const auto& costalk = costalks_[cell];
  return offsets_[cell][q] + (*costalk.find(chain) - costalk.first_face(q));
}

ChainComplex CosheafOfChainComplexes::cell_complex(std::size_t cell) const {
  return simplicial_chain_complex(costalks_[cell]);
}

std::vector<RationalMatrix> CosheafOfChainComplexes::chain_map(std::size_t sigma, std::size_t tau) const {
  if (!base_.faces()[sigma].is_subset_of(base_.faces()[tau]))
    throw Error(Errc::NotAFacePair, "cell " + std::to_string(sigma) + " is not a face of cell " + std::to_string(tau));
  const auto& from = costalks_[tau];
  const auto& to = costalks_[sigma];
  std::vector<RationalMatrix> maps;
  for (std::size_t q = 0; q < static_cast<std::size_t>(from.dimension() + 1); ++q) {
    RationalMatrix m(to.count_of_dimension(q), from.count_of_dimension(q));
    for (std::size_t f = from.first_face(q); f < from.first_face(q + 1); ++f)
      m(*to.find(from.faces()[f]) - to.first_face(q), f - from.first_face(q)) = 1;
    maps.push_back(std::move(m));
  }
  return maps;
}

ChainComplex CosheafOfChainComplexes::column(std::size_t q) const {
  std::vector<std::size_t> dims;
  std::vector<RationalMatrix> d;
  std::vector<std::vector<std::string>> labels;
  for (std::size_t p = 0; p < base_degrees(); ++p) {
    dims.push_back(dim(p, q));
    d.push_back(vertical(p, q));
    auto& l = labels.emplace_back();
    for (const auto& e : basis(p, q)) l.push_back(cell_chain_label(ctx_, base_.faces()[e.cell], e.chain));
  }
  return ChainComplex(Grading::Chain, std::move(dims), std::move(d), std::move(labels));
}

ChainComplex CosheafOfChainComplexes::row(std::size_t p) const {
  std::vector<std::size_t> dims;
  std::vector<RationalMatrix> d;
  for (std::size_t q = 0; q < costalk_degrees(); ++q) {
    dims.push_back(dim(p, q));
    d.push_back(horizontal(p, q));
  }
  return ChainComplex(Grading::Chain, std::move(dims), std::move(d));
}

bool CosheafOfChainComplexes::squares_commute() const {
  for (std::size_t p = 1; p < base_degrees(); ++p)
    for (std::size_t q = 1; q < costalk_degrees(); ++q)
      if (!(vertical(p, q - 1) * horizontal(p, q) == horizontal(p - 1, q) * vertical(p, q))) return false;
  return true;
}

std::vector<std::vector<std::size_t>> column_homology(const CosheafOfChainComplexes& grid) {
  const auto columns = static_cast<std::ptrdiff_t>(grid.costalk_degrees());
  std::vector<std::vector<std::size_t>> out(static_cast<std::size_t>(columns));
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t q = 0; q < columns; ++q)
    out[static_cast<std::size_t>(q)] = betti(grid.column(static_cast<std::size_t>(q)));
  return out;
}

bool columns_concentrated_in_degree_zero(const std::vector<std::vector<std::size_t>>& column_betti) {
  for (const auto& col : column_betti)
    for (std::size_t p = 1; p < col.size(); ++p)
      if (col[p] != 0) return false;
  return true;
}

namespace {

struct Quotient {
  std::vector<std::size_t> representatives;  // unit-vector indices in C_{0,q}
  RationalMatrix projection;                 // C_{0,q} -> quotient coordinates
};

// Basis of im(image) extended by unit vectors to a basis of the ambient
// space; the projection reads off the unit-vector coordinates.
Quotient cokernel(const RationalMatrix& image, std::size_t ambient) {
  Quotient out;
  const auto pivots = rref(image).pivots;
  const auto spanning = image.select_cols(pivots);
  const auto r = pivots.size();
  const auto completed = rref(spanning.hconcat(RationalMatrix::identity(ambient)));
  for (auto c : completed.pivots)
    if (c >= r) out.representatives.push_back(c - r);
  const auto basis = spanning.hconcat(RationalMatrix::identity(ambient).select_cols(out.representatives));
  const auto inv = inverse(basis);
  std::vector<std::size_t> tail;
  for (std::size_t i = r; i < ambient; ++i) tail.push_back(i);
  out.projection = inv.select_rows(tail);
  return out;
}

struct ZerothHomology {
  ChainComplex complex;
  std::vector<Quotient> quotients;
};

ZerothHomology zeroth_homology_with_bases(const CosheafOfChainComplexes& grid) {
  const auto degrees = grid.costalk_degrees();
  ZerothHomology out;
  out.quotients.resize(degrees);
  const auto columns = static_cast<std::ptrdiff_t>(degrees);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t qi = 0; qi < columns; ++qi) {
    const auto q = static_cast<std::size_t>(qi);
    const auto n = grid.dim(0, q);
    const auto image = grid.base_degrees() > 1 ? grid.vertical(1, q) : RationalMatrix(n, 0);
    out.quotients[q] = cokernel(image, n);
  }
  std::vector<std::size_t> dims;
  std::vector<RationalMatrix> d;
  std::vector<std::vector<std::string>> labels;
  const auto& ctx = grid.context();
  for (std::size_t q = 0; q < degrees; ++q) {
    const auto& quotient = out.quotients[q];
    dims.push_back(quotient.representatives.size());
    auto& l = labels.emplace_back();
    for (auto i : quotient.representatives) {
      const auto& e = grid.basis(0, q)[i];
      l.push_back(compact_labels(ctx.objects(), grid.base().faces()[e.cell]) + ":" +
                  compact_labels(ctx.attributes(), e.chain));
    }
    if (q == 0) {
      d.emplace_back(0, dims[0]);
      continue;
    }
    const auto reps = RationalMatrix::identity(grid.dim(0, q)).select_cols(quotient.representatives);
    d.push_back(out.quotients[q - 1].projection * (grid.horizontal(0, q) * reps));
  }
  out.complex = ChainComplex(Grading::Chain, std::move(dims), std::move(d), std::move(labels));
  return out;
}

}  // namespace

ChainComplex zeroth_cosheaf_homology(const CosheafOfChainComplexes& grid) {
  return zeroth_homology_with_bases(grid).complex;
}

Corollary45Report verify_corollary45(const FormalContext& ctx, std::size_t face_budget) {
  Corollary45Report report;
  const CosheafOfChainComplexes grid(ctx, face_budget);
  const auto zeroth = zeroth_homology_with_bases(grid);
  const auto dual_asc = dowker_complex(transpose(ctx), face_budget);
  const auto dual = simplicial_chain_complex(dual_asc);

  report.zeroth_dims = zeroth.complex.dims();
  report.dual_dims = dual.dims();
  report.zeroth_betti = betti(zeroth.complex);
  report.dual_betti = betti(dual);
  report.column_betti = column_homology(grid);
  report.columns_concentrated = columns_concentrated_in_degree_zero(report.column_betti);

  if (report.zeroth_dims != report.dual_dims) {
    report.detail = "zeroth homology dimensions differ from the dual Dowker complex";
    return report;
  }

  // Phi_q sends the class of (g, tau) to tau as a face of D(M, G, I^T).
  bool iso = true;
  std::vector<RationalMatrix> phi;
  for (std::size_t q = 0; q < report.zeroth_dims.size() && iso; ++q) {
    const auto& reps = zeroth.quotients[q].representatives;
    RationalMatrix m(dual.dims()[q], reps.size());
    for (std::size_t j = 0; j < reps.size(); ++j) {
      const auto& e = grid.basis(0, q)[reps[j]];
      m(*dual_asc.find(e.chain) - dual_asc.first_face(q), j) = 1;
    }
    iso = rank(m) == reps.size();
    phi.push_back(std::move(m));
  }
  for (std::size_t q = 1; q < phi.size() && iso; ++q)
    iso = phi[q - 1] * zeroth.complex.differential(q) == dual.differential(q) * phi[q];
  report.chain_isomorphism = iso;

  if (!report.columns_concentrated) {
    report.detail = "a column has homology above base degree 0";
  } else if (!report.chain_isomorphism) {
    report.detail = "class map onto the dual Dowker chains is not a chain isomorphism";
  } else if (report.zeroth_betti != report.dual_betti) {
    report.detail = "Betti numbers differ";
  } else {
    report.holds = true;
  }
  return report;
}

}  // namespace dowker
