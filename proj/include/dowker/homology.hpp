#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dowker/chain_complex.hpp"
#include "dowker/complexes.hpp"
#include "dowker/context.hpp"
#include "dowker/rational_matrix.hpp"

namespace dowker {

/// Cochain complex of the Dowker sheaf on D(G, M, I): C^k is the direct sum
/// of span(sigma') over k-faces, basis (sigma, m) with m ascending, and
///   (d a)(tau) = sum_i (-1)^i  proj(a(tau minus its i-th vertex)).
/// Throws NotTotal.
ChainComplex dowker_sheaf_cochain(const FormalContext& ctx, std::size_t face_budget = kDefaultFaceBudget);

struct SheafCohomology {
  ChainComplex cochain;
  std::vector<std::size_t> betti;
  /// Faces sigma with nonempty M-hat(sigma), in face order, with M-hat(sigma).
  std::vector<std::pair<ObjectSet, AttributeSet>> decomposition;
  /// Column m: the global section carrying attribute m on every vertex of m'.
  RationalMatrix generators;
  /// The generators lie in ker d^0 and are linearly independent.
  bool generators_span_h0 = false;
};

SheafCohomology sheaf_cohomology(const FormalContext& ctx, std::size_t face_budget = kDefaultFaceBudget);

/// A basis vector of one grid block: a chain of the costalk of `cell`.
struct GridBasisElement {
  std::size_t cell;
  Bits chain;  ///< subset of M
};

/// C^Delta applied to every costalk of the Dowker cosheaf, assembled into the
/// double complex: block (p, q) is the direct sum over p-faces sigma of the
/// q-chains of the full simplex on sigma'. Horizontal maps are the costalk
/// boundaries (q -> q-1), vertical maps the cosheaf boundary (p -> p-1) with
/// sign (-1)^i for dropping the i-th vertex. Squares commute.
class CosheafOfChainComplexes {
 public:
  /// Throws NotTotal.
  explicit CosheafOfChainComplexes(const FormalContext& ctx, std::size_t face_budget = kDefaultFaceBudget);

  const FormalContext& context() const noexcept { return ctx_; }
  /// D(G, M, I); cell i is face i.
  const SimplicialComplex& base() const noexcept { return base_; }
  std::size_t base_degrees() const noexcept { return blocks_.size(); }
  std::size_t costalk_degrees() const noexcept { return blocks_.empty() ? 0 : blocks_.front().size(); }

  /// C^Delta of the costalk of `cell`, vertices are all of M.
  ChainComplex cell_complex(std::size_t cell) const;
  /// Inclusion C(R(tau)) -> C(R(sigma)) for sigma a face of tau, per degree.
  std::vector<RationalMatrix> chain_map(std::size_t sigma, std::size_t tau) const;

  std::size_t dim(std::size_t p, std::size_t q) const { return blocks_[p][q].basis.size(); }
  const std::vector<GridBasisElement>& basis(std::size_t p, std::size_t q) const { return blocks_[p][q].basis; }
  /// (p, q) -> (p, q-1); zero rows when q = 0.
  const RationalMatrix& horizontal(std::size_t p, std::size_t q) const { return blocks_[p][q].horizontal; }
  /// (p, q) -> (p-1, q); zero rows when p = 0.
  const RationalMatrix& vertical(std::size_t p, std::size_t q) const { return blocks_[p][q].vertical; }

  /// Fixed costalk degree q, graded by base dimension.
  ChainComplex column(std::size_t q) const;
  /// Fixed base dimension p, graded by costalk degree.
  ChainComplex row(std::size_t p) const;

  bool squares_commute() const;

 private:
  struct Block {
    std::vector<GridBasisElement> basis;
    RationalMatrix horizontal;
    RationalMatrix vertical;
  };

  std::size_t position(std::size_t cell, std::size_t q, const Bits& chain) const;

  FormalContext ctx_;
  SimplicialComplex base_;
  std::vector<SimplicialComplex> costalks_;         // per cell, over all of M
  std::vector<std::vector<std::size_t>> offsets_;   // [cell][q] start inside block (p, q)
  std::vector<std::vector<Block>> blocks_;          // [p][q]
};

inline CosheafOfChainComplexes cosheaf_of_chain_complexes(const FormalContext& ctx,
                                                          std::size_t face_budget = kDefaultFaceBudget) {
  return CosheafOfChainComplexes(ctx, face_budget);
}

/// Betti numbers of every column, indexed [q][p]. Columns are independent and
/// are computed in parallel.
std::vector<std::vector<std::size_t>> column_homology(const CosheafOfChainComplexes& grid);

/// True when every column has homology only in base degree 0.
bool columns_concentrated_in_degree_zero(const std::vector<std::vector<std::size_t>>& column_betti);

/// Index-0 homology of each column, C_{0,q} / im(vertical(1, q)), with the
/// horizontal maps induced on the quotients. Quotient bases are unit vectors
/// of C_{0,q} completing a basis of the image.
ChainComplex zeroth_cosheaf_homology(const CosheafOfChainComplexes& grid);

struct Corollary45Report {
  bool holds = false;
  std::vector<std::size_t> zeroth_dims;
  std::vector<std::size_t> dual_dims;
  std::vector<std::size_t> zeroth_betti;
  std::vector<std::size_t> dual_betti;
  std::vector<std::vector<std::size_t>> column_betti;
  bool columns_concentrated = false;
  /// The map [(g, tau)] -> tau is an invertible chain map onto C(D(M, G, I^T)).
  bool chain_isomorphism = false;
  std::string detail;
};

/// Homology of zeroth_cosheaf_homology against the simplicial homology of
/// the dual Dowker complex D(M, G, I^T). Throws NotTotal.
Corollary45Report verify_corollary45(const FormalContext& ctx, std::size_t face_budget = kDefaultFaceBudget);

}  // namespace dowker
