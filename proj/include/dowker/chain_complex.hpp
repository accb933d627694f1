#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dowker/complexes.hpp"
#include "dowker/rational_matrix.hpp"

namespace dowker {

enum class Grading { Chain, Cochain };

/// Graded exact-rational spaces with differentials. `differential(k)` is the
/// map leaving degree k: C_k -> C_{k-1} for chains, C^k -> C^{k+1} for
/// cochains. Maps into a degree outside [0, top] have zero rows.
class ChainComplex {
 public:
  ChainComplex() = default;
  /// Checks matrix shapes (DimensionMismatch) and that consecutive
  /// differentials compose to zero (NotAComplex).
  ChainComplex(Grading grading, std::vector<std::size_t> dims, std::vector<RationalMatrix> differentials,
               std::vector<std::vector<std::string>> basis_labels = {});

  Grading grading() const noexcept { return grading_; }
  std::size_t num_degrees() const noexcept { return dims_.size(); }
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  const RationalMatrix& differential(std::size_t k) const { return differentials_[k]; }
  const std::vector<std::string>& basis_labels(std::size_t k) const { return labels_[k]; }

 private:
  Grading grading_ = Grading::Chain;
  std::vector<std::size_t> dims_;
  std::vector<RationalMatrix> differentials_;
  std::vector<std::vector<std::string>> labels_;
};

/// Rank of the differential leaving each degree.
std::vector<std::size_t> ranks(const ChainComplex& cc);

/// dim C_k - rank(out of k) - rank(into k).
std::vector<std::size_t> betti(const ChainComplex& cc);

/// C^Delta: k-faces in the complex's (dimension, lexicographic) order with the
/// alternating-sign boundary on sorted vertex sequences.
ChainComplex simplicial_chain_complex(const SimplicialComplex& asc);

}  // namespace dowker
