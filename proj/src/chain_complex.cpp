#include "dowker/chain_complex.hpp"

#include "dowker/error.hpp"

namespace dowker {

ChainComplex::ChainComplex(Grading grading, std::vector<std::size_t> dims, std::vector<RationalMatrix> differentials,
                           std::vector<std::vector<std::string>> basis_labels)
    : grading_(grading), dims_(std::move(dims)), differentials_(std::move(differentials)),
      labels_(std::move(basis_labels)) {
  const auto n = dims_.size();
  if (differentials_.size() != n) throw Error(Errc::DimensionMismatch, "one differential per degree expected");
  if (labels_.empty()) labels_.resize(n);
  if (labels_.size() != n) throw Error(Errc::DimensionMismatch, "one label list per degree expected");
  auto target_dim = [&](std::size_t k) -> std::size_t {
    if (grading_ == Grading::Chain) return k == 0 ? 0 : dims_[k - 1];
    return k + 1 < n ? dims_[k + 1] : 0;
  };
  for (std::size_t k = 0; k < n; ++k) {
    const auto& d = differentials_[k];
    if (d.cols() != dims_[k] || d.rows() != target_dim(k))
      throw Error(Errc::DimensionMismatch, "differential out of degree " + std::to_string(k) + " is " +
                                               std::to_string(d.rows()) + "x" + std::to_string(d.cols()));
    if (!labels_[k].empty() && labels_[k].size() != dims_[k])
      throw Error(Errc::DimensionMismatch, "label count in degree " + std::to_string(k));
  }
  for (std::size_t k = 0; k + 1 < n; ++k) {
    // Chain: d_k o d_{k+1}; cochain: d_{k+1} o d_k.
    const auto product = grading_ == Grading::Chain ? differentials_[k] * differentials_[k + 1]
                                                    : differentials_[k + 1] * differentials_[k];
    if (!product.is_zero())
      throw Error(Errc::NotAComplex, "differentials around degree " + std::to_string(k) + " do not compose to zero");
  }
}

std::vector<std::size_t> ranks(const ChainComplex& cc) {
  std::vector<std::size_t> out(cc.num_degrees());
  for (std::size_t k = 0; k < cc.num_degrees(); ++k) out[k] = rank(cc.differential(k));
  return out;
}

std::vector<std::size_t> betti(const ChainComplex& cc) {
  const auto r = ranks(cc);
  const auto n = cc.num_degrees();
  std::vector<std::size_t> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t incoming = 0;
    if (cc.grading() == Grading::Chain && k + 1 < n) incoming = r[k + 1];
    if (cc.grading() == Grading::Cochain && k > 0) incoming = r[k - 1];
    out[k] = cc.dims()[k] - r[k] - incoming;
  }
  return out;
}

ChainComplex simplicial_chain_complex(const SimplicialComplex& asc) {
  const auto degrees = static_cast<std::size_t>(asc.dimension() + 1);
  std::vector<std::size_t> dims(degrees);
  std::vector<std::vector<std::string>> labels(degrees);
  for (std::size_t k = 0; k < degrees; ++k) {
    dims[k] = asc.count_of_dimension(k);
    for (std::size_t f = asc.first_face(k); f < asc.first_face(k + 1); ++f)
      labels[k].push_back(compact_labels(asc.vertices(), asc.faces()[f]));
  }
  std::vector<RationalMatrix> boundary;
  if (degrees > 0) boundary.emplace_back(0, dims[0]);
  for (std::size_t k = 1; k < degrees; ++k) {
    RationalMatrix d(dims[k - 1], dims[k]);
    const auto lower = asc.first_face(k - 1);
    for (std::size_t f = asc.first_face(k); f < asc.first_face(k + 1); ++f) {
      const auto& face = asc.faces()[f];
      long sign = 1;
      for_each_member(face, [&](std::size_t v) {
        Bits sub = face;
        sub.reset(v);
        d(*asc.find(sub) - lower, f - asc.first_face(k)) = sign;
        sign = -sign;
      });
    }
    boundary.push_back(std::move(d));
  }
  return ChainComplex(Grading::Chain, std::move(dims), std::move(boundary), std::move(labels));
}

}  // namespace dowker
