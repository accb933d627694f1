#include "dowker/rational_matrix.hpp"

#include <utility>

#include "dowker/error.hpp"

namespace dowker {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(Errc::DimensionMismatch, "ragged row " + std::to_string(r));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalMatrix RationalMatrix::select_rows(const std::vector<std::size_t>& rows) const {
  RationalMatrix out(rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t c = 0; c < cols_; ++c) out(i, c) = (*this)(rows[i], c);
  return out;
}

RationalMatrix RationalMatrix::select_cols(const std::vector<std::size_t>& cols) const {
  RationalMatrix out(rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < cols.size(); ++j) out(r, j) = (*this)(r, cols[j]);
  return out;
}

RationalMatrix RationalMatrix::hconcat(const RationalMatrix& other) const {
  if (rows_ != other.rows_) throw Error(Errc::DimensionMismatch, "hconcat row counts differ");
  RationalMatrix out(rows_, cols_ + other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < other.cols_; ++c) out(r, cols_ + c) = other(r, c);
  }
  return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_)
    throw Error(Errc::DimensionMismatch, std::to_string(a.rows_) + "x" + std::to_string(a.cols_) + " times " +
                                             std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b(k, j) != 0) out(i, j) += aik * b(k, j);
    }
  return out;
}

std::vector<std::vector<std::string>> RationalMatrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_, std::vector<std::string>(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c).str();
  return out;
}

namespace {

// Bareiss step for rows below `pivot_row`:
//   a_ij <- (a_pp * a_ij - a_ip * a_pj) / previous_pivot
// Each update is a nonzero multiple of the ordinary elimination step, so rank
// is preserved; with integer input every division is exact.
template <bool Parallel>
std::size_t bareiss_rank(RationalMatrix a) {
  const auto rows = a.rows();
  const auto cols = a.cols();
  Rational previous = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(a(p, j), a(r, j));
    const Rational pivot = a(r, c);
    const auto below = static_cast<std::ptrdiff_t>(rows - r - 1);
#pragma omp parallel for schedule(dynamic, 4) if (Parallel && below > 32)
    for (std::ptrdiff_t k = 0; k < below; ++k) {
      const auto i = r + 1 + static_cast<std::size_t>(k);
      const Rational factor = a(i, c);
      if (factor == 0) {
        if (previous != 1 || pivot != 1)
          for (std::size_t j = c + 1; j < cols; ++j) a(i, j) = a(i, j) * pivot / previous;
        continue;
      }
      for (std::size_t j = c + 1; j < cols; ++j) a(i, j) = (pivot * a(i, j) - factor * a(r, j)) / previous;
      a(i, c) = 0;
    }
    previous = pivot;
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank(const RationalMatrix& m) { return bareiss_rank<true>(m); }

std::size_t rank_serial(const RationalMatrix& m) { return bareiss_rank<false>(m); }

RowEchelon rref(const RationalMatrix& m) {
  RowEchelon out{m, {}};
  auto& a = out.reduced;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    const Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational factor = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= factor * a(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

RationalMatrix kernel_basis(const RationalMatrix& m) {
  const auto echelon = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : echelon.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  RationalMatrix basis(m.cols(), free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis(free[k], k) = 1;
    for (std::size_t row = 0; row < echelon.pivots.size(); ++row)
      basis(echelon.pivots[row], k) = -echelon.reduced(row, free[k]);
  }
  return basis;
}

RationalMatrix inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw Error(Errc::DimensionMismatch, "inverse of a non-square matrix");
  const auto n = m.rows();
  const auto echelon = rref(m.hconcat(RationalMatrix::identity(n)));
  if (echelon.pivots.size() < n || (n > 0 && echelon.pivots[n - 1] != n - 1))
    throw Error(Errc::DimensionMismatch, "matrix is singular");
  std::vector<std::size_t> right(n);
  for (std::size_t i = 0; i < n; ++i) right[i] = n + i;
  return echelon.reduced.select_cols(right);
}

}  // namespace dowker
