#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace dowker {

using Rational = boost::multiprecision::mpq_rational;

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  RationalMatrix transpose() const;
  RationalMatrix select_rows(const std::vector<std::size_t>& rows) const;
  RationalMatrix select_cols(const std::vector<std::size_t>& cols) const;
  /// [this | other]; row counts must agree.
  RationalMatrix hconcat(const RationalMatrix& other) const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Entries as exact strings ("-3/2"), row by row.
  std::vector<std::vector<std::string>> to_strings() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact rank by fraction-free (Bareiss) elimination; the row updates of each
/// elimination step run as an OpenMP loop.
std::size_t rank(const RationalMatrix& m);
/// Single-threaded reference for rank().
std::size_t rank_serial(const RationalMatrix& m);
inline std::size_t image_dim(const RationalMatrix& m) { return rank(m); }

struct RowEchelon {
  RationalMatrix reduced;            ///< reduced row echelon form
  std::vector<std::size_t> pivots;   ///< pivot column of each nonzero row
};

RowEchelon rref(const RationalMatrix& m);

/// Columns form a basis of the null space.
RationalMatrix kernel_basis(const RationalMatrix& m);

/// Throws DimensionMismatch for non-square or singular input.
RationalMatrix inverse(const RationalMatrix& m);

}  // namespace dowker
