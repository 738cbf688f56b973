#pragma once

#include <cstddef>
#include <vector>

#include "flatmod/matrix.hpp"
#include "flatmod/scalar.hpp"

namespace flatmod {

/// Dense row-major matrix over Z.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix identity(std::size_t n);
  /// Throws NonIntegerInput if some entry of m is not an integer.
  static IntMatrix from_mat(const Mat& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += f * row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer& f);
  /// col[dst] += f * col[src]
  void add_col(std::size_t dst, std::size_t src, const Integer& f);
  void negate_row(std::size_t r);

  Mat to_mat() const;
  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// U * m * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... (all d_i >= 0).
struct IntSmithForm {
  IntMatrix U, D, V;
  std::size_t rank = 0;
};
IntSmithForm smith_normal_form(const IntMatrix& m);

struct SmithForm {
  Mat U, D, V;
};
/// Smith normal form of an integer-valued Mat; throws NonIntegerInput otherwise.
SmithForm smith_normal_form(const Mat& m);

/// Upper-triangular basis of the Z-span of the columns of g (g must have full row
/// rank). Diagonal entries positive; entries above the diagonal reduced into
/// [0, h_ii). Throws NotALattice when the span is not of full rank.
IntMatrix hermite_column_basis(const IntMatrix& g);

}  // namespace flatmod
