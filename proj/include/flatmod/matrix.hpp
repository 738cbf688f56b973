#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "flatmod/scalar.hpp"

namespace flatmod {

using Vec = std::vector<Scalar>;

/// Dense row-major matrix over Q(sqrt 3).
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Integer literal rows, e.g. Mat{{1, 0}, {0, -1}}.
  Mat(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Mat identity(std::size_t n);
  static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }
  static Mat diagonal(const Vec& d);
  static Mat from_columns(const std::vector<Vec>& columns);
  static Mat from_rows(const std::vector<Vec>& rows);
  /// Block-diagonal matrix diag(blocks...).
  static Mat block_diagonal(std::initializer_list<Mat> blocks);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec column(std::size_t j) const;
  Mat transpose() const;
  /// Rows [r0, r0+nr) and columns [c0, c0+nc).
  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  /// Submatrix on the given (ordered) row and column index sets.
  Mat select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

  bool is_integer() const;
  bool is_rational() const;
  bool is_identity() const;
  bool is_zero() const;

  Scalar determinant() const;
  bool is_invertible() const { return !determinant().is_zero(); }
  std::size_t rank() const;

  Mat operator-() const;
  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(const Scalar& s);
  friend Mat operator+(Mat x, const Mat& y) { return x += y; }
  friend Mat operator-(Mat x, const Mat& y) { return x -= y; }
  friend Mat operator*(Mat x, const Scalar& s) { return x *= s; }
  friend Mat operator*(const Scalar& s, Mat x) { return x *= s; }
  friend Mat operator*(const Mat& x, const Mat& y);
  friend Vec operator*(const Mat& x, const Vec& v);
  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
  }

  /// Component-wise lexicographic order on (a, b) pairs; a total order for sorting.
  friend bool lex_less(const Mat& x, const Mat& y);

  std::vector<double> to_doubles() const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

std::ostream& operator<<(std::ostream& os, const Mat& m);
bool lex_less(const Mat& x, const Mat& y);

Vec operator+(const Vec& x, const Vec& y);
Vec operator-(const Vec& x, const Vec& y);
Vec operator-(const Vec& x);
Vec operator*(const Scalar& s, const Vec& v);
Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
bool is_integer(const Vec& v);
std::string to_string(const Vec& v);

/// m^{-1}; throws SingularMatrix.
Mat mat_inverse(const Mat& m);

/// Reduced row echelon form with the list of pivot columns.
struct EchelonForm {
  Mat reduced;
  std::vector<std::size_t> pivots;
};
EchelonForm row_reduce(const Mat& m);

/// Basis of {x : m x = 0}; free variables set one at a time to 1.
std::vector<Vec> nullspace(const Mat& m);

/// One solution of m x = b with free variables zero, or nullopt if inconsistent.
std::optional<Vec> solve_linear(const Mat& m, const Vec& b);

/// Rotation by k*30 degrees; entries lie in Q(sqrt 3).
Mat rotation_30(int k);
/// Reflection diag(1, -1).
Mat reflection_e0();

}  // namespace flatmod
