#include "flatmod/matrix.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "flatmod/errors.hpp"

namespace flatmod {

Mat::Mat(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::diagonal(const Vec& d) {
  Mat m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Mat Mat::from_columns(const std::vector<Vec>& columns) {
  if (columns.empty()) return Mat();
  Mat m(columns.front().size(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != m.rows_) throw DimensionMismatch("columns of unequal length");
    for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Mat();
  Mat m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw DimensionMismatch("rows of unequal length");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Mat Mat::block_diagonal(std::initializer_list<Mat> blocks) {
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  Mat m(r, c);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(r0 + i, c0 + j) = b(i, j);
    r0 += b.rows();
    c0 += b.cols();
  }
  return m;
}

Vec Mat::row(std::size_t i) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vec Mat::column(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("block out of range");
  Mat b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

Mat Mat::select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  Mat b(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) b(i, j) = (*this)(rows[i], cols[j]);
  return b;
}

bool Mat::is_integer() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_integer(); });
}

bool Mat::is_rational() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_rational(); });
}

bool Mat::is_identity() const { return is_square() && *this == identity(rows_); }

bool Mat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Scalar Mat::determinant() const {
  if (!is_square()) throw DimensionMismatch("determinant of non-square matrix");
  Mat a = *this;
  Scalar det = 1;
  const std::size_t n = rows_;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k).is_zero()) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
      det = -det;
    }
    det *= a(k, k);
    Scalar inv = a(k, k).inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      Scalar f = a(i, k) * inv;
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

std::size_t Mat::rank() const { return row_reduce(*this).pivots.size(); }

Mat Mat::operator-() const {
  Mat m = *this;
  for (auto& s : m.data_) s = -s;
  return m;
}

Mat& Mat::operator+=(const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Mat& Mat::operator*=(const Scalar& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Mat operator*(const Mat& x, const Mat& y) {
  if (x.cols_ != y.rows_) throw DimensionMismatch("matrix product");
  Mat p(x.rows_, y.cols_);
  for (std::size_t i = 0; i < x.rows_; ++i)
    for (std::size_t k = 0; k < x.cols_; ++k) {
      const Scalar& a = x(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < y.cols_; ++j)
        if (!y(k, j).is_zero()) p(i, j) += a * y(k, j);
    }
  return p;
}

Vec operator*(const Mat& x, const Vec& v) {
  if (x.cols_ != v.size()) throw DimensionMismatch("matrix-vector product");
  Vec r(x.rows_);
  for (std::size_t i = 0; i < x.rows_; ++i)
    for (std::size_t k = 0; k < x.cols_; ++k)
      if (!x(i, k).is_zero() && !v[k].is_zero()) r[i] += x(i, k) * v[k];
  return r;
}

namespace {
int compare_components(const Scalar& x, const Scalar& y) {
  int c = cmp(x.rational_part(), y.rational_part());
  if (c != 0) return c;
  return cmp(x.sqrt3_part(), y.sqrt3_part());
}
}  // namespace

bool lex_less(const Mat& x, const Mat& y) {
  if (x.rows_ != y.rows_) return x.rows_ < y.rows_;
  if (x.cols_ != y.cols_) return x.cols_ < y.cols_;
  for (std::size_t i = 0; i < x.data_.size(); ++i) {
    int c = compare_components(x.data_[i], y.data_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::vector<double> Mat::to_doubles() const {
  std::vector<double> d;
  d.reserve(data_.size());
  for (const auto& s : data_) d.push_back(s.to_double());
  return d;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << (*this)(i, j);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Mat& m) { return os << m.to_string(); }

Vec operator+(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw DimensionMismatch("vector sum");
  Vec r(x);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += y[i];
  return r;
}

Vec operator-(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw DimensionMismatch("vector difference");
  Vec r(x);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= y[i];
  return r;
}

Vec operator-(const Vec& x) {
  Vec r(x);
  for (auto& s : r) s = -s;
  return r;
}

Vec operator*(const Scalar& s, const Vec& v) {
  Vec r(v);
  for (auto& x : r) x *= s;
  return r;
}

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool is_integer(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_integer(); });
}

std::string to_string(const Vec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ')';
  return os.str();
}

Mat mat_inverse(const Mat& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Mat a = m;
  Mat inv = Mat::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k).is_zero()) ++p;
    if (p == n) throw SingularMatrix("matrix is singular: " + m.to_string());
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(k, j));
        std::swap(inv(p, j), inv(k, j));
      }
    }
    Scalar pinv = a(k, k).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) *= pinv;
      inv(k, j) *= pinv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k).is_zero()) continue;
      Scalar f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        if (!a(k, j).is_zero()) a(i, j) -= f * a(k, j);
        if (!inv(k, j).is_zero()) inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

EchelonForm row_reduce(const Mat& m) {
  EchelonForm e{m, {}};
  Mat& a = e.reduced;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    Scalar pinv = a(r, c).inverse();
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= pinv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Scalar f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
    }
    e.pivots.push_back(c);
    ++r;
  }
  return e;
}

std::vector<Vec> nullspace(const Mat& m) {
  EchelonForm e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve_linear(const Mat& m, const Vec& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("right-hand side length");
  Mat aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  EchelonForm e = row_reduce(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vec x(m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
  return x;
}

Mat rotation_30(int k) {
  // cos(k*30deg) for k = 0..11
  static const Scalar half = Scalar::fraction(1, 2);
  static const Scalar half_root = Scalar::fraction(0, 1, 1, 2);
  const Scalar cosines[12] = {1, half_root, half, 0, -half, -half_root,
                              -1, -half_root, -half, 0, half, half_root};
  int c = ((k % 12) + 12) % 12;
  int s = ((c - 3) % 12 + 12) % 12;  // sin(x) = cos(x - 90deg)
  return Mat{{cosines[c], -cosines[s]}, {cosines[s], cosines[c]}};
}

Mat reflection_e0() { return Mat{{1, 0}, {0, -1}}; }

}  // namespace flatmod
