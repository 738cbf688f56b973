#include "flatmod/integer_matrix.hpp"

#include <algorithm>
#include <utility>

#include "flatmod/errors.hpp"

namespace flatmod {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_mat(const Mat& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).to_integer();
  return r;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row(std::size_t dst, std::size_t src, const Integer& f) {
  if (f == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += f * (*this)(src, j);
}

void IntMatrix::add_col(std::size_t dst, std::size_t src, const Integer& f) {
  if (f == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += f * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

Mat IntMatrix::to_mat() const {
  Mat m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = Scalar(Rational((*this)(i, j)));
  return m;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols_ != y.rows_) throw DimensionMismatch("integer matrix product");
  IntMatrix p(x.rows_, y.cols_);
  for (std::size_t i = 0; i < x.rows_; ++i)
    for (std::size_t k = 0; k < x.cols_; ++k) {
      if (x(i, k) == 0) continue;
      for (std::size_t j = 0; j < y.cols_; ++j) p(i, j) += x(i, k) * y(k, j);
    }
  return p;
}

IntSmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t r = m.rows();
  const std::size_t c = m.cols();
  IntSmithForm s{IntMatrix::identity(r), m, IntMatrix::identity(c), 0};
  IntMatrix& a = s.D;
  for (std::size_t t = 0; t < std::min(r, c); ++t) {
    while (true) {
      // smallest nonzero entry of the trailing block becomes the pivot
      std::size_t pi = r, pj = c;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j)
          if (a(i, j) != 0 && (pi == r || abs(a(i, j)) < abs(a(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == r) {
        s.rank = t;
        return s;
      }
      a.swap_rows(t, pi);
      s.U.swap_rows(t, pi);
      a.swap_cols(t, pj);
      s.V.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (a(i, t) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        a.add_row(i, t, -q);
        s.U.add_row(i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (a(t, j) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        a.add_col(j, t, -q);
        s.V.add_col(j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      bool divides = true;
      for (std::size_t i = t + 1; i < r && divides; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            a.add_row(t, i, 1);
            s.U.add_row(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      s.U.negate_row(t);
    }
    s.rank = t + 1;
  }
  return s;
}

SmithForm smith_normal_form(const Mat& m) {
  if (!m.is_integer()) throw NonIntegerInput("Smith normal form needs an integer matrix");
  IntSmithForm s = smith_normal_form(IntMatrix::from_mat(m));
  return {s.U.to_mat(), s.D.to_mat(), s.V.to_mat()};
}

IntMatrix hermite_column_basis(const IntMatrix& g) {
  const std::size_t n = g.rows();
  std::vector<std::vector<Integer>> active;
  for (std::size_t j = 0; j < g.cols(); ++j) {
    std::vector<Integer> col(n);
    bool nonzero = false;
    for (std::size_t i = 0; i < n; ++i) {
      col[i] = g(i, j);
      nonzero = nonzero || col[i] != 0;
    }
    if (nonzero) active.push_back(std::move(col));
  }
  std::vector<std::vector<Integer>> basis(n);
  for (std::size_t row = n; row-- > 0;) {
    while (true) {
      std::size_t pivot = active.size();
      for (std::size_t k = 0; k < active.size(); ++k)
        if (active[k][row] != 0 && (pivot == active.size() || abs(active[k][row]) < abs(active[pivot][row])))
          pivot = k;
      if (pivot == active.size()) throw NotALattice("generators do not span a full-rank lattice");
      bool clean = true;
      for (std::size_t k = 0; k < active.size(); ++k) {
        if (k == pivot || active[k][row] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), active[k][row].get_mpz_t(), active[pivot][row].get_mpz_t());
        for (std::size_t i = 0; i <= row; ++i) active[k][i] -= q * active[pivot][i];
        if (active[k][row] != 0) clean = false;
      }
      if (!clean) continue;
      basis[row] = std::move(active[pivot]);
      active.erase(active.begin() + static_cast<std::ptrdiff_t>(pivot));
      if (basis[row][row] < 0)
        for (auto& x : basis[row]) x = -x;
      break;
    }
  }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = j; i-- > 0;) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), basis[j][i].get_mpz_t(), basis[i][i].get_mpz_t());
      if (q == 0) continue;
      for (std::size_t k = 0; k <= i; ++k) basis[j][k] -= q * basis[i][k];
    }
  IntMatrix h(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) h(i, j) = basis[j][i];
  return h;
}

}  // namespace flatmod
