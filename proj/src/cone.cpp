#include "flatmod/cone.hpp"

#include <functional>

#include "flatmod/errors.hpp"

namespace flatmod {

namespace {

// Unit symmetric matrices, one per pair i <= j.
std::vector<Mat> symmetric_units(std::size_t n) {
  std::vector<Mat> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Mat e = Mat::zero(n, n);
      e(i, j) = 1;
      e(j, i) = 1;
      out.push_back(e);
    }
  return out;
}

SymmetricCommutant solve(const std::vector<Mat>& gens, std::size_t n,
                         const std::function<Mat(const Mat& a, const Mat& s)>& residual) {
  std::vector<Mat> units = symmetric_units(n);
  std::vector<Vec> columns;
  for (const auto& u : units) {
    Vec col;
    for (const auto& a : gens) {
      Mat r = residual(a, u);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) col.push_back(r(i, j));
    }
    columns.push_back(col);
  }
  SymmetricCommutant out;
  if (gens.empty()) {
    out.basis = units;
  } else {
    for (const auto& v : nullspace(Mat::from_columns(columns))) {
      Mat s = Mat::zero(n, n);
      for (std::size_t k = 0; k < units.size(); ++k) s += units[k] * v[k];
      out.basis.push_back(s);
    }
  }
  out.dimension = out.basis.size();
  return out;
}

std::size_t dimension_of(const HolonomyGroup& h) { return h.elements.front().rows(); }

}  // namespace

SymmetricCommutant symmetric_commutant(const std::vector<Mat>& generators, std::size_t n) {
  return solve(generators, n, [](const Mat& a, const Mat& s) { return a.transpose() * s * a - s; });
}

SymmetricCommutant symmetric_commutant(const HolonomyGroup& h) {
  return symmetric_commutant(h.generators(), dimension_of(h));
}

SymmetricCommutant commuting_symmetric(const HolonomyGroup& h) {
  return solve(h.generators(), dimension_of(h), [](const Mat& a, const Mat& s) { return s * a - a * s; });
}

bool cone_contains(const Mat& x, const HolonomyGroup& h) {
  if (x.rows() != dimension_of(h) || !x.is_square()) throw DimensionMismatch("cone_contains: dimension mismatch");
  if (!x.is_invertible()) throw SingularMatrix("cone_contains: singular matrix");
  Mat s = x.transpose() * x;
  for (const auto& a : h.generators())
    if (a.transpose() * s * a != s) return false;
  return true;
}

bool is_positive_definite(const Mat& s) {
  if (!s.is_square() || s != s.transpose()) return false;
  for (std::size_t k = 1; k <= s.rows(); ++k)
    if (s.block(0, 0, k, k).determinant().sign() <= 0) return false;
  return true;
}

Eigen::MatrixXd to_eigen(const Mat& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).to_double();
  return out;
}

Eigen::MatrixXd sample_cone_element(const Mat& s) {
  if (!is_positive_definite(s)) throw NotPositiveDefinite("matrix is not symmetric positive definite");
  Eigen::LLT<Eigen::MatrixXd> llt(to_eigen(s));
  return llt.matrixL().transpose();
}

}  // namespace flatmod
