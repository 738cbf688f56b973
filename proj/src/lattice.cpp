#include "flatmod/lattice.hpp"

#include "flatmod/errors.hpp"
#include "flatmod/integer_matrix.hpp"

namespace flatmod {

LatticeBasis::LatticeBasis(Mat basis) : basis_(std::move(basis)) {
  if (!basis_.is_square() || !basis_.is_invertible()) throw NotALattice("lattice basis must be invertible");
  inverse_ = mat_inverse(basis_);
}

LatticeBasis LatticeBasis::standard(std::size_t n) { return LatticeBasis(Mat::identity(n)); }

Vec LatticeBasis::coordinates(const Vec& v) const {
  if (v.size() != dimension()) throw DimensionMismatch("lattice coordinates");
  return inverse_ * v;
}

bool LatticeBasis::contains(const Vec& v) const { return is_integer(coordinates(v)); }

bool operator==(const LatticeBasis& x, const LatticeBasis& y) {
  if (x.dimension() != y.dimension()) return false;
  Mat t = x.inverse_ * y.basis_;
  if (!t.is_integer()) return false;
  Scalar d = t.determinant();
  return d == Scalar(1) || d == Scalar(-1);
}

bool lattice_contains(const LatticeBasis& lattice, const Vec& v) { return lattice.contains(v); }

LatticeBasis lattice_from_vectors(const std::vector<Vec>& vectors, std::size_t n) {
  bool rational = true;
  for (const auto& v : vectors) {
    if (v.size() != n) throw DimensionMismatch("lattice generator length");
    for (const auto& x : v) rational = rational && x.is_rational();
  }
  Mat frame = Mat::identity(n);
  if (!rational) {
    std::vector<Vec> chosen;
    for (const auto& v : vectors) {
      chosen.push_back(v);
      if (Mat::from_columns(chosen).rank() < chosen.size()) chosen.pop_back();
      if (chosen.size() == n) break;
    }
    if (chosen.size() < n) throw NotALattice("generators do not span R^n");
    frame = Mat::from_columns(chosen);
  }
  Mat inv = mat_inverse(frame);
  std::vector<Vec> coords;
  Integer den = 1;
  for (const auto& v : vectors) {
    Vec c = inv * v;
    for (const auto& x : c) {
      if (!x.is_rational()) throw NotALattice("generators are not commensurable");
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.rational_part().get_den_mpz_t());
    }
    coords.push_back(std::move(c));
  }
  IntMatrix g(n, coords.size());
  for (std::size_t j = 0; j < coords.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) g(i, j) = Rational(coords[j][i].rational_part() * den).get_num();
  Mat h = hermite_column_basis(g).to_mat();
  return LatticeBasis(frame * h * Scalar(Rational(1, den)));
}

bool satisfies(const CongruenceSystem& sys, const Vec& x) {
  for (const auto& b : sys.blocks)
    if (!b.lattice.contains(b.M * x - b.c)) return false;
  return true;
}

namespace {

// Scales a rational row to integers; returns the common denominator.
Integer row_denominator(const Mat& m, std::size_t i) {
  Integer den = 1;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m(i, j).rational_part().get_den_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m(i, j).sqrt3_part().get_den_mpz_t());
  }
  return den;
}

}  // namespace

SolutionReport solve_mixed_congruence(const CongruenceSystem& sys) {
  const std::size_t n = sys.unknowns;
  std::size_t m = 0;
  for (const auto& b : sys.blocks) {
    if (b.M.cols() != n || b.M.rows() != b.c.size() || b.lattice.dimension() != b.c.size())
      throw DimensionMismatch("congruence block shape");
    m += b.c.size();
  }

  SolutionReport report;
  report.zero_is_witness = true;
  for (const auto& b : sys.blocks)
    if (!b.lattice.contains(b.c)) report.zero_is_witness = false;
  if (report.zero_is_witness) {
    report.solvable = true;
    report.witness = zero_vec(n);
    return report;
  }

  // In lattice coordinates the condition reads N x - d = k with k integral.
  Mat N(m, n);
  Vec d(m);
  std::size_t r0 = 0;
  for (const auto& b : sys.blocks) {
    Mat nb = b.lattice.inverse() * b.M;
    Vec db = b.lattice.inverse() * b.c;
    for (std::size_t i = 0; i < nb.rows(); ++i) {
      for (std::size_t j = 0; j < n; ++j) N(r0 + i, j) = nb(i, j);
      d[r0 + i] = db[i];
    }
    r0 += nb.rows();
  }

  // d + k must lie in the column space of N: L (d + k) = 0 for the left null space L.
  std::vector<Vec> left = nullspace(N.transpose());
  const std::size_t l = left.size();
  Mat R(2 * l, m);
  Vec f(2 * l);
  for (std::size_t i = 0; i < l; ++i) {
    Scalar ld = 0;
    for (std::size_t j = 0; j < m; ++j) {
      R(i, j) = Scalar(left[i][j].rational_part());
      R(l + i, j) = Scalar(left[i][j].sqrt3_part());
      ld += left[i][j] * d[j];
    }
    f[i] = Scalar(-ld.rational_part());
    f[l + i] = Scalar(-ld.sqrt3_part());
  }

  IntMatrix Ri(2 * l, m);
  std::vector<Integer> fi(2 * l);
  for (std::size_t i = 0; i < 2 * l; ++i) {
    Integer den = row_denominator(R, i);
    Rational fd = f[i].rational_part() * Rational(den);
    for (std::size_t j = 0; j < m; ++j) {
      Rational v = R(i, j).rational_part() * Rational(den);
      Ri(i, j) = v.get_num();
    }
    if (fd.get_den() != 1) return report;  // R k has integer entries, so f must too
    fi[i] = fd.get_num();
  }

  IntSmithForm s = smith_normal_form(Ri);
  std::vector<Integer> g(2 * l);
  for (std::size_t i = 0; i < 2 * l; ++i)
    for (std::size_t j = 0; j < 2 * l; ++j) g[i] += s.U(i, j) * fi[j];
  std::vector<Integer> y(m);
  for (std::size_t i = 0; i < 2 * l; ++i) {
    if (i < s.rank) {
      if (!mpz_divisible_p(g[i].get_mpz_t(), s.D(i, i).get_mpz_t())) return report;
      y[i] = g[i] / s.D(i, i);
    } else if (g[i] != 0) {
      return report;
    }
  }
  Vec rhs = d;
  for (std::size_t i = 0; i < m; ++i) {
    Integer k = 0;
    for (std::size_t j = 0; j < m; ++j) k += s.V(i, j) * y[j];
    rhs[i] += Scalar(Rational(k));
  }
  std::optional<Vec> x = solve_linear(N, rhs);
  if (!x) return report;
  report.solvable = true;
  report.witness = *x;
  return report;
}

}  // namespace flatmod
