#pragma once

#include <vector>

#include <Eigen/Dense>

#include "flatmod/bieberbach.hpp"

namespace flatmod {

/// Symmetric S with A^t S A = S for every holonomy generator A.
struct SymmetricCommutant {
  std::size_t dimension = 0;
  std::vector<Mat> basis;
};

SymmetricCommutant symmetric_commutant(const HolonomyGroup& h);
SymmetricCommutant symmetric_commutant(const std::vector<Mat>& generators, std::size_t n);

/// Symmetric S with S A = A S. Agrees with symmetric_commutant for orthogonal holonomy.
SymmetricCommutant commuting_symmetric(const HolonomyGroup& h);

/// A^t (X^t X) A = X^t X for every generator. Throws SingularMatrix, DimensionMismatch.
bool cone_contains(const Mat& x, const HolonomyGroup& h);

/// Exact test via leading principal minors.
bool is_positive_definite(const Mat& s);

/// Numeric X with X^t X = S (the transposed Cholesky factor). Throws NotPositiveDefinite.
Eigen::MatrixXd sample_cone_element(const Mat& s);

Eigen::MatrixXd to_eigen(const Mat& m);

}  // namespace flatmod
