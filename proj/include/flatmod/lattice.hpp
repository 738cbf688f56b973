#pragma once

#include <optional>
#include <vector>

#include "flatmod/matrix.hpp"

namespace flatmod {

/// Full-rank lattice spanned by the columns of an invertible matrix.
class LatticeBasis {
 public:
  LatticeBasis() = default;
  /// Throws NotALattice when the basis matrix is singular or not square.
  explicit LatticeBasis(Mat basis);
  static LatticeBasis standard(std::size_t n);

  std::size_t dimension() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }
  const Mat& inverse() const { return inverse_; }
  Vec vector(std::size_t i) const { return basis_.column(i); }

  /// Coordinates of v in the basis.
  Vec coordinates(const Vec& v) const;
  /// Throws DimensionMismatch.
  bool contains(const Vec& v) const;

  /// Same lattice, possibly different basis.
  friend bool operator==(const LatticeBasis& x, const LatticeBasis& y);

 private:
  Mat basis_;
  Mat inverse_;
};

bool lattice_contains(const LatticeBasis& lattice, const Vec& v);

/// Z-span of the given vectors in R^n, returned in Hermite form. When every vector
/// is rational the Hermite form is taken in standard coordinates, otherwise in the
/// frame of the first n independent vectors. Throws NotALattice if the span is not
/// a full-rank lattice.
LatticeBasis lattice_from_vectors(const std::vector<Vec>& vectors, std::size_t n);

/// One condition  M x - c in lattice.
struct CongruenceBlock {
  Mat M;
  Vec c;
  LatticeBasis lattice;
};

/// Find a real x with M_i x - c_i in lattice_i for every block.
struct CongruenceSystem {
  std::size_t unknowns = 0;
  std::vector<CongruenceBlock> blocks;
};

struct SolutionReport {
  bool solvable = false;
  std::optional<Vec> witness;
  bool zero_is_witness = false;
};

/// Decides the system exactly. The witness is x = 0 whenever that works.
/// Otherwise it is the solution obtained from the Smith form with all free
/// parameters set to zero.
SolutionReport solve_mixed_congruence(const CongruenceSystem& sys);

/// True when x satisfies every block.
bool satisfies(const CongruenceSystem& sys, const Vec& x);

}  // namespace flatmod
