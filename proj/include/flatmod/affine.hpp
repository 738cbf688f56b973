#pragma once

#include <string>

#include "flatmod/matrix.hpp"

namespace flatmod {

/// Element (A, v) of Aff(n) acting by x -> A x + v.
struct AffineMap {
  Mat linear;
  Vec translation;

  AffineMap() = default;
  /// Throws DimensionMismatch or SingularMatrix.
  AffineMap(Mat a, Vec v);

  static AffineMap identity(std::size_t n);
  static AffineMap pure_translation(const Vec& v);
  static AffineMap pure_linear(const Mat& a);

  std::size_t dimension() const { return translation.size(); }
  Vec apply(const Vec& x) const { return linear * x + translation; }

  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

/// (A, v)(B, w) = (AB, v + A w).
AffineMap compose(const AffineMap& f, const AffineMap& g);
AffineMap inverse(const AffineMap& f);
/// by * f * by^{-1}.
AffineMap conjugate(const AffineMap& f, const AffineMap& by);
AffineMap power(const AffineMap& f, int k);
const Mat& linear_part(const AffineMap& f);
/// A^t A = Id exactly.
bool is_isometry(const AffineMap& f);

std::string to_string(const AffineMap& f);

}  // namespace flatmod
