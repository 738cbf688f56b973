#include "flatmod/affine.hpp"

#include "flatmod/errors.hpp"

namespace flatmod {

AffineMap::AffineMap(Mat a, Vec v) : linear(std::move(a)), translation(std::move(v)) {
  if (!linear.is_square() || linear.rows() != translation.size())
    throw DimensionMismatch("affine map shape");
  if (!linear.is_invertible()) throw SingularMatrix("affine linear part must be invertible");
}

AffineMap AffineMap::identity(std::size_t n) { return AffineMap(Mat::identity(n), zero_vec(n)); }

AffineMap AffineMap::pure_translation(const Vec& v) { return AffineMap(Mat::identity(v.size()), v); }

AffineMap AffineMap::pure_linear(const Mat& a) { return AffineMap(a, zero_vec(a.rows())); }

AffineMap compose(const AffineMap& f, const AffineMap& g) {
  if (f.dimension() != g.dimension()) throw DimensionMismatch("compose");
  AffineMap r;
  r.linear = f.linear * g.linear;
  r.translation = f.translation + f.linear * g.translation;
  return r;
}

AffineMap inverse(const AffineMap& f) {
  AffineMap r;
  r.linear = mat_inverse(f.linear);
  r.translation = -(r.linear * f.translation);
  return r;
}

AffineMap conjugate(const AffineMap& f, const AffineMap& by) {
  return compose(compose(by, f), inverse(by));
}

AffineMap power(const AffineMap& f, int k) {
  AffineMap base = k < 0 ? inverse(f) : f;
  AffineMap r = AffineMap::identity(f.dimension());
  for (int i = 0; i < (k < 0 ? -k : k); ++i) r = compose(r, base);
  return r;
}

const Mat& linear_part(const AffineMap& f) { return f.linear; }

bool is_isometry(const AffineMap& f) { return (f.linear.transpose() * f.linear).is_identity(); }

std::string to_string(const AffineMap& f) {
  return "(" + f.linear.to_string() + ", " + to_string(f.translation) + ")";
}

}  // namespace flatmod
