#include <doctest.h>

#include <Eigen/Dense>

#include "flatmod/bieberbach.hpp"
#include "flatmod/cone.hpp"
#include "flatmod/errors.hpp"

using namespace flatmod;

namespace {

// Dimension of {S symmetric : A^t S A = S for all A} from a dense floating-point
// parameterization of all n x n matrices with S = S^t imposed as equations.
std::size_t brute_force_dimension(const HolonomyGroup& h) {
  const auto n = static_cast<Eigen::Index>(h.elements[0].rows());
  const Eigen::Index vars = n * n;
  std::vector<Eigen::RowVectorXd> rows;
  auto var = [n](Eigen::Index i, Eigen::Index j) { return i * n + j; };
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) {
      Eigen::RowVectorXd r = Eigen::RowVectorXd::Zero(vars);
      r(var(i, j)) = 1;
      r(var(j, i)) = -1;
      rows.push_back(r);
    }
  for (const auto& m : h.elements) {
    Eigen::MatrixXd a = to_eigen(m);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) {
        Eigen::RowVectorXd r = Eigen::RowVectorXd::Zero(vars);
        for (Eigen::Index k = 0; k < n; ++k)
          for (Eigen::Index l = 0; l < n; ++l) r(var(k, l)) += a(k, i) * a(l, j);
        r(var(i, j)) -= 1;
        rows.push_back(r);
      }
  }
  Eigen::MatrixXd system(static_cast<Eigen::Index>(rows.size()), vars);
  for (std::size_t i = 0; i < rows.size(); ++i) system.row(static_cast<Eigen::Index>(i)) = rows[i];
  Eigen::FullPivLU<Eigen::MatrixXd> lu(system);
  lu.setThreshold(1e-9);
  return static_cast<std::size_t>(vars - lu.rank());
}

}  // namespace

TEST_SUITE("cone") {
  TEST_CASE("symmetric commutant dimensions") {
    const std::vector<std::size_t> expected = {6, 4, 2, 2, 2, 3, 4, 4, 3, 3, 10, 6, 6, 4,
                                               4, 4, 4, 4, 7, 7, 7, 3, 3, 3, 3, 3, 3, 3};
    for (std::size_t i = 0; i < 28; ++i) {
      const auto& n = catalog_names()[i];
      CAPTURE(n);
      HolonomyGroup h = holonomy(load_group(n));
      SymmetricCommutant s = symmetric_commutant(h);
      CHECK(s.dimension == expected[i]);
      CHECK(s.dimension == expected_results(n).teichmuller_dim);
      CHECK(brute_force_dimension(h) == s.dimension);
      for (const auto& b : s.basis) {
        CHECK(b == b.transpose());
        for (const auto& a : h.elements) CHECK(a.transpose() * b * a == b);
      }
    }
  }

  TEST_CASE("commuting and invariant forms agree for orthogonal holonomy") {
    for (const auto& n : catalog_names()) {
      CAPTURE(n);
      HolonomyGroup h = holonomy(load_group(n));
      CHECK(commuting_symmetric(h).dimension == symmetric_commutant(h).dimension);
    }
  }

  TEST_CASE("integral representations keep the invariant-form dimension") {
    for (const auto& n : catalog_names()) {
      if (!load_group(n).integral_rep) continue;
      CAPTURE(n);
      HolonomyGroup h = holonomy(integral_entry(n));
      CHECK(symmetric_commutant(h).dimension == symmetric_commutant(holonomy(load_group(n))).dimension);
    }
  }

  TEST_CASE("cone membership") {
    HolonomyGroup h = holonomy(load_group("G2"));
    CHECK(cone_contains(Mat::identity(3), h));
    CHECK(cone_contains(Mat::diagonal({2, 3, 3}), h));
    CHECK_FALSE(cone_contains(Mat{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}, h));
    CHECK_THROWS_AS(cone_contains(Mat::identity(2), h), DimensionMismatch);
    CHECK_THROWS_AS(cone_contains(Mat::zero(3, 3), h), SingularMatrix);
  }

  TEST_CASE("positive definite samples") {
    CHECK(is_positive_definite(Mat{{2, 1}, {1, 2}}));
    CHECK_FALSE(is_positive_definite(Mat{{1, 2}, {2, 1}}));
    Eigen::MatrixXd x = sample_cone_element(Mat{{2, 1}, {1, 2}});
    CHECK((x.transpose() * x - Eigen::MatrixXd{{2, 1}, {1, 2}}).norm() < 1e-12);
    CHECK_THROWS_AS(sample_cone_element(Mat{{1, 2}, {2, 1}}), NotPositiveDefinite);
  }
}
