#include <doctest.h>

#include <algorithm>
#include <set>

#include "flatmod/errors.hpp"
#include "flatmod/normalizer.hpp"

using namespace flatmod;

namespace {

bool member(const Mat& x, const std::string& name) { return normalizer_membership(x, load_group(name)).member; }

Mat blocks(const Mat& a, const Mat& b) { return Mat::block_diagonal({a, b}); }

}  // namespace

TEST_SUITE("normalizer") {
  TEST_CASE("listed generators are members") {
    for (const auto& n : catalog_names()) {
      if (n == "O4_2") continue;
      CAPTURE(n);
      for (const auto& x : expected_results(n).normalizer_generators) {
        CAPTURE(x);
        CHECK(member(x, n));
      }
    }
  }

  TEST_CASE("B1 needs the lower-left entry even") {
    Mat bad = blocks(Mat{{1, 0}, {1, 1}}, Mat{{1}});
    NormalizerVerdict v = normalizer_membership(bad, load_group("B1"));
    CHECK_FALSE(v.member);
    CHECK_FALSE(v.witness_translation);
    CHECK(member(blocks(Mat{{1, 0}, {2, 1}}, Mat{{1}}), "B1"));
    CHECK(member(blocks(Mat{{1, 1}, {0, 1}}, Mat{{1}}), "B1"));
  }

  TEST_CASE("O4_2 second block needs the upper-right entry even") {
    Mat two = Mat::identity(2);
    CHECK_FALSE(member(blocks(two, Mat{{1, 1}, {0, 1}}), "O4_2"));
    CHECK(member(blocks(two, Mat{{1, 2}, {0, 1}}), "O4_2"));
    CHECK(member(blocks(two, Mat{{1, 0}, {1, 1}}), "O4_2"));
    CHECK(member(blocks(Mat{{1, 1}, {0, 1}}, two), "O4_2"));
  }

  TEST_CASE("errors") {
    const auto& g = load_group("G2");
    CHECK_THROWS_AS(normalizer_membership(Mat::identity(2), g), DimensionMismatch);
    CHECK_THROWS_AS(normalizer_membership(Mat::zero(3, 3), g), SingularMatrix);
    CHECK_THROWS_AS(normalizer_membership(Mat::diagonal({2, 1, 1}), g), DoesNotPreserveLattice);
  }

  TEST_CASE("witnesses conjugate the group onto itself") {
    for (const char* n : {"B1", "O4_3", "O4_7", "N4_2", "G6"}) {
      const auto& g = load_group(n);
      GroupStructure s = group_structure(g);
      for (const auto& x : expected_results(n).normalizer_generators) {
        NormalizerVerdict v = normalizer_membership(x, g, s);
        REQUIRE(v.member);
        AffineMap by(x, *v.witness_translation);
        std::vector<AffineMap> image;
        for (const auto& f : g.generators) image.push_back(conjugate(f, by));
        CAPTURE(n);
        CAPTURE(x);
        CHECK(same_group(image, g.generators));
      }
    }
  }

  TEST_CASE("B3 bounded enumeration gives the sign matrices") {
    auto members = enumerate_members(load_group("B3"), 2);
    REQUIRE(members.size() == 8);
    std::set<std::string> seen;
    for (const auto& x : members) {
      CHECK((x.transpose() * x).is_identity());
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
          if (i != j) CHECK(x(i, j).is_zero());
      seen.insert(x.to_string());
    }
    CHECK(seen.size() == 8);
  }

  // The holonomy acts on the last two coordinates.
  TEST_CASE("G4 bounded enumeration gives a dihedral group of order 8") {
    auto members = enumerate_members(load_group("G4"), 2);
    REQUIRE(members.size() == 8);
    for (const auto& x : members) {
      CHECK((x.transpose() * x).is_identity());
      for (const auto& y : members)
        CHECK(std::any_of(members.begin(), members.end(), [&](const Mat& z) { return z == x * y; }));
    }
    std::size_t rotations = std::count_if(members.begin(), members.end(),
                                          [](const Mat& x) { return x.determinant() == x(0, 0); });
    CHECK(rotations == 4);
  }

  TEST_CASE("enumeration is sorted and every member passes membership") {
    const auto& g = load_group("N4_17");
    auto members = enumerate_members(g, 2);
    CHECK(std::is_sorted(members.begin(), members.end(), [](const Mat& a, const Mat& b) { return lex_less(a, b); }));
    for (const auto& x : members) CHECK(member(x, "N4_17"));
  }

  TEST_CASE("semidirect verdicts") {
    CHECK(is_semidirect(load_group("G1")));
    CHECK(is_semidirect(load_group("O4_1")));
    CHECK(is_semidirect(load_group("N4_1")));
    CHECK(is_semidirect(load_group("B1")));
    CHECK_FALSE(is_semidirect(load_group("O4_3")));
    CHECK_FALSE(is_semidirect(load_group("O4_7")));
    CHECK_FALSE(is_semidirect(load_group("N4_2")));
  }

  TEST_CASE("membership is equivariant under the integral change of coordinates") {
    for (const auto& n : catalog_names()) {
      const auto& g = load_group(n);
      if (!g.integral_rep) continue;
      CAPTURE(n);
      CatalogEntry h = integral_entry(n);
      const Mat& p = g.integral_rep->conjugator;
      Mat pinv = mat_inverse(p);
      for (const auto& x : expected_results(n).normalizer_generators) {
        CAPTURE(x);
        CHECK(member(x, n) == normalizer_membership(p * x * pinv, h).member);
      }
      for (const auto& y : enumerate_members(h, 1)) CHECK(member(pinv * y * p, n));
    }
  }

  TEST_CASE("enumeration budget") {
    CHECK_THROWS_AS(enumerate_members(load_group("O4_1"), 2), EnumerationBudgetExceeded);
  }
}
