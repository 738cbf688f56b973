#include <doctest.h>

#include "flatmod/bieberbach.hpp"
#include "flatmod/errors.hpp"

using namespace flatmod;

TEST_SUITE("bieberbach") {
  TEST_CASE("every entry is torsion free") {
    for (const auto& n : catalog_names()) {
      CAPTURE(n);
      CHECK(is_torsion_free(load_group(n)));
    }
  }

  TEST_CASE("a rotation without screw has torsion") {
    std::vector<AffineMap> g = load_group("G2").generators;
    g.back().translation = zero_vec(3);
    CatalogEntry bad = make_entry("G2-mutated", g, {unit_vec(3, 0), unit_vec(3, 1), unit_vec(3, 2)}, 2);
    CHECK_FALSE(is_torsion_free(bad));
  }

  TEST_CASE("holonomy closure") {
    HolonomyGroup h = holonomy(load_group("G6"));
    CHECK(h.order() == 4);
    CHECK(h.elements[0].is_identity());
    for (const auto& a : h.elements)
      for (const auto& b : h.elements) CHECK(h.contains(a * b));
    CHECK_THROWS_AS(holonomy({AffineMap::pure_linear(Mat{{1, 1}, {0, 1}})}, 16), ClosureBudgetExceeded);
  }

  TEST_CASE("generator lattice cosets") {
    const auto& b1 = load_group("B1");
    GeneratorLatticeCoset c = generator_lattice_coset(b1, b1.generators.back().linear);
    CHECK(c.base_translation == Vec{Scalar::fraction(1, 2), 0, 0});
    CHECK_THROWS_AS(generator_lattice_coset(b1, Mat::identity(3) * Scalar(-1)), NotInHolonomy);

    const auto& o3 = load_group("O4_3");
    GroupStructure s = group_structure(o3);
    for (std::size_t i = 0; i < s.holonomy.order(); ++i) {
      CHECK(contains(s, AffineMap(s.holonomy.elements[i], s.bases[i])));
      for (const auto& x : s.lattice.coordinates(s.bases[i])) {
        CHECK(x.sign() >= 0);
        CHECK((x - Scalar(1)).sign() < 0);
      }
    }
    Scalar h = Scalar::fraction(1, 2);
    CHECK(s.lattice.contains(Vec{h, 0, 0, h}));
  }

  TEST_CASE("normalizes_holonomy") {
    HolonomyGroup h = holonomy(load_group("B3"));
    CHECK(normalizes_holonomy(Mat::diagonal({-1, 1, 1}), h));
    CHECK_FALSE(normalizes_holonomy(Mat{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}, h));
  }

  TEST_CASE("translation_involved") {
    const auto& b1 = load_group("B1");
    CHECK_FALSE(translation_involved(b1, {Mat::diagonal({1, 1, -1})}));
    CHECK(translation_involved(b1, {Mat{{1, 0, 0}, {2, 1, 0}, {0, 0, 1}}}));
    CHECK_THROWS_AS(translation_involved(b1, {Mat{{1, 0, 0}, {0, 1, 1}, {0, 0, 1}}}), CandidateDoesNotNormalize);
  }

  TEST_CASE("same_group ignores the choice of generators") {
    const auto& g = load_group("G2").generators;
    std::vector<AffineMap> other = g;
    other[0] = compose(g[0], g[1]);
    CHECK(same_group(g, other));
    other[0] = AffineMap::pure_translation(Vec{2, 0, 0});
    other.pop_back();
    CHECK_FALSE(same_group(g, other));
  }
}
