#include <doctest.h>

#include <random>

#include "flatmod/congruence.hpp"
#include "flatmod/errors.hpp"

using namespace flatmod;

namespace {

Word random_word(std::mt19937& rng, std::size_t length) {
  Word w;
  for (std::size_t i = 0; i < length; ++i) w.push_back(static_cast<Letter>(rng() % 3));
  return w;
}

std::vector<std::string> words(const CosetTable& t) {
  std::vector<std::string> out;
  for (const auto& w : t.words) out.push_back(to_string(w));
  return out;
}

}  // namespace

TEST_SUITE("congruence") {
  TEST_CASE("membership examples") {
    CHECK(membership(subgroup("Gamma0(2)"), kT));
    CHECK_FALSE(membership(subgroup("Gamma0(2)"), Mat2{1, 0, 1, 1}));
    CHECK(membership(subgroup("Gamma(2)"), Mat2{1, 2, 0, 1}));
    CHECK(membership(subgroup("Gamma(2)Y+"), kS));
    CHECK_FALSE(membership(subgroup("Gamma(2)+"), Mat2{1, 0, 0, -1}));
    CHECK(membership(subgroup("Gamma(2)"), Mat2{1, 0, 0, -1}));
    CHECK(membership(subgroup("Gamma0_2(3)"), Mat2{-1, 0, 0, -1}));
    CHECK_FALSE(membership(subgroup("Gamma0_1(3)"), Mat2{-1, 0, 0, -1}));
    CHECK(membership(subgroup("Gamma^(2)_3"), Mat{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK_FALSE(membership(subgroup("Gamma0(2)_3"), Mat{{1, 0, 0}, {1, 1, 0}, {0, 0, 1}}));
    for (const auto& n : subgroup_names()) {
      CongruenceSubgroup g = subgroup(n);
      if (g.is_group) CHECK(membership(g, Mat::identity(g.dimension)));
    }
    CHECK_THROWS_AS(membership(subgroup("Gamma0(2)"), Mat2{2, 0, 0, 1}), NotUnimodular);
    CHECK_THROWS_AS(membership(subgroup("Gamma0(2)"), Mat{{1, 1}, {1, 1}}), NotUnimodular);
    CHECK_THROWS_AS(subgroup("Gamma7"), UnknownName);
  }

  TEST_CASE("predicates are closed under products and inverses") {
    std::mt19937 rng(17);
    for (const auto& n : subgroup_names()) {
      CongruenceSubgroup g = subgroup(n);
      if (!g.is_group || g.dimension != 2) continue;
      CAPTURE(n);
      std::vector<Mat2> sample;
      while (sample.size() < 40) {
        Mat2 m = evaluate(random_word(rng, 1 + rng() % 10));
        if (membership(g, m)) sample.push_back(m);
      }
      for (std::size_t i = 0; i < sample.size(); ++i) {
        CHECK(membership(g, sample[i].inverse()));
        CHECK(membership(g, sample[i] * sample[(i * 7 + 3) % sample.size()]));
      }
    }
  }

  TEST_CASE("words") {
    CHECK(to_string(parse_word("TST^-1")) == "TST^-1");
    CHECK(parse_word("TST^{-1}") == parse_word("TST^-1"));
    CHECK(parse_word("Id").empty());
    CHECK(evaluate(parse_word("SS")) == Mat2{-1, 0, 0, -1});
    CHECK(evaluate(parse_word("STSTST")) == Mat2{-1, 0, 0, -1});
    CHECK_THROWS_AS(parse_word("SX"), ParseError);
  }

  TEST_CASE("indices") {
    CHECK(coset_enumerate(subgroup("SL(2,Z)")).index() == 1);
    CHECK(coset_enumerate(subgroup("Gamma0(2)+")).index() == 3);
    CHECK(coset_enumerate(subgroup("Gamma(2)+")).index() == 6);
    CHECK(coset_enumerate(subgroup("Gamma(2)Y+")).index() == 3);
    CHECK(coset_enumerate(subgroup("Gamma(3)+")).index() == 12);
    CHECK(coset_enumerate(subgroup("Gamma0(3)+")).index() == 4);
    CHECK(coset_enumerate(subgroup("Gamma0(4)+")).index() == 6);
    CHECK(coset_enumerate(subgroup("Gamma0(6)+")).index() == 12);
    CHECK_THROWS_AS(coset_enumerate(subgroup("Gamma(3)+"), 5), IndexBudgetExceeded);
    CHECK_THROWS(coset_enumerate(subgroup("Gamma0_2(3)")));
  }

  TEST_CASE("representatives") {
    CHECK(words(coset_enumerate(subgroup("Gamma0(2)+"))) == std::vector<std::string>{"Id", "S", "ST"});
    CHECK(words(coset_enumerate(subgroup("Gamma(2)Y+"))) == std::vector<std::string>{"Id", "T", "TS"});
    CosetTable bfs = coset_enumerate(subgroup("Gamma(2)+"));
    CosetTable listed = coset_table_from_words(subgroup("Gamma(2)+"), {"Id", "S", "ST", "T", "TS", "TST^-1"});
    CHECK(listed.index() == 6);
    // TST^-1 and STS lie in the same coset.
    CHECK(bfs.coset_of(evaluate(parse_word("TST^-1"))) == bfs.coset_of(evaluate(parse_word("STS"))));
    CHECK_THROWS(coset_table_from_words(subgroup("Gamma(2)+"), {"Id", "S", "ST", "T", "TS", "STS", "TST^-1"}));
    CHECK_THROWS(coset_table_from_words(subgroup("Gamma(2)+"), {"Id", "S", "ST"}));
  }

  TEST_CASE("coset tables are sound and complete") {
    for (const char* n : {"Gamma0(2)+", "Gamma(2)+", "Gamma(2)Y+", "Gamma(3)+", "Gamma0(4)+", "Gamma0_1(2,4)+"}) {
      CAPTURE(n);
      CosetTable t = coset_enumerate(subgroup(n));
      for (std::size_t i = 0; i < t.index(); ++i) {
        for (std::size_t j = 0; j < t.index(); ++j)
          if (i != j) CHECK_FALSE(projective_membership(t.subgroup, t.representatives[i] * t.representatives[j].inverse()));
        for (const Mat2& g : {kS, kT, kTInv}) CHECK_NOTHROW(t.coset_of(t.representatives[i] * g));
      }
    }
  }

  TEST_CASE("index is multiplicative") {
    CosetTable small = coset_enumerate(subgroup("Gamma(2)+"));
    std::size_t relative = relative_index(subgroup("Gamma0(2)+"), small);
    CHECK(relative == 2);
    CHECK(small.index() == coset_enumerate(subgroup("Gamma0(2)+")).index() * relative);
  }

  TEST_CASE("the group generated by Gamma0_1(6) and Gamma0_5(6)") {
    CosetTable x = coset_enumerate(subgroup("<Gamma0_1(6),Gamma0_5(6)>+"));
    CosetTable y = coset_enumerate(subgroup("Gamma0(6)+"));
    CHECK(same_coset_table(x, y));
    CHECK_FALSE(same_coset_table(x, coset_enumerate(subgroup("Gamma0_1(2,4)+"))));
    CHECK(membership(subgroup("<Gamma0_1(6),Gamma0_5(6)>"), Mat2{-1, 0, 0, -1}));
    CHECK(membership(subgroup("<Gamma0_1(6),Gamma0_5(6)>"), Mat2{-1, 0, 0, 1}));
    CHECK_FALSE(membership(subgroup("<Gamma0_1(6),Gamma0_5(6)>"), kT));
  }
}
