#include <doctest.h>

#include <random>

#include "flatmod/domain.hpp"
#include "flatmod/errors.hpp"
#include "flatmod/svg.hpp"

using namespace flatmod;

namespace {

bool pairs(const FundamentalDomain& d, const Mat2& g) { return pairs_edges(d, g).has_value(); }

}  // namespace

TEST_SUITE("domain") {
  TEST_CASE("exact points") {
    HPoint rho{Mat2{}, Vertex::Rho};
    CHECK(HPoint{kS * kT, Vertex::Rho} == rho);
    CHECK(HPoint{kS, Vertex::I} == HPoint{Mat2{}, Vertex::I});
    CHECK(HPoint{kT, Vertex::Infinity} == HPoint{Mat2{}, Vertex::Infinity});
    CHECK_FALSE(HPoint{kS, Vertex::Infinity} == HPoint{Mat2{}, Vertex::Infinity});
    CHECK(HPoint{kS, Vertex::Rho} == HPoint{kT, Vertex::Rho});
    CHECK(std::abs(HPoint{kT, Vertex::Rho}.numeric() - std::complex<double>(0.5, std::sqrt(3.0) / 2)) < 1e-12);
  }

  TEST_CASE("standard domain") {
    FundamentalDomain d = domain_for("SL(2,Z)");
    CHECK(d.cell_count() == 1);
    CHECK(d.boundary_edges().size() == 4);
    REQUIRE(d.pairings.size() == 2);
    CHECK(d.pairings[0].matrix == kT);
    CHECK(d.pairings[1].matrix == kS);
    OrbifoldInvariants o = orbifold_invariants(d);
    CHECK(o.genus == 0);
    CHECK(o.cusps == 1);
    CHECK(o.cone_points == std::vector<std::size_t>{2, 3});
    CHECK(o.classification == SurfaceType::OncePuncturedSphere);
  }

  TEST_CASE("Gamma0(2)+") {
    FundamentalDomain d = domain_for("Gamma0(2)+");
    CHECK(d.cell_count() == 3);
    for (const Mat2& g : {kT, Mat2{1, 0, -2, 1}, Mat2{-1, -1, 2, 1}}) CHECK(pairs(d, g));
    CHECK_FALSE(pairs(d, Mat2{1, 0, 1, 1}));
    OrbifoldInvariants o = orbifold_invariants(d);
    CHECK(o.genus == 0);
    CHECK(o.cusps == 2);
    CHECK(o.cone_points == std::vector<std::size_t>{2});
    CHECK(o.classification == SurfaceType::Cylinder);
    CHECK(o.euler_characteristic == 2 - 2 * 0 - 2);
  }

  TEST_CASE("Gamma(2)+") {
    FundamentalDomain d = domain_for("Gamma(2)+");
    CHECK(d.cell_count() == 6);
    OrbifoldInvariants o = orbifold_invariants(d);
    CHECK(o.cusps == 3);
    CHECK(o.cone_points.empty());
    CHECK(o.classification == SurfaceType::ThreePuncturedSphere);

    CosetTable listed = coset_table_from_words(subgroup("Gamma(2)+"), {"Id", "S", "ST", "T", "TS", "TST^-1"});
    FundamentalDomain e = find_side_pairings(build_domain(listed));
    for (const Mat2& g : {Mat2{1, 2, 0, 1}, Mat2{1, 0, -2, 1}, Mat2{-3, 2, -2, 1}}) CHECK(pairs(e, g));
    CHECK(orbifold_invariants(e).classification == SurfaceType::ThreePuncturedSphere);
  }

  TEST_CASE("Gamma(2)Y+ and others") {
    OrbifoldInvariants y = orbifold_invariants(domain_for("Gamma(2)Y+"));
    CHECK(y.classification == SurfaceType::Cylinder);
    CHECK(y.cone_points == std::vector<std::size_t>{2});
    OrbifoldInvariants g3 = orbifold_invariants(domain_for("Gamma0(3)+"));
    CHECK(g3.cusps == 2);
    CHECK(g3.cone_points == std::vector<std::size_t>{3});
    OrbifoldInvariants gamma3 = orbifold_invariants(domain_for("Gamma(3)+"));
    CHECK(gamma3.cusps == 4);
    CHECK(gamma3.genus == 0);
    CHECK_THROWS_AS(domain_for("Gamma0(6)+", 256, 8), PairingIncomplete);
    CHECK(orbifold_invariants(domain_for("Gamma0(6)+", 256, 10)).cusps == 4);
  }

  TEST_CASE("pairings map edges exactly") {
    for (const char* n : {"SL(2,Z)", "Gamma0(2)+", "Gamma(2)+", "Gamma(2)Y+", "Gamma(3)+", "Gamma0(4)+"}) {
      FundamentalDomain d = domain_for(n);
      std::vector<int> uses(d.edges.size(), 0);
      for (const auto& p : d.pairings) {
        CHECK(projective_membership(d.table.subgroup, p.matrix));
        CHECK((evaluate(p.word) == p.matrix || evaluate(p.word) == -p.matrix));
        const Edge& s = d.edges[p.source];
        const Edge& t = d.edges[p.target];
        HPoint a = p.matrix * s.from, b = p.matrix * s.to;
        CHECK(((a == t.from && b == t.to) || (a == t.to && b == t.from)));
        ++uses[p.source];
        ++uses[p.target];
      }
      for (std::size_t i = 0; i < d.edges.size(); ++i) CHECK(uses[i] == (d.edges[i].internal ? 0 : 1));
    }
  }

  TEST_CASE("gl2_to_h2") {
    H2Chart a = gl2_to_h2({{{1, 0}, {0, 1}}});
    CHECK(a.scale == doctest::Approx(1));
    CHECK(std::abs(a.z - std::complex<double>(0, 1)) < 1e-12);
    H2Chart b = gl2_to_h2({{{1, 0}, {0, 2}}});
    CHECK(b.scale == doctest::Approx(2));
    CHECK(std::abs(b.z - std::complex<double>(0, 2)) < 1e-12);
    H2Chart c = gl2_to_h2({{{2, 1}, {0, 1}}});
    CHECK(c.scale == doctest::Approx(2));
    CHECK(std::abs(c.z - std::complex<double>(0.5, 0.5)) < 1e-12);
    CHECK_THROWS_AS(gl2_to_h2({{{1, 2}, {2, 4}}}), SingularMatrix);
  }

  TEST_CASE("gl2_to_h2 is invariant under left orthogonal factors") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> u(-3, 3), angle(0, 6.283185307179586);
    for (int k = 0; k < 100; ++k) {
      std::array<std::array<double, 2>, 2> x{{{u(rng), u(rng)}, {u(rng), u(rng)}}};
      if (std::abs(x[0][0] * x[1][1] - x[0][1] * x[1][0]) < 1e-3) continue;
      double t = angle(rng), flip = k % 2 ? -1.0 : 1.0;
      double q[2][2] = {{std::cos(t), -std::sin(t)}, {flip * std::sin(t), flip * std::cos(t)}};
      std::array<std::array<double, 2>, 2> y{};
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) y[i][j] = q[i][0] * x[0][j] + q[i][1] * x[1][j];
      H2Chart a = gl2_to_h2(x), b = gl2_to_h2(y);
      CHECK(std::abs(a.scale - b.scale) < 1e-10);
      CHECK(std::abs(a.z - b.z) < 1e-10);
      CHECK(a.z.imag() > 0);
    }
  }

  TEST_CASE("reduce_to_domain examples") {
    FundamentalDomain sl = domain_for("SL(2,Z)");
    Reduction a = reduce_to_domain({0, 1}, sl);
    CHECK(a.gamma.is_identity());
    CHECK(std::abs(a.z - std::complex<double>(0, 1)) < 1e-12);
    Reduction b = reduce_to_domain({5, 1}, sl);
    CHECK(b.gamma == Mat2{1, -5, 0, 1});
    CHECK(std::abs(b.z - std::complex<double>(0, 1)) < 1e-12);
    CHECK(b.ambiguous);

    FundamentalDomain g02 = domain_for("Gamma0(2)+");
    Reduction c = reduce_to_domain({0, 0.5}, g02);
    CHECK(membership(g02.table.subgroup, c.gamma));
    CHECK(in_standard_domain(mobius(g02.table.representatives[c.cell].inverse(), c.z)));
  }

  TEST_CASE("reduce_to_domain postconditions") {
    std::mt19937 rng(29);
    std::uniform_real_distribution<double> ux(-4, 4), uy(0.02, 3);
    for (const char* n : {"SL(2,Z)", "Gamma0(2)+", "Gamma(2)+", "Gamma(2)Y+", "Gamma(3)+"}) {
      FundamentalDomain d = domain_for(n);
      for (int k = 0; k < 100; ++k) {
        std::complex<double> z{ux(rng), uy(rng)};
        Reduction r = reduce_to_domain(z, d);
        CHECK(membership(d.table.subgroup, r.gamma));
        CHECK(std::abs(mobius(r.gamma, z) - r.z) < 1e-9);
        CHECK(in_standard_domain(mobius(d.table.representatives[r.cell].inverse(), r.z)));
      }
    }
  }

  TEST_CASE("svg") {
    std::string svg = render_svg(domain_for("Gamma(2)+"), {2.5, 160});
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("[[1, 2], [0, 1]]") != std::string::npos);
    std::size_t paths = 0;
    for (std::size_t p = svg.find("<path"); p != std::string::npos; p = svg.find("<path", p + 1)) ++paths;
    CHECK(paths == 6);
    CHECK(svg == render_svg(domain_for("Gamma(2)+"), {2.5, 160}));
  }
}
