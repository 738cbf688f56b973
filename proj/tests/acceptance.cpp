// One line per acceptance criterion; exit status 1 when any criterion fails.
#include <algorithm>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include <Eigen/Dense>

#include "flatmod/bieberbach.hpp"
#include "flatmod/catalog.hpp"
#include "flatmod/cone.hpp"
#include "flatmod/congruence.hpp"
#include "flatmod/domain.hpp"
#include "flatmod/errors.hpp"
#include "flatmod/moduli.hpp"
#include "flatmod/normalizer.hpp"

using namespace flatmod;

namespace {

struct Failures {
  std::vector<std::string> items;
  void operator()(bool ok, const std::string& what) {
    if (!ok) items.push_back(what);
  }
};

bool is_3d(const std::string& n) { return load_group(n).dimension == 3; }

std::size_t brute_force_dimension(const HolonomyGroup& h) {
  const auto n = static_cast<Eigen::Index>(h.elements[0].rows());
  const Eigen::Index vars = n * n;
  auto var = [n](Eigen::Index i, Eigen::Index j) { return i * n + j; };
  std::vector<Eigen::RowVectorXd> rows;
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

void catalog_integrity(Failures& fail) {
  const std::vector<std::pair<std::string, std::size_t>> orders = {
      {"G1", 1},    {"G2", 2},    {"G3", 3},    {"G4", 4},    {"G5", 6},    {"G6", 4},    {"B1", 2},
      {"B2", 2},    {"B3", 4},    {"B4", 4},    {"O4_1", 1},  {"O4_2", 2},  {"O4_3", 2},  {"O4_4", 3},
      {"O4_5", 3},  {"O4_6", 4},  {"O4_7", 4},  {"O4_8", 6},  {"N4_1", 2},  {"N4_2", 2},  {"N4_14", 2},
      {"N4_15", 4}, {"N4_16", 4}, {"N4_17", 4}, {"N4_18", 4}, {"N4_19", 6}, {"N4_20", 6}, {"N4_21", 6}};
  fail(catalog_names().size() == 28, "catalog size");
  for (const auto& [n, order] : orders) {
    const auto& g = load_group(n);
    for (const auto& f : g.generators) fail(is_isometry(f), n + " generator is not an isometry");
    fail(holonomy(g).order() == order, n + " holonomy order " + std::to_string(holonomy(g).order()));
  }
}

void integral_representations(Failures& fail) {
  std::size_t count = 0;
  for (const auto& n : catalog_names()) {
    if (!load_group(n).integral_rep) continue;
    ++count;
    fail(reproduces_integral_representation(n), n);
  }
  fail(count == 7, "expected 7 integral representations, found " + std::to_string(count));
}

void torsion(Failures& fail) {
  for (const auto& n : catalog_names()) fail(is_torsion_free(load_group(n)), n);
  const auto& g2 = load_group("G2");
  std::vector<AffineMap> gens;
  for (const auto& f : g2.generators) gens.push_back(f.linear.is_identity() ? f : AffineMap(f.linear, Vec(3)));
  CatalogEntry mutated = make_entry("G2-mutated", gens, g2.lattice_generators, 2);
  fail(!is_torsion_free(mutated), "mutated G2 reported torsion-free");
}

void cone_dimensions(Failures& fail) {
  // 3x7 trailing entries: 18 four-dimensional entries in catalog order.
  const std::vector<std::size_t> four = {10, 6, 6, 4, 4, 4, 4, 4, 7, 7, 7, 3, 3, 3, 3, 3, 3, 3};
  const std::vector<std::size_t> three = {6, 4, 2, 2, 2, 3, 4, 4, 3, 3};
  std::size_t i3 = 0, i4 = 0;
  for (const auto& n : catalog_names()) {
    HolonomyGroup h = holonomy(load_group(n));
    std::size_t d = symmetric_commutant(h).dimension;
    std::size_t want = is_3d(n) ? three.at(i3++) : four.at(i4++);
    fail(d == want, n + " dimension " + std::to_string(d) + " expected " + std::to_string(want));
    fail(brute_force_dimension(h) == d, n + " brute-force dimension differs");
  }
  fail(i3 == three.size() && i4 == four.size(), "entry counts");
}

void normalizer_fixtures(Failures& fail) {
  for (const auto& n : catalog_names()) {
    const auto& g = load_group(n);
    GroupStructure s = group_structure(g);
    for (const auto& x : expected_results(n).normalizer_generators)
      fail(normalizer_membership(x, g, s).member, n + " generator " + x.to_string() + " is not a member");
  }
  Mat b1 = Mat::block_diagonal({Mat{{1, 0}, {1, 1}}, Mat{{1}}});
  fail(!normalizer_membership(b1, load_group("B1")).member, "B1 counterexample accepted");

  auto b3 = enumerate_members(load_group("B3"), 2);
  std::set<std::string> signs;
  for (int a : {-1, 1})
    for (int b : {-1, 1})
      for (int c : {-1, 1}) signs.insert(Mat::diagonal({a, b, c}).to_string());
  std::set<std::string> got;
  for (const auto& x : b3) got.insert(x.to_string());
  fail(b3.size() == 8 && got == signs, "B3 enumeration is not the 8 sign matrices");

  auto g4 = enumerate_members(load_group("G4"), 2);
  bool dihedral = g4.size() == 8;
  std::size_t rotations = 0;
  for (const auto& x : g4) {
    dihedral = dihedral && (x.transpose() * x).is_identity();
    if (x.determinant() == x(0, 0)) ++rotations;
    for (const auto& y : g4)
      dihedral = dihedral && std::any_of(g4.begin(), g4.end(), [&](const Mat& z) { return z == x * y; });
  }
  bool has_order_four = std::any_of(g4.begin(), g4.end(), [](const Mat& x) {
    Mat x2 = x * x;
    return !x2.is_identity() && (x2 * x2).is_identity();
  });
  fail(dihedral && rotations == 4 && has_order_four, "G4 enumeration is not dihedral of order 8");
}

void semidirect(Failures& fail) {
  for (const char* n : {"O4_3", "O4_7", "N4_2"}) fail(!is_semidirect(load_group(n), 2), std::string(n) + " split");
  for (const char* n : {"N4_1", "T3", "T4"}) fail(is_semidirect(load_group(n), 2), std::string(n) + " not split");
}

void indices(Failures& fail) {
  auto index = [](const char* id) { return coset_enumerate(subgroup(id)).index(); };
  fail(index("Gamma0(2)+") == 3, "Gamma0(2)+");
  fail(index("Gamma(2)+") == 6, "Gamma(2)+");
  fail(index("Gamma(2)Y+") == 3, "Gamma(2)Y+");
  fail(index("Gamma(3)+") == 12, "Gamma(3)+");
  fail(same_coset_table(coset_enumerate(subgroup("<Gamma0_1(6),Gamma0_5(6)>+")),
                        coset_enumerate(subgroup("Gamma0(6)+"))),
       "generated group differs from Gamma0(6)");
}

void domains(Failures& fail) {
  FundamentalDomain g02 = domain_for("Gamma0(2)+", 256, 8);
  fail(g02.cell_count() == 3, "Gamma0(2)+ cells");
  for (const Mat2& g : {kT, Mat2{1, 0, -2, 1}, Mat2{-1, -1, 2, 1}})
    fail(pairs_edges(g02, g).has_value(), "Gamma0(2)+ pairing " + to_string(g));
  FundamentalDomain g2 = find_side_pairings(
      build_domain(coset_table_from_words(subgroup("Gamma(2)+"), {"Id", "S", "ST", "T", "TS", "TST^-1"})), 8);
  fail(g2.cell_count() == 6, "Gamma(2)+ cells");
  for (const Mat2& g : {Mat2{1, 2, 0, 1}, Mat2{1, 0, -2, 1}, Mat2{-3, 2, -2, 1}})
    fail(pairs_edges(g2, g).has_value(), "Gamma(2)+ pairing " + to_string(g));
}

void orbifolds(Failures& fail) {
  OrbifoldInvariants sl = orbifold_invariants(domain_for("SL(2,Z)"));
  fail(sl.genus == 0 && sl.cusps == 1 && sl.cone_points == std::vector<std::size_t>{2, 3}, "SL(2,Z) " + sl.describe());
  OrbifoldInvariants a = orbifold_invariants(domain_for("Gamma0(2)+"));
  fail(a.classification == SurfaceType::Cylinder && a.cusps == 2 && a.cone_points == std::vector<std::size_t>{2},
       "Gamma0(2)+ " + a.describe());
  OrbifoldInvariants b = orbifold_invariants(domain_for("Gamma(2)+"));
  fail(b.classification == SurfaceType::ThreePuncturedSphere && b.cusps == 3 && b.cone_points.empty(),
       "Gamma(2)+ " + b.describe());
  OrbifoldInvariants c = orbifold_invariants(domain_for("Gamma(2)Y+"));
  fail(c.classification == SurfaceType::Cylinder, "Gamma(2)Y+ " + c.describe());
}

void headline(Failures& fail) {
  std::vector<std::string> non_contractible;
  for (const auto& n : catalog_names()) {
    ModuliExpression m = moduli_descriptor(load_group(n));
    const ExpectedResults& e = expected_results(n);
    fail(m.factor_dimension() == m.teichmuller_dim, n + " factor dimensions");
    fail(m.premise_failures.empty(), n + " premises");
    fail(m.to_string() == e.moduli_text, n + " expression " + m.to_string());
    if (is_3d(n) && m.topology == Topology::NonContractible) {
      non_contractible.push_back(n);
      fail(m.topology_description == "S^1 x R^3", n + " shape " + m.topology_description);
    }
    if (n.rfind("N4_", 0) == 0 && n != "N4_1" && n != "N4_2")
      fail(m.topology == Topology::Contractible || m.topology == Topology::ExternalCitation, n + " topology");
    if (n == "O4_2") fail(m.topology_description == "S^1 x R^5", "O4_2 shape " + m.topology_description);
    if (n == "O4_7")
      fail(m.topology_description == "3-punctured sphere x R^2", "O4_7 shape " + m.topology_description);
  }
  fail(non_contractible == std::vector<std::string>{"B1", "B2"}, "non-contractible 3D entries");
  for (const auto& r : verify_all())
    for (const auto& c : r.claims)
      fail(c.status != ClaimStatus::Fail, "verify " + r.entry + " " + c.id + ": " + c.witness);
}

void properties(Failures& fail) {
  for (const auto& n : catalog_names()) {
    HolonomyGroup h = holonomy(load_group(n));
    bool orthogonal = std::all_of(h.elements.begin(), h.elements.end(),
                                  [](const Mat& a) { return (a.transpose() * a).is_identity(); });
    if (orthogonal) fail(commuting_symmetric(h).dimension == symmetric_commutant(h).dimension, n + " forms");
  }

  for (const auto& n : catalog_names()) {
    const auto& g = load_group(n);
    if (!g.integral_rep) continue;
    CatalogEntry h = integral_entry(n);
    const Mat& p = g.integral_rep->conjugator;
    Mat pinv = mat_inverse(p);
    std::vector<Mat> xs = expected_results(n).normalizer_generators;
    for (const auto& x : xs)
      fail(normalizer_membership(x, g).member == normalizer_membership(p * x * pinv, h).member,
           n + " equivariance " + x.to_string());
  }

  std::mt19937 rng(101);
  std::uniform_real_distribution<double> u(-3, 3), angle(0, 6.283185307179586);
  for (int k = 0; k < 100;) {
    std::array<std::array<double, 2>, 2> x{{{u(rng), u(rng)}, {u(rng), u(rng)}}};
    if (std::abs(x[0][0] * x[1][1] - x[0][1] * x[1][0]) < 1e-3) continue;
    ++k;
    double t = angle(rng), flip = k % 2 ? -1.0 : 1.0;
    double q[2][2] = {{std::cos(t), -std::sin(t)}, {flip * std::sin(t), flip * std::cos(t)}};
    std::array<std::array<double, 2>, 2> y{};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) y[i][j] = q[i][0] * x[0][j] + q[i][1] * x[1][j];
    H2Chart a = gl2_to_h2(x), b = gl2_to_h2(y);
    fail(std::abs(a.scale - b.scale) <= 1e-10 && std::abs(a.z - b.z) <= 1e-10, "gl2_to_h2 invariance");
  }

  std::uniform_real_distribution<double> ux(-4, 4), uy(0.02, 3);
  for (const char* id : {"SL(2,Z)", "Gamma0(2)+", "Gamma(2)+", "Gamma(2)Y+"}) {
    FundamentalDomain d = domain_for(id);
    for (int k = 0; k < 100; ++k) {
      std::complex<double> z{ux(rng), uy(rng)};
      Reduction r = reduce_to_domain(z, d);
      bool ok = membership(d.table.subgroup, r.gamma) && std::abs(mobius(r.gamma, z) - r.z) < 1e-9 &&
                in_standard_domain(mobius(d.table.representatives[r.cell].inverse(), r.z));
      fail(ok, std::string(id) + " reduction");
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Failures&)>>> criteria = {
      {"catalog integrity", catalog_integrity},
      {"integral representations", integral_representations},
      {"torsion-freeness", torsion},
      {"cone dimensions", cone_dimensions},
      {"normalizer fixtures", normalizer_fixtures},
      {"semidirect verdicts", semidirect},
      {"congruence indices", indices},
      {"fundamental domains", domains},
      {"orbifold classifications", orbifolds},
      {"moduli verdicts and verify all", headline},
      {"property suites", properties},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Failures f;
    try {
      criteria[i].second(f);
    } catch (const std::exception& e) {
      f.items.push_back(std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << i + 1 << ": " << (f.items.empty() ? "PASS" : "FAIL") << " " << criteria[i].first;
    if (!f.items.empty()) {
      std::set<std::string> unique(f.items.begin(), f.items.end());
      std::cout << " (";
      std::size_t k = 0;
      for (const auto& s : unique) std::cout << (k++ ? "; " : "") << s;
      std::cout << ")";
      ++failed;
    }
    std::cout << "\n";
  }
  return failed == 0 ? 0 : 1;
}
