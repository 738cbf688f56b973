#include "flatmod/catalog.hpp"

#include <algorithm>
#include <map>

#include "flatmod/errors.hpp"

namespace flatmod {

namespace {

Scalar q(long p, long d = 1) { return Scalar::fraction(p, d); }
// (p/d) sqrt 3
Scalar r3(long p, long d = 1) { return Scalar::fraction(0, 1, p, d); }

Vec vec(std::initializer_list<Scalar> xs) { return Vec(xs); }
Vec e(std::size_t n, std::size_t i) { return unit_vec(n, i - 1); }

AffineMap t(std::size_t n, std::size_t i) { return AffineMap::pure_translation(e(n, i)); }
AffineMap shift(const Vec& v) { return AffineMap::pure_translation(v); }
AffineMap gen(const Mat& a, const Vec& v) { return AffineMap(a, v); }

Mat one(long x) { return Mat{{Scalar(x)}}; }
Mat id(std::size_t n) { return Mat::identity(n); }
Mat diag(std::initializer_list<long> xs) {
  Vec d;
  for (long x : xs) d.push_back(Scalar(x));
  return Mat::diagonal(d);
}
Mat blocks(std::initializer_list<Mat> bs) { return Mat::block_diagonal(bs); }
// R(k * 30 degrees)
Mat R(int k) { return rotation_30(k); }
Mat E0() { return reflection_e0(); }

const Mat T2{{1, 1}, {0, 1}};
const Mat S2{{0, -1}, {1, 0}};
const Mat Y2{{0, 1}, {1, 0}};

std::vector<AffineMap> standard_translations(std::size_t n) {
  std::vector<AffineMap> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(t(n, i));
  return out;
}

std::vector<Vec> translation_vectors(const std::vector<AffineMap>& gens) {
  std::vector<Vec> out;
  for (const auto& g : gens)
    if (g.linear.is_identity()) out.push_back(g.translation);
  return out;
}

struct Tables {
  std::vector<std::string> names;
  std::map<std::string, CatalogEntry> entries;
  std::map<std::string, ExpectedResults> expected;
};

void add(Tables& tb, const std::string& name, bool orientable, std::size_t order, std::vector<AffineMap> gens,
         std::vector<Vec> extra_lattice = {}) {
  std::vector<Vec> lat = translation_vectors(gens);
  lat.insert(lat.end(), extra_lattice.begin(), extra_lattice.end());
  CatalogEntry c = make_entry(name, std::move(gens), std::move(lat), order);
  c.orientable = orientable;
  tb.names.push_back(name);
  tb.entries[name] = std::move(c);
}

void integral(Tables& tb, const std::string& name, Mat p, std::vector<AffineMap> gens) {
  tb.entries[name].integral_rep = IntegralRepresentation{std::move(p), std::move(gens)};
}

TemplateBlock finite(std::vector<std::size_t> coords, std::size_t k) {
  TemplateBlock b;
  b.kind = TemplateBlock::Kind::Finite;
  b.coords = std::move(coords);
  b.k = k;
  return b;
}

TemplateBlock dc(std::vector<std::size_t> coords, std::string subgroup) {
  TemplateBlock b;
  b.kind = TemplateBlock::Kind::DoubleCoset;
  b.coords = std::move(coords);
  b.subgroup = std::move(subgroup);
  return b;
}

std::vector<Mat> gl3_generators() {
  return {Mat{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}, Mat{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}},
          Mat{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}, diag({-1, 1, 1})};
}

void build_groups(Tables& tb) {
  // dimension 3
  add(tb, "G1", true, 1, standard_translations(3));
  {
    auto g = standard_translations(3);
    g.push_back(gen(blocks({one(1), R(6)}), vec({q(1, 2), 0, 0})));
    add(tb, "G2", true, 2, g, {e(3, 1)});
  }
  for (auto [name, k, frac, order] : {std::tuple{"G3", 4, 3L, 3UL}, std::tuple{"G5", 2, 6L, 6UL}}) {
    Mat a = blocks({one(1), R(k)});
    Vec ae2 = a * e(3, 2);
    Vec a2e2 = a * ae2;
    std::vector<AffineMap> g{t(3, 1), shift(ae2), shift(a2e2), gen(a, vec({q(1, frac), 0, 0}))};
    add(tb, name, true, order, g);
  }
  {
    auto g = standard_translations(3);
    g.push_back(gen(blocks({one(1), R(3)}), vec({q(1, 4), 0, 0})));
    add(tb, "G4", true, 4, g);
  }
  // G3 and G5 were inserted together; restore catalog order G3, G4, G5.
  std::iter_swap(std::find(tb.names.begin(), tb.names.end(), "G5"), std::find(tb.names.begin(), tb.names.end(), "G4"));
  {
    auto g = standard_translations(3);
    g.push_back(gen(blocks({one(1), R(6)}), vec({q(1, 2), 0, 0})));
    g.push_back(gen(blocks({one(-1), E0()}), vec({0, q(1, 2), q(1, 2)})));
    add(tb, "G6", true, 4, g);
  }
  const Mat eps = blocks({one(1), E0()});
  {
    auto g = standard_translations(3);
    g.push_back(gen(eps, vec({q(1, 2), 0, 0})));
    add(tb, "B1", false, 2, g);
  }
  {
    std::vector<AffineMap> g{t(3, 1), t(3, 2), shift(vec({q(1, 2), q(1, 2), 1})), gen(eps, vec({q(1, 2), 0, 0}))};
    add(tb, "B2", false, 2, g);
  }
  {
    auto g = standard_translations(3);
    g.push_back(gen(blocks({one(1), R(6)}), vec({q(1, 2), 0, 0})));
    g.push_back(gen(eps, vec({0, q(1, 2), 0})));
    add(tb, "B3", false, 4, g);
  }
  {
    auto g = standard_translations(3);
    g.push_back(gen(blocks({one(1), R(6)}), vec({q(1, 2), 0, 0})));
    g.push_back(gen(eps, vec({0, q(1, 2), q(1, 2)})));
    add(tb, "B4", false, 4, g);
  }

  // dimension 4
  const Vec hex = vec({0, 0, q(1, 2), r3(1, 2)});  // 1/2 e3 + sqrt3/2 e4
  add(tb, "O4_1", true, 1, standard_translations(4));
  {
    auto g = standard_translations(4);
    g.push_back(gen(blocks({R(6), id(2)}), vec({0, 0, 0, q(1, 2)})));
    add(tb, "O4_2", true, 2, g);
  }
  {
    std::vector<AffineMap> g{t(4, 1), t(4, 2), t(4, 3), shift(vec({q(1, 2), 0, 0, q(1, 2)})),
                             gen(blocks({id(2), R(6)}), vec({0, q(1, 2), 0, 0}))};
    add(tb, "O4_3", true, 2, g);
  }
  {
    std::vector<AffineMap> g{t(4, 1), t(4, 2), t(4, 3), shift(hex),
                             gen(blocks({id(2), R(4)}), vec({0, q(1, 3), 0, 0}))};
    add(tb, "O4_4", true, 3, g);
  }
  {
    std::vector<AffineMap> g{t(4, 1), t(4, 2), shift(vec({0, q(-1, 3), r3(2, 3), 0})),
                             shift(vec({0, q(1, 3), r3(1, 3), 1})),
                             gen(blocks({id(2), R(4)}), vec({q(1, 3), 0, 0, 0}))};
    add(tb, "O4_5", true, 3, g);
  }
  {
    auto g = standard_translations(4);
    g.push_back(gen(blocks({id(2), R(3)}), vec({0, q(1, 4), 0, 0})));
    add(tb, "O4_6", true, 4, g);
  }
  {
    std::vector<AffineMap> g{t(4, 1), t(4, 2), shift(vec({q(1, 2), q(1, 2), 1, 0})),
                             shift(vec({q(1, 2), q(1, 2), 0, 1})),
                             gen(blocks({id(2), R(3)}), vec({0, q(1, 4), 0, 0}))};
    add(tb, "O4_7", true, 4, g);
  }
  {
    std::vector<AffineMap> g{t(4, 1), t(4, 2), t(4, 3), shift(hex),
                             gen(blocks({id(2), R(2)}), vec({0, q(1, 6), 0, 0}))};
    add(tb, "O4_8", true, 6, g);
  }
  const Mat n1 = blocks({id(2), E0()});
  {
    auto g = standard_translations(4);
    g.push_back(gen(n1, vec({q(1, 2), 0, 0, 0})));
    add(tb, "N4_1", false, 2, g);
  }
  {
    std::vector<AffineMap> g{t(4, 1), t(4, 2), t(4, 3), shift(vec({0, 0, q(1, 2), q(1, 2)})),
                             gen(n1, vec({q(1, 2), 0, 0, 0}))};
    add(tb, "N4_2", false, 2, g);
  }
  {
    auto g = standard_translations(4);
    g.push_back(gen(blocks({-id(2), -E0()}), vec({0, 0, 0, q(1, 2)})));
    add(tb, "N4_14", false, 2, g);
  }
  {
    auto g = standard_translations(4);
    g.push_back(gen(blocks({-E0(), R(3)}), vec({0, q(1, 4), 0, 0})));
    add(tb, "N4_15", false, 4, g);
  }
  {
    std::vector<AffineMap> g{shift(vec({q(1, 2), q(1, 2), q(1, 2), 0})), shift(vec({q(-1, 2), q(1, 2), q(-1, 2), 0})),
                             shift(vec({q(-1, 2), q(-1, 2), q(1, 2), 0})), t(4, 4),
                             gen(blocks({-R(3), -E0()}), vec({0, 0, 0, q(1, 4)}))};
    add(tb, "N4_16", false, 4, g);
  }
  {
    auto g = standard_translations(4);
    g.push_back(gen(blocks({Y2, R(3)}), vec({0, q(1, 2), 0, 0})));
    add(tb, "N4_17", false, 4, g);
  }
  {
    std::vector<AffineMap> g{t(4, 1), t(4, 2), shift(vec({q(1, 2), q(1, 2), 1, 0})),
                             shift(vec({q(1, 2), q(1, 2), 0, 1})),
                             gen(blocks({E0(), R(9)}), vec({q(1, 4), q(1, 4), q(1, 2), 0}))};
    add(tb, "N4_18", false, 4, g);
  }
  {
    std::vector<AffineMap> g{t(4, 1), t(4, 2), t(4, 3), shift(hex),
                             gen(blocks({-E0(), R(4)}), vec({0, q(1, 6), 0, 0}))};
    add(tb, "N4_19", false, 6, g);
  }
  {
    std::vector<AffineMap> g{t(4, 1), t(4, 2), t(4, 3), shift(hex),
                             gen(blocks({-E0(), -R(4)}), vec({0, q(1, 6), 0, 0}))};
    add(tb, "N4_20", false, 6, g);
  }
  {
    auto g = standard_translations(4);
    g.push_back(gen(Mat{{1, 0, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}, {0, -1, 0, 0}}, vec({q(1, 6), 0, 0, 0})));
    add(tb, "N4_21", false, 6, g);
  }

  // integral representations
  const Mat p45 = blocks({id(2), Mat{{-1, r3(1, 3)}, {-1, r3(-1, 3)}}});
  const Mat p8 = blocks({id(2), Mat{{1, r3(-1, 3)}, {0, r3(2, 3)}}});
  const Mat a45 = blocks({id(2), Mat{{0, -1}, {1, -1}}});
  {
    auto g = standard_translations(4);
    g.push_back(gen(a45, vec({0, q(1, 3), 0, 0})));
    integral(tb, "O4_4", p45, g);
  }
  {
    std::vector<AffineMap> g{t(4, 1), t(4, 2), shift(vec({0, q(-1, 3), r3(-2, 3), r3(-2, 3)})),
                             shift(vec({0, q(1, 3), 0, r3(-2, 3)})), gen(a45, vec({q(1, 3), 0, 0, 0}))};
    integral(tb, "O4_5", p45, g);
  }
  {
    auto g = standard_translations(4);
    g.push_back(gen(blocks({id(2), Mat{{0, -1}, {1, 1}}}), vec({0, q(1, 6), 0, 0})));
    integral(tb, "O4_8", p8, g);
  }
  {
    auto g = standard_translations(4);
    g.push_back(gen(Mat{{-1, 1, 0, 0}, {-1, 0, 1, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}}, vec({0, 0, 0, q(1, 4)})));
    integral(tb, "N4_16", Mat{{0, 1, 1, 0}, {-1, 1, 0, 0}, {-1, 0, 1, 0}, {0, 0, 0, 1}}, g);
  }
  {
    auto g = standard_translations(4);
    g.push_back(gen(Mat{{1, 0, 1, 0}, {0, -1, 0, -1}, {0, 0, 0, 1}, {0, 0, -1, 0}}, vec({0, 0, q(1, 2), 0})));
    integral(tb, "N4_18",
             Mat{{1, 0, q(-1, 2), q(-1, 2)}, {0, 1, q(-1, 2), q(-1, 2)}, {0, 0, 1, 0}, {0, 0, 0, 1}}, g);
  }
  {
    auto g = standard_translations(4);
    g.push_back(gen(blocks({-E0(), Mat{{-1, -1}, {1, 0}}}), vec({0, q(1, 6), 0, 0})));
    integral(tb, "N4_19", p8, g);
  }
  {
    auto g = standard_translations(4);
    g.push_back(gen(blocks({-E0(), Mat{{1, 1}, {-1, 0}}}), vec({0, q(1, 6), 0, 0})));
    integral(tb, "N4_20", p8, g);
  }
}

ExpectedResults named(std::string name) {
  ExpectedResults r;
  r.name = std::move(name);
  return r;
}

void expect(Tables& tb, ExpectedResults r) {
  std::string name = r.name;
  tb.expected[name] = std::move(r);
}

void build_expected(Tables& tb) {
  using TT = TopologyTag;
  const Mat G0_2low{{1, 0}, {2, 1}};
  {
    ExpectedResults r = named("G1");
    r.teichmuller_dim = 6;
    r.normalizer_generators = gl3_generators();
    r.normalizer_predicate = "GL(3,Z)";
    r.semidirect = true;
    r.moduli_template = {dc({0, 1, 2}, "GL(3,Z)")};
    r.moduli_text = "O(3)\\GL(3,R)/GL(3,Z)";
    r.topology_verdict = TT::ExternalCitation;
    expect(tb, r);
  }
  {
    ExpectedResults r = named("G2");
    r.teichmuller_dim = 4;
    r.normalizer_generators = {blocks({one(-1), id(2)}), blocks({one(1), T2}), blocks({one(1), S2}),
                               blocks({one(1), E0()})};
    r.normalizer_predicate = "+-1 + GL(2,Z)";
    r.moduli_template = {finite({0}, 1), dc({1, 2}, "GL(2,Z)")};
    r.moduli_text = "R+ x O(2)\\GL(2,R)/GL(2,Z)";
    r.topology_verdict = TT::Contractible;
    r.topology_description = "R^4";
    expect(tb, r);
  }
  for (auto [name, rot, second] : {std::tuple{"G3", 2, blocks({one(-1), E0()})},
                                   std::tuple{"G4", 3, blocks({one(-1), E0()})},
                                   std::tuple{"G5", 2, blocks({R(6), one(1)})}}) {
    ExpectedResults r = named(name);
    r.teichmuller_dim = 2;
    r.normalizer_generators = {blocks({one(1), R(rot)}), second};
    r.moduli_template = {finite({0}, 1), finite({1, 2}, 1)};
    r.moduli_text = "(R+)^2";
    r.topology_verdict = TT::Contractible;
    r.topology_description = "R^2";
    expect(tb, r);
  }
  {
    ExpectedResults r = named("G6");
    r.teichmuller_dim = 3;
    r.normalizer_generators = {diag({-1, 1, 1}), diag({1, -1, 1}), diag({1, 1, -1}),
                               Mat{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}, Mat{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}};
    r.normalizer_predicate = "diag(+-1,+-1,+-1) x| S_3";
    r.moduli_template = {finite({0, 1, 2}, 3)};
    r.moduli_text = "(R+)^3";
    r.topology_verdict = TT::Contractible;
    r.topology_description = "R^3";
    expect(tb, r);
  }
  {
    ExpectedResults r = named("B1");
    r.teichmuller_dim = 4;
    r.normalizer_generators = {blocks({T2, one(1)}), blocks({G0_2low, one(1)}), blocks({-id(2), one(1)}),
                               blocks({E0(), one(1)}), blocks({id(2), one(-1)})};
    r.normalizer_non_members = {blocks({Mat{{1, 0}, {1, 1}}, one(1)})};
    r.normalizer_predicate = "Gamma0(2) + +-1";
    r.semidirect = true;
    r.moduli_template = {dc({0, 1}, "Gamma0(2)"), finite({2}, 1)};
    r.moduli_text = "O(2)\\GL(2,R)/Gamma0(2) x R+";
    r.topology_verdict = TT::CylinderType;
    r.topology_description = "S^1 x R^3";
    expect(tb, r);
  }
  {
    ExpectedResults r = named("B2");
    r.teichmuller_dim = 4;
    r.normalizer_generators = {blocks({Mat{{1, 2}, {0, 1}}, one(1)}), blocks({G0_2low, one(1)}),
                               blocks({-id(2), one(1)}), blocks({E0(), one(1)}), blocks({id(2), one(-1)}),
                               blocks({Y2, one(-1)})};
    r.normalizer_predicate = "(Gamma(2) + +-1) . <Y + -1>";
    r.moduli_template = {dc({0, 1}, "Gamma(2)Y"), finite({2}, 1)};
    r.moduli_text = "O(2)\\GL(2,R)/Gamma(2)Y x R+";
    r.topology_verdict = TT::CylinderType;
    r.topology_description = "S^1 x R^3";
    expect(tb, r);
  }
  for (const char* name : {"B3", "B4"}) {
    ExpectedResults r = named(name);
    r.teichmuller_dim = 3;
    r.normalizer_generators = {diag({-1, 1, 1}), diag({1, -1, 1}), diag({1, 1, -1})};
    r.normalizer_predicate = "diag(+-1,+-1,+-1)";
    r.moduli_template = {finite({0}, 1), finite({1}, 1), finite({2}, 1)};
    r.moduli_text = "(R+)^3";
    r.topology_verdict = TT::Contractible;
    r.topology_description = "R^3";
    expect(tb, r);
  }

  {
    ExpectedResults r = named("O4_1");
    r.cone_description = {"GL(4,R)"};
    r.teichmuller_dim = 10;
    r.normalizer_generators = {Mat{{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}},
                               Mat{{0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}, diag({-1, 1, 1, 1})};
    r.normalizer_predicate = "GL(4,Z)";
    r.semidirect = true;
    r.moduli_template = {dc({0, 1, 2, 3}, "GL(4,Z)")};
    r.moduli_text = "O(4)\\GL(4,R)/GL(4,Z)";
    r.topology_verdict = TT::ExternalCitation;
    expect(tb, r);
  }
  {
    ExpectedResults r = named("O4_2");
    r.cone_description = {"GL(2,R)", "GL(2,R)"};
    r.teichmuller_dim = 6;
    r.normalizer_generators = {blocks({T2, id(2)}),       blocks({S2, id(2)}),    blocks({E0(), id(2)}),
                               blocks({id(2), T2}),       blocks({id(2), G0_2low}), blocks({id(2), -id(2)}),
                               blocks({id(2), E0()})};
    r.normalizer_predicate = "GL(2,Z) + Gamma0(2)";
    r.moduli_template = {dc({0, 1}, "GL(2,Z)"), dc({2, 3}, "Gamma0(2)")};
    r.moduli_text = "O(2)\\GL(2,R)/GL(2,Z) x O(2)\\GL(2,R)/Gamma0(2)";
    r.topology_verdict = TT::CylinderType;
    r.topology_description = "S^1 x R^5";
    expect(tb, r);
  }
  {
    ExpectedResults r = named("O4_3");
    r.cone_description = {"GL(2,R)", "GL(2,R)"};
    r.teichmuller_dim = 6;
    r.normalizer_generators = {blocks({Mat{{1, 2}, {0, 1}}, id(2)}), blocks({G0_2low, id(2)}),
                               blocks({-id(2), id(2)}),
                               blocks({E0(), id(2)}),
                               blocks({id(2), Mat{{1, 0}, {1, 1}}}),
                               blocks({id(2), Mat{{1, 2}, {0, 1}}}),
                               blocks({id(2), -id(2)}),
                               blocks({id(2), E0()}),
                               blocks({T2, id(2)})};
    r.normalizer_predicate = "(Gamma(2) + Gamma0(2)t) . <xi>";
    r.semidirect = false;
    r.moduli_template = {dc({0, 1}, "Gamma0(2)"), dc({2, 3}, "Gamma0(2)t")};
    r.moduli_text = "O(2)\\GL(2,R)/Gamma0(2) x O(2)\\GL(2,R)/Gamma0(2)t";
    expect(tb, r);
  }
  struct Cyclic {
    const char* name;
    std::vector<Mat> b;
    Mat rb;
    std::vector<Mat> c;
    Mat rc;
    const char* predicate;
    const char* subgroup;
  };
  const std::vector<Cyclic> cyclic = {
      {"O4_4", {id(2), Mat{{1, 0}, {1, 1}}, Mat{{1, 3}, {0, 1}}, diag({-1, 1})}, R(2),
       {E0(), -id(2), Mat{{1, 0}, {1, -1}}}, E0(), "<B + R(pi/3), C + E0 | B in Gamma0_1(3), C in Gamma0_2(3)>",
       "Gamma0(3)"},
      {"O4_5", {E0(), Mat{{1, 3}, {0, -1}}, Mat{{1, 0}, {3, -1}}}, R(2),
       {diag({-1, 1}), Mat{{-1, 3}, {0, 1}}, Mat{{-1, 0}, {3, 1}}}, E0(),
       "<B + R(pi/3), C + E0 | B in Gamma1_2(3), C in Gamma2_1(3)>", "Gamma(3)"},
      {"O4_6", {id(2), Mat{{1, 0}, {1, 1}}, Mat{{1, 4}, {0, 1}}, diag({-1, 1})}, R(9),
       {E0(), -id(2), Mat{{1, 0}, {1, -1}}}, Y2, "<B + R(3pi/2), C + Y | B in Gamma0_1(4), C in Gamma0_3(4)>",
       "Gamma0(4)"},
      {"O4_7", {id(2), G0_2low, Mat{{1, 4}, {0, 1}}, diag({-1, 1})}, R(9), {E0(), -id(2), Mat{{1, 0}, {2, -1}}},
       Y2, "<B + R(3pi/2), C + Y | B in Gamma0_1(2,4), C in Gamma0_3(2,4)> . <xi>", "Gamma(2)"},
      {"O4_8", {id(2), Mat{{1, 0}, {1, 1}}, Mat{{1, 6}, {0, 1}}, diag({-1, 1})}, R(2),
       {E0(), -id(2), Mat{{1, 0}, {1, -1}}}, -E0(), "<B + R(pi/3), C + -E0 | B in Gamma0_1(6), C in Gamma0_5(6)>",
       "<Gamma0_1(6),Gamma0_5(6)>"},
  };
  for (const auto& c : cyclic) {
    ExpectedResults r = named(c.name);
    r.cone_description = {"GL(2,R)", "R+ x O(2)"};
    r.teichmuller_dim = 4;
    for (const auto& b : c.b) r.normalizer_generators.push_back(blocks({b, c.rb}));
    for (const auto& x : c.c) r.normalizer_generators.push_back(blocks({x, c.rc}));
    r.normalizer_predicate = c.predicate;
    r.moduli_template = {dc({0, 1}, c.subgroup), finite({2, 3}, 1)};
    r.moduli_text = std::string("O(2)\\GL(2,R)/") + c.subgroup + " x R+";
    tb.expected[c.name] = r;
  }
  {
    auto& r = tb.expected["O4_5"];
    r.semidirect = true;
  }
  {
    auto& r = tb.expected["O4_7"];
    r.normalizer_generators.push_back(blocks({Mat{{1, 2}, {0, 1}}, E0()}));
    r.semidirect = false;
    r.topology_verdict = TT::PuncturedSphereType;
    r.topology_description = "3-punctured sphere x R^2";
  }

  const std::vector<Mat> gamma0_2_3 = {Mat{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}, Mat{{1, 0, 0}, {2, 1, 0}, {0, 0, 1}},
                                       Mat{{1, 0, 0}, {0, 1, 0}, {2, 0, 1}}, Mat{{1, 0, 0}, {0, 1, 1}, {0, 0, 1}},
                                       Mat{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}, diag({-1, 1, 1})};
  {
    ExpectedResults r = named("N4_1");
    r.cone_description = {"GL(3,R)", "R*"};
    r.teichmuller_dim = 7;
    for (const auto& b : gamma0_2_3) {
      r.normalizer_generators.push_back(blocks({b, one(1)}));
      r.normalizer_generators.push_back(blocks({b, one(-1)}));
    }
    r.normalizer_predicate = "<B + +-1 | B in Gamma0(2)_3>";
    r.semidirect = true;
    r.moduli_template = {dc({0, 1, 2}, "Gamma0(2)_3"), finite({3}, 1)};
    r.moduli_text = "O(3)\\GL(3,R)/Gamma0(2)_3 x R+";
    r.topology_verdict = TT::ExternalCitation;
    expect(tb, r);
  }
  {
    ExpectedResults r = named("N4_2");
    r.cone_description = {"GL(3,R)", "R*"};
    r.teichmuller_dim = 7;
    for (const auto& b : {Mat{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}, Mat{{1, 0, 0}, {2, 1, 0}, {0, 0, 1}},
                          Mat{{1, 0, 0}, {0, 1, 0}, {0, 1, 1}}, Mat{{1, 0, 0}, {0, 1, 0}, {2, 0, 1}}, diag({-1, 1, 1}),
                          diag({1, 1, -1})})
      r.normalizer_generators.push_back(blocks({b, one(1)}));
    r.normalizer_generators.push_back(blocks({id(3), one(-1)}));
    r.normalizer_generators.push_back(Mat{{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 0, 1, 0}, {0, 0, 0, 1}});
    r.normalizer_predicate = "<B + +-1 | B in Gamma^(2)_3> . <xi>";
    r.semidirect = false;
    r.moduli_template = {dc({0, 1, 2}, "Gamma(2)_3"), finite({3}, 1)};
    r.moduli_text = "O(3)\\GL(3,R)/Gamma(2)_3 x R+";
    r.topology_verdict = TT::ExternalCitation;
    expect(tb, r);
  }
  {
    ExpectedResults r = named("N4_14");
    r.cone_description = {"GL(3,R)", "R*"};
    r.teichmuller_dim = 7;
    for (const auto& b : gl3_generators()) r.normalizer_generators.push_back(blocks({b, one(1)}));
    r.normalizer_generators.push_back(blocks({id(3), one(-1)}));
    r.normalizer_predicate = "GL(3,Z) + +-1";
    r.moduli_template = {dc({0, 1, 2}, "GL(3,Z)"), finite({3}, 1)};
    r.moduli_text = "O(3)\\GL(3,R)/GL(3,Z) x R+";
    r.topology_verdict = TT::ExternalCitation;
    expect(tb, r);
  }
  auto finite_entry = [&](const char* name, std::vector<std::string> cone, std::vector<Mat> gens,
                          std::vector<TemplateBlock> tmpl) {
    ExpectedResults r = named(name);
    r.cone_description = std::move(cone);
    r.teichmuller_dim = 3;
    r.normalizer_generators = std::move(gens);
    r.moduli_template = std::move(tmpl);
    r.moduli_text = "(R+)^3";
    r.topology_verdict = TT::Contractible;
    r.topology_description = "R^3";
    expect(tb, r);
  };
  const std::vector<std::string> split_cone = {"(R+)^2 x O(2)", "R+ x O(2)"};
  const std::vector<TemplateBlock> split = {finite({0}, 1), finite({1}, 1), finite({2, 3}, 1)};
  finite_entry("N4_15", split_cone,
               {blocks({one(1), one(1), R(3)}), blocks({one(-1), one(1), R(3)}), blocks({one(1), one(-1), E0()}),
                blocks({one(-1), one(-1), E0()})},
               split);
  finite_entry("N4_16", {"R+ x O(2) x (R+)^2 x O(2)"},
               {blocks({R(3), one(1), one(1)}), blocks({R(3), one(-1), one(1)}), blocks({E0(), one(1), one(-1)}),
                blocks({E0(), one(-1), one(-1)})},
               {finite({0, 1}, 1), finite({2}, 1), finite({3}, 1)});
  {
    std::vector<Mat> gens;
    for (const auto& b : {id(2), -id(2), Y2, Mat(-Y2)}) {
      gens.push_back(blocks({b, R(3)}));
      gens.push_back(blocks({b, E0()}));
    }
    finite_entry("N4_17", {"R+ x (0,pi) x O(2)", "R+ x O(2)"}, gens, {finite({0, 1}, 2), finite({2, 3}, 1)});
  }
  {
    std::vector<Mat> gens;
    for (long s1 : {1, -1})
      for (long s2 : {1, -1}) {
        gens.push_back(blocks({one(s1), one(s2), R(3)}));
        gens.push_back(blocks({one(s1), one(s2), E0()}));
      }
    finite_entry("N4_18", split_cone, gens, split);
  }
  finite_entry("N4_19", split_cone,
               {blocks({one(1), one(1), R(2)}), blocks({one(-1), one(1), R(2)}), blocks({one(1), R(6), one(1)}),
                blocks({one(-1), R(6), one(1)})},
               split);
  finite_entry("N4_20", split_cone,
               {blocks({one(1), one(1), R(10)}), blocks({one(-1), one(1), R(10)}), blocks({one(1), one(-1), -E0()}),
                blocks({one(-1), one(-1), -E0()})},
               split);
  finite_entry("N4_21", {"R*", "R+ x (0,2pi/3) x O(3)"},
               {Mat{{1, 0, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}, {0, -1, 0, 0}},
                Mat{{-1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}},
               {finite({0}, 1), finite({1, 2, 3}, 2)});
}

const Tables& tables() {
  static const Tables tb = [] {
    Tables t;
    build_groups(t);
    build_expected(t);
    return t;
  }();
  return tb;
}

}  // namespace

std::string to_string(TopologyTag t) {
  switch (t) {
    case TopologyTag::Contractible: return "contractible";
    case TopologyTag::CylinderType: return "cylinder-type";
    case TopologyTag::PuncturedSphereType: return "punctured-sphere-type";
    case TopologyTag::ExternalCitation: return "external-citation";
  }
  return "";
}

CatalogEntry make_entry(std::string name, std::vector<AffineMap> generators, std::vector<Vec> lattice_generators,
                        std::size_t holonomy_order) {
  if (generators.empty()) throw DimensionMismatch("entry needs generators");
  CatalogEntry c;
  c.name = std::move(name);
  c.dimension = generators.front().dimension();
  c.generators = std::move(generators);
  c.lattice = lattice_from_vectors(lattice_generators, c.dimension);
  c.lattice_generators = std::move(lattice_generators);
  c.holonomy_order = holonomy_order;
  c.orientable = true;
  for (const auto& g : c.generators)
    if (g.linear.determinant() != Scalar(1)) c.orientable = false;
  return c;
}

const std::vector<std::string>& catalog_names() { return tables().names; }

std::string canonical_name(const std::string& name) {
  std::string s;
  for (char ch : name)
    if (ch != '^' && ch != '{' && ch != '}') s.push_back(ch);
  if (s == "T3") return "G1";
  if (s == "T4") return "O4_1";
  if (s.size() > 2 && (s[0] == 'O' || s[0] == 'N') && s[1] == '4' && s[2] != '_') s.insert(2, "_");
  return s;
}

const CatalogEntry& load_group(const std::string& name) {
  const auto& tb = tables();
  auto it = tb.entries.find(canonical_name(name));
  if (it == tb.entries.end()) throw UnknownName("unknown catalog entry: " + name);
  return it->second;
}

const IntegralRepresentation& integral_representation(const std::string& name) {
  const CatalogEntry& c = load_group(name);
  if (!c.integral_rep) throw NoIntegralRepNeeded(c.name + " already has an integral representation");
  return *c.integral_rep;
}

const ExpectedResults& expected_results(const std::string& name) {
  const auto& tb = tables();
  auto it = tb.expected.find(canonical_name(name));
  if (it == tb.expected.end()) throw UnknownName("unknown catalog entry: " + name);
  return it->second;
}

CatalogEntry integral_entry(const std::string& name) {
  const CatalogEntry& c = load_group(name);
  const IntegralRepresentation& rep = integral_representation(name);
  CatalogEntry out = make_entry(c.name + "'", rep.generators, translation_vectors(rep.generators), c.holonomy_order);
  out.orientable = c.orientable;
  return out;
}

}  // namespace flatmod
