#include "flatmod/serialize.hpp"

#include "flatmod/errors.hpp"

namespace flatmod {

Json to_json(const Scalar& s) {
  return Json{{"a", rational_text(s.rational_part())}, {"b", rational_text(s.sqrt3_part())}};
}

Json to_json(const Vec& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(to_json(x));
  return j;
}

Json to_json(const Mat& m) {
  Json j = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) j.push_back(to_json(m.row(i)));
  return j;
}

Json to_json(const Mat2& m) { return Json{{m.a, m.b}, {m.c, m.d}}; }

Json to_json(const AffineMap& f) { return Json{{"linear", to_json(f.linear)}, {"translation", to_json(f.translation)}}; }

Json to_json(const CatalogEntry& g) {
  Json gens = Json::array();
  for (const auto& f : g.generators) gens.push_back(to_json(f));
  Json j{{"name", g.name},
         {"dimension", g.dimension},
         {"orientable", g.orientable},
         {"holonomy_order", g.holonomy_order},
         {"generators", gens},
         {"lattice", to_json(g.lattice.basis())}};
  if (g.integral_rep) {
    Json ig = Json::array();
    for (const auto& f : g.integral_rep->generators) ig.push_back(to_json(f));
    j["integral_representation"] = {{"conjugator", to_json(g.integral_rep->conjugator)}, {"generators", ig}};
  }
  return j;
}

Json to_json(const HolonomyGroup& h) {
  Json e = Json::array();
  for (const auto& a : h.elements) e.push_back(to_json(a));
  return Json{{"order", h.order()}, {"elements", e}};
}

Json to_json(const SymmetricCommutant& c) {
  Json b = Json::array();
  for (const auto& s : c.basis) b.push_back(to_json(s));
  return Json{{"dimension", c.dimension}, {"basis", b}};
}

Json to_json(const NormalizerVerdict& v) {
  Json j{{"member", v.member}, {"zero_translation_works", v.zero_translation_works}};
  j["witness_translation"] = v.witness_translation ? to_json(*v.witness_translation) : Json(nullptr);
  Json action = Json::array();
  for (const auto& [a, b] : v.holonomy_action) action.push_back({{"generator", to_json(a)}, {"image", to_json(b)}});
  j["holonomy_action"] = action;
  return j;
}

Json to_json(const CosetTable& t) {
  Json reps = Json::array();
  for (std::size_t i = 0; i < t.index(); ++i)
    reps.push_back({{"word", to_string(t.words[i])}, {"matrix", to_json(t.representatives[i])}});
  return Json{{"subgroup", t.subgroup.name}, {"index", t.index()}, {"representatives", reps}};
}

namespace {

Json point_json(const HPoint& p) {
  const char* names[] = {"inf", "rho", "i"};
  return Json{{"matrix", to_json(p.matrix)}, {"base", names[static_cast<int>(p.base)]}};
}

}  // namespace

Json to_json(const FundamentalDomain& d) {
  Json cells = Json::array();
  for (const auto& w : d.table.words) cells.push_back(to_string(w));
  Json edges = Json::array();
  for (std::size_t i = 0; i < d.edges.size(); ++i) {
    const Edge& e = d.edges[i];
    edges.push_back({{"id", i},
                     {"cell", e.cell},
                     {"tag", to_string(e.tag)},
                     {"internal", e.internal},
                     {"from", point_json(e.from)},
                     {"to", point_json(e.to)}});
  }
  Json pairings = Json::array();
  for (const auto& p : d.pairings)
    pairings.push_back(
        {{"matrix", to_json(p.matrix)}, {"word", to_string(p.word)}, {"source", p.source}, {"target", p.target}});
  return Json{{"subgroup", d.table.subgroup.name},
              {"index", d.cell_count()},
              {"convention", "right cosets Gamma g_i; domain is the union of g_i F"},
              {"cells", cells},
              {"edges", edges},
              {"pairings", pairings}};
}

Json to_json(const OrbifoldInvariants& o) {
  return Json{{"genus", o.genus},
              {"cusps", o.cusps},
              {"cone_points", o.cone_points},
              {"classification", to_string(o.classification)},
              {"euler_characteristic", o.euler_characteristic}};
}

Json to_json(const ModuliExpression& m) {
  Json factors = Json::array();
  for (const auto& f : m.factors) factors.push_back({{"factor", f.to_string()}, {"dimension", f.dimension()}});
  Json orbifolds = Json::array();
  for (const auto& o : m.orbifolds) orbifolds.push_back(to_json(o));
  return Json{{"expression", m.to_string()},
              {"factors", factors},
              {"teichmuller_dim", m.teichmuller_dim},
              {"topology", to_string(m.topology)},
              {"topology_description", m.topology_description},
              {"orbifolds", orbifolds},
              {"premise_failures", m.premise_failures},
              {"notes", m.notes}};
}

Json to_json(const VerificationReport& r) {
  Json claims = Json::array();
  for (const auto& c : r.claims) claims.push_back({{"id", c.id}, {"status", to_string(c.status)}, {"witness", c.witness}});
  Json j{{"entry", r.entry}, {"passed", r.passed()}, {"claims", claims}};
  if (r.moduli) j["moduli"] = to_json(*r.moduli);
  return j;
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_object()) {
    if (!j.contains("a") || !j.contains("b")) throw ParseError("scalar object needs keys a and b");
    return Scalar(parse_rational(j["a"].get<std::string>()), parse_rational(j["b"].get<std::string>()));
  }
  if (j.is_number_integer()) return Scalar(Rational(j.get<long>()));
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  throw ParseError("cannot read a scalar from " + j.dump());
}

Mat mat_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) throw ParseError("matrix must be a nonempty array of rows");
  std::vector<Vec> rows;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != j[0].size()) throw ParseError("matrix rows differ in length");
    Vec v;
    for (const auto& x : row) v.push_back(scalar_from_json(x));
    rows.push_back(v);
  }
  return Mat::from_rows(rows);
}

Mat parse_matrix(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed matrix JSON: " + text);
  return mat_from_json(j);
}

}  // namespace flatmod
