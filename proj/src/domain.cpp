#include "flatmod/domain.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "flatmod/errors.hpp"

namespace flatmod {

namespace {

constexpr Mat2 kST = kS * kT;


std::array<std::int64_t, 4> entries(const Mat2& m) { return {m.a, m.b, m.c, m.d}; }

// Up to sign, with the first nonzero of (c, a) positive.
Mat2 sign_normalized(const Mat2& m) {
  bool flip = m.c < 0 || (m.c == 0 && m.a < 0);
  return flip ? -m : m;
}

std::int64_t floor_mod(std::int64_t x, std::int64_t n) { return ((x % n) + n) % n; }

}  // namespace

std::array<std::int64_t, 5> HPoint::key() const {
  Mat2 best;
  if (base == Vertex::Infinity) {
    best = sign_normalized(matrix);
    std::int64_t k = 0;
    if (best.c != 0) {
      k = (floor_mod(best.d, best.c) - best.d) / best.c;
    } else {
      k = -best.b * best.a;
    }
    best = best * Mat2{1, k, 0, 1};
  } else {
    Mat2 s = base == Vertex::I ? kS : kST;
    int order = base == Vertex::I ? 2 : 3;
    Mat2 g;
    bool first = true;
    for (int i = 0; i < order; ++i, g = g * s)
      for (const Mat2& m : {matrix * g, -(matrix * g)})
        if (first || entries(m) < entries(best)) {
          best = m;
          first = false;
        }
  }
  return {static_cast<std::int64_t>(base), best.a, best.b, best.c, best.d};
}

std::complex<double> mobius(const Mat2& g, std::complex<double> z) {
  return (static_cast<double>(g.a) * z + static_cast<double>(g.b)) /
         (static_cast<double>(g.c) * z + static_cast<double>(g.d));
}

std::complex<double> HPoint::numeric() const {
  constexpr double inf = std::numeric_limits<double>::infinity();
  switch (base) {
    case Vertex::Infinity:
      if (matrix.c == 0) return {0, inf};
      return {static_cast<double>(matrix.a) / static_cast<double>(matrix.c), 0};
    case Vertex::Rho:
      return mobius(matrix, {-0.5, std::sqrt(3.0) / 2});
    case Vertex::I:
      break;
  }
  return mobius(matrix, {0, 1});
}

HPoint operator*(const Mat2& g, const HPoint& p) { return {g * p.matrix, p.base}; }

std::string to_string(const HPoint& p) {
  const char* names[] = {"inf", "rho", "i"};
  return to_string(p.matrix) + "*" + names[static_cast<int>(p.base)];
}

std::string to_string(EdgeTag t) {
  switch (t) {
    case EdgeTag::Left:
      return "left";
    case EdgeTag::ArcLeft:
      return "arc-left";
    case EdgeTag::ArcRight:
      return "arc-right";
    case EdgeTag::Right:
      break;
  }
  return "right";
}

std::vector<std::size_t> FundamentalDomain::boundary_edges() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (!edges[i].internal) out.push_back(i);
  return out;
}

namespace {

using Key = std::array<std::int64_t, 5>;
using EdgeKey = std::pair<Key, Key>;

EdgeKey edge_key(const HPoint& p, const HPoint& q) {
  Key x = p.key(), y = q.key();
  return x < y ? EdgeKey{x, y} : EdgeKey{y, x};
}

const std::array<std::pair<HPoint, HPoint>, 4>& standard_edges() {
  static const std::array<std::pair<HPoint, HPoint>, 4> e{{
      {{Mat2{}, Vertex::Rho}, {Mat2{}, Vertex::Infinity}},
      {{Mat2{}, Vertex::Rho}, {Mat2{}, Vertex::I}},
      {{Mat2{}, Vertex::I}, {kT, Vertex::Rho}},
      {{kT, Vertex::Rho}, {Mat2{}, Vertex::Infinity}},
  }};
  return e;
}

}  // namespace

FundamentalDomain build_domain(const CosetTable& table) {
  FundamentalDomain d;
  d.table = table;
  std::map<EdgeKey, std::vector<std::size_t>> seen;
  for (std::size_t c = 0; c < table.index(); ++c) {
    const Mat2& g = table.representatives[c];
    for (std::size_t t = 0; t < 4; ++t) {
      const auto& [p, q] = standard_edges()[t];
      Edge e{c, static_cast<EdgeTag>(t), g * p, g * q, false};
      seen[edge_key(e.from, e.to)].push_back(d.edges.size());
      d.edges.push_back(e);
    }
  }
  for (const auto& [k, ids] : seen)
    if (ids.size() > 1)
      for (std::size_t i : ids) d.edges[i].internal = true;
  return d;
}

namespace {

struct Element {
  Mat2 matrix;
  Word word;
};

// Projectively distinct subgroup elements other than +-Id, by word length.
std::vector<Element> subgroup_elements(const CongruenceSubgroup& g, std::size_t max_length) {
  std::vector<Element> out;
  std::set<std::array<std::int64_t, 4>> seen{entries(Mat2{})};
  std::vector<Element> layer{{Mat2{}, {}}};
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<Element> next;
    for (const auto& e : layer)
      for (Letter l : {Letter::S, Letter::T, Letter::TInv}) {
        Word w = e.word;
        w.push_back(l);
        Mat2 m = sign_normalized(evaluate(w));
        if (!seen.insert(entries(m)).second) continue;
        next.push_back({m, w});
        if (projective_membership(g, m)) out.push_back({membership(g, m) ? m : -m, w});
      }
    layer = std::move(next);
  }
  return out;
}

std::optional<std::size_t> image_edge(const FundamentalDomain& d, const std::map<EdgeKey, std::size_t>& boundary,
                                      std::size_t edge, const Mat2& g) {
  const Edge& e = d.edges[edge];
  auto it = boundary.find(edge_key(g * e.from, g * e.to));
  if (it == boundary.end() || it->second == edge) return std::nullopt;
  return it->second;
}

std::map<EdgeKey, std::size_t> boundary_index(const FundamentalDomain& d) {
  std::map<EdgeKey, std::size_t> out;
  for (std::size_t i : d.boundary_edges()) out[edge_key(d.edges[i].from, d.edges[i].to)] = i;
  return out;
}

}  // namespace

std::optional<std::size_t> pairs_edges(const FundamentalDomain& domain, const Mat2& g) {
  if (!projective_membership(domain.table.subgroup, g) || g.is_scalar()) return std::nullopt;
  auto boundary = boundary_index(domain);
  for (std::size_t i : domain.boundary_edges())
    if (image_edge(domain, boundary, i, g)) return i;
  return std::nullopt;
}

FundamentalDomain find_side_pairings(FundamentalDomain domain, std::size_t max_word_length) {
  domain.pairings.clear();
  auto boundary = boundary_index(domain);
  auto elements = subgroup_elements(domain.table.subgroup, max_word_length);
  std::set<std::size_t> paired;
  for (std::size_t i : domain.boundary_edges()) {
    if (paired.count(i)) continue;
    bool found = false;
    for (const auto& el : elements) {
      auto j = image_edge(domain, boundary, i, el.matrix);
      if (!j || paired.count(*j)) continue;
      domain.pairings.push_back({i, *j, el.matrix, el.word});
      paired.insert(i);
      paired.insert(*j);
      found = true;
      break;
    }
    if (!found)
      throw PairingIncomplete("no side pairing of word length <= " + std::to_string(max_word_length) + " for edge " +
                              std::to_string(i) + " of " + domain.table.subgroup.name);
  }
  return domain;
}

std::string to_string(SurfaceType t) {
  switch (t) {
    case SurfaceType::OncePuncturedSphere:
      return "once-punctured-sphere";
    case SurfaceType::Cylinder:
      return "cylinder";
    case SurfaceType::ThreePuncturedSphere:
      return "3-punctured-sphere";
    case SurfaceType::Other:
      break;
  }
  return "other";
}

std::string OrbifoldInvariants::describe() const {
  std::ostringstream os;
  os << to_string(classification) << " (genus " << genus << ", cusps " << cusps << ", cone orders [";
  for (std::size_t i = 0; i < cone_points.size(); ++i) os << (i ? ", " : "") << cone_points[i];
  os << "])";
  return os.str();
}

OrbifoldInvariants orbifold_invariants(const FundamentalDomain& domain) {
  std::map<Key, std::size_t> ids;
  std::vector<std::size_t> parent;
  std::vector<Vertex> base;
  auto id = [&](const HPoint& p) {
    auto [it, fresh] = ids.emplace(p.key(), parent.size());
    if (fresh) {
      parent.push_back(parent.size());
      base.push_back(p.base);
    }
    return it->second;
  };
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  auto unite = [&](std::size_t x, std::size_t y) { parent[find(x)] = find(y); };

  // Corner angles in units of pi/3.
  std::vector<std::pair<std::size_t, int>> corners;
  for (const auto& g : domain.table.representatives) {
    corners.emplace_back(id({g, Vertex::Infinity}), 0);
    corners.emplace_back(id({g, Vertex::Rho}), 1);
    corners.emplace_back(id({g, Vertex::I}), 3);
    corners.emplace_back(id({g * kT, Vertex::Rho}), 1);
  }
  std::vector<int> uses(domain.edges.size(), 0);
  for (const auto& p : domain.pairings) {
    const Edge& s = domain.edges[p.source];
    const Edge& t = domain.edges[p.target];
    HPoint a = p.matrix * s.from, b = p.matrix * s.to;
    if (edge_key(a, b) != edge_key(t.from, t.to)) throw InconsistentGluing("pairing does not map its edges");
    auto match = [&](const HPoint& x) { return x == t.from ? id(t.from) : id(t.to); };
    unite(id(s.from), match(a));
    unite(id(s.to), match(b));
    ++uses[p.source];
    ++uses[p.target];
  }
  std::size_t internal = 0;
  for (std::size_t i = 0; i < domain.edges.size(); ++i) {
    if (domain.edges[i].internal) {
      ++internal;
    } else if (uses[i] != 1) {
      throw InconsistentGluing("boundary edge " + std::to_string(i) + " is paired " + std::to_string(uses[i]) +
                               " times");
    }
  }
  if (internal % 2) throw InconsistentGluing("internal edges are not shared in pairs");

  std::map<std::size_t, int> angle;
  for (const auto& [v, a] : corners) angle[find(v)] += a;
  OrbifoldInvariants out;
  std::int64_t finite = 0;
  for (const auto& [root, a] : angle) {
    if (base[root] == Vertex::Infinity) {
      ++out.cusps;
      continue;
    }
    ++finite;
    if (a <= 0 || 6 % a) throw InconsistentGluing("vertex angle sum is not 2 pi / m");
    if (a < 6) out.cone_points.push_back(static_cast<std::size_t>(6 / a));
  }
  std::sort(out.cone_points.begin(), out.cone_points.end());
  auto edges = static_cast<std::int64_t>(internal / 2 + domain.pairings.size());
  auto faces = static_cast<std::int64_t>(domain.cell_count());
  out.euler_characteristic = finite - edges + faces;
  std::int64_t twice_genus = 2 - static_cast<std::int64_t>(out.cusps) - out.euler_characteristic;
  if (twice_genus < 0 || twice_genus % 2) throw InconsistentGluing("negative or fractional genus");
  out.genus = static_cast<std::size_t>(twice_genus / 2);
  std::int64_t orbifold = 6 * (2 - twice_genus - static_cast<std::int64_t>(out.cusps));
  for (std::size_t m : out.cone_points) orbifold -= 6 - 6 / static_cast<std::int64_t>(m);
  if (orbifold != -faces) throw InconsistentGluing("orbifold Euler characteristic differs from -index/6");
  if (out.genus == 0 && out.cusps == 1) {
    out.classification = SurfaceType::OncePuncturedSphere;
  } else if (out.genus == 0 && out.cusps == 2) {
    out.classification = SurfaceType::Cylinder;
  } else if (out.genus == 0 && out.cusps == 3) {
    out.classification = SurfaceType::ThreePuncturedSphere;
  }
  return out;
}

FundamentalDomain domain_for(const std::string& subgroup_id, std::size_t budget, std::size_t max_word_length) {
  return find_side_pairings(build_domain(coset_enumerate(subgroup(subgroup_id), budget)), max_word_length);
}

H2Chart gl2_to_h2(const std::array<std::array<double, 2>, 2>& x) {
  double det = x[0][0] * x[1][1] - x[0][1] * x[1][0];
  if (det == 0) throw SingularMatrix("gl2_to_h2: singular matrix");
  std::complex<double> b1{x[0][0], x[1][0]}, b2{x[0][1], x[1][1]};
  std::complex<double> z = b2 / b1;
  if (z.imag() < 0) z = std::conj(z);
  return {std::abs(det), z};
}

bool in_standard_domain(std::complex<double> z, double tolerance) {
  return std::abs(z.real()) <= 0.5 + tolerance && std::abs(z) >= 1 - tolerance && z.imag() > 0;
}

namespace {

bool near_boundary(std::complex<double> z, double tolerance) {
  return std::abs(std::abs(z.real()) - 0.5) <= tolerance || std::abs(std::abs(z) - 1) <= tolerance;
}

}  // namespace

Reduction reduce_to_domain(std::complex<double> z, const FundamentalDomain& domain, double tolerance) {
  if (!(z.imag() > 0)) throw Error("reduce_to_domain: point is not in the upper half plane");
  Mat2 g;
  std::complex<double> w = z;
  for (int step = 0; step < 10000; ++step) {
    auto n = static_cast<std::int64_t>(std::llround(w.real()));
    w -= static_cast<double>(n);
    g = Mat2{1, -n, 0, 1} * g;
    if (std::norm(w) >= 1) break;
    w = -1.0 / w;
    g = kS * g;
  }
  std::vector<Mat2> moves{Mat2{}};
  if (near_boundary(w, tolerance))
    for (const Mat2& h : {kT, kTInv, kS, kT * kS, kTInv * kS, kS * kT, kS * kTInv}) moves.push_back(h);

  const CosetTable& table = domain.table;
  std::vector<Mat2> admissible;
  for (const Mat2& h : moves) {
    Mat2 hg = h * g;
    if (!in_standard_domain(mobius(hg, z), tolerance)) continue;
    std::size_t i = table.coset_of(hg.inverse());
    Mat2 gamma = table.representatives[i] * hg;
    if (!membership(table.subgroup, gamma)) gamma = -gamma;
    if (std::none_of(admissible.begin(), admissible.end(),
                     [&](const Mat2& a) { return sign_normalized(a) == sign_normalized(gamma); }))
      admissible.push_back(gamma);
  }
  if (admissible.empty()) throw Error("reduce_to_domain: reduction did not converge");
  Reduction r;
  r.gamma = admissible.front();
  r.z = mobius(r.gamma, z);
  r.ambiguous = admissible.size() > 1;
  for (std::size_t i = 0; i < table.index(); ++i)
    if (in_standard_domain(mobius(table.representatives[i].inverse(), r.z), tolerance)) {
      r.cell = i;
      break;
    }
  return r;
}

}  // namespace flatmod
