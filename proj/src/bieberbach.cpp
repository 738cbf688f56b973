#include "flatmod/bieberbach.hpp"

#include <algorithm>
#include <deque>

#include "flatmod/errors.hpp"

namespace flatmod {

std::optional<std::size_t> HolonomyGroup::index_of(const Mat& a) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == a) return i;
  return std::nullopt;
}

std::vector<Mat> HolonomyGroup::generators() const {
  std::vector<Mat> out;
  for (std::size_t idx : generator_indices) {
    if (idx == 0) continue;
    const Mat& a = elements[idx];
    if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
  }
  return out;
}

namespace {

struct Closure {
  HolonomyGroup group;
  std::vector<Vec> lifts;
  std::vector<Vec> schreier;
};

// Breadth-first closure under right multiplication by the generators, keeping
// one lift (h, b_h) per element.
Closure close(const std::vector<AffineMap>& gens, std::size_t budget) {
  if (gens.empty()) throw DimensionMismatch("no generators");
  const std::size_t n = gens.front().dimension();
  Closure c;
  c.group.elements.push_back(Mat::identity(n));
  c.lifts.push_back(zero_vec(n));
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t i = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      if (g.dimension() != n) throw DimensionMismatch("generators of different dimension");
      Mat prod = c.group.elements[i] * g.linear;
      Vec lift = c.lifts[i] + c.group.elements[i] * g.translation;
      auto j = c.group.index_of(prod);
      if (!j) {
        if (c.group.elements.size() >= budget) throw ClosureBudgetExceeded("holonomy closure exceeded budget");
        c.group.elements.push_back(prod);
        c.lifts.push_back(lift);
        queue.push_back(c.group.elements.size() - 1);
        continue;
      }
      Vec s = lift - c.lifts[*j];
      if (!is_zero(s)) c.schreier.push_back(s);
    }
  }
  for (const auto& g : gens) c.group.generator_indices.push_back(*c.group.index_of(g.linear));
  return c;
}

}  // namespace

HolonomyGroup holonomy(const std::vector<AffineMap>& generators, std::size_t budget) {
  return close(generators, budget).group;
}

HolonomyGroup holonomy(const CatalogEntry& g) { return holonomy(g.generators); }

Vec reduce_mod_lattice(const Vec& v, const LatticeBasis& lattice) {
  Vec coords = lattice.coordinates(v);
  for (auto& x : coords) x -= Scalar(Rational(x.floor()));
  return lattice.basis() * coords;
}

GroupStructure group_structure(const std::vector<AffineMap>& generators, std::size_t budget) {
  Closure c = close(generators, budget);
  GroupStructure out;
  out.lattice = lattice_from_vectors(c.schreier, generators.front().dimension());
  for (const auto& b : c.lifts) out.bases.push_back(reduce_mod_lattice(b, out.lattice));
  out.holonomy = std::move(c.group);
  return out;
}

GroupStructure group_structure(const CatalogEntry& g) { return group_structure(g.generators); }

GeneratorLatticeCoset generator_lattice_coset(const CatalogEntry& g, const Mat& h) {
  GroupStructure s = group_structure(g);
  auto i = s.holonomy.index_of(h);
  if (!i) throw NotInHolonomy("matrix is not in the holonomy of " + g.name);
  return s.coset(*i);
}

bool contains(const GroupStructure& s, const AffineMap& f) {
  auto i = s.holonomy.index_of(f.linear);
  return i && s.lattice.contains(f.translation - s.bases[*i]);
}

bool same_group(const std::vector<AffineMap>& x, const std::vector<AffineMap>& y) {
  GroupStructure sx = group_structure(x), sy = group_structure(y);
  if (!(sx.lattice == sy.lattice)) return false;
  return std::all_of(x.begin(), x.end(), [&](const AffineMap& f) { return contains(sy, f); }) &&
         std::all_of(y.begin(), y.end(), [&](const AffineMap& f) { return contains(sx, f); });
}

bool reproduces_integral_representation(const std::string& name) {
  const IntegralRepresentation& rep = integral_representation(name);
  AffineMap p = AffineMap::pure_linear(rep.conjugator);
  std::vector<AffineMap> conjugated;
  for (const auto& f : load_group(name).generators) conjugated.push_back(conjugate(f, p));
  return same_group(conjugated, rep.generators);
}

bool is_torsion_free(const CatalogEntry& g) {
  GroupStructure s = group_structure(g);
  const std::size_t n = g.dimension;
  for (std::size_t i = 1; i < s.holonomy.order(); ++i) {
    const Mat& h = s.holonomy.elements[i];
    // (h, w)^k = (Id, (1 + h + ... + h^{k-1}) w)
    Mat sum = Mat::identity(n);
    Mat p = h;
    while (!p.is_identity()) {
      sum += p;
      p = p * h;
    }
    // torsion iff base + l lies in ker(sum) for some lattice vector l
    std::vector<Vec> kernel = nullspace(sum);
    if (kernel.empty()) continue;
    CongruenceSystem sys;
    sys.unknowns = kernel.size();
    sys.blocks.push_back({Mat::from_columns(kernel), s.bases[i], s.lattice});
    if (solve_mixed_congruence(sys).solvable) return false;
  }
  return true;
}

bool normalizes_holonomy(const Mat& x, const HolonomyGroup& h) {
  Mat xi = mat_inverse(x);
  for (const auto& a : h.generators())
    if (!h.contains(x * a * xi)) return false;
  return true;
}

bool translation_involved(const CatalogEntry& g, const std::vector<Mat>& candidates) {
  HolonomyGroup h = holonomy(g);
  for (const auto& x : candidates) {
    if (!normalizes_holonomy(x, h))
      throw CandidateDoesNotNormalize("candidate " + x.to_string() + " does not normalize the holonomy of " + g.name);
    for (const auto& gen : g.generators) {
      if (gen.linear.is_identity()) continue;
      Vec w = x * gen.translation;
      for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] != gen.translation[i] && w[i] != -gen.translation[i]) return true;
    }
  }
  return false;
}

}  // namespace flatmod
