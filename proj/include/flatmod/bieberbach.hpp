#pragma once

#include <optional>
#include <vector>

#include "flatmod/catalog.hpp"

namespace flatmod {

/// Finite group of linear parts. elements[0] is the identity.
struct HolonomyGroup {
  std::vector<Mat> elements;
  /// For each input generator, the index of its linear part in elements.
  std::vector<std::size_t> generator_indices;

  std::size_t order() const { return elements.size(); }
  std::optional<std::size_t> index_of(const Mat& a) const;
  bool contains(const Mat& a) const { return index_of(a).has_value(); }
  /// Distinct non-identity linear parts of the input generators.
  std::vector<Mat> generators() const;
};

/// Closure of the linear parts. Throws ClosureBudgetExceeded past `budget` elements.
HolonomyGroup holonomy(const std::vector<AffineMap>& generators, std::size_t budget = 64);
HolonomyGroup holonomy(const CatalogEntry& g);

/// {w : (h, w) in pi} = base_translation + lattice.
struct GeneratorLatticeCoset {
  Mat holonomy_element;
  Vec base_translation;
  LatticeBasis lattice;
};

/// Holonomy, translation lattice and one reduced lift per holonomy element.
struct GroupStructure {
  HolonomyGroup holonomy;
  LatticeBasis lattice;
  /// bases[i] lifts holonomy.elements[i]; lattice coordinates lie in [0, 1).
  std::vector<Vec> bases;

  GeneratorLatticeCoset coset(std::size_t i) const { return {holonomy.elements[i], bases[i], lattice}; }
};

/// The lattice is the span of the Schreier translations of the generators.
GroupStructure group_structure(const std::vector<AffineMap>& generators, std::size_t budget = 64);
GroupStructure group_structure(const CatalogEntry& g);

/// Reduces v modulo the lattice into the half-open unit cell of its basis.
Vec reduce_mod_lattice(const Vec& v, const LatticeBasis& lattice);

/// Throws NotInHolonomy.
GeneratorLatticeCoset generator_lattice_coset(const CatalogEntry& g, const Mat& h);

/// (A, v) lies in the group described by s.
bool contains(const GroupStructure& s, const AffineMap& f);
/// Each generating set lies in the group generated by the other.
bool same_group(const std::vector<AffineMap>& x, const std::vector<AffineMap>& y);
/// The entry conjugated by (P, 0) equals the group of the listed integral
/// generators. Throws NoIntegralRepNeeded.
bool reproduces_integral_representation(const std::string& name);

/// No element (h, w) with h != Id has finite order.
bool is_torsion_free(const CatalogEntry& g);

/// X A X^{-1} in H for every A in H. Throws SingularMatrix.
bool normalizes_holonomy(const Mat& x, const HolonomyGroup& h);

/// Some candidate X moves the translation of a generator (A, v), A != Id, to
/// something other than a coordinate sign change of v. Throws
/// CandidateDoesNotNormalize.
bool translation_involved(const CatalogEntry& g, const std::vector<Mat>& candidates);

}  // namespace flatmod
