#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flatmod/affine.hpp"
#include "flatmod/lattice.hpp"

namespace flatmod {

struct IntegralRepresentation {
  Mat conjugator;                     // P
  std::vector<AffineMap> generators;  // listed integral generators
};

struct CatalogEntry {
  std::string name;
  std::size_t dimension = 0;
  std::vector<AffineMap> generators;
  /// Vectors spanning the translation lattice, as listed.
  std::vector<Vec> lattice_generators;
  LatticeBasis lattice;
  bool orientable = true;
  std::size_t holonomy_order = 1;
  std::optional<IntegralRepresentation> integral_rep;
};

/// One coordinate block of a moduli template.
struct TemplateBlock {
  enum class Kind { Finite, DoubleCoset };
  Kind kind = Kind::Finite;
  std::vector<std::size_t> coords;
  /// Finite: dimension contributed, (R+)^k.
  std::size_t k = 0;
  /// DoubleCoset: subgroup identifier, e.g. "Gamma0(2)" or "GL(3,Z)".
  std::string subgroup;
};

enum class TopologyTag { Contractible, CylinderType, PuncturedSphereType, ExternalCitation };

std::string to_string(TopologyTag t);

struct ExpectedResults {
  std::string name;
  std::vector<std::string> cone_description;
  std::size_t teichmuller_dim = 0;
  std::vector<Mat> normalizer_generators;
  /// Matrices that must fail membership.
  std::vector<Mat> normalizer_non_members;
  std::optional<std::string> normalizer_predicate;
  std::optional<bool> semidirect;
  std::vector<TemplateBlock> moduli_template;
  std::string moduli_text;
  std::optional<TopologyTag> topology_verdict;
  /// Expected shape, e.g. "S^1 x R^3"; empty when not stated.
  std::string topology_description;
};

/// Catalog names in fixed order: G1..G6, B1..B4, O4_1..O4_8, N4_1, N4_2, N4_14..N4_21.
const std::vector<std::string>& catalog_names();
/// Accepts aliases T3 (G1) and T4 (O4_1) and the forms "O^4_2", "N^4_{14}".
std::string canonical_name(const std::string& name);

/// Throws UnknownName.
const CatalogEntry& load_group(const std::string& name);
/// Throws NoIntegralRepNeeded when the entry needs no change of coordinates.
const IntegralRepresentation& integral_representation(const std::string& name);
const ExpectedResults& expected_results(const std::string& name);

/// The entry with its generators replaced by the integral ones (and the lattice recomputed).
CatalogEntry integral_entry(const std::string& name);

/// Entry built from arbitrary generators; the lattice is taken from the given vectors.
CatalogEntry make_entry(std::string name, std::vector<AffineMap> generators, std::vector<Vec> lattice_generators,
                        std::size_t holonomy_order);

}  // namespace flatmod
