#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flatmod/congruence.hpp"

namespace flatmod {

/// Vertices of the standard domain F: the cusp, rho = e^{2 pi i / 3}, and i.
enum class Vertex { Infinity, Rho, I };

/// The point matrix * base, compared up to the stabilizer of base.
struct HPoint {
  Mat2 matrix;
  Vertex base = Vertex::Infinity;

  /// Canonical representative of matrix * Stab(base) up to sign.
  std::array<std::int64_t, 5> key() const;
  std::complex<double> numeric() const;
  bool is_cusp() const { return base == Vertex::Infinity; }

  friend bool operator==(const HPoint& x, const HPoint& y) { return x.key() == y.key(); }
};

HPoint operator*(const Mat2& g, const HPoint& p);
std::string to_string(const HPoint& p);

enum class EdgeTag { Left, ArcLeft, ArcRight, Right };
std::string to_string(EdgeTag t);

struct Edge {
  std::size_t cell = 0;
  EdgeTag tag = EdgeTag::Left;
  HPoint from, to;
  bool internal = false;
};

struct SidePairing {
  std::size_t source = 0;
  std::size_t target = 0;
  Mat2 matrix;
  Word word;
};

struct FundamentalDomain {
  CosetTable table;
  /// Four edges per cell, in cell order.
  std::vector<Edge> edges;
  std::vector<SidePairing> pairings;

  std::size_t cell_count() const { return table.index(); }
  std::vector<std::size_t> boundary_edges() const;
};

/// Union of the translates gamma_i F.
FundamentalDomain build_domain(const CosetTable& table);

/// Fills the pairings using elements of the subgroup given by words of length
/// at most max_word_length. Throws PairingIncomplete.
FundamentalDomain find_side_pairings(FundamentalDomain domain, std::size_t max_word_length = 8);

/// Boundary edge i with g * edge i equal to another boundary edge.
std::optional<std::size_t> pairs_edges(const FundamentalDomain& domain, const Mat2& g);

enum class SurfaceType { OncePuncturedSphere, Cylinder, ThreePuncturedSphere, Other };
std::string to_string(SurfaceType t);

struct OrbifoldInvariants {
  std::size_t genus = 0;
  std::size_t cusps = 0;
  std::vector<std::size_t> cone_points;
  SurfaceType classification = SurfaceType::Other;
  /// V - E + F of the glued complex with cusps removed.
  std::int64_t euler_characteristic = 0;

  std::string describe() const;
};

/// Throws InconsistentGluing.
OrbifoldInvariants orbifold_invariants(const FundamentalDomain& domain);

/// Subgroup, coset table, domain and pairings in one step.
FundamentalDomain domain_for(const std::string& subgroup_id, std::size_t budget = 256, std::size_t max_word_length = 8);

struct H2Chart {
  double scale = 0;
  std::complex<double> z;
};

/// Columns of x as a basis of the plane: |det x| and the second column over the
/// first, mirrored into the upper half plane. Throws SingularMatrix.
H2Chart gl2_to_h2(const std::array<std::array<double, 2>, 2>& x);

std::complex<double> mobius(const Mat2& g, std::complex<double> z);

/// Closed standard domain, enlarged by tolerance.
bool in_standard_domain(std::complex<double> z, double tolerance = 1e-9);

struct Reduction {
  Mat2 gamma;
  std::complex<double> z;
  std::size_t cell = 0;
  /// The point was within tolerance of a cell boundary.
  bool ambiguous = false;
};

/// gamma in the subgroup with gamma * z inside the domain. Near a boundary the
/// plain reduction wins, then T, T^-1, S, TS, T^-1S, ST, ST^-1 applied after it.
/// Requires Im z > 0.
Reduction reduce_to_domain(std::complex<double> z, const FundamentalDomain& domain, double tolerance = 1e-9);

}  // namespace flatmod
