#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "flatmod/bieberbach.hpp"

namespace flatmod {

struct NormalizerVerdict {
  bool member = false;
  /// Some x with (X, x) normalizing the group.
  std::optional<Vec> witness_translation;
  bool zero_translation_works = false;
  /// (A, X A X^{-1}) for each holonomy generator A.
  std::vector<std::pair<Mat, Mat>> holonomy_action;
};

/// Decides whether X lies in the matrix normalizer, i.e. whether some (X, x)
/// conjugates the group onto itself. X is given in ambient coordinates and
/// must preserve the lattice. Throws SingularMatrix, DoesNotPreserveLattice.
NormalizerVerdict normalizer_membership(const Mat& x, const CatalogEntry& g);
NormalizerVerdict normalizer_membership(const Mat& x, const CatalogEntry& g, const GroupStructure& s);

struct NormalizerMember {
  Mat matrix;
  bool zero_translation_works = false;
};

/// Lattice-preserving X normalizing the holonomy whose lattice-coordinate
/// entries are bounded by entry_bound, sorted lexicographically.
std::vector<Mat> enumerate_holonomy_normalizer(const CatalogEntry& g, std::size_t entry_bound = 2);

/// Normalizer members with lattice-coordinate entries bounded by entry_bound,
/// sorted lexicographically. Throws EnumerationBudgetExceeded when the search
/// space is too large.
std::vector<NormalizerMember> enumerate_member_records(const CatalogEntry& g, std::size_t entry_bound = 2);
std::vector<Mat> enumerate_members(const CatalogEntry& g, std::size_t entry_bound = 2);

/// Every enumerated member lifts with zero translation. Trivial holonomy is
/// always semidirect and is not enumerated.
bool is_semidirect(const CatalogEntry& g, std::size_t entry_bound = 2);
bool is_semidirect(const CatalogEntry& g, const std::vector<NormalizerMember>& members);

/// Candidate count above which enumeration gives up.
inline constexpr double kEnumerationBudget = 1e8;

}  // namespace flatmod
