#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "flatmod/matrix.hpp"

namespace flatmod {

/// Integer 2x2 matrix [[a, b], [c, d]].
struct Mat2 {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  std::int64_t det() const { return a * d - b * c; }
  /// Inverse of a unimodular matrix. Throws NotUnimodular.
  Mat2 inverse() const;
  constexpr Mat2 operator-() const { return {-a, -b, -c, -d}; }
  bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }
  /// +-Id
  bool is_scalar() const { return b == 0 && c == 0 && a == d && (a == 1 || a == -1); }

  friend constexpr Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend auto operator<=>(const Mat2&, const Mat2&) = default;
};

inline constexpr Mat2 kS{0, -1, 1, 0};
inline constexpr Mat2 kT{1, 1, 0, 1};
inline constexpr Mat2 kTInv{1, -1, 0, 1};

/// Throws NonIntegerInput or DimensionMismatch.
Mat2 to_mat2(const Mat& m);
Mat to_mat(const Mat2& m);
std::string to_string(const Mat2& m);

/// Subgroup (or coset-style subset) of GL(n, Z) given by congruence conditions.
struct CongruenceSubgroup {
  std::string name;
  std::size_t dimension = 2;
  /// Restrict to determinant +1.
  bool positive_part = false;
  /// False for the coset-style subsets such as Gamma0_2(3).
  bool is_group = true;
  /// Called with the row-major entries of a unimodular matrix.
  std::function<bool(const std::vector<std::int64_t>&)> predicate;
};

/// Looks up an identifier such as "Gamma0(2)", "Gamma(2)Y+", "Gamma(2)_3" or
/// "<Gamma0_1(6),Gamma0_5(6)>". A trailing "+" selects the determinant +1 part.
/// Throws UnknownName.
CongruenceSubgroup subgroup(const std::string& id);
std::vector<std::string> subgroup_names();

/// Throws NotUnimodular, NonIntegerInput, DimensionMismatch.
bool membership(const CongruenceSubgroup& g, const Mat& x);
bool membership(const CongruenceSubgroup& g, const Mat2& x);
/// x or -x is a member.
bool projective_membership(const CongruenceSubgroup& g, const Mat2& x);

enum class Letter { S, T, TInv };
using Word = std::vector<Letter>;

/// "Id" for the empty word, otherwise e.g. "STS" or "TST^-1".
std::string to_string(const Word& w);
/// Accepts "Id", letters S and T, and "T^-1" / "T^{-1}". Throws ParseError.
Word parse_word(const std::string& text);
Mat2 evaluate(const Word& w);

/// Right cosets Gamma * gamma_i of a finite-index subgroup of SL(2, Z), up to sign.
struct CosetTable {
  CongruenceSubgroup subgroup;
  std::vector<Word> words;
  std::vector<Mat2> representatives;

  std::size_t index() const { return representatives.size(); }
  /// The i with g * gamma_i^{-1} in +-Gamma. Throws Error when no coset matches.
  std::size_t coset_of(const Mat2& g) const;
};

/// Breadth-first enumeration over right multiplication by S, T, T^-1, in that
/// order. Throws IndexBudgetExceeded.
CosetTable coset_enumerate(const CongruenceSubgroup& g, std::size_t budget = 256);
/// Table from given representative words; throws Error unless they form a transversal.
CosetTable coset_table_from_words(const CongruenceSubgroup& g, const std::vector<std::string>& words);

/// Number of cosets of the smaller table's subgroup contained in `larger`.
std::size_t relative_index(const CongruenceSubgroup& larger, const CosetTable& smaller);

/// Same index, same representative words, and both predicates agree on every
/// gamma_i gamma_j^{-1}.
bool same_coset_table(const CosetTable& x, const CosetTable& y);

}  // namespace flatmod
