#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flatmod/catalog.hpp"
#include "flatmod/domain.hpp"

namespace flatmod {

struct ModuliFactor {
  enum class Kind { Euclidean, DoubleCoset, PuncturedSurface, Circle, Unfactored };
  Kind kind = Kind::Euclidean;
  /// Euclidean: k in (R+)^k. DoubleCoset, Unfactored: matrix size n.
  std::size_t k = 0;
  std::string subgroup;
  std::size_t genus = 0;
  std::size_t punctures = 0;

  std::size_t dimension() const;
  std::string to_string() const;
};

enum class Topology { Contractible, NonContractible, ExternalCitation, Unresolved };
std::string to_string(Topology t);

struct ModuliExpression {
  std::vector<ModuliFactor> factors;
  std::size_t teichmuller_dim = 0;
  Topology topology = Topology::Unresolved;
  /// Up to homeomorphism, e.g. "S^1 x R^3".
  std::string topology_description;
  /// Orbifold data of each 2x2 double coset factor, in factor order.
  std::vector<OrbifoldInvariants> orbifolds;
  /// Factorization premises that did not hold; the expression is then unfactored.
  std::vector<std::string> premise_failures;
  std::vector<std::string> notes;

  std::size_t factor_dimension() const;
  std::string to_string() const;
};

struct VerifyOptions {
  std::size_t entry_bound = 2;
  std::size_t coset_budget = 256;
  std::size_t pairing_word_length = 8;
};

ModuliExpression moduli_descriptor(const CatalogEntry& g, const VerifyOptions& options = {});

/// Topology tag matching the catalog's expected verdicts.
TopologyTag topology_tag(const ModuliExpression& m);

enum class ClaimStatus { Pass, Fail, Skipped };
std::string to_string(ClaimStatus s);

struct Claim {
  std::string id;
  ClaimStatus status = ClaimStatus::Pass;
  std::string witness;
};

struct VerificationReport {
  std::string entry;
  std::vector<Claim> claims;
  std::optional<ModuliExpression> moduli;

  bool passed() const;
  const Claim* find(const std::string& id) const;
};

VerificationReport verify_entry(const std::string& name, const VerifyOptions& options = {});
/// Catalog order.
std::vector<VerificationReport> verify_all(const VerifyOptions& options = {});

}  // namespace flatmod
