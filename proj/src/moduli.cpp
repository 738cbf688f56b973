#include "flatmod/moduli.hpp"

#include <algorithm>
#include <sstream>

#include "flatmod/bieberbach.hpp"
#include "flatmod/cone.hpp"
#include "flatmod/congruence.hpp"
#include "flatmod/errors.hpp"
#include "flatmod/normalizer.hpp"

namespace flatmod {

std::size_t ModuliFactor::dimension() const {
  switch (kind) {
    case Kind::Euclidean:
      return k;
    case Kind::DoubleCoset:
      return k == 2 ? 3 : k * (k + 1) / 2;
    case Kind::PuncturedSurface:
      return 2;
    case Kind::Circle:
      return 1;
    case Kind::Unfactored:
      break;
  }
  return k;
}

std::string ModuliFactor::to_string() const {
  std::string n = std::to_string(k);
  switch (kind) {
    case Kind::Euclidean:
      return k == 1 ? "R+" : "(R+)^" + n;
    case Kind::DoubleCoset:
      return "O(" + n + ")\\GL(" + n + ",R)/" + subgroup;
    case Kind::PuncturedSurface:
      return "surface(genus " + std::to_string(genus) + ", punctures " + std::to_string(punctures) + ")";
    case Kind::Circle:
      return "S^1";
    case Kind::Unfactored:
      break;
  }
  return "O(n)\\C/N (dimension " + n + ")";
}

std::string to_string(Topology t) {
  switch (t) {
    case Topology::Contractible:
      return "contractible";
    case Topology::NonContractible:
      return "non-contractible";
    case Topology::ExternalCitation:
      return "unresolved-external-citation";
    case Topology::Unresolved:
      break;
  }
  return "unresolved";
}

std::size_t ModuliExpression::factor_dimension() const {
  std::size_t d = 0;
  for (const auto& f : factors) d += f.dimension();
  return d;
}

std::string ModuliExpression::to_string() const {
  std::size_t euclidean = 0;
  for (const auto& f : factors)
    if (f.kind == ModuliFactor::Kind::Euclidean) euclidean += f.k;
  std::vector<std::string> parts;
  bool placed = false;
  for (const auto& f : factors) {
    if (f.kind != ModuliFactor::Kind::Euclidean) {
      parts.push_back(f.to_string());
    } else if (!placed) {
      parts.push_back(ModuliFactor{ModuliFactor::Kind::Euclidean, euclidean, {}, 0, 0}.to_string());
      placed = true;
    }
  }
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " x " : "") + parts[i];
  return out;
}

TopologyTag topology_tag(const ModuliExpression& m) {
  if (m.topology == Topology::ExternalCitation) return TopologyTag::ExternalCitation;
  if (m.topology_description.find("3-punctured sphere") != std::string::npos) return TopologyTag::PuncturedSphereType;
  if (m.topology_description.find("S^1") != std::string::npos) return TopologyTag::CylinderType;
  return TopologyTag::Contractible;
}

namespace {

using Partition = std::vector<std::vector<std::size_t>>;

Partition partition(const std::vector<TemplateBlock>& blocks) {
  Partition p;
  for (const auto& b : blocks) p.push_back(b.coords);
  return p;
}

std::size_t block_contribution(const TemplateBlock& b) {
  std::size_t n = b.coords.size();
  return b.kind == TemplateBlock::Kind::Finite ? b.k : n * (n + 1) / 2;
}

std::string join(const std::vector<std::string>& parts, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

// First pair (i, j) of coordinates in different blocks with m(i, j) != 0.
std::optional<std::pair<std::size_t, std::size_t>> off_block(const Mat& m, const Partition& p) {
  std::vector<std::size_t> owner(m.rows());
  for (std::size_t b = 0; b < p.size(); ++b)
    for (std::size_t c : p[b]) owner[c] = b;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (owner[i] != owner[j] && !m(i, j).is_zero()) return std::pair{i, j};
  return std::nullopt;
}

std::size_t restricted_dimension(const SymmetricCommutant& c, const std::vector<std::size_t>& coords) {
  std::vector<Vec> rows;
  for (const auto& s : c.basis) {
    Vec v;
    for (std::size_t i = 0; i < coords.size(); ++i)
      for (std::size_t j = i; j < coords.size(); ++j) v.push_back(s(coords[i], coords[j]));
    rows.push_back(v);
  }
  if (rows.empty()) return 0;
  return Mat::from_rows(rows).rank();
}

struct Context {
  const CatalogEntry& entry;
  const ExpectedResults& expected;
  HolonomyGroup holonomy;
  SymmetricCommutant commutant;
  std::optional<std::vector<NormalizerMember>> members;
  std::string enumeration_note;
};

Context make_context(const CatalogEntry& g, const VerifyOptions& options) {
  Context c{g, expected_results(g.name), holonomy(g), {}, std::nullopt, {}};
  c.commutant = symmetric_commutant(c.holonomy);
  if (c.holonomy.order() == 1) {
    c.enumeration_note = "trivial holonomy: every lattice automorphism normalizes";
    return c;
  }
  try {
    c.members = enumerate_member_records(g, options.entry_bound);
  } catch (const EnumerationBudgetExceeded& e) {
    c.enumeration_note = e.what();
  }
  return c;
}

void premises(const Context& c, ModuliExpression& m) {
  const auto& blocks = c.expected.moduli_template;
  if (blocks.size() < 2) return;
  Partition p = partition(blocks);
  for (const auto& s : c.commutant.basis)
    if (auto ij = off_block(s, p)) {
      m.premise_failures.push_back("cone element " + s.to_string() + " couples coordinates " +
                                   std::to_string(ij->first) + " and " + std::to_string(ij->second));
      break;
    }
  for (const auto& b : blocks) {
    std::size_t got = restricted_dimension(c.commutant, b.coords);
    if (got != block_contribution(b))
      m.premise_failures.push_back("cone block of size " + std::to_string(b.coords.size()) + " has dimension " +
                                   std::to_string(got) + ", expected " + std::to_string(block_contribution(b)));
  }
  if (!c.members) {
    m.notes.push_back("normalizer blocks not checked: " + c.enumeration_note);
    return;
  }
  for (const auto& r : *c.members) {
    if (auto ij = off_block(r.matrix, p)) {
      m.premise_failures.push_back("normalizer element " + r.matrix.to_string() + " is not block diagonal");
      return;
    }
    for (const auto& b : blocks) {
      if (b.kind != TemplateBlock::Kind::Finite) continue;
      Mat x = r.matrix.select(b.coords, b.coords);
      if (!(x.transpose() * x).is_identity()) {
        m.premise_failures.push_back("normalizer block " + x.to_string() + " is not orthogonal");
        return;
      }
    }
  }
}

struct Shape {
  std::size_t reals = 0;
  std::size_t circles = 0;
  std::vector<std::string> surfaces;
};

void topology(const VerifyOptions& options, ModuliExpression& m) {
  if (!m.premise_failures.empty()) {
    m.topology = Topology::Unresolved;
    return;
  }
  Shape shape;
  for (const auto& f : m.factors) {
    if (f.kind == ModuliFactor::Kind::Euclidean) {
      shape.reals += f.k;
      continue;
    }
    if (f.k != 2) {
      m.topology = Topology::ExternalCitation;
      m.notes.push_back(f.to_string() + ": contractibility is an external result");
      continue;
    }
    try {
      auto d = domain_for(f.subgroup + "+", options.coset_budget, options.pairing_word_length);
      OrbifoldInvariants o = orbifold_invariants(d);
      m.orbifolds.push_back(o);
      m.notes.push_back(f.subgroup + "+: index " + std::to_string(d.cell_count()) + ", " + o.describe());
      shape.reals += 1;
      if (o.genus == 0 && o.cusps == 1) {
        shape.reals += 2;
      } else if (o.genus == 0 && o.cusps == 2) {
        shape.circles += 1;
        shape.reals += 1;
      } else if (o.genus == 0 && o.cusps == 3) {
        shape.surfaces.push_back("3-punctured sphere");
      } else {
        shape.surfaces.push_back("surface(genus " + std::to_string(o.genus) + ", punctures " +
                                 std::to_string(o.cusps) + ")");
      }
    } catch (const Error& e) {
      m.topology = Topology::Unresolved;
      m.notes.push_back(f.subgroup + "+: " + e.what());
    }
  }
  if (m.topology != Topology::Contractible) return;
  std::vector<std::string> parts(shape.circles, "S^1");
  parts.insert(parts.end(), shape.surfaces.begin(), shape.surfaces.end());
  if (shape.reals) parts.push_back("R^" + std::to_string(shape.reals));
  m.topology_description = join(parts, " x ");
  m.topology = shape.circles == 0 && shape.surfaces.empty() ? Topology::Contractible : Topology::NonContractible;
}

ModuliExpression descriptor(const Context& c, const VerifyOptions& options) {
  ModuliExpression m;
  m.teichmuller_dim = c.commutant.dimension;
  m.topology = Topology::Contractible;
  for (const auto& b : c.expected.moduli_template) {
    ModuliFactor f;
    if (b.kind == TemplateBlock::Kind::Finite) {
      f.kind = ModuliFactor::Kind::Euclidean;
      f.k = b.k;
    } else {
      f.kind = ModuliFactor::Kind::DoubleCoset;
      f.k = b.coords.size();
      f.subgroup = b.subgroup;
    }
    m.factors.push_back(f);
  }
  premises(c, m);
  if (!m.premise_failures.empty()) {
    m.factors = {ModuliFactor{ModuliFactor::Kind::Unfactored, m.teichmuller_dim, {}, 0, 0}};
  }
  topology(options, m);
  return m;
}

}  // namespace

ModuliExpression moduli_descriptor(const CatalogEntry& g, const VerifyOptions& options) {
  return descriptor(make_context(g, options), options);
}

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass:
      return "pass";
    case ClaimStatus::Fail:
      return "fail";
    case ClaimStatus::Skipped:
      break;
  }
  return "skipped";
}

bool VerificationReport::passed() const {
  return std::none_of(claims.begin(), claims.end(), [](const Claim& c) { return c.status == ClaimStatus::Fail; });
}

const Claim* VerificationReport::find(const std::string& id) const {
  for (const auto& c : claims)
    if (c.id == id) return &c;
  return nullptr;
}

namespace {

Claim check(std::string id, bool ok, std::string witness) {
  return {std::move(id), ok ? ClaimStatus::Pass : ClaimStatus::Fail, std::move(witness)};
}

Claim skipped(std::string id, std::string why) { return {std::move(id), ClaimStatus::Skipped, std::move(why)}; }

bool all_orthogonal(const HolonomyGroup& h) {
  return std::all_of(h.elements.begin(), h.elements.end(),
                     [](const Mat& a) { return (a.transpose() * a).is_identity(); });
}

std::string tag_text(TopologyTag t) { return flatmod::to_string(t); }

Claim block_subgroups(const Context& c) {
  if (c.holonomy.order() == 1) return check("normalizer-blocks", true, c.enumeration_note);
  if (!c.members) return skipped("normalizer-blocks", c.enumeration_note);
  std::size_t checked = 0;
  for (const auto& b : c.expected.moduli_template) {
    if (b.kind != TemplateBlock::Kind::DoubleCoset) continue;
    CongruenceSubgroup s = subgroup(b.subgroup);
    for (const auto& r : *c.members) {
      Mat x = r.matrix.select(b.coords, b.coords);
      bool in = false;
      try {
        in = membership(s, x);
      } catch (const Error&) {
      }
      if (!in) return check("normalizer-blocks", false, "block " + x.to_string() + " of " + r.matrix.to_string() +
                                                            " is not in " + b.subgroup);
      ++checked;
    }
  }
  return check("normalizer-blocks", true, std::to_string(checked) + " blocks of " +
                                              std::to_string(c.members->size()) + " members checked");
}

}  // namespace

VerificationReport verify_entry(const std::string& name, const VerifyOptions& options) {
  const CatalogEntry& g = load_group(name);
  Context c = make_context(g, options);
  VerificationReport r;
  r.entry = g.name;
  auto& out = r.claims;

  out.push_back(check("holonomy-order", c.holonomy.order() == g.holonomy_order,
                      std::to_string(c.holonomy.order()) + " (expected " + std::to_string(g.holonomy_order) + ")"));
  bool isometries = std::all_of(g.generators.begin(), g.generators.end(), is_isometry);
  out.push_back(check("isometries", isometries, isometries ? "all generators" : "a generator is not orthogonal"));
  GroupStructure s = group_structure(g);
  out.push_back(check("lattice", s.lattice == g.lattice, s.lattice.basis().to_string()));
  out.push_back(check("torsion-free", is_torsion_free(g), ""));
  if (g.integral_rep) {
    bool ok = reproduces_integral_representation(g.name);
    out.push_back(check("integral-representation", ok, "P = " + g.integral_rep->conjugator.to_string()));
  }
  out.push_back(check("cone-dimension", c.commutant.dimension == c.expected.teichmuller_dim,
                      std::to_string(c.commutant.dimension) + " (expected " +
                          std::to_string(c.expected.teichmuller_dim) + ")"));
  if (all_orthogonal(c.holonomy)) {
    std::size_t d = commuting_symmetric(c.holonomy).dimension;
    out.push_back(check("eq2-equivalence", d == c.commutant.dimension, "commuting dimension " + std::to_string(d)));
  }

  std::vector<std::string> failed;
  for (const auto& x : c.expected.normalizer_generators) {
    bool ok = false;
    try {
      ok = normalizer_membership(x, g, s).member;
    } catch (const Error&) {
    }
    if (!ok) failed.push_back(x.to_string());
  }
  out.push_back(check("normalizer-generators", failed.empty(),
                      failed.empty() ? std::to_string(c.expected.normalizer_generators.size()) + " members"
                                     : "not members: " + join(failed)));
  if (!c.expected.normalizer_non_members.empty()) {
    failed.clear();
    for (const auto& x : c.expected.normalizer_non_members)
      if (normalizer_membership(x, g, s).member) failed.push_back(x.to_string());
    out.push_back(check("normalizer-non-members", failed.empty(),
                        failed.empty() ? "all rejected" : "accepted: " + join(failed)));
  }
  out.push_back(block_subgroups(c));

  if (c.expected.semidirect) {
    std::optional<bool> got;
    if (c.holonomy.order() == 1) {
      got = true;
    } else if (c.members) {
      got = is_semidirect(g, *c.members);
    }
    if (!got) {
      out.push_back(skipped("semidirect", c.enumeration_note));
    } else {
      std::string witness = *got ? "every member lifts with zero translation" : "";
      if (!*got && c.members)
        for (const auto& m : *c.members)
          if (!m.zero_translation_works) {
            witness = m.matrix.to_string() + " needs a nonzero translation";
            break;
          }
      out.push_back(check("semidirect", *got == *c.expected.semidirect,
                          witness + " (expected " + (*c.expected.semidirect ? "true" : "false") + ")"));
    }
  }

  ModuliExpression m = descriptor(c, options);
  out.push_back(check("moduli-dimension", m.factor_dimension() == m.teichmuller_dim,
                      std::to_string(m.factor_dimension()) + " = " + std::to_string(m.teichmuller_dim)));
  if (c.expected.moduli_template.size() > 1)
    out.push_back(check("factorization-premises", m.premise_failures.empty(),
                        m.premise_failures.empty() ? "cone and normalizer split along the template"
                                                   : join(m.premise_failures, "; ")));
  out.push_back(check("moduli-expression", m.to_string() == c.expected.moduli_text, m.to_string()));
  for (const auto& f : m.factors)
    if (f.subgroup == "<Gamma0_1(6),Gamma0_5(6)>") {
      auto x = coset_enumerate(subgroup(f.subgroup + "+"), options.coset_budget);
      auto y = coset_enumerate(subgroup("Gamma0(6)+"), options.coset_budget);
      out.push_back(check("generated-group-identity", same_coset_table(x, y),
                          "index " + std::to_string(x.index()) + " and " + std::to_string(y.index())));
    }
  std::string computed = to_string(m.topology) + (m.topology_description.empty() ? "" : ": " +
                                                                                          m.topology_description);
  if (c.expected.topology_verdict) {
    bool ok = topology_tag(m) == *c.expected.topology_verdict &&
              (c.expected.topology_description.empty() || c.expected.topology_description == m.topology_description);
    out.push_back(check("topology", ok, computed + " (expected " + tag_text(*c.expected.topology_verdict) +
                                            (c.expected.topology_description.empty()
                                                 ? ""
                                                 : ": " + c.expected.topology_description) +
                                            ")"));
  } else {
    out.push_back(skipped("topology", "no stated verdict; computed " + computed));
  }
  r.moduli = std::move(m);
  return r;
}

std::vector<VerificationReport> verify_all(const VerifyOptions& options) {
  std::vector<VerificationReport> out;
  for (const auto& n : catalog_names()) out.push_back(verify_entry(n, options));
  return out;
}

}  // namespace flatmod
