#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "flatmod/bieberbach.hpp"
#include "flatmod/errors.hpp"
#include "flatmod/serialize.hpp"
#include "flatmod/svg.hpp"

using namespace flatmod;

namespace {

struct CliConfig {
  std::size_t entry_bound = 2;
  std::size_t coset_budget = 256;
  std::size_t pairing_word_length = 8;
  double float_tolerance = 1e-9;
  double svg_ymax = 2.5;
  std::string output_format = "text";
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void load_config(CliConfig& c, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  Json j = Json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw UsageError("config file " + path + " is not a JSON object");
  try {
    if (j.contains("entry_bound")) c.entry_bound = j["entry_bound"].get<std::size_t>();
    if (j.contains("coset_budget")) c.coset_budget = j["coset_budget"].get<std::size_t>();
    if (j.contains("pairing_word_length")) c.pairing_word_length = j["pairing_word_length"].get<std::size_t>();
    if (j.contains("float_tolerance")) c.float_tolerance = j["float_tolerance"].get<double>();
    if (j.contains("svg_ymax")) c.svg_ymax = j["svg_ymax"].get<double>();
    if (j.contains("output_format")) c.output_format = j["output_format"].get<std::string>();
  } catch (const Json::exception& e) {
    throw UsageError(std::string("bad config value: ") + e.what());
  }
}

void validate(const CliConfig& c) {
  if (c.entry_bound == 0 || c.coset_budget == 0 || c.pairing_word_length == 0 || !(c.float_tolerance > 0) ||
      !(c.svg_ymax > 0))
    throw UsageError("all bounds must be positive");
  if (c.output_format != "text" && c.output_format != "json" && c.output_format != "svg")
    throw UsageError("output format must be json, text or svg");
}

VerifyOptions verify_options(const CliConfig& c) { return {c.entry_bound, c.coset_budget, c.pairing_word_length}; }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

std::string matrix_lines(const Mat& m, const std::string& indent) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << indent << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << "]\n";
  }
  return os.str();
}

int catalog_list(const CliConfig& c) {
  if (c.output_format == "json") {
    std::cout << Json(catalog_names()).dump(2) << "\n";
    return 0;
  }
  for (const auto& n : catalog_names()) {
    const auto& g = load_group(n);
    std::cout << n << "  dim " << g.dimension << "  holonomy order " << g.holonomy_order << "  "
              << (g.orientable ? "orientable" : "non-orientable") << "\n";
  }
  return 0;
}

std::string holonomy_name(const HolonomyGroup& h) {
  if (h.order() == 1) return "trivial";
  bool cyclic = false;
  for (const auto& a : h.elements) {
    Mat p = a;
    std::size_t k = 1;
    while (!p.is_identity()) {
      p = p * a;
      ++k;
    }
    if (k == h.order()) cyclic = true;
  }
  return cyclic ? "Z_" + std::to_string(h.order()) : "Z_2 x Z_2";
}

int catalog_show(const CliConfig& c, const std::string& name) {
  const auto& g = load_group(name);
  HolonomyGroup h = holonomy(g);
  if (c.output_format == "json") {
    Json j = to_json(g);
    j["holonomy"] = holonomy_name(h);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << g.name << " (dimension " << g.dimension << ", " << (g.orientable ? "orientable" : "non-orientable")
            << ")\nholonomy: " << holonomy_name(h) << " of order " << h.order() << "\ngenerators:\n";
  for (const auto& f : g.generators) {
    if (f.linear.is_identity()) {
      std::cout << "  translation " << to_string(f.translation) << "\n";
    } else {
      std::cout << "  linear part\n" << matrix_lines(f.linear, "    ") << "  translation " << to_string(f.translation)
                << "\n";
    }
  }
  std::cout << "lattice basis (columns):\n" << matrix_lines(g.lattice.basis(), "  ");
  return 0;
}

void print_report(const VerificationReport& r) {
  std::cout << r.entry << ": " << (r.passed() ? "PASS" : "FAIL") << "\n";
  for (const auto& c : r.claims)
    std::cout << "  [" << to_string(c.status) << "] " << c.id << (c.witness.empty() ? "" : ": " + c.witness) << "\n";
}

int verify(const CliConfig& c, const std::string& name) {
  std::vector<VerificationReport> reports;
  if (name == "all") {
    reports = verify_all(verify_options(c));
  } else {
    reports.push_back(verify_entry(name, verify_options(c)));
  }
  bool ok = true;
  Json j = Json::array();
  for (const auto& r : reports) {
    ok = ok && r.passed();
    if (c.output_format == "json") {
      j.push_back(to_json(r));
    } else {
      print_report(r);
    }
  }
  if (c.output_format == "json") {
    std::cout << (name == "all" ? j : j[0]).dump(2) << "\n";
  } else if (reports.size() > 1) {
    std::size_t passed = 0;
    for (const auto& r : reports) passed += r.passed();
    std::cout << passed << "/" << reports.size() << " entries pass\n";
  }
  return ok ? 0 : 1;
}

int cone(const CliConfig& c, const std::string& name) {
  const auto& g = load_group(name);
  SymmetricCommutant s = symmetric_commutant(holonomy(g));
  if (c.output_format == "json") {
    Json j = to_json(s);
    j["entry"] = g.name;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << g.name << ": symmetric commutant of dimension " << s.dimension << "\n";
  for (std::size_t i = 0; i < s.basis.size(); ++i) std::cout << "  S" << i + 1 << "\n" << matrix_lines(s.basis[i], "    ");
  return 0;
}

int normalizer(const CliConfig& c, const std::string& name, const std::optional<std::string>& test) {
  const auto& g = load_group(name);
  if (test) {
    Mat x = parse_matrix(*test);
    NormalizerVerdict v = normalizer_membership(x, g);
    if (c.output_format == "json") {
      std::cout << to_json(v).dump(2) << "\n";
    } else {
      std::cout << (v.member ? "member" : "not a member");
      if (v.witness_translation) std::cout << ", translation " << to_string(*v.witness_translation);
      if (v.member) std::cout << (v.zero_translation_works ? ", zero translation works" : ", needs a translation");
      std::cout << "\n";
    }
    return 0;
  }
  std::vector<NormalizerMember> members;
  if (holonomy(g).order() > 1) members = enumerate_member_records(g, c.entry_bound);
  bool semidirect = members.empty() || is_semidirect(g, members);
  if (c.output_format == "json") {
    Json list = Json::array();
    for (const auto& m : members)
      list.push_back({{"matrix", to_json(m.matrix)}, {"zero_translation_works", m.zero_translation_works}});
    std::cout << Json{{"entry", g.name}, {"bound", c.entry_bound}, {"semidirect", semidirect}, {"members", list}}.dump(2)
              << "\n";
    return 0;
  }
  if (members.empty()) {
    std::cout << g.name << ": trivial holonomy, every lattice automorphism normalizes; semidirect\n";
    return 0;
  }
  std::size_t lifts = 0;
  for (const auto& m : members) lifts += !m.zero_translation_works;
  std::cout << g.name << ": " << members.size() << " members with lattice entries bounded by " << c.entry_bound
            << ", " << lifts << " need a translation; " << (semidirect ? "semidirect" : "not semidirect") << "\n";
  for (const auto& m : members)
    std::cout << "  " << m.matrix.to_string() << (m.zero_translation_works ? "" : "  (translated)") << "\n";
  return 0;
}

int congruence_index(const CliConfig& c, const std::string& id) {
  CosetTable t = coset_enumerate(subgroup(id), c.coset_budget);
  if (c.output_format == "json") {
    std::cout << to_json(t).dump(2) << "\n";
    return 0;
  }
  std::cout << t.subgroup.name << ": index " << t.index() << "\n";
  for (std::size_t i = 0; i < t.index(); ++i)
    std::cout << "  " << to_string(t.words[i]) << "  " << to_string(t.representatives[i]) << "\n";
  return 0;
}

int congruence_domain(const CliConfig& c, const std::string& id, const std::string& svg_path,
                      const std::string& json_path) {
  FundamentalDomain d = domain_for(id, c.coset_budget, c.pairing_word_length);
  OrbifoldInvariants o = orbifold_invariants(d);
  Json j = to_json(d);
  j["orbifold"] = to_json(o);
  std::string svg = render_svg(d, {c.svg_ymax, 160});
  if (!svg_path.empty()) write_file(svg_path, svg);
  if (!json_path.empty()) write_file(json_path, j.dump(2) + "\n");
  if (c.output_format == "json") {
    std::cout << j.dump(2) << "\n";
  } else if (c.output_format == "svg") {
    std::cout << svg;
  } else {
    std::cout << d.table.subgroup.name << ": " << d.cell_count() << " cells\n";
    for (const auto& w : d.table.words) std::cout << "  cell " << to_string(w) << "\n";
    for (const auto& p : d.pairings) {
      const Edge& s = d.edges[p.source];
      const Edge& t = d.edges[p.target];
      std::cout << "  pairing " << to_string(p.matrix) << " = " << to_string(p.word) << ": "
                << to_string(d.table.words[s.cell]) << "/" << to_string(s.tag) << " -> "
                << to_string(d.table.words[t.cell]) << "/" << to_string(t.tag) << "\n";
    }
    std::cout << "  orbifold: " << o.describe() << "\n";
  }
  return 0;
}

int congruence_reduce(const CliConfig& c, const std::string& id, double x, double y) {
  FundamentalDomain d = build_domain(coset_enumerate(subgroup(id), c.coset_budget));
  Reduction r = reduce_to_domain({x, y}, d, c.float_tolerance);
  if (c.output_format == "json") {
    std::cout << Json{{"gamma", to_json(r.gamma)},
                      {"z", {r.z.real(), r.z.imag()}},
                      {"cell", to_string(d.table.words[r.cell])},
                      {"ambiguous", r.ambiguous}}
                     .dump(2)
              << "\n";
    return 0;
  }
  std::cout << "gamma " << to_string(r.gamma) << "\nz' = " << r.z.real() + 0.0 << (r.z.imag() < 0 ? " - " : " + ")
            << std::abs(r.z.imag()) << "i in cell " << to_string(d.table.words[r.cell])
            << (r.ambiguous ? " (on a boundary)" : "") << "\n";
  return 0;
}

int moduli(const CliConfig& c, const std::string& name) {
  const auto& g = load_group(name);
  ModuliExpression m = moduli_descriptor(g, verify_options(c));
  if (c.output_format == "json") {
    Json j = to_json(m);
    j["entry"] = g.name;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << g.name << ": " << m.to_string() << "\n  Teichmuller dimension " << m.teichmuller_dim
            << "\n  topology " << to_string(m.topology)
            << (m.topology_description.empty() ? "" : " (" + m.topology_description + ")") << "\n";
  for (const auto& f : m.premise_failures) std::cout << "  premise failed: " << f << "\n";
  for (const auto& n : m.notes) std::cout << "  " << n << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Moduli spaces of flat metrics on closed flat 3- and 4-manifolds"};
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<std::string> config_path;
  std::optional<std::size_t> bound, budget, word_length;
  std::optional<double> tolerance, ymax;
  std::optional<std::string> format;
  app.add_option("--config", config_path, "JSON config file (overrides FLATMOD_CONFIG)");
  app.add_option("--format", format, "json, text or svg");
  app.add_option("--bound", bound, "entry bound for normalizer enumeration");
  app.add_option("--coset-budget", budget, "maximal index for coset enumeration");
  app.add_option("--pairing-length", word_length, "maximal word length in the side pairing search");
  app.add_option("--tolerance", tolerance, "boundary tolerance for point reduction");
  app.add_option("--ymax", ymax, "upper clip of SVG pictures");

  std::string name, id, svg_path, json_path;
  std::optional<std::string> test;
  double x = 0, y = 1;

  auto* catalog = app.add_subcommand("catalog", "stored Bieberbach groups");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "list all entries");
  auto* show = catalog->add_subcommand("show", "generators and holonomy of an entry");
  show->add_option("name", name)->required();

  auto* verify_cmd = app.add_subcommand("verify", "check an entry, or all, against the stored results");
  verify_cmd->add_option("name", name, "entry name or 'all'")->required();

  auto* cone_cmd = app.add_subcommand("cone", "symmetric commutant of the holonomy");
  cone_cmd->add_option("name", name)->required();

  auto* normalizer_cmd = app.add_subcommand("normalizer", "matrix normalizer");
  normalizer_cmd->add_option("name", name)->required();
  normalizer_cmd->add_option("--test", test, "matrix as JSON, e.g. [[1,0,0],[0,1,1],[0,0,1]]");

  auto* congruence = app.add_subcommand("congruence", "congruence subgroups of SL(2,Z)");
  congruence->require_subcommand(1);
  auto* index = congruence->add_subcommand("index", "coset enumeration");
  index->add_option("subgroup", id)->required();
  auto* domain = congruence->add_subcommand("domain", "fundamental domain, side pairings and orbifold");
  domain->add_option("subgroup", id)->required();
  domain->add_option("--svg", svg_path, "write an SVG picture");
  domain->add_option("--json", json_path, "write the domain as JSON");
  auto* reduce = congruence->add_subcommand("reduce", "move a point of H^2 into the domain");
  reduce->add_option("subgroup", id)->required();
  reduce->add_option("x", x)->required();
  reduce->add_option("y", y)->required()->check(CLI::PositiveNumber);

  auto* moduli_cmd = app.add_subcommand("moduli", "moduli space description");
  moduli_cmd->add_option("name", name)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    CliConfig c;
    if (const char* env = std::getenv("FLATMOD_CONFIG"); env && !config_path) load_config(c, env);
    if (config_path) load_config(c, *config_path);
    if (bound) c.entry_bound = *bound;
    if (budget) c.coset_budget = *budget;
    if (word_length) c.pairing_word_length = *word_length;
    if (tolerance) c.float_tolerance = *tolerance;
    if (ymax) c.svg_ymax = *ymax;
    if (format) c.output_format = *format;
    validate(c);

    if (*list) return catalog_list(c);
    if (*show) return catalog_show(c, name);
    if (*verify_cmd) return verify(c, name);
    if (*cone_cmd) return cone(c, name);
    if (*normalizer_cmd) return normalizer(c, name, test);
    if (*index) return congruence_index(c, id);
    if (*domain) return congruence_domain(c, id, svg_path, json_path);
    if (*reduce) return congruence_reduce(c, id, x, y);
    if (*moduli_cmd) return moduli(c, name);
  } catch (const UsageError& e) {
    std::cerr << "flatmod: " << e.what() << "\n";
    return 2;
  } catch (const UnknownName& e) {
    std::cerr << "flatmod: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "flatmod: " << e.what() << "\n";
    return 2;
  } catch (const DimensionMismatch& e) {
    std::cerr << "flatmod: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "flatmod: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
