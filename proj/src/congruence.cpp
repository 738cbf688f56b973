#include "flatmod/congruence.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <regex>
#include <set>
#include <sstream>

#include "flatmod/errors.hpp"

namespace flatmod {

Mat2 Mat2::inverse() const {
  std::int64_t dt = det();
  if (dt != 1 && dt != -1) throw NotUnimodular("matrix " + to_string(*this) + " is not unimodular");
  return {d * dt, -b * dt, -c * dt, a * dt};
}

Mat2 to_mat2(const Mat& m) {
  if (m.rows() != 2 || m.cols() != 2) throw DimensionMismatch("expected a 2x2 matrix");
  if (!m.is_integer()) throw NonIntegerInput("expected an integer matrix");
  auto get = [&](std::size_t i, std::size_t j) { return static_cast<std::int64_t>(m(i, j).to_integer().get_si()); };
  return {get(0, 0), get(0, 1), get(1, 0), get(1, 1)};
}

Mat to_mat(const Mat2& m) {
  return Mat{{Scalar(static_cast<long>(m.a)), Scalar(static_cast<long>(m.b))},
             {Scalar(static_cast<long>(m.c)), Scalar(static_cast<long>(m.d))}};
}

std::string to_string(const Mat2& m) {
  std::ostringstream os;
  os << "[[" << m.a << ", " << m.b << "], [" << m.c << ", " << m.d << "]]";
  return os.str();
}

namespace {

using Entries = std::vector<std::int64_t>;

bool congruent(std::int64_t x, std::int64_t r, std::int64_t n) { return ((x - r) % n + n) % n == 0; }
bool divides(std::int64_t n, std::int64_t x) { return congruent(x, 0, n); }

struct Definition {
  std::size_t dimension;
  bool is_group;
  std::function<bool(const Entries&)> predicate;
};

// 2x2 entries: a = e[0], b = e[1], c = e[2], d = e[3].
Definition two(bool is_group, std::function<bool(std::int64_t, std::int64_t, std::int64_t, std::int64_t)> f) {
  return {2, is_group, [f](const Entries& e) { return f(e[0], e[1], e[2], e[3]); }};
}

// Closure of the mod-n images of the matrices accepted by the given predicates,
// lifted back to GL(2, Z).
Definition generated_mod(std::int64_t n, std::vector<std::function<bool(const Entries&)>> preds) {
  using Key = std::array<std::int64_t, 4>;
  auto reduce = [n](std::int64_t x) { return (x % n + n) % n; };
  auto set = std::make_shared<std::set<Key>>();
  for (std::int64_t a = 0; a < n; ++a)
    for (std::int64_t b = 0; b < n; ++b)
      for (std::int64_t c = 0; c < n; ++c)
        for (std::int64_t d = 0; d < n; ++d) {
          std::int64_t dt = reduce(a * d - b * c);
          if (dt != 1 && dt != reduce(-1)) continue;
          Entries e{a, b, c, d};
          if (std::any_of(preds.begin(), preds.end(), [&](const auto& p) { return p(e); })) set->insert({a, b, c, d});
        }
  std::vector<Key> frontier(set->begin(), set->end());
  const std::vector<Key> gens = frontier;
  while (!frontier.empty()) {
    std::vector<Key> next;
    for (const auto& x : frontier)
      for (const auto& y : gens) {
        Key p{reduce(x[0] * y[0] + x[1] * y[2]), reduce(x[0] * y[1] + x[1] * y[3]), reduce(x[2] * y[0] + x[3] * y[2]),
              reduce(x[2] * y[1] + x[3] * y[3])};
        if (set->insert(p).second) next.push_back(p);
      }
    frontier = std::move(next);
  }
  return {2, true, [set, reduce](const Entries& e) {
            return set->count({reduce(e[0]), reduce(e[1]), reduce(e[2]), reduce(e[3])}) > 0;
          }};
}

const std::map<std::string, Definition>& definitions() {
  static const std::map<std::string, Definition> defs = [] {
    std::map<std::string, Definition> m;
    m["GL(2,Z)"] = two(true, [](auto, auto, auto, auto) { return true; });
    m["SL(2,Z)"] = two(true, [](auto a, auto b, auto c, auto d) { return a * d - b * c == 1; });
    m["Gamma0(2)"] = two(true, [](auto, auto, auto c, auto) { return divides(2, c); });
    m["Gamma0(2)t"] = two(true, [](auto, auto b, auto, auto) { return divides(2, b); });
    m["Gamma(2)"] = two(true, [](auto a, auto b, auto c, auto d) {
      return divides(2, b) && divides(2, c) && congruent(a, 1, 2) && congruent(d, 1, 2);
    });
    // Gamma(2) . <Y>, Y = [[0, 1], [1, 0]]: reduces to Id or Y mod 2.
    m["Gamma(2)Y"] = two(true, [](auto a, auto b, auto c, auto d) {
      return (divides(2, b) && divides(2, c)) || (divides(2, a) && divides(2, d));
    });
    m["Gamma0(3)"] = two(true, [](auto, auto b, auto, auto) { return divides(3, b); });
    m["Gamma(3)"] = two(true, [](auto, auto b, auto c, auto) { return divides(3, b) && divides(3, c); });
    m["Gamma0(4)"] = two(true, [](auto, auto b, auto, auto) { return divides(4, b); });
    m["Gamma0(6)"] = two(true, [](auto, auto b, auto, auto) { return divides(6, b); });
    m["Gamma0_1(3)"] = two(true, [](auto, auto b, auto, auto d) { return divides(3, b) && congruent(d, 1, 3); });
    m["Gamma0_2(3)"] = two(false, [](auto, auto b, auto, auto d) { return divides(3, b) && congruent(d, 2, 3); });
    m["Gamma1_2(3)"] = two(false, [](auto a, auto b, auto c, auto d) {
      return divides(3, b) && divides(3, c) && congruent(a, 1, 3) && congruent(d, 2, 3);
    });
    m["Gamma2_1(3)"] = two(false, [](auto a, auto b, auto c, auto d) {
      return divides(3, b) && divides(3, c) && congruent(a, 2, 3) && congruent(d, 1, 3);
    });
    m["Gamma0_1(4)"] = two(true, [](auto, auto b, auto, auto d) { return divides(4, b) && congruent(d, 1, 4); });
    m["Gamma0_3(4)"] = two(false, [](auto, auto b, auto, auto d) { return divides(4, b) && congruent(d, 3, 4); });
    m["Gamma0_1(2,4)"] = two(true, [](auto, auto b, auto c, auto d) {
      return divides(2, c) && divides(4, b) && congruent(d, 1, 4);
    });
    m["Gamma0_3(2,4)"] = two(false, [](auto, auto b, auto c, auto d) {
      return divides(2, c) && divides(4, b) && congruent(d, 3, 4);
    });
    m["Gamma0_1(6)"] = two(true, [](auto, auto b, auto, auto d) { return divides(6, b) && congruent(d, 1, 6); });
    m["Gamma0_5(6)"] = two(false, [](auto, auto b, auto, auto d) { return divides(6, b) && congruent(d, 5, 6); });
    m["<Gamma0_1(6),Gamma0_5(6)>"] = generated_mod(6, {m["Gamma0_1(6)"].predicate, m["Gamma0_5(6)"].predicate});
    // 3x3 entries [[a, b, c], [d, e, f], [g, h, i]].
    m["GL(3,Z)"] = {3, true, [](const Entries&) { return true; }};
    m["Gamma0(2)_3"] = {3, true, [](const Entries& e) { return divides(2, e[3]) && divides(2, e[6]); }};
    m["Gamma(2)_3"] = {3, true,
                       [](const Entries& e) { return divides(2, e[3]) && divides(2, e[2]) && divides(2, e[5]); }};
    m["Gamma^(2)_3"] = {3, true, [](const Entries& e) {
                          return divides(2, e[3]) && divides(2, e[6]) && divides(2, e[2]) && divides(2, e[5]);
                        }};
    m["GL(4,Z)"] = {4, true, [](const Entries&) { return true; }};
    return m;
  }();
  return defs;
}

}  // namespace

CongruenceSubgroup subgroup(const std::string& id) {
  std::string base = id;
  bool positive = false;
  if (!base.empty() && base.back() == '+') {
    positive = true;
    base.pop_back();
  }
  auto it = definitions().find(base);
  if (it == definitions().end()) {
    // Short forms such as Gamma2 or Gamma02Y.
    static const std::regex shorthand(R"((Gamma0?)(\d)(.*))");
    std::smatch m;
    if (std::regex_match(base, m, shorthand)) base = m[1].str() + "(" + m[2].str() + ")" + m[3].str();
    it = definitions().find(base);
  }
  if (it == definitions().end()) throw UnknownName("unknown subgroup: " + id);
  return {base + (positive ? "+" : ""), it->second.dimension, positive, it->second.is_group, it->second.predicate};
}

std::vector<std::string> subgroup_names() {
  std::vector<std::string> out;
  for (const auto& [name, def] : definitions()) out.push_back(name);
  return out;
}

bool membership(const CongruenceSubgroup& g, const Mat& x) {
  if (x.rows() != g.dimension || x.cols() != g.dimension) throw DimensionMismatch("membership: wrong matrix size");
  if (!x.is_integer()) throw NonIntegerInput("membership: matrix is not integral");
  Scalar dt = x.determinant();
  if (dt != Scalar(1) && dt != Scalar(-1)) throw NotUnimodular("membership: determinant is not +-1");
  if (g.positive_part && dt != Scalar(1)) return false;
  std::vector<std::int64_t> e;
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) e.push_back(x(i, j).to_integer().get_si());
  return g.predicate(e);
}

bool membership(const CongruenceSubgroup& g, const Mat2& x) {
  if (g.dimension != 2) throw DimensionMismatch("membership: subgroup is not in GL(2, Z)");
  std::int64_t dt = x.det();
  if (dt != 1 && dt != -1) throw NotUnimodular("membership: determinant is not +-1");
  if (g.positive_part && dt != 1) return false;
  return g.predicate({x.a, x.b, x.c, x.d});
}

bool projective_membership(const CongruenceSubgroup& g, const Mat2& x) {
  return membership(g, x) || membership(g, -x);
}

std::string to_string(const Word& w) {
  if (w.empty()) return "Id";
  std::string s;
  for (Letter l : w) s += l == Letter::S ? "S" : (l == Letter::T ? "T" : "T^-1");
  return s;
}

Word parse_word(const std::string& text) {
  if (text == "Id" || text.empty()) return {};
  Word w;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == 'S') {
      w.push_back(Letter::S);
      ++i;
    } else if (text[i] == 'T') {
      ++i;
      if (text.compare(i, 3, "^-1") == 0) {
        w.push_back(Letter::TInv);
        i += 3;
      } else if (text.compare(i, 5, "^{-1}") == 0) {
        w.push_back(Letter::TInv);
        i += 5;
      } else {
        w.push_back(Letter::T);
      }
    } else {
      throw ParseError("bad word: " + text);
    }
  }
  return w;
}

Mat2 evaluate(const Word& w) {
  Mat2 m;
  for (Letter l : w) m = m * (l == Letter::S ? kS : (l == Letter::T ? kT : kTInv));
  return m;
}

std::size_t CosetTable::coset_of(const Mat2& g) const {
  for (std::size_t i = 0; i < representatives.size(); ++i)
    if (projective_membership(subgroup, g * representatives[i].inverse())) return i;
  throw Error("no coset contains " + to_string(g));
}

namespace {

void require_sl2_subgroup(const CongruenceSubgroup& g) {
  if (g.dimension != 2) throw DimensionMismatch(g.name + " is not a subgroup of GL(2, Z)");
  if (!g.is_group) throw Error(g.name + " is not a group");
}

CongruenceSubgroup positive(CongruenceSubgroup g) {
  if (!g.positive_part && g.name != "SL(2,Z)") g.name += "+";
  g.positive_part = true;
  return g;
}

}  // namespace

CosetTable coset_enumerate(const CongruenceSubgroup& g, std::size_t budget) {
  require_sl2_subgroup(g);
  CosetTable t;
  t.subgroup = positive(g);
  t.words.push_back({});
  t.representatives.push_back(Mat2{});
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t i = queue.front();
    queue.pop_front();
    for (Letter l : {Letter::S, Letter::T, Letter::TInv}) {
      Word w = t.words[i];
      w.push_back(l);
      Mat2 m = evaluate(w);
      bool known = false;
      for (const auto& r : t.representatives)
        if (projective_membership(t.subgroup, m * r.inverse())) {
          known = true;
          break;
        }
      if (known) continue;
      if (t.representatives.size() >= budget) throw IndexBudgetExceeded("coset enumeration exceeded budget for " + g.name);
      t.words.push_back(w);
      t.representatives.push_back(m);
      queue.push_back(t.representatives.size() - 1);
    }
  }
  return t;
}

CosetTable coset_table_from_words(const CongruenceSubgroup& g, const std::vector<std::string>& words) {
  require_sl2_subgroup(g);
  CosetTable t;
  t.subgroup = positive(g);
  for (const auto& s : words) {
    t.words.push_back(parse_word(s));
    t.representatives.push_back(evaluate(t.words.back()));
  }
  for (std::size_t i = 0; i < t.index(); ++i)
    for (std::size_t j = i + 1; j < t.index(); ++j)
      if (projective_membership(t.subgroup, t.representatives[i] * t.representatives[j].inverse()))
        throw Error("representatives " + to_string(t.words[i]) + " and " + to_string(t.words[j]) + " share a coset");
  for (const auto& r : t.representatives)
    for (const Mat2& x : {kS, kT, kTInv}) t.coset_of(r * x);
  return t;
}

std::size_t relative_index(const CongruenceSubgroup& larger, const CosetTable& smaller) {
  std::size_t n = 0;
  for (const auto& r : smaller.representatives)
    if (projective_membership(larger, r)) ++n;
  return n;
}

bool same_coset_table(const CosetTable& x, const CosetTable& y) {
  if (x.index() != y.index() || x.words != y.words) return false;
  for (const auto& r : x.representatives)
    for (const auto& s : x.representatives) {
      Mat2 q = r * s.inverse();
      if (projective_membership(x.subgroup, q) != projective_membership(y.subgroup, q)) return false;
    }
  return true;
}

}  // namespace flatmod
