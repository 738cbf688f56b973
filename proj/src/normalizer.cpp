#include "flatmod/normalizer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>

#include "flatmod/errors.hpp"
#include "flatmod/integer_matrix.hpp"

namespace flatmod {

NormalizerVerdict normalizer_membership(const Mat& x, const CatalogEntry& g) {
  return normalizer_membership(x, g, group_structure(g));
}

NormalizerVerdict normalizer_membership(const Mat& x, const CatalogEntry& g, const GroupStructure& s) {
  const std::size_t n = g.dimension;
  if (!x.is_square() || x.rows() != n) throw DimensionMismatch("normalizer_membership: dimension mismatch");
  if (!x.is_invertible()) throw SingularMatrix("normalizer_membership: singular matrix");
  Mat y = s.lattice.inverse() * x * s.lattice.basis();
  if (!y.is_integer() || y.determinant().abs() != Scalar(1))
    throw DoesNotPreserveLattice("matrix does not preserve the lattice of " + g.name);

  NormalizerVerdict v;
  const Mat xi = mat_inverse(x);
  for (const auto& a : s.holonomy.generators()) v.holonomy_action.emplace_back(a, x * a * xi);
  if (!normalizes_holonomy(x, s.holonomy)) return v;

  // (X, x)(A, w)(X, x)^{-1} = (B, X w + (Id - B) x) must lie in (B, base_B + L), and
  // symmetrically for (X, x)^{-1}. Pure translations are handled by X L = L.
  const Mat id = Mat::identity(n);
  CongruenceSystem sys;
  sys.unknowns = n;
  for (const auto& gen : g.generators) {
    if (gen.linear.is_identity()) continue;
    Mat b = x * gen.linear * xi;
    sys.blocks.push_back({id - b, s.bases[*s.holonomy.index_of(b)] - x * gen.translation, s.lattice});
    Mat bi = xi * gen.linear * x;
    sys.blocks.push_back(
        {-(xi * (id - gen.linear)), s.bases[*s.holonomy.index_of(bi)] - xi * gen.translation, s.lattice});
  }
  if (sys.blocks.empty()) {
    v.member = true;
    v.witness_translation = zero_vec(n);
    v.zero_translation_works = true;
    return v;
  }
  SolutionReport r = solve_mixed_congruence(sys);
  v.member = r.solvable;
  v.witness_translation = r.witness;
  v.zero_translation_works = r.zero_is_witness;
  return v;
}

namespace {

using i64 = std::int64_t;
using i128 = __int128;

i64 to_i64(const Integer& z) {
  if (!z.fits_slong_p()) throw Error("integer out of machine range");
  return z.get_si();
}

// Fraction-free determinant of a small integer matrix.
i64 det_i64(std::vector<i64> a, std::size_t n) {
  i128 sign = 1;
  i128 prev = 1;
  std::vector<i128> m(a.begin(), a.end());
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k * n + k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r * n + k] == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m[k * n + j], m[r * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i * n + j] = (m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j]) / prev;
    prev = m[k * n + k];
  }
  return static_cast<i64>(sign * m[(n - 1) * n + (n - 1)]);
}

// Lattice coordinates: Y = B^{-1} X B and translations B^{-1} w.
struct Frame {
  std::size_t n = 0;
  const GroupStructure* s = nullptr;
  std::vector<Mat> hol;
  /// Holonomy indices of the distinct non-identity generator parts.
  std::vector<std::size_t> hol_gens;
  /// Per non-linear-identity generator: its position in hol_gens and its translation.
  std::vector<std::pair<std::size_t, Vec>> lifts;
  std::vector<Vec> bases;
  bool rational = true;
  i64 den = 1;
};

Frame make_frame(const CatalogEntry& g, const GroupStructure& s) {
  Frame f;
  f.n = g.dimension;
  f.s = &s;
  const Mat& b = s.lattice.basis();
  const Mat& bi = s.lattice.inverse();
  for (const auto& h : s.holonomy.elements) f.hol.push_back(bi * h * b);
  for (std::size_t idx : s.holonomy.generator_indices)
    if (idx != 0 && std::find(f.hol_gens.begin(), f.hol_gens.end(), idx) == f.hol_gens.end())
      f.hol_gens.push_back(idx);
  for (std::size_t i = 0; i < g.generators.size(); ++i) {
    std::size_t idx = s.holonomy.generator_indices[i];
    if (idx == 0) continue;
    std::size_t pos = std::find(f.hol_gens.begin(), f.hol_gens.end(), idx) - f.hol_gens.begin();
    f.lifts.emplace_back(pos, bi * g.generators[i].translation);
  }
  for (const auto& base : s.bases) f.bases.push_back(s.lattice.coordinates(base));
  Integer den = 1;
  auto absorb = [&](const Vec& v) {
    for (const auto& x : v) {
      if (!x.is_rational()) f.rational = false;
      else mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.rational_part().get_den_mpz_t());
    }
  };
  for (const auto& [pos, v] : f.lifts) absorb(v);
  for (const auto& v : f.bases) absorb(v);
  if (f.rational) f.den = to_i64(den);
  return f;
}

std::size_t order_of(const Mat& a) {
  std::size_t k = 1;
  for (Mat p = a; !p.is_identity(); p = p * a) ++k;
  return k;
}

// Solutions of Y A_k = H_{sigma(k)} Y for one assignment sigma, as an affine
// integer parametrization over the free variables.
struct Intertwiner {
  std::vector<std::size_t> sigma;
  std::vector<std::size_t> free;
  /// (pivot variable, numerators over den for each free variable)
  std::vector<std::pair<std::size_t, std::vector<i64>>> dependent;
  i64 den = 1;
  // lift test data, filled lazily
  bool prepared = false;
  std::vector<std::vector<i64>> w;
  std::vector<i64> d;
};

Intertwiner intertwiner(const Frame& f, const std::vector<std::size_t>& sigma) {
  const std::size_t n = f.n;
  std::vector<Vec> rows;
  for (std::size_t k = 0; k < f.hol_gens.size(); ++k) {
    const Mat& a = f.hol[f.hol_gens[k]];
    const Mat& h = f.hol[sigma[k]];
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        Vec row = zero_vec(n * n);
        for (std::size_t r = 0; r < n; ++r) {
          row[p * n + r] += a(r, q);
          row[r * n + q] -= h(p, r);
        }
        rows.push_back(row);
      }
  }
  Intertwiner it;
  it.sigma = sigma;
  if (rows.empty()) {
    for (std::size_t v = 0; v < n * n; ++v) it.free.push_back(v);
    return it;
  }
  EchelonForm e = row_reduce(Mat::from_rows(rows));
  std::vector<bool> is_pivot(n * n, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  for (std::size_t v = 0; v < n * n; ++v)
    if (!is_pivot[v]) it.free.push_back(v);
  Integer den = 1;
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    for (std::size_t fv : it.free)
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), e.reduced(r, fv).rational_part().get_den_mpz_t());
  it.den = to_i64(den);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    std::vector<i64> coeffs;
    for (std::size_t fv : it.free) coeffs.push_back(to_i64(Rational(-e.reduced(r, fv).rational_part() * den).get_num()));
    it.dependent.emplace_back(e.pivots[r], coeffs);
  }
  return it;
}

// Integer left kernel of the stacked (Id - H_sigma) blocks, in Smith-reduced form.
void prepare_lift_test(const Frame& f, Intertwiner& it) {
  const std::size_t n = f.n;
  const std::size_t m = f.lifts.size();
  if (m == 0) return;
  Mat stacked = Mat::zero(m * n, n);
  for (std::size_t i = 0; i < m; ++i) {
    Mat block = Mat::identity(n) - f.hol[it.sigma[f.lifts[i].first]];
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) stacked(i * n + r, c) = block(r, c);
  }
  std::vector<Vec> left = nullspace(stacked.transpose());
  if (left.empty()) return;
  IntMatrix l(left.size(), m * n);
  for (std::size_t r = 0; r < left.size(); ++r) {
    Integer den = 1;
    for (const auto& x : left[r]) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.rational_part().get_den_mpz_t());
    for (std::size_t c = 0; c < m * n; ++c) l(r, c) = Rational(left[r][c].rational_part() * den).get_num();
  }
  IntSmithForm snf = smith_normal_form(l);
  IntMatrix w = snf.U * l;
  for (std::size_t r = 0; r < w.rows(); ++r) {
    std::vector<i64> row;
    for (std::size_t c = 0; c < w.cols(); ++c) row.push_back(to_i64(w(r, c)));
    it.w.push_back(row);
    it.d.push_back(r < snf.rank ? to_i64(snf.D(r, r)) * f.den : 0);
  }
}

struct Candidate {
  std::vector<i64> y;
  bool member = false;
  bool zero_works = false;
};

// Lift test in lattice coordinates: (Id - H) x = base_H - Y v  mod Z^n for all generators.
void lift_test(const Frame& f, const Intertwiner& it, Candidate& c) {
  const std::size_t n = f.n;
  std::vector<i64> dn;
  c.zero_works = true;
  for (const auto& [pos, v] : f.lifts) {
    const Vec& base = f.bases[it.sigma[pos]];
    for (std::size_t r = 0; r < n; ++r) {
      i128 acc = to_i64(Rational(base[r].rational_part() * f.den).get_num());
      for (std::size_t k = 0; k < n; ++k)
        acc -= static_cast<i128>(c.y[r * n + k]) * to_i64(Rational(v[k].rational_part() * f.den).get_num());
      dn.push_back(static_cast<i64>(acc));
      if (acc % f.den != 0) c.zero_works = false;
    }
  }
  c.member = true;
  for (std::size_t j = 0; j < it.w.size(); ++j) {
    i128 acc = 0;
    for (std::size_t k = 0; k < dn.size(); ++k) acc += static_cast<i128>(it.w[j][k]) * dn[k];
    if (it.d[j] == 0 ? acc != 0 : acc % it.d[j] != 0) {
      c.member = false;
      return;
    }
  }
}

std::vector<Intertwiner> assignments(const Frame& f) {
  std::vector<std::vector<std::size_t>> choices;
  for (std::size_t idx : f.hol_gens) {
    std::vector<std::size_t> opts;
    const Mat& a = f.hol[idx];
    for (std::size_t j = 1; j < f.hol.size(); ++j) {
      const Mat& h = f.hol[j];
      if (order_of(h) == order_of(a) && h.determinant() == a.determinant()) opts.push_back(j);
    }
    choices.push_back(opts);
  }
  std::vector<Intertwiner> out;
  std::vector<std::size_t> sigma(choices.size());
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == choices.size()) {
      Intertwiner it = intertwiner(f, sigma);
      if (!it.free.empty()) out.push_back(std::move(it));
      return;
    }
    for (std::size_t j : choices[k]) {
      sigma[k] = j;
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

// Calls visit for every integer Y with |entries| <= bound, det +-1, normalizing the holonomy.
void for_each_candidate(const Frame& f, std::size_t bound, const std::function<void(Intertwiner&, Candidate&)>& visit) {
  std::vector<Intertwiner> its = assignments(f);
  const i64 b = static_cast<i64>(bound);
  double total = 0;
  for (const auto& it : its) total += std::pow(2.0 * b + 1, static_cast<double>(it.free.size()));
  if (total > kEnumerationBudget) throw EnumerationBudgetExceeded("normalizer enumeration exceeds the candidate budget");
  const std::size_t nn = f.n * f.n;
  for (auto& it : its) {
    std::vector<i64> freev(it.free.size(), -b);
    Candidate c;
    c.y.assign(nn, 0);
    while (true) {
      bool ok = true;
      for (std::size_t k = 0; k < it.free.size(); ++k) c.y[it.free[k]] = freev[k];
      for (const auto& [p, coeffs] : it.dependent) {
        i128 acc = 0;
        for (std::size_t k = 0; k < coeffs.size(); ++k) acc += static_cast<i128>(coeffs[k]) * freev[k];
        if (acc % it.den != 0) {
          ok = false;
          break;
        }
        i128 val = acc / it.den;
        if (val > b || val < -b) {
          ok = false;
          break;
        }
        c.y[p] = static_cast<i64>(val);
      }
      if (ok) {
        i64 det = det_i64(c.y, f.n);
        if (det == 1 || det == -1) visit(it, c);
      }
      std::size_t k = 0;
      while (k < freev.size() && freev[k] == b) freev[k++] = -b;
      if (k == freev.size()) break;
      ++freev[k];
    }
  }
}

Mat ambient(const Frame& f, const std::vector<i64>& y) {
  Mat m(f.n, f.n);
  for (std::size_t i = 0; i < f.n; ++i)
    for (std::size_t j = 0; j < f.n; ++j) m(i, j) = Scalar(static_cast<long>(y[i * f.n + j]));
  return f.s->lattice.basis() * m * f.s->lattice.inverse();
}

}  // namespace

std::vector<Mat> enumerate_holonomy_normalizer(const CatalogEntry& g, std::size_t entry_bound) {
  GroupStructure s = group_structure(g);
  Frame f = make_frame(g, s);
  std::vector<Mat> out;
  for_each_candidate(f, entry_bound, [&](Intertwiner&, Candidate& c) { out.push_back(ambient(f, c.y)); });
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::vector<NormalizerMember> enumerate_member_records(const CatalogEntry& g, std::size_t entry_bound) {
  GroupStructure s = group_structure(g);
  Frame f = make_frame(g, s);
  std::vector<NormalizerMember> out;
  if (f.rational) {
    for_each_candidate(f, entry_bound, [&](Intertwiner& it, Candidate& c) {
      if (!it.prepared) {
        prepare_lift_test(f, it);
        it.prepared = true;
      }
      lift_test(f, it, c);
      if (c.member) out.push_back({ambient(f, c.y), c.zero_works});
    });
  } else {
    for_each_candidate(f, entry_bound, [&](Intertwiner&, Candidate& c) {
      Mat x = ambient(f, c.y);
      NormalizerVerdict v = normalizer_membership(x, g, s);
      if (v.member) out.push_back({x, v.zero_translation_works});
    });
  }
  std::sort(out.begin(), out.end(),
            [](const NormalizerMember& a, const NormalizerMember& b) { return lex_less(a.matrix, b.matrix); });
  return out;
}

std::vector<Mat> enumerate_members(const CatalogEntry& g, std::size_t entry_bound) {
  std::vector<Mat> out;
  for (auto& m : enumerate_member_records(g, entry_bound)) out.push_back(std::move(m.matrix));
  return out;
}

bool is_semidirect(const CatalogEntry& g, const std::vector<NormalizerMember>& members) {
  if (holonomy(g).order() == 1) return true;
  return std::all_of(members.begin(), members.end(), [](const NormalizerMember& m) { return m.zero_translation_works; });
}

bool is_semidirect(const CatalogEntry& g, std::size_t entry_bound) {
  if (holonomy(g).order() == 1) return true;
  return is_semidirect(g, enumerate_member_records(g, entry_bound));
}

}  // namespace flatmod
