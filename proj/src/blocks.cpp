#include "chs/blocks.hpp"

#include "chs/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace chs {

Z BigradedSeries::coefficient(int k) const {
  if (k < 0) return 0;
  if (zDim == 0) return k == 0 ? numerator : Z(0);
  Z b = 1; // binomial(zDim - 1 + k, k)
  for (int i = 1; i <= k; ++i) b = b * (zDim - 1 + i) / i;
  return numerator * b;
}

std::string BigradedSeries::str() const {
  std::string s = numerator.get_str();
  if (!groupFactor.empty()) s += "*" + groupFactor;
  if (zDim > 0) s += "/(1-t^2q^2)^" + std::to_string(zDim);
  return s;
}

namespace {

std::vector<int> positive_part(const RootDatum& rd, const std::vector<int>& roots) {
  std::vector<int> out;
  for (int a : roots)
    if (rd.positive[a]) out.push_back(a);
  return out;
}

// Positive systems of the root subsystem `eps`: W_eps-translates of eps meet Phi^+.
std::vector<std::vector<int>> positive_systems(const Apartment& ap, const std::vector<int>& eps) {
  std::set<std::vector<int>> out;
  std::vector<int> plus = positive_part(ap.rd, eps);
  for (int u : reflection_subgroup(ap, eps)) out.insert(image_of(ap, u, plus));
  return {out.begin(), out.end()};
}

int subsystem_rank(const RootDatum& rd, const std::vector<int>& roots) {
  std::vector<QVec> rows;
  for (int a : roots) rows.push_back(to_q(rd.roots[a]));
  return rank(rows);
}

std::vector<IVec> root_rows(const RootDatum& rd, const std::vector<int>& roots) {
  std::vector<IVec> rows;
  for (int a : roots) rows.push_back(rd.roots[a]);
  return rows;
}

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) {
    a = find(a), b = find(b);
    if (a != b) p[std::max(a, b)] = std::min(a, b);
  }
};

} // namespace

TripleC act_triple(const Apartment& ap, int w, const TripleC& c) {
  return {image_of(ap, w, c.eps), image_of(ap, w, c.borel), transport(ap, w, c.label)};
}

FiniteC finite_C(const Apartment& ap, const ClassificationTable& table) {
  const RootDatum& rd = ap.rd;
  int r = rd.semisimple_rank();
  std::set<std::vector<int>> supports;
  for (int mask = 0; mask < (1 << r); ++mask) {
    std::vector<int> J;
    for (int k = 0; k < r; ++k)
      if (mask >> k & 1) J.push_back(k);
    std::vector<int> roots = standard_levi_roots(rd, J);
    for (size_t w = 0; w < ap.W.order(); ++w) supports.insert(image_of(ap, int(w), roots));
  }
  std::set<TripleC> all;
  for (auto& eps : supports) {
    auto labels = cuspidal_set(ap, table, eps);
    if (labels.empty()) continue;
    for (auto& b : positive_systems(ap, eps))
      for (auto& l : labels) all.insert({eps, b, l});
  }
  FiniteC fc;
  fc.triples.assign(all.begin(), all.end());
  fc.orbitOf.assign(fc.triples.size(), -1);
  auto indexOf = [&](const TripleC& t) {
    auto it = std::lower_bound(fc.triples.begin(), fc.triples.end(), t);
    if (it == fc.triples.end() || !(*it == t)) fail_check("W moves a triple outside the enumerated set");
    return int(it - fc.triples.begin());
  };
  for (size_t i = 0; i < fc.triples.size(); ++i) {
    if (fc.orbitOf[i] >= 0) continue;
    int o = int(fc.orbits.size());
    FiniteOrbit orb;
    orb.rep = fc.triples[i];
    for (size_t w = 0; w < ap.W.order(); ++w) {
      TripleC t = act_triple(ap, int(w), orb.rep);
      int j = indexOf(t);
      if (fc.orbitOf[j] < 0) fc.orbitOf[j] = o, ++orb.size;
      if (t == orb.rep) orb.stabilizer.push_back(int(w));
    }
    if (size_t(orb.size) * orb.stabilizer.size() != ap.W.order()) fail_check("orbit-stabilizer count fails");
    Normalizer n = normalizer_parabolic(ap, orb.rep.eps);
    orb.weps = int(n.reps.size());
    std::set<int> weps(n.Weps.begin(), n.Weps.end());
    orb.injective = true;
    for (int w : orb.stabilizer)
      if (w != 0 && weps.count(w)) orb.injective = false;
    orb.zDim = ap.rank() - subsystem_rank(rd, orb.rep.eps);
    orb.type = simple_type_decomposition(rd, orb.rep.eps).str();
    orb.series.numerator = long(orb.stabilizer.size());
    orb.series.zDim = orb.zDim;
    fc.orbits.push_back(std::move(orb));
  }
  return fc;
}

BijectionReport bijection_check(const Apartment& ap, const ClassificationTable& table) {
  const RootDatum& rd = ap.rd;
  BijectionReport rep;
  FiniteC fc = finite_C(ap, table);
  rep.kSize = cuspidal_data_of_G(ap, table).size();
  rep.orbitCount = fc.orbits.size();
  std::vector<int> hits(fc.orbits.size(), 0);
  int r = rd.semisimple_rank();
  for (int mask = 0; mask < (1 << r); ++mask) {
    std::vector<int> J;
    for (int k = 0; k < r; ++k)
      if (mask >> k & 1) J.push_back(k);
    std::vector<int> roots = standard_levi_roots(rd, J);
    for (auto& F : cuspidal_set(ap, table, roots)) {
      ++rep.dSize;
      TripleC t{roots, positive_part(rd, roots), F};
      auto it = std::lower_bound(fc.triples.begin(), fc.triples.end(), t);
      if (it == fc.triples.end() || !(*it == t)) {
        rep.wellDefined = false;
        rep.failures.push_back("h(J,F) is not a triple for J mask " + std::to_string(mask));
        continue;
      }
      int o = fc.orbitOf[it - fc.triples.begin()];
      if (hits[o]++) {
        rep.injective = false;
        rep.failures.push_back("two elements of D share orbit " + std::to_string(o));
      }
    }
  }
  for (size_t o = 0; o < hits.size(); ++o)
    if (!hits[o]) {
      rep.surjective = false;
      rep.failures.push_back("orbit " + std::to_string(o) + " missed by h");
    }
  for (auto& orb : fc.orbits)
    if (!orb.injective || int(orb.stabilizer.size()) != orb.weps) {
      rep.stabilizersMatch = false;
      rep.failures.push_back("W_c does not map isomorphically onto W^eps for " + orb.type);
    }
  if (rep.kSize != rep.dSize) rep.failures.push_back("|K| != |D|");
  return rep;
}

std::optional<AffineWeylElement> support_map(const Apartment& ap, const AffineSupport& from,
                                             const AffineSupport& to, int w) {
  if (image_of(ap, w, from.rootsBar) != to.rootsBar) return std::nullopt;
  QVec d = to.face.witness - ap.W.mats[w] * from.face.witness;
  std::vector<IVec> rows = root_rows(ap.rd, to.base);
  QVec t;
  for (auto& f : rows) t.push_back(dot(f, d));
  auto lambda = integer_solve(rows, ap.rank(), t);
  if (!lambda) return std::nullopt;
  return AffineWeylElement{w, *lambda};
}

AffineC affine_blocks(const Apartment& ap, const ClassificationTable& table, const AffineWeylElement* frame) {
  const RootDatum& rd = ap.rd;
  AffineC c;
  c.frame = frame ? *frame : identity_element(ap);
  for (auto& f : facets_of_closed_alcove(ap)) {
    AffineSupport s;
    s.face = act_facet(ap, c.frame, f);
    s.rootsBar = vanishing_root_indices(ap, s.face);
    std::sort(s.rootsBar.begin(), s.rootsBar.end());
    s.base = canonical_base(rd, s.rootsBar);
    c.supports.push_back(std::move(s));
  }
  std::vector<std::vector<int>> triplesAt(c.supports.size());
  for (size_t s = 0; s < c.supports.size(); ++s) {
    auto labels = cuspidal_set(ap, table, c.supports[s].rootsBar);
    for (auto& b : positive_systems(ap, c.supports[s].rootsBar))
      for (auto& l : labels) {
        triplesAt[s].push_back(int(c.triples.size()));
        c.triples.push_back({int(s), b, l});
      }
  }
  UnionFind tu(c.triples.size()), su(c.supports.size());
  for (size_t s = 0; s < c.supports.size(); ++s)
    for (size_t s2 = 0; s2 < c.supports.size(); ++s2) {
      if (c.supports[s].rootsBar.size() != c.supports[s2].rootsBar.size()) continue;
      for (size_t w = 0; w < ap.W.order(); ++w) {
        if (!support_map(ap, c.supports[s], c.supports[s2], int(w))) continue;
        su.unite(int(s), int(s2));
        for (int i : triplesAt[s]) {
          AffineTriple img{int(s2), image_of(ap, int(w), c.triples[i].borel), transport(ap, int(w), c.triples[i].label)};
          bool found = false;
          for (int j : triplesAt[s2])
            if (c.triples[j].borel == img.borel && c.triples[j].label == img.label) tu.unite(i, j), found = true;
          if (!found) fail_check("affine Weyl element moves a triple outside the enumerated set");
        }
      }
    }
  for (size_t s = 0; s < c.supports.size(); ++s)
    if (su.find(int(s)) == int(s)) ++c.supportOrbits;
  c.blockOf.assign(c.triples.size(), -1);
  for (size_t i = 0; i < c.triples.size(); ++i) {
    int root = tu.find(int(i));
    if (root != int(i)) {
      c.blockOf[i] = c.blockOf[root];
      continue;
    }
    c.blockOf[i] = int(c.blocks.size());
    const AffineTriple& t = c.triples[i];
    const AffineSupport& s = c.supports[t.support];
    AffineBlock b;
    b.rep = int(i);
    b.lattice = integer_kernel(root_rows(rd, s.rootsBar), ap.rank());
    for (size_t w = 0; w < ap.W.order(); ++w) {
      auto g = support_map(ap, s, s, int(w));
      if (!g) continue;
      if (image_of(ap, int(w), t.borel) != t.borel) continue;
      if (!(transport(ap, int(w), t.label) == t.label)) continue;
      b.finite.push_back(*g);
    }
    b.zDim = ap.rank() - subsystem_rank(rd, s.rootsBar);
    if (int(b.lattice.size()) != b.zDim) fail_check("X_* meet z_c has the wrong rank");
    b.type = simple_type_decomposition(rd, s.rootsBar).str();
    b.principal = s.rootsBar.empty();
    b.series.numerator = long(b.finite.size());
    b.series.zDim = b.zDim;
    if (b.zDim > 0) b.series.groupFactor = "C[Z^" + std::to_string(b.zDim) + "]";
    c.blocks.push_back(std::move(b));
  }
  return c;
}

PrincipalReport principal_block_check(const Apartment& ap, const AffineC& c) {
  PrincipalReport rep;
  for (auto& b : c.blocks) {
    if (!b.principal) continue;
    auto inv = smith_invariants(b.lattice, ap.rank());
    rep.latticeIsFull = int(b.lattice.size()) == ap.rank() &&
                        std::all_of(inv.begin(), inv.end(), [](const Z& z) { return z == 1; });
    std::set<int> ws;
    for (auto& g : b.finite) ws.insert(g.w);
    rep.finitePartIsW = ws.size() == ap.W.order() && b.finite.size() == ap.W.order();
    rep.zDimIsRank = b.zDim == ap.rank();
  }
  return rep;
}

std::vector<std::string> block_signature(const Apartment&, const AffineC& c) {
  std::vector<std::string> out;
  for (auto& b : c.blocks)
    out.push_back(b.type + "|" + to_string(c.triples[b.rep].label) + "|z=" + std::to_string(b.zDim) +
                  "|K/L=" + std::to_string(b.finite.size()) + "|L=" + std::to_string(b.lattice.size()));
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace chs
