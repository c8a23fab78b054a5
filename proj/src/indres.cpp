#include "chs/indres.hpp"

#include "chs/linalg.hpp"

#include <algorithm>
#include <set>

namespace chs {

std::vector<int> all_simple(const Apartment& ap) {
  std::vector<int> J(ap.rd.semisimple_rank());
  for (size_t k = 0; k < J.size(); ++k) J[k] = int(k);
  return J;
}

namespace {

std::vector<std::vector<int>> subsets_by_size(const std::vector<int>& J) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << J.size()); ++mask) {
    std::vector<int> s;
    for (size_t k = 0; k < J.size(); ++k)
      if (mask >> k & 1) s.push_back(J[k]);
    out.push_back(s);
  }
  std::stable_sort(out.begin(), out.end(), [](auto& a, auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

// Restriction of w to z (basis zb) in that basis.
QMat restrict_to(const Apartment& ap, int w, const std::vector<QVec>& zb) {
  int k = int(zb.size());
  QMat Zm(ap.rank(), k);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < ap.rank(); ++i) Zm(i, j) = zb[j][i];
  QMat M(k, k);
  for (int j = 0; j < k; ++j) {
    auto c = solve(Zm, ap.W.mats[w] * zb[j]);
    if (!c) fail_check("normalizer element does not preserve z");
    for (int i = 0; i < k; ++i) M(i, j) = (*c)[i];
  }
  return M;
}

KGroup make_kgroup(const Apartment& ap, const std::vector<bool>& inWL, const CuspidalDatum& d) {
  KGroup kg;
  kg.datum = d;
  Normalizer n = normalizer_parabolic(ap, d.leviRoots);
  std::vector<int> N;
  for (int w : n.N)
    if (inWL[w]) N.push_back(w);
  std::vector<bool> covered(ap.W.order(), false);
  size_t cosets = 0;
  std::vector<QMat> gens;
  for (int w : N) {
    if (!(transport(ap, w, d.label) == d.label))
      fail_check("normalizer element moves the cuspidal label " + to_string(d.label));
    if (covered[w]) continue;
    ++cosets;
    gens.push_back(restrict_to(ap, w, n.zBasis));
    for (int u : n.Weps) covered[ap.W.group.mul(w, u)] = true;
  }
  kg.group = std::make_shared<FiniteGroup>(FiniteGroup::generate(int(n.zBasis.size()), gens));
  if (kg.group->order() != cosets) fail_check("relative Weyl group does not act faithfully on z");
  kg.quotientOf.assign(ap.W.order(), -1);
  kg.repOf.assign(kg.group->order(), -1);
  for (int w : N) {
    int q = kg.group->index_of(restrict_to(ap, w, n.zBasis));
    if (q < 0) fail_check("normalizer element outside the relative Weyl group");
    kg.quotientOf[w] = q;
    if (kg.repOf[q] < 0) kg.repOf[q] = w;
  }
  kg.table = character_table(*kg.group);
  return kg;
}

} // namespace

LeviK levi_K(const Apartment& ap, const ClassificationTable& table, const std::vector<int>& J) {
  const RootDatum& rd = ap.rd;
  LeviK K;
  K.J = J;
  K.roots = standard_levi_roots(rd, J);
  K.WL = reflection_subgroup(ap, K.roots);
  std::vector<bool> inWL(ap.W.order(), false);
  for (int w : K.WL) inWL[w] = true;
  std::vector<CuspidalDatum> data;
  for (auto& S : subsets_by_size(J)) {
    std::vector<int> M = standard_levi_roots(rd, S);
    for (auto& label : cuspidal_set(ap, table, M)) {
      bool seen = false;
      for (auto& d : data) {
        if (d.leviRoots.size() != M.size()) continue;
        for (int w : K.WL)
          if (image_of(ap, w, M) == d.leviRoots && transport(ap, w, label) == d.label) seen = true;
      }
      if (!seen) data.push_back({S, M, label, ap.rank() - int(S.size())});
    }
  }
  for (auto& d : data) K.data.push_back(make_kgroup(ap, inWL, d));
  return K;
}

std::vector<KEmbedding> k_embeddings(const Apartment& ap, const LeviK& G, const LeviK& L) {
  const FiniteGroup& W = ap.W.group;
  std::vector<KEmbedding> out;
  for (auto& d : L.data) {
    KEmbedding e;
    for (size_t i = 0; i < G.data.size() && e.target < 0; ++i) {
      const CuspidalDatum& gd = G.data[i].datum;
      if (gd.leviRoots.size() != d.datum.leviRoots.size()) continue;
      for (int w : G.WL)
        if (image_of(ap, w, d.datum.leviRoots) == gd.leviRoots && transport(ap, w, d.datum.label) == gd.label) {
          e.target = int(i);
          e.conjugator = w;
          break;
        }
    }
    if (e.target < 0) fail_check("embedding not computable for datum " + to_string(d.datum.label));
    const KGroup& gk = G.data[e.target];
    int w = e.conjugator, wi = W.inv(w);
    for (size_t q = 0; q < d.group->order(); ++q) {
      int n = W.mul(W.mul(w, d.repOf[q]), wi);
      int gq = gk.quotientOf[n];
      if (gq < 0) fail_check("conjugated relative Weyl element leaves W_G^kappa");
      e.map.push_back(gq);
    }
    for (size_t a = 0; a < e.map.size(); ++a)
      for (size_t b = 0; b < e.map.size(); ++b)
        if (e.map[d.group->mul(int(a), int(b))] != gk.group->mul(e.map[a], e.map[b]))
          fail_check("relative Weyl embedding is not a homomorphism");
    out.push_back(std::move(e));
  }
  return out;
}

KClass res_K(const Apartment& ap, const LeviK& G, const LeviK& L, const KClass& x) {
  auto emb = k_embeddings(ap, G, L);
  KClass out;
  for (size_t j = 0; j < L.data.size(); ++j) {
    auto it = x.find(emb[j].target);
    if (it == x.end()) continue;
    out[int(j)] = restrict_character(it->second, *L.data[j].group, emb[j].map);
  }
  return out;
}

KClass ind_K(const Apartment& ap, const LeviK& G, const LeviK& L, const KClass& y) {
  auto emb = k_embeddings(ap, G, L);
  KClass out;
  for (auto& [j, chi] : y) {
    int i = emb[j].target;
    GradedCharacter v = induce_character(chi, *G.data[i].group, emb[j].map);
    auto it = out.find(i);
    if (it == out.end()) out.emplace(i, v);
    else it->second = it->second + v;
  }
  return out;
}

namespace {

bool all_zero(const GradedCharacter& c) {
  for (auto& v : c.values)
    if (!v.is_zero()) return false;
  return true;
}

LaurentPoly kpairing(const KClass& a, const KClass& b) {
  LaurentPoly s;
  for (auto& [k, x] : a) {
    auto it = b.find(k);
    if (it != b.end()) s += pairing(x, it->second);
  }
  return s;
}

} // namespace

bool kclass_equal(const KClass& a, const KClass& b) {
  for (auto& [k, x] : a) {
    auto it = b.find(k);
    if (it == b.end() ? !all_zero(x) : !(it->second == x)) return false;
  }
  for (auto& [k, x] : b)
    if (!a.count(k) && !all_zero(x)) return false;
  return true;
}

std::vector<std::pair<int, GradedCharacter>> irreducible_basis(const LeviK& K) {
  std::vector<std::pair<int, GradedCharacter>> out;
  for (size_t i = 0; i < K.data.size(); ++i)
    for (auto& chi : K.data[i].table.irr) out.push_back({int(i), GradedCharacter::from_values(*K.data[i].group, chi)});
  return out;
}

FrobeniusReport frobenius_check(const Apartment& ap, const LeviK& G, const LeviK& L, int samples,
                                std::mt19937_64& rng) {
  FrobeniusReport rep;
  auto bl = irreducible_basis(L), bg = irreducible_basis(G);
  auto emb = k_embeddings(ap, G, L);
  auto check = [&](const KClass& x, const KClass& y) {
    ++rep.pairsChecked;
    if (!(kpairing(ind_K(ap, G, L, x), y) == kpairing(x, res_K(ap, G, L, y)))) ++rep.violations;
  };
  for (auto& [j, chi] : bl) {
    KClass x{{j, chi}};
    KClass ix = ind_K(ap, G, L, x);
    const KGroup& gk = G.data[emb[j].target];
    Q index = Q(long(gk.group->order()), long(L.data[j].group->order()));
    index.canonicalize();
    if (!(ix.at(emb[j].target).dimension() == chi.dimension() * index)) rep.indexOk = false;
    for (auto& [i, psi] : bg) check(x, KClass{{i, psi}});
  }
  auto random_class = [&](const std::vector<std::pair<int, GradedCharacter>>& basis) {
    KClass c;
    for (auto& [k, chi] : basis) {
      long a = long(rng() % 7) - 3;
      int e = int(rng() % 5) - 2;
      GradedCharacter term = chi * LaurentPoly::monomial(Q(a), e);
      auto it = c.find(k);
      if (it == c.end()) c.emplace(k, term);
      else it->second = it->second + term;
    }
    return c;
  };
  for (int s = 0; s < samples; ++s) check(random_class(bl), random_class(bg));
  return rep;
}

bool transitivity_check(const Apartment& ap, const LeviK& G, const LeviK& L, const LeviK& M) {
  for (auto& [i, psi] : irreducible_basis(G)) {
    KClass x{{i, psi}};
    if (!kclass_equal(res_K(ap, G, M, x), res_K(ap, L, M, res_K(ap, G, L, x)))) return false;
  }
  for (auto& [j, chi] : irreducible_basis(M)) {
    KClass y{{j, chi}};
    if (!kclass_equal(ind_K(ap, G, M, y), ind_K(ap, G, L, ind_K(ap, L, M, y)))) return false;
  }
  return true;
}

MackeyReport mackey_check(const Apartment& ap, const LeviK& G, const LeviK& L) {
  const FiniteGroup& W = ap.W.group;
  MackeyReport rep;
  const KGroup& lp = L.data[0];
  if (!lp.datum.leviSubset.empty() || !G.data[0].datum.leviSubset.empty())
    throw std::logic_error("principal datum is not first");
  GradedCharacter one = GradedCharacter::from_values(*lp.group, std::vector<Q>(lp.group->num_classes(), Q(1)));
  KClass ri = res_K(ap, G, L, ind_K(ap, G, L, KClass{{0, one}}));
  rep.trivialMultiplicity = pairing(ri.at(0), one);
  std::vector<bool> inWL(W.order(), false);
  for (int w : L.WL) inWL[w] = true;
  // permutation character of W_L on W / W_L
  std::vector<Q> perm(lp.group->num_classes());
  for (int k = 0; k < lp.group->num_classes(); ++k) {
    int h = lp.repOf[lp.group->classes()[k][0]];
    long fixed = 0;
    for (size_t x = 0; x < W.order(); ++x)
      if (inWL[W.mul(W.mul(W.inv(int(x)), h), int(x))]) ++fixed;
    perm[k] = Q(fixed, long(L.WL.size()));
    perm[k].canonicalize();
  }
  rep.characterMatches = ri.at(0) == GradedCharacter::from_values(*lp.group, perm);
  std::vector<bool> seen(W.order(), false);
  for (size_t x = 0; x < W.order(); ++x) {
    if (seen[x]) continue;
    ++rep.doubleCosets;
    for (int a : L.WL)
      for (int b : L.WL) seen[W.mul(W.mul(a, int(x)), b)] = true;
  }
  return rep;
}

namespace {

bool fixes_support(const Apartment& ap, const AffineSupport& s, const AffineWeylElement& g) {
  if (image_of(ap, g.w, s.rootsBar) != s.rootsBar) return false;
  QVec p = act(ap, g, s.face.witness);
  for (int a : s.base)
    if (dot(ap.rd.roots[a], p) != dot(ap.rd.roots[a], s.face.witness)) return false;
  return true;
}

} // namespace

TripleLocation locate_triple(const Apartment& ap, const AffineC& c, const QVec& point,
                             const std::vector<int>& rootsBar, const std::vector<int>& borel,
                             const CuspidalLabel& label) {
  AffineSupport from;
  from.face.witness = point;
  from.rootsBar = rootsBar;
  from.base = canonical_base(ap.rd, rootsBar);
  TripleLocation loc;
  for (size_t s = 0; s < c.supports.size() && loc.triple < 0; ++s) {
    if (c.supports[s].rootsBar.size() != rootsBar.size()) continue;
    for (size_t w = 0; w < ap.W.order() && loc.triple < 0; ++w) {
      auto g = support_map(ap, from, c.supports[s], int(w));
      if (!g) continue;
      std::vector<int> b = image_of(ap, int(w), borel);
      CuspidalLabel l = transport(ap, int(w), label);
      for (size_t i = 0; i < c.triples.size(); ++i)
        if (c.triples[i].support == int(s) && c.triples[i].borel == b && c.triples[i].label == l) {
          loc.triple = int(i);
          loc.g = *g;
          break;
        }
    }
  }
  if (loc.triple < 0) return loc;
  // continue to the block representative
  const AffineTriple& t = c.triples[loc.triple];
  int rep = c.blocks[c.blockOf[loc.triple]].rep;
  const AffineTriple& r = c.triples[rep];
  for (size_t w = 0; w < ap.W.order(); ++w) {
    auto h = support_map(ap, c.supports[t.support], c.supports[r.support], int(w));
    if (!h) continue;
    if (image_of(ap, int(w), t.borel) != r.borel || !(transport(ap, int(w), t.label) == r.label)) continue;
    loc.triple = rep;
    loc.g = compose(ap, *h, loc.g);
    return loc;
  }
  fail_check("triple not conjugate to its block representative");
}

IncidenceTable affine_res_incidence(const Apartment& ap, const ClassificationTable& table, const std::vector<int>& J) {
  const RootDatum& rd = ap.rd;
  IncidenceTable inc;
  inc.g = affine_blocks(ap, table);
  Levi levi = levi_subdatum(rd, J);
  Apartment apL = make_apartment(levi.datum);
  inc.l = affine_blocks(apL, table);
  auto toG = [&](const std::vector<int>& v) {
    std::vector<int> out;
    for (int a : v) out.push_back(levi.rootMap[a]);
    std::sort(out.begin(), out.end());
    return out;
  };
  auto locate = [&](const AffineTriple& t) {
    const AffineSupport& s = inc.l.supports[t.support];
    auto loc = locate_triple(ap, inc.g, s.face.witness, toG(s.rootsBar), toG(t.borel),
                             map_label(apL.rd, rd, levi.rootMap, t.label));
    if (loc.triple < 0) fail_check("element of O meet c_L not reachable in the G fundamental domain");
    return loc;
  };
  for (size_t b = 0; b < inc.l.blocks.size(); ++b) {
    const AffineBlock& lb = inc.l.blocks[b];
    TripleLocation loc = locate(inc.l.triples[lb.rep]);
    IncidenceRow row;
    row.lBlock = int(b);
    row.gBlock = inc.g.blockOf[loc.triple];
    row.conjugator = loc.g;
    const AffineTriple& gr = inc.g.triples[loc.triple];
    const AffineSupport& gs = inc.g.supports[gr.support];
    std::vector<AffineWeylElement> gens;
    for (auto& v : lb.lattice) gens.push_back(translation(ap, v));
    for (auto& f : lb.finite) gens.push_back({ap.W.index_of(apL.W.mats[f.w]), f.t});
    AffineWeylElement gi = inverse(ap, loc.g);
    for (auto& h : gens) {
      if (h.w < 0) fail_check("Levi Weyl element missing from W");
      AffineWeylElement img = compose(ap, loc.g, compose(ap, h, gi));
      if (!fixes_support(ap, gs, img) || image_of(ap, img.w, gr.borel) != gr.borel ||
          !(transport(ap, img.w, gr.label) == gr.label))
        fail_check("K^L does not conjugate into K^G");
      row.generatorImages.push_back(img);
    }
    inc.rows.push_back(std::move(row));
  }
  for (size_t i = 0; i < inc.l.triples.size(); ++i) {
    int expected = inc.rows[inc.l.blockOf[i]].gBlock;
    if (inc.g.blockOf[locate(inc.l.triples[i]).triple] != expected)
      fail_check("one W~_L-orbit meets two G-blocks");
    ++inc.lTriplesChecked;
  }
  return inc;
}

std::vector<Z> SpringerSeries::coefficients(int n) const {
  std::vector<Z> out;
  for (int k = 0; k < n; ++k) {
    Z b = 1; // binomial(r - 1 + k, k)
    for (int i = 1; i <= k; ++i) b = b * (r - 1 + i) / i;
    out.push_back(r == 0 ? (k == 0 ? order : Z(0)) : order * b);
  }
  return out;
}

std::string SpringerSeries::str() const {
  std::string e = std::to_string(r);
  return order.get_str() + "*(1+t)^" + e + "/(1-t^2)^" + e;
}

SpringerSeries springer_endo_series(const Apartment& ap) { return {Z(long(ap.W.order())), ap.rank()}; }

namespace {

// Coefficients of (1+t)^r (1-t^2)^-r up to t^(n-1), by multiplying series.
std::vector<Z> cohomology_series(int r, int n) {
  std::vector<Z> s(n, 0);
  s[0] = 1;
  for (int f = 0; f < r; ++f) {
    std::vector<Z> next(n, 0);
    for (int k = 0; k < n; ++k)
      for (int j = 0; 2 * j + k < n; ++j) next[k + 2 * j] += s[k];
    s = next;
    for (int k = n - 1; k >= 1; --k) s[k] += s[k - 1];
  }
  return s;
}

// Coefficients of det(1 + x A) for a square matrix A.
std::vector<Q> det_one_plus(const QMat& A) {
  int r = A.rows;
  std::vector<Q> e(r + 1, Q(0));
  for (int mask = 0; mask < (1 << r); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < r; ++i)
      if (mask >> i & 1) idx.push_back(i);
    int k = int(idx.size());
    QMat m(k, k);
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) m(a, b) = A(idx[a], idx[b]);
    e[k] += k == 0 ? Q(1) : det(m);
  }
  return e;
}

} // namespace

SpringerRestriction res_springer_rank(const Apartment& ap, int n) {
  SpringerRestriction rep;
  rep.rank = long(ap.W.order());
  for (auto& c : springer_endo_series(ap).coefficients(n)) rep.endoSeries.push_back(c * rep.rank);
  for (auto& c : cohomology_series(ap.rank(), n)) rep.bimoduleSeries.push_back(c * rep.rank * rep.rank);
  return rep;
}

DistinguishedCharacters distinguished_module_characters(const Apartment& ap, int n) {
  const FiniteGroup& W = ap.W.group;
  DistinguishedCharacters d;
  d.sign = GradedCharacter::zero(W);
  d.cohomology = GradedCharacter::zero(W);
  int r = ap.rank();
  for (int k = 0; k < W.num_classes(); ++k) {
    int w = W.classes()[k][0];
    QMat A(r, r); // action on t^*
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) A(i, j) = ap.W.inverses[w](j, i);
    d.sign.values[k] = LaurentPoly(det(A));
    std::vector<Q> num = det_one_plus(A);
    QMat negA = A;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) negA(i, j) = -A(i, j);
    std::vector<Q> den = det_one_plus(negA); // det(1 - y A), y = t^2
    // series of 1 / den(t^2)
    std::vector<Q> inv(n + 1, Q(0));
    inv[0] = 1;
    for (int m = 1; m <= n; ++m) {
      Q s = 0;
      for (int j = 1; 2 * j <= m && j < int(den.size()); ++j) s += den[j] * inv[m - 2 * j];
      inv[m] = -s;
    }
    LaurentPoly v;
    for (size_t a = 0; a < num.size(); ++a)
      for (int m = 0; int(a) + m <= n; ++m) v += LaurentPoly::monomial(num[a] * inv[m], int(a) + m);
    d.cohomology.values[k] = v;
  }
  return d;
}

} // namespace chs
