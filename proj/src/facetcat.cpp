#include "chs/facetcat.hpp"

#include "chs/linalg.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace chs {

int Window::index_of(const Facet& f) const {
  auto it = std::lower_bound(objects.begin(), objects.end(), f, [](const Facet& a, const Facet& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.code < b.code;
  });
  if (it == objects.end() || !(*it == f)) return -1;
  return int(it - objects.begin());
}

Window build_window(const Apartment& ap, int radius) {
  if (radius < 1) fail_data("radius must be at least 1");
  Window win;
  win.radius = radius;
  win.alcoveFaces = facets_of_closed_alcove(ap);
  const QVec& bary = win.alcoveFaces.back().witness;
  std::vector<AffineWeylElement> walls;
  for (auto& a : alcove_walls(ap)) walls.push_back(affine_reflection(ap, a));
  std::set<IVec> seen;
  std::deque<std::pair<AffineWeylElement, int>> queue{{identity_element(ap), 0}};
  seen.insert(facet_of_point(ap, bary).code);
  while (!queue.empty()) {
    auto [g, d] = queue.front();
    queue.pop_front();
    win.alcoves.push_back(g);
    if (d == radius) continue;
    for (auto& r : walls) {
      AffineWeylElement h = compose(ap, g, r);
      if (seen.insert(facet_of_point(ap, act(ap, h, bary)).code).second) queue.push_back({h, d + 1});
    }
  }
  struct Entry {
    Facet f;
    int face;
    AffineWeylElement g;
  };
  std::vector<Entry> entries;
  std::set<IVec> have;
  for (auto& g : win.alcoves)
    for (size_t k = 0; k < win.alcoveFaces.size(); ++k) {
      Facet f = act_facet(ap, g, win.alcoveFaces[k]);
      if (have.insert(f.code).second) entries.push_back({f, int(k), g});
    }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.f.dim != b.f.dim) return a.f.dim < b.f.dim;
    return a.f.code < b.f.code;
  });
  for (auto& e : entries) {
    win.objects.push_back(e.f);
    win.face.push_back(e.face);
    win.toObject.push_back(e.g);
  }
  return win;
}

namespace {

std::vector<int> levi_root_set(const RootDatum& rd, const std::vector<int>& subset) {
  std::vector<int> out;
  for (int i = 0; i < rd.num_roots(); ++i) {
    bool inside = true;
    for (int k = 0; k < rd.semisimple_rank(); ++k)
      if (rd.coeffs[i][k] != 0 && std::find(subset.begin(), subset.end(), k) == subset.end()) inside = false;
    if (inside) out.push_back(i);
  }
  return out;
}

// Central lattice vectors with coefficients in [-r, r].
std::vector<IVec> central_window(const Apartment& ap, int r) {
  std::vector<IVec> out{IVec(ap.rank(), 0)};
  for (auto& b : ap.centerLattice) {
    std::vector<IVec> next;
    for (auto& v : out)
      for (long c = -r; c <= r; ++c) {
        IVec u = v;
        for (size_t i = 0; i < u.size(); ++i) u[i] += c * b[i];
        next.push_back(u);
      }
    out = std::move(next);
  }
  return out;
}

// Reflection-group part of the fixer of object I.
std::vector<int> fixer_roots(const Apartment& ap, const FacetCategory& c, int I) {
  std::vector<int> roots = vanishing_root_indices(ap, c.window.objects[I]);
  if (!c.isLevi) return roots;
  std::vector<int> L = levi_root_set(ap.rd, c.levi), out;
  for (int a : roots)
    if (std::binary_search(L.begin(), L.end(), a)) out.push_back(a);
  return out;
}

std::vector<AffineWeylElement> fixer_elements(const Apartment& ap, const FacetCategory& c, int I) {
  const QVec& p = c.window.objects[I].witness;
  std::vector<AffineWeylElement> out;
  for (int u : reflection_subgroup(ap, fixer_roots(ap, c, I)))
    out.push_back({u, to_int(p - ap.W.mats[u] * p)});
  return out;
}

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

} // namespace

FacetCategory build_truncation(const Apartment& ap, int radius, const std::vector<int>* levi) {
  FacetCategory c;
  c.window = build_window(ap, radius);
  if (levi) {
    c.isLevi = true;
    c.levi = *levi;
  }
  std::vector<bool> inWL(ap.W.order(), true);
  if (levi) {
    std::fill(inWL.begin(), inWL.end(), false);
    for (int w : reflection_subgroup(ap, levi_root_set(ap.rd, *levi))) inWL[w] = true;
  }
  const Window& win = c.window;
  size_t n = win.objects.size();
  c.hom.assign(n * n, {});
  auto omega = stabilizer_facet(ap, win.alcoveFaces.back()).finite;
  auto centre = central_window(ap, radius);
  std::vector<std::vector<AffineWeylElement>> stab;
  for (auto& F : win.alcoveFaces) {
    std::vector<AffineWeylElement> s;
    for (auto& f : stabilizer_facet(ap, F).finite)
      for (auto& z : centre) s.push_back(compose(ap, translation(ap, z), f));
    stab.push_back(std::move(s));
  }
  std::vector<std::set<AffineWeylElement>> seen(n * n);
  for (size_t J = 0; J < n; ++J) {
    const Facet& FJ = win.alcoveFaces[win.face[J]];
    AffineWeylElement gJinv = inverse(ap, win.toObject[J]);
    for (size_t J2 = 0; J2 < n; ++J2) {
      const Facet& FJ2 = win.alcoveFaces[win.face[J2]];
      const AffineWeylElement* om = nullptr;
      for (auto& o : omega)
        if (act_facet(ap, o, FJ) == FJ2) {
          om = &o;
          break;
        }
      if (!om) continue;
      std::vector<int> sources;
      for (size_t I = 0; I < n; ++I)
        if (closure_le(win.objects[I], win.objects[J2])) sources.push_back(int(I));
      for (auto& s : stab[win.face[J]]) {
        AffineWeylElement w = compose(ap, win.toObject[J2], compose(ap, *om, compose(ap, s, gJinv)));
        if (!inWL[w.w]) continue;
        for (int I : sources)
          if (seen[I * n + J].insert(w).second) {
            c.hom[I * n + J].push_back(int(c.cells.size()));
            c.cells.push_back({I, int(J), w});
          }
      }
    }
  }
  return c;
}

bool in_fixer(const Apartment& ap, const FacetCategory& c, int I, const AffineWeylElement& u) {
  const QVec& p = c.window.objects[I].witness;
  if (!(act(ap, u, p) == p)) return false;
  auto g = reflection_subgroup(ap, fixer_roots(ap, c, I));
  return std::binary_search(g.begin(), g.end(), u.w);
}

std::string OneCategoryReport::stable() const {
  return std::string("unique=") + (unique ? "1" : "0") + " equivalence=" + (equivalence ? "1" : "0") +
         " composition=" + (composition ? "1" : "0");
}

OneCategoryReport one_category_check(const Apartment& ap, const FacetCategory& c, std::mt19937_64& rng,
                                     long compositionSamples) {
  OneCategoryReport rep;
  size_t n = c.window.objects.size();
  std::vector<std::vector<AffineWeylElement>> fixers(n);
  std::vector<std::set<AffineWeylElement>> fixerSet(n);
  for (size_t I = 0; I < n; ++I) {
    fixers[I] = fixer_elements(ap, c, int(I));
    fixerSet[I].insert(fixers[I].begin(), fixers[I].end());
  }
  std::vector<std::vector<int>> classOf(n * n);
  std::vector<std::pair<int, int>> nonempty;
  for (size_t I = 0; I < n; ++I)
    for (size_t J = 0; J < n; ++J) {
      const auto& H = c.homs(int(I), int(J));
      if (H.empty()) continue;
      nonempty.push_back({int(I), int(J)});
      std::set<AffineWeylElement> Hset;
      for (int a : H) Hset.insert(c.cells[a].w);
      UnionFind uf(H.size());
      std::vector<std::vector<bool>> rel(H.size(), std::vector<bool>(H.size()));
      for (size_t a = 0; a < H.size(); ++a) {
        const AffineWeylElement& wa = c.cells[H[a]].w;
        for (auto& u : fixers[I])
          if (!Hset.count(compose(ap, wa, u))) ++rep.literalOutside;
        AffineWeylElement wai = inverse(ap, wa);
        std::map<AffineWeylElement, long> images; // u w_a -> number of u
        for (auto& u : fixers[I]) ++images[compose(ap, u, wa)];
        for (size_t b = 0; b < H.size(); ++b) {
          const AffineWeylElement& wb = c.cells[H[b]].w;
          auto it = images.find(wb);
          long count = it == images.end() ? 0 : it->second;
          if (count > 1) rep.unique = false;
          if (a != b) ++rep.parallelPairs, rep.twoCells += count;
          rel[a][b] = fixerSet[I].count(compose(ap, wb, wai)) > 0;
          if (rel[a][b] != (count == 1)) rep.unique = false;
          if (rel[a][b]) uf.unite(int(a), int(b));
        }
      }
      std::vector<int> cls(H.size());
      for (size_t a = 0; a < H.size(); ++a) cls[a] = uf.find(int(a));
      for (size_t a = 0; a < H.size(); ++a)
        for (size_t b = 0; b < H.size(); ++b)
          if (rel[a][b] != (cls[a] == cls[b])) rep.equivalence = false;
      classOf[I * n + J] = cls;
    }
  // compatibility with composition, sampled
  std::vector<std::vector<int>> outOf(n);
  for (auto& [I, J] : nonempty) outOf[I].push_back(J);
  auto find_cell = [&](int I, int K, const AffineWeylElement& w) {
    const auto& H = c.homs(I, K);
    for (size_t a = 0; a < H.size(); ++a)
      if (c.cells[H[a]].w == w) return int(a);
    return -1;
  };
  auto same_class_partner = [&](int I, int J, int a) {
    const auto& cls = classOf[size_t(I) * n + J];
    std::vector<int> m;
    for (size_t b = 0; b < cls.size(); ++b)
      if (cls[b] == cls[a]) m.push_back(int(b));
    return m[rng() % m.size()];
  };
  for (long s = 0; s < compositionSamples && !nonempty.empty(); ++s) {
    auto [I, J] = nonempty[rng() % nonempty.size()];
    if (outOf[J].empty()) continue;
    int K = outOf[J][rng() % outOf[J].size()];
    const auto& HIJ = c.homs(I, J);
    const auto& HJK = c.homs(J, K);
    int a1 = int(rng() % HIJ.size()), b1 = int(rng() % HJK.size());
    int a2 = same_class_partner(I, J, a1), b2 = same_class_partner(J, K, b1);
    AffineWeylElement c1 = compose(ap, c.cells[HIJ[a1]].w, c.cells[HJK[b1]].w);
    AffineWeylElement c2 = compose(ap, c.cells[HIJ[a2]].w, c.cells[HJK[b2]].w);
    if (!closure_le(c.window.objects[I], act_facet(ap, c1, c.window.objects[K])))
      rep.composition = false;
    int x1 = find_cell(I, K, c1), x2 = find_cell(I, K, c2);
    if (x1 < 0 || x2 < 0) continue; // composite leaves the truncation
    ++rep.compositionsChecked;
    const auto& cls = classOf[size_t(I) * n + K];
    if (cls[x1] != cls[x2]) rep.composition = false;
  }
  return rep;
}

std::string AlcoveEquivalenceReport::stable() const {
  if (!applicable) return "not applicable";
  std::string s = std::string("surjective=") + (essentiallySurjective ? "1" : "0") + " homs=" + (homsMatch ? "1" : "0");
  for (auto& t : table) s += "; " + t;
  return s;
}

AlcoveEquivalenceReport alcove_equivalence_check(const Apartment& ap, const FacetCategory& c) {
  AlcoveEquivalenceReport rep;
  Z pi1 = 1;
  for (auto& z : ap.type.pi1) pi1 *= z;
  rep.applicable = ap.semisimple() && pi1 == 1 && !c.isLevi;
  if (!rep.applicable) return rep;
  const Window& win = c.window;
  for (auto& obj : win.objects) {
    Reduction r = reduce_facet(ap, obj);
    if (std::find(win.alcoveFaces.begin(), win.alcoveFaces.end(), r.facet) == win.alcoveFaces.end())
      rep.essentiallySurjective = false;
  }
  size_t m = win.alcoveFaces.size();
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) {
      int I = win.index_of(win.alcoveFaces[i]), J = win.index_of(win.alcoveFaces[j]);
      const auto& H = c.homs(I, J);
      UnionFind uf(H.size());
      for (size_t a = 0; a < H.size(); ++a)
        for (size_t b = 0; b < H.size(); ++b)
          if (in_fixer(ap, c, I, compose(ap, c.cells[H[b]].w, inverse(ap, c.cells[H[a]].w)))) uf.unite(int(a), int(b));
      std::set<int> classes;
      for (size_t a = 0; a < H.size(); ++a) classes.insert(uf.find(int(a)));
      bool le = closure_le(win.alcoveFaces[i], win.alcoveFaces[j]);
      if (classes.size() != (le ? 1u : 0u)) rep.homsMatch = false;
      rep.table.push_back(std::to_string(i) + " " + std::to_string(j) + " " + (le ? "1" : "0") + " " +
                          std::to_string(classes.size()));
    }
  return rep;
}

bool feasible(std::vector<LinearConstraint> cs, int n) {
  for (int j = 0; j < n; ++j) {
    std::vector<LinearConstraint> pos, neg, next;
    for (auto& c : cs) {
      if (c.a[j] > 0) pos.push_back(c);
      else if (c.a[j] < 0) neg.push_back(c);
      else next.push_back(c);
    }
    std::set<std::pair<std::pair<QVec, Q>, bool>> dedup;
    for (auto& c : next) dedup.insert({{c.a, c.b}, c.strict});
    for (auto& p : pos)
      for (auto& q : neg) {
        Q sp = 1 / p.a[j], sq = -1 / q.a[j];
        LinearConstraint r;
        r.a = sp * p.a + sq * q.a;
        r.a[j] = 0;
        r.b = sp * p.b + sq * q.b;
        r.strict = p.strict || q.strict;
        if (dedup.insert({{r.a, r.b}, r.strict}).second) next.push_back(r);
      }
    cs = std::move(next);
  }
  for (auto& c : cs)
    if (c.strict ? !(c.b > 0) : !(c.b >= 0)) return false;
  return true;
}

FiberReport alpha_fiber_report(const Apartment& ap, const std::vector<int>& leviSubset, const QVec& point,
                               const Q& halfWidth) {
  const RootDatum& rd = ap.rd;
  int n = ap.rank();
  if (halfWidth <= 0) fail_data("empty window");
  std::vector<int> L = levi_root_set(rd, leviSubset);
  Facet pf = facet_of_point(ap, point);
  int np = rd.num_positive();
  std::vector<std::vector<long>> options(np);
  for (int a = 0; a < np; ++a) {
    Q centre = dot(rd.roots[a], point), spread = 0;
    for (int i = 0; i < n; ++i) spread += halfWidth * abs(Q(rd.roots[a][i]));
    Q lo = centre - spread, hi = centre + spread;
    if (std::binary_search(L.begin(), L.end(), a)) {
      options[a] = {pf.code[a]}; // J_L fixes the code on L-roots
      continue;
    }
    for (long k = floor_q(lo) - 1; k <= floor_q(hi) + 1; ++k) {
      if (Q(k) >= lo && Q(k) <= hi) options[a].push_back(2 * k);
      if (Q(k + 1) > lo && Q(k) < hi) options[a].push_back(2 * k + 1);
    }
  }
  std::vector<LinearConstraint> base;
  for (int i = 0; i < n; ++i) {
    QVec e(n, Q(0));
    e[i] = 1;
    base.push_back({e, halfWidth - point[i], false});
    base.push_back({Q(-1) * e, halfWidth + point[i], false});
  }
  auto add_code = [&](std::vector<LinearConstraint>& cs, int a, long code) {
    QVec f = to_q(rd.roots[a]);
    if (code % 2 == 0) {
      long k = code / 2;
      cs.push_back({f, Q(-k), false});
      cs.push_back({Q(-1) * f, Q(k), false});
    } else {
      long k = (code - 1) / 2;
      cs.push_back({f, Q(-k), true});
      cs.push_back({Q(-1) * f, Q(k + 1), true});
    }
  };
  FiberReport rep;
  IVec code(np);
  std::vector<LinearConstraint> cs = base;
  // depth-first over codes, pruned by feasibility
  auto dfs = [&](auto&& self, int a) -> void {
    if (a == np) {
      Facet f;
      f.code = code;
      std::vector<QVec> zero;
      for (int b = 0; b < np; ++b)
        if (code[b] % 2 == 0) zero.push_back(to_q(rd.roots[b]));
      f.dim = n - rank(zero);
      rep.poset.push_back(f);
      return;
    }
    for (long c : options[a]) {
      size_t mark = cs.size();
      add_code(cs, a, c);
      if (feasible(cs, n)) {
        code[a] = c;
        self(self, a + 1);
      }
      cs.resize(mark);
    }
  };
  dfs(dfs, 0);
  std::sort(rep.poset.begin(), rep.poset.end(), [](const Facet& a, const Facet& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.code < b.code;
  });
  size_t m = rep.poset.size();
  // g(x) = 1 - sum_{y < x} g(y): signed count of chains with top x
  std::vector<long> g(m);
  long euler = 0;
  UnionFind uf(m);
  for (size_t x = 0; x < m; ++x) {
    g[x] = 1;
    for (size_t y = 0; y < x; ++y)
      if (closure_le(rep.poset[y], rep.poset[x]) && !(rep.poset[y] == rep.poset[x])) {
        g[x] -= g[y];
        uf.unite(int(x), int(y));
      }
    euler += g[x];
  }
  rep.reducedEuler = euler - 1;
  std::set<int> comps;
  for (size_t x = 0; x < m; ++x) comps.insert(uf.find(int(x)));
  rep.connected = comps.size() == 1;
  return rep;
}

std::vector<FiberCase> shipped_fiber_cases() {
  auto q = [](long a, long b) { return frac(a, b); };
  return {
      {"A1 sc", {}, {q(1, 4)}, q(1, 4)},             // the closed fundamental alcove
      {"A1 sc", {}, {q(1, 5)}, q(1, 100)},           // inside a single open facet
      {"A1 sc", {}, {Q(0)}, Q(1)},                   // several alcoves
      {"A2 sc", {}, {q(1, 3), q(1, 5)}, Q(1)},
      {"A2 sc", {0}, {q(1, 4), q(1, 8)}, Q(1)},      // strip 0 < alpha_1 < 1
      {"A2 sc", {0}, {Q(0), q(1, 3)}, Q(1)},         // line alpha_1 = 0
      {"B2 sc", {0}, {q(1, 4), q(1, 8)}, Q(1)},
      {"B2 sc", {1}, {q(1, 4), q(1, 8)}, Q(1)},
      {"G2", {0}, {q(1, 7), q(1, 11)}, q(1, 2)},
      {"GL(2)", {}, {q(1, 3), q(1, 5)}, Q(1)},
  };
}

std::vector<QVec> sample_window_points(const Apartment& ap, const Window& w, int count, std::mt19937_64& rng) {
  std::vector<QVec> out;
  for (int s = 0; s < count; ++s) {
    const AffineWeylElement& g = w.alcoves[rng() % w.alcoves.size()];
    QVec p(ap.rank(), Q(0));
    for (auto& f : ap.alcove) {
      std::vector<long> wt(f.vertices.size());
      long tot = 0;
      while (tot == 0) {
        tot = 0;
        for (auto& x : wt) tot += (x = long(rng() % 4));
      }
      for (size_t v = 0; v < wt.size(); ++v) p = p + frac(wt[v], tot) * f.vertices[v];
    }
    for (auto& z : ap.centerLattice) p = p + frac(long(rng() % 9) - 4, 4) * to_q(z);
    out.push_back(act(ap, g, p));
  }
  return out;
}

GroupoidReport colim_check(const Apartment& ap, const FacetCategory& c, const std::vector<QVec>& points) {
  const Window& win = c.window;
  size_t n = win.objects.size();
  std::vector<std::vector<int>> byTarget(n), bySource(n);
  for (size_t k = 0; k < c.cells.size(); ++k) {
    byTarget[c.cells[k].target].push_back(int(k));
    bySource[c.cells[k].source].push_back(int(k));
  }
  std::vector<AffineWeylElement> cellInverse;
  for (auto& cell : c.cells) cellInverse.push_back(inverse(ap, cell.w));
  std::vector<std::vector<AffineWeylElement>> fixers(n);
  for (size_t I = 0; I < n; ++I) fixers[I] = fixer_elements(ap, c, int(I));
  GroupoidReport rep;
  for (auto& x : points) {
    ColimSample s;
    s.x = x;
    Facet fx = facet_of_point(ap, x);
    int I = win.index_of(fx);
    s.covered = I >= 0 && star_membership(ap, fx, x);
    if (!s.covered) {
      rep.samples.push_back(s);
      continue;
    }
    // (b) zigzag to the reduced point, breadth first
    Reduction r = reduce_to_fundamental(ap, x);
    int I0 = win.index_of(r.facet);
    using State = std::pair<int, QVec>;
    std::set<State> seen{{I, x}};
    std::vector<State> frontier{{I, x}};
    if (I == I0 && x == r.point) s.zigzagLength = 0;
    for (int depth = 1; depth <= 3 && s.zigzagLength < 0 && !frontier.empty(); ++depth) {
      std::vector<State> next;
      auto visit = [&](int K, const QVec& y) {
        if (!star_membership(ap, win.objects[K], y) || !seen.insert({K, y}).second) return;
        if (K == I0 && y == r.point) s.zigzagLength = depth;
        next.push_back({K, y});
      };
      for (auto& [J, z] : frontier) {
        for (int k : byTarget[J]) { // w : K -> J carries V_J into V_K
          visit(c.cells[k].source, act(ap, c.cells[k].w, z));
          if (s.zigzagLength >= 0) break;
        }
        for (int k : bySource[J]) { // w : J -> K, backwards
          if (s.zigzagLength >= 0) break;
          visit(c.cells[k].target, act(ap, cellInverse[k], z));
        }
        if (s.zigzagLength >= 0) break;
      }
      frontier = std::move(next);
    }
    // (c) automorphisms
    std::set<AffineWeylElement> gens;
    for (size_t J = 0; J < n; ++J) {
      if (!star_membership(ap, win.objects[J], x)) continue;
      for (auto& u : fixers[J])
        if (act(ap, u, x) == x) gens.insert(u);
      for (int k : c.homs(int(J), int(J)))
        if (act(ap, c.cells[k].w, x) == x) gens.insert(c.cells[k].w);
    }
    std::set<AffineWeylElement> group{identity_element(ap)};
    std::deque<AffineWeylElement> queue{identity_element(ap)};
    while (!queue.empty()) {
      AffineWeylElement g = queue.front();
      queue.pop_front();
      for (auto& h : gens) {
        AffineWeylElement p = compose(ap, g, h);
        if (group.insert(p).second) queue.push_back(p);
      }
    }
    s.generatedOrder = group.size();
    s.directOrder = stabilizer_point(ap, x).finite.size();
    rep.samples.push_back(s);
  }
  return rep;
}

} // namespace chs
