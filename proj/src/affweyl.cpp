#include "chs/affweyl.hpp"

#include "chs/linalg.hpp"

#include <algorithm>
#include <set>

namespace chs {

AffineWeylElement identity_element(const Apartment& ap) { return {0, IVec(ap.rank(), 0)}; }

AffineWeylElement translation(const Apartment&, const IVec& t) { return {0, t}; }

AffineWeylElement compose(const Apartment& ap, const AffineWeylElement& g, const AffineWeylElement& h) {
  IVec t = ap.W.mats[g.w] * h.t;
  for (size_t i = 0; i < t.size(); ++i) t[i] += g.t[i];
  return {ap.W.group.mul(g.w, h.w), t};
}

AffineWeylElement inverse(const Apartment& ap, const AffineWeylElement& g) {
  IVec t = ap.W.inverses[g.w] * g.t;
  for (auto& e : t) e = -e;
  return {ap.W.group.inv(g.w), t};
}

AffineWeylElement affine_reflection(const Apartment& ap, const AffineRoot& a) {
  IVec t = ap.rd.coroots[a.root];
  for (auto& e : t) e *= -a.level;
  return {ap.W.reflection[a.root], t};
}

QVec act(const Apartment& ap, const AffineWeylElement& g, const QVec& x) {
  return ap.W.mats[g.w] * x + to_q(g.t);
}

Facet act_facet(const Apartment& ap, const AffineWeylElement& g, const Facet& I) {
  if (I.ambient == Ambient::Finite) return facet_of_point(ap, ap.W.mats[g.w] * I.witness, Ambient::Finite);
  return facet_of_point(ap, act(ap, g, I.witness), I.ambient);
}

AffineRoot act_root(const Apartment& ap, const AffineWeylElement& g, const AffineRoot& a) {
  int r = ap.W.rootPerm[g.w][a.root];
  return {a.level - dot(ap.rd.roots[r], g.t), r};
}

bool element_less(const Apartment& ap, const AffineWeylElement& a, const AffineWeylElement& b) {
  auto ka = std::tie(ap.W.length[a.w], ap.W.mats[a.w], a.t);
  auto kb = std::tie(ap.W.length[b.w], ap.W.mats[b.w], b.t);
  return ka < kb;
}

std::string to_string(const Apartment& ap, const AffineWeylElement& g) {
  const IMat& m = ap.W.mats[g.w];
  std::string s = "[";
  for (int i = 0; i < m.rows; ++i) {
    if (i) s += ";";
    for (int j = 0; j < m.cols; ++j) s += (j ? "," : "") + std::to_string(m(i, j));
  }
  return s + "|" + to_string(g.t) + "]";
}

namespace {

// Barycentre of the vertices of a face of the closed alcove, with central
// coordinate 0.
QVec alcove_face_barycenter(const Apartment& ap, const Facet& I) {
  QVec b(ap.rank(), Q(0));
  for (auto& f : ap.alcove) {
    std::set<int> factorPositive;
    for (int a : ap.type.factors[&f - ap.alcove.data()].roots)
      if (ap.rd.positive[a]) factorPositive.insert(a);
    QVec sum(ap.rank(), Q(0));
    int cnt = 0;
    for (auto& v : f.vertices) {
      Facet fv = facet_of_point(ap, v);
      bool inClosure = true;
      for (int a : factorPositive) {
        long ci = fv.code[a], cj = I.code[a];
        if (cj % 2 == 0 ? ci != cj : (ci < cj - 1 || ci > cj + 1)) inClosure = false;
      }
      if (inClosure) sum = sum + v, ++cnt;
    }
    if (cnt == 0) throw std::logic_error("facet is not a face of the closed alcove");
    b = b + frac(1, cnt) * sum;
  }
  return b;
}

std::vector<IVec> simple_rows(const Apartment& ap) {
  std::vector<IVec> rows;
  for (int s : ap.rd.simple) rows.push_back(ap.rd.roots[s]);
  return rows;
}

AffineStabilizer stabilizer_alcove_face(const Apartment& ap, const Facet& I0) {
  AffineStabilizer st;
  st.lattice = ap.centerLattice;
  QVec b = alcove_face_barycenter(ap, I0);
  auto rows = simple_rows(ap);
  for (size_t w = 0; w < ap.W.order(); ++w) {
    QVec d = b - ap.W.mats[w] * b;
    QVec t;
    for (auto& r : rows) t.push_back(dot(r, d));
    auto lambda = integer_solve(rows, ap.rank(), t);
    if (!lambda) continue;
    AffineWeylElement h{int(w), *lambda};
    if (!(act_facet(ap, h, I0) == I0)) fail_check("alcove-face stabilizer candidate moves the face");
    st.finite.push_back(h);
  }
  return st;
}

} // namespace

Reduction reduce_to_fundamental(const Apartment& ap, const QVec& x) {
  const RootDatum& rd = ap.rd;
  AffineWeylElement g = identity_element(ap);
  QVec y = x;
  for (long step = 0;; ++step) {
    if (step > 1000000) fail_check("alcove walk did not terminate");
    bool moved = false;
    for (int s : rd.simple)
      if (dot(rd.roots[s], y) < 0) {
        AffineWeylElement r = affine_reflection(ap, {0, s});
        g = compose(ap, r, g);
        y = act(ap, r, y);
        moved = true;
        break;
      }
    if (moved) continue;
    for (auto& f : ap.alcove)
      if (dot(rd.roots[f.highest], y) > 1) {
        AffineWeylElement r = affine_reflection(ap, {1, rd.negation[f.highest]});
        g = compose(ap, r, g);
        y = act(ap, r, y);
        moved = true;
        break;
      }
    if (!moved) break;
  }
  AffineWeylElement best = g;
  for (auto& s : stabilizer_point(ap, y).finite) {
    AffineWeylElement c = compose(ap, s, g);
    if (element_less(ap, c, best)) best = c;
  }
  return {best, y, facet_of_point(ap, y)};
}

Reduction reduce_facet(const Apartment& ap, const Facet& I) {
  Reduction r = reduce_to_fundamental(ap, I.witness);
  AffineWeylElement best = r.g;
  for (auto& s : stabilizer_alcove_face(ap, r.facet).finite) {
    AffineWeylElement c = compose(ap, s, r.g);
    if (element_less(ap, c, best)) best = c;
  }
  r.g = best;
  r.point = act(ap, best, I.witness);
  r.facet = facet_of_point(ap, r.point);
  return r;
}

AffineStabilizer stabilizer_point(const Apartment& ap, const QVec& x) {
  AffineStabilizer st;
  for (size_t w = 0; w < ap.W.order(); ++w) {
    QVec d = x - ap.W.mats[w] * x;
    if (is_integral(d)) st.finite.push_back({int(w), to_int(d)});
  }
  return st;
}

AffineStabilizer stabilizer_facet(const Apartment& ap, const Facet& I) {
  if (I.ambient != Ambient::Affine) throw std::logic_error("stabilizer_facet needs an affine facet");
  Reduction r = reduce_facet(ap, I);
  AffineStabilizer st0 = stabilizer_alcove_face(ap, r.facet);
  AffineWeylElement gi = inverse(ap, r.g);
  AffineStabilizer st;
  st.lattice = st0.lattice;
  for (auto& h : st0.finite) {
    AffineWeylElement c = compose(ap, gi, compose(ap, h, r.g));
    if (!(act_facet(ap, c, I) == I)) fail_check("conjugated stabilizer element moves the facet");
    st.finite.push_back(c);
  }
  return st;
}

std::vector<int> reflection_subgroup(const Apartment& ap, const std::vector<int>& roots) {
  std::vector<int> gens;
  for (int a : roots) gens.push_back(ap.W.reflection[a]);
  return ap.W.group.subgroup(gens);
}

Normalizer normalizer_parabolic(const Apartment& ap, const std::vector<int>& eps) {
  Normalizer n;
  std::set<int> E(eps.begin(), eps.end());
  for (size_t w = 0; w < ap.W.order(); ++w) {
    bool ok = true;
    for (int a : E)
      if (!E.count(ap.W.rootPerm[w][a])) ok = false;
    if (ok) n.N.push_back(int(w));
  }
  n.Weps = reflection_subgroup(ap, eps);
  std::vector<bool> covered(ap.W.order(), false);
  for (int w : n.N) {
    if (covered[w]) continue;
    n.reps.push_back(w);
    for (int u : n.Weps) covered[ap.W.group.mul(w, u)] = true;
  }
  std::vector<QVec> rows;
  for (int a : eps) rows.push_back(to_q(ap.rd.roots[a]));
  n.zBasis = kernel(rows, ap.rank());
  int k = int(n.zBasis.size());
  QMat Zm(ap.rank(), k);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < ap.rank(); ++i) Zm(i, j) = n.zBasis[j][i];
  for (int r : n.reps) {
    QMat M(k, k);
    for (int j = 0; j < k; ++j) {
      auto c = solve(Zm, ap.W.mats[r] * n.zBasis[j]);
      if (!c) fail_check("normalizer element does not preserve z_eps");
      for (int i = 0; i < k; ++i) M(i, j) = (*c)[i];
    }
    n.zAction.push_back(std::move(M));
  }
  n.quotient = FiniteGroup::generate(k, n.zAction);
  if (n.quotient.order() != n.reps.size())
    fail_check("N_W(W_eps)/W_eps does not act faithfully on z_eps");
  return n;
}

} // namespace chs
