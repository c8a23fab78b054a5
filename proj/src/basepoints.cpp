#include "chs/basepoints.hpp"

#include "chs/linalg.hpp"

#include <set>

namespace chs {

std::string to_string(BasepointOrigin o) {
  switch (o) {
  case BasepointOrigin::Barycenter: return "barycenter";
  case BasepointOrigin::Projection: return "projection";
  case BasepointOrigin::Transport: return "transport";
  }
  return "?";
}

namespace {

std::vector<QVec> root_rows(const Apartment& ap, const std::vector<int>& idx) {
  std::vector<QVec> out;
  for (int a : idx) out.push_back(to_q(ap.rd.roots[a]));
  return out;
}

std::vector<QVec> coroots_of(const Apartment& ap, const Facet& f) {
  std::vector<QVec> out;
  for (int a : vanishing_root_indices(ap, f)) out.push_back(to_q(ap.rd.coroots[a]));
  return out;
}

} // namespace

QVec project_to_span(const Apartment& ap, const Facet& f, const QVec& x) {
  int n = ap.rank();
  std::vector<QVec> D = kernel(root_rows(ap, vanishing_root_indices(ap, f)), n);
  const QVec& p = f.witness;
  int d = int(D.size());
  if (d == 0) return p;
  QMat G(d, d);
  QVec b(d);
  for (int i = 0; i < d; ++i) {
    b[i] = ap.form(x - p, D[i]);
    for (int j = 0; j < d; ++j) G(i, j) = ap.form(D[i], D[j]);
  }
  auto c = solve(G, b);
  if (!c) throw std::logic_error("degenerate invariant form");
  QVec y = p;
  for (int i = 0; i < d; ++i) y = y + (*c)[i] * D[i];
  return y;
}

bool in_centre(const Apartment& ap, const QVec& v) {
  for (auto& r : ap.rd.roots)
    if (dot(r, v) != 0) return false;
  return true;
}

bool in_centre_plus_coroots(const Apartment& ap, const Facet& f, const QVec& v) {
  std::vector<QVec> gens = coroots_of(ap, f);
  for (auto& z : ap.centerLattice) gens.push_back(to_q(z));
  return in_span(gens, v);
}

BasepointAssignment assign_s(const Apartment& ap, int radius) {
  BasepointAssignment a;
  a.window = build_window(ap, radius);
  const Window& win = a.window;
  QVec sA(ap.rank(), Q(0));
  for (auto& f : ap.alcove) {
    Q share = frac(1, long(f.vertices.size()));
    for (auto& v : f.vertices) sA = sA + share * v;
  }
  std::vector<QVec> faceS;
  for (auto& F : win.alcoveFaces) faceS.push_back(project_to_span(ap, F, sA));
  size_t n = win.objects.size();
  a.s.resize(n);
  a.origin.resize(n);
  for (size_t i = 0; i < n; ++i) {
    a.s[i] = act(ap, win.toObject[i], faceS[win.face[i]]);
    bool own = win.toObject[i] == identity_element(ap);
    a.origin[i] = !own ? BasepointOrigin::Transport
                  : win.face[i] + 1 == int(win.alcoveFaces.size()) ? BasepointOrigin::Barycenter
                                                                    : BasepointOrigin::Projection;
  }
  for (auto& g : win.alcoves)
    for (size_t k = 0; k < win.alcoveFaces.size(); ++k) {
      int obj = win.index_of(act_facet(ap, g, win.alcoveFaces[k]));
      if (!(act(ap, g, faceS[k]) == a.s[obj]))
        fail_check("base point transport inconsistent at " + to_string(a.s[obj]));
      ++a.transportPaths;
    }
  return a;
}

BasepointReport check_basepoints(const Apartment& ap, const BasepointAssignment& a) {
  BasepointReport rep;
  const Window& win = a.window;
  size_t n = win.objects.size();
  for (size_t i = 0; i < n; ++i) {
    if (facet_of_point(ap, a.s[i]) == win.objects[i]) ++rep.inFacet;
    else ++rep.notInFacet;
  }
  // recompute every face projection from each window alcove containing it
  for (auto& g : win.alcoves) {
    QVec sA = act(ap, g, a.s[win.index_of(win.alcoveFaces.back())]);
    for (auto& F : win.alcoveFaces) {
      Facet gF = act_facet(ap, g, F);
      gF.witness = act(ap, g, F.witness);
      ++rep.adjacentChecked;
      if (!(project_to_span(ap, gF, sA) == a.s[win.index_of(gF)])) ++rep.adjacentFailures;
    }
  }
  // equivariance
  std::set<AffineWeylElement> moves;
  for (auto& r : alcove_walls(ap)) moves.insert(affine_reflection(ap, r));
  for (auto& o : stabilizer_facet(ap, win.alcoveFaces.back()).finite) moves.insert(o);
  FacetCategory cat = build_truncation(ap, win.radius);
  for (auto& cell : cat.cells) moves.insert(cell.w);
  for (auto& w : moves)
    for (size_t i = 0; i < n; ++i) {
      int j = win.index_of(act_facet(ap, w, win.objects[i]));
      if (j < 0) continue;
      ++rep.equivarianceChecked;
      if (!in_centre(ap, a.s[j] - act(ap, w, a.s[i]))) ++rep.equivarianceFailures;
    }
  // nesting, for every closure pair I <= J
  for (size_t i = 0; i < n; ++i) {
    std::vector<QVec> corootsI = coroots_of(ap, win.objects[i]);
    for (size_t j = 0; j < n; ++j) {
      if (!closure_le(win.objects[i], win.objects[j])) continue;
      ++rep.nestingChecked;
      QVec d = a.s[i] - a.s[j];
      if (!in_centre_plus_coroots(ap, win.objects[i], d)) ++rep.nestingFailures;
      if (!in_centre_plus_coroots(ap, win.objects[j], d)) ++rep.literalNestingFailures;
      for (auto& v : coroots_of(ap, win.objects[j]))
        if (!in_span(corootsI, v)) {
          ++rep.cartanFailures;
          break;
        }
    }
  }
  // telescoping of projections among alcove faces
  const auto& F = win.alcoveFaces;
  for (size_t k = 0; k < F.size(); ++k) {
    const QVec& sK = a.s[win.index_of(F[k])];
    for (size_t j = 0; j < F.size(); ++j) {
      if (!closure_le(F[j], F[k])) continue;
      QVec viaJ = project_to_span(ap, F[j], sK);
      for (size_t i = 0; i < F.size(); ++i) {
        if (!closure_le(F[i], F[j])) continue;
        ++rep.telescopingChecked;
        if (!(project_to_span(ap, F[i], viaJ) == project_to_span(ap, F[i], sK))) ++rep.telescopingFailures;
      }
    }
  }
  return rep;
}

} // namespace chs
