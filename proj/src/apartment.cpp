#include "chs/apartment.hpp"

#include "chs/linalg.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace chs {

Apartment make_apartment(RootDatum rd, size_t cap) {
  Apartment ap;
  ap.W = weyl_group(rd, cap);
  ap.form = invariant_form(rd);
  std::vector<int> all(rd.num_roots());
  std::iota(all.begin(), all.end(), 0);
  ap.type = simple_type_decomposition(rd, all);
  for (auto& f : ap.type.factors) {
    AlcoveFactor af;
    af.base = f.base;
    long best = -1;
    for (int a : f.roots) {
      if (!rd.positive[a]) continue;
      long h = std::accumulate(rd.coeffs[a].begin(), rd.coeffs[a].end(), 0L);
      if (h > best) best = h, af.highest = a;
    }
    int l = int(f.base.size());
    for (int b : f.base) {
      int pos = int(std::find(rd.simple.begin(), rd.simple.end(), b) - rd.simple.begin());
      af.marks.push_back(rd.coeffs[af.highest][pos]);
    }
    // fundamental coweights inside the span of the factor's coroots
    auto C = cartan_matrix(rd, f.base);
    QMat Ct(l, l);
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) Ct(i, j) = C[j][i];
    af.vertices.push_back(QVec(rd.rank, Q(0)));
    for (int i = 0; i < l; ++i) {
      QVec e(l, Q(0));
      e[i] = 1;
      auto c = solve(Ct, e);
      if (!c) throw std::logic_error("singular Cartan matrix");
      QVec w(rd.rank, Q(0));
      for (int k = 0; k < l; ++k) w = w + (*c)[k] * to_q(rd.coroots[f.base[k]]);
      af.vertices.push_back(frac(1, af.marks[i]) * w);
    }
    ap.alcove.push_back(std::move(af));
  }
  std::vector<IVec> rows(rd.roots.begin(), rd.roots.end());
  ap.centerLattice = integer_kernel(rows, rd.rank);
  ap.rd = std::move(rd);
  return ap;
}

Q eval(const Apartment& ap, const AffineRoot& a, const QVec& x) {
  return dot(ap.rd.roots[a.root], x) + a.level;
}

Facet facet_of_point(const Apartment& ap, const QVec& x, Ambient ambient) {
  const RootDatum& rd = ap.rd;
  Facet f;
  f.ambient = ambient;
  f.witness = x;
  std::vector<QVec> zeroRoots;
  for (int i = 0; i < rd.num_positive(); ++i) {
    Q a = dot(rd.roots[i], x);
    long c;
    if (ambient == Ambient::Affine) {
      long fl = floor_q(a);
      c = (a == fl) ? 2 * fl : 2 * fl + 1;
      if (a == fl) zeroRoots.push_back(to_q(rd.roots[i]));
    } else {
      c = sgn(a);
      if (c == 0) zeroRoots.push_back(to_q(rd.roots[i]));
    }
    f.code.push_back(c);
  }
  f.dim = rd.rank - rank(zeroRoots);
  return f;
}

std::vector<AffineRoot> vanishing_roots(const Apartment& ap, const Facet& f) {
  std::vector<AffineRoot> out;
  int np = ap.rd.num_positive();
  for (int i = 0; i < np; ++i) {
    long c = f.code[i];
    if (f.ambient == Ambient::Affine) {
      if (c % 2 != 0) continue;
      out.push_back({-c / 2, i});
      out.push_back({c / 2, ap.rd.negation[i]});
    } else if (c == 0) {
      out.push_back({0, i});
      out.push_back({0, ap.rd.negation[i]});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> vanishing_root_indices(const Apartment& ap, const Facet& f) {
  std::vector<int> out;
  for (auto& a : vanishing_roots(ap, f)) out.push_back(a.root);
  std::sort(out.begin(), out.end());
  return out;
}

Support support(const Apartment& ap, const Facet& f) {
  Support s;
  s.point = f.witness;
  s.vanishing = vanishing_roots(ap, f);
  std::vector<QVec> rows;
  for (auto& a : s.vanishing) rows.push_back(to_q(ap.rd.roots[a.root]));
  s.direction = kernel(rows, ap.rank());
  return s;
}

bool closure_le(const Facet& I, const Facet& J) {
  if (I.ambient != J.ambient || I.code.size() != J.code.size()) return false;
  for (size_t i = 0; i < I.code.size(); ++i) {
    long ci = I.code[i], cj = J.code[i];
    if (I.ambient == Ambient::Affine) {
      if (cj % 2 == 0) {
        if (ci != cj) return false;
      } else if (ci < cj - 1 || ci > cj + 1) {
        return false;
      }
    } else if (ci != cj && ci != 0) {
      return false;
    }
  }
  return true;
}

bool star_membership(const Apartment& ap, const Facet& I, const QVec& x) {
  return closure_le(I, facet_of_point(ap, x, I.ambient));
}

bool in_closed_alcove(const Apartment& ap, const QVec& x) {
  for (auto& a : alcove_walls(ap))
    if (eval(ap, a, x) < 0) return false;
  return true;
}

std::vector<AffineRoot> alcove_walls(const Apartment& ap) {
  std::vector<AffineRoot> w;
  for (int s : ap.rd.simple) w.push_back({0, s});
  for (auto& f : ap.alcove) w.push_back({1, ap.rd.negation[f.highest]});
  return w;
}

namespace {

std::vector<Facet> sorted_unique(std::vector<Facet> v) {
  std::sort(v.begin(), v.end(), [](const Facet& a, const Facet& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.code < b.code;
  });
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

} // namespace

std::vector<Facet> facets_of_closed_alcove(const Apartment& ap) {
  // product over factors of nonempty vertex subsets
  std::vector<int> masks(ap.alcove.size(), 1);
  std::vector<Facet> out;
  for (;;) {
    QVec w(ap.rank(), Q(0));
    for (size_t j = 0; j < ap.alcove.size(); ++j) {
      const auto& V = ap.alcove[j].vertices;
      int cnt = 0;
      QVec sum(ap.rank(), Q(0));
      for (size_t v = 0; v < V.size(); ++v)
        if (masks[j] >> v & 1) sum = sum + V[v], ++cnt;
      w = w + frac(1, cnt) * sum;
    }
    out.push_back(facet_of_point(ap, w));
    size_t j = 0;
    for (; j < masks.size(); ++j) {
      int full = (1 << ap.alcove[j].vertices.size()) - 1;
      if (masks[j] < full) {
        ++masks[j];
        break;
      }
      masks[j] = 1;
    }
    if (j == masks.size()) break;
  }
  return sorted_unique(out);
}

std::vector<Facet> facets_of_closed_alcove_by_grid(const Apartment& ap) {
  // x = sum_i (n_i / D) omega_i^vee over all simple roots, with n_i >= 0 and
  // sum_i m_i n_i <= D per factor; D is divisible by every denominator of a
  // face barycentre.
  const RootDatum& rd = ap.rd;
  long D = 1;
  for (auto& f : ap.alcove) {
    long l = long(f.base.size()), sizes = 1, marks = 1;
    for (long k = 1; k <= l + 1; ++k) sizes = std::lcm(sizes, k);
    for (long m : f.marks) marks = std::lcm(marks, m);
    D = std::lcm(D, sizes * marks);
  }
  std::vector<std::vector<IVec>> perFactor;
  for (auto& f : ap.alcove) {
    std::vector<IVec> pts;
    IVec n(f.base.size(), 0);
    std::function<void(size_t, long)> rec = [&](size_t i, long budget) {
      if (i == n.size()) {
        pts.push_back(n);
        return;
      }
      for (long v = 0; v * f.marks[i] <= budget; ++v) {
        n[i] = v;
        rec(i + 1, budget - v * f.marks[i]);
      }
    };
    rec(0, D);
    perFactor.push_back(std::move(pts));
  }
  std::vector<Facet> out;
  std::vector<size_t> idx(perFactor.size(), 0);
  for (;;) {
    QVec x(rd.rank, Q(0));
    for (size_t j = 0; j < perFactor.size(); ++j) {
      const auto& f = ap.alcove[j];
      const IVec& n = perFactor[j][idx[j]];
      for (size_t i = 0; i < n.size(); ++i)
        x = x + frac(n[i] * f.marks[i], D) * f.vertices[i + 1];
    }
    out.push_back(facet_of_point(ap, x));
    size_t j = 0;
    for (; j < idx.size(); ++j) {
      if (++idx[j] < perFactor[j].size()) break;
      idx[j] = 0;
    }
    if (j == idx.size()) break;
  }
  return sorted_unique(out);
}

} // namespace chs
