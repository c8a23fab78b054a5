#include "chs/rootdata.hpp"

#include "chs/linalg.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace chs {

int RootDatum::root_index(const IVec& r) const {
  for (int i = 0; i < num_roots(); ++i)
    if (roots[i] == r) return i;
  return -1;
}

Q RootDatum::eval(int root, const QVec& x) const { return dot(roots[root], x); }

namespace {

IVec neg(IVec v) {
  for (auto& e : v) e = -e;
  return v;
}

IVec axpy(IVec y, long s, const IVec& x) { // y + s x
  for (size_t i = 0; i < y.size(); ++i) y[i] += s * x[i];
  return y;
}

} // namespace

RootDatum make_root_datum(std::string name, int rank, std::vector<IVec> roots,
                          std::vector<IVec> coroots, std::vector<int> simple) {
  if (roots.size() != coroots.size()) fail_data("roots and coroots have different lengths");
  for (size_t i = 0; i < roots.size(); ++i) {
    if (int(roots[i].size()) != rank || int(coroots[i].size()) != rank)
      fail_data("root " + std::to_string(i) + " has the wrong number of coordinates");
    if (dot(roots[i], coroots[i]) != 2)
      fail_data("<alpha, alpha^vee> != 2 for root " + to_string(roots[i]));
  }
  int n = int(roots.size());
  std::map<IVec, int> idx;
  for (int i = 0; i < n; ++i) {
    if (idx.count(roots[i])) fail_data("duplicate root " + to_string(roots[i]));
    idx[roots[i]] = i;
  }
  for (int i = 0; i < n; ++i) {
    auto it = idx.find(neg(roots[i]));
    if (it == idx.end()) fail_data("negative of root " + to_string(roots[i]) + " missing");
    if (coroots[it->second] != neg(coroots[i])) fail_data("coroot of -alpha is not -alpha^vee");
    IVec twice = roots[i];
    for (auto& e : twice) e *= 2;
    if (idx.count(twice)) fail_data("non-reduced root system");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      IVec r = axpy(roots[b], -dot(roots[b], coroots[a]), roots[a]);
      auto it = idx.find(r);
      if (it == idx.end()) fail_data("reflection closure fails: s_alpha(beta) = " + to_string(r));
      IVec c = axpy(coroots[b], -dot(roots[a], coroots[b]), coroots[a]);
      if (coroots[it->second] != c) fail_data("coroot reflection closure fails");
    }

  // positive system
  std::vector<bool> pos(n);
  if (simple.empty() && n > 0) {
    long m = 0;
    for (auto& r : roots)
      for (auto e : r) m = std::max(m, std::abs(e));
    long N = 2 * m + 1, p = 1;
    IVec v(rank);
    for (int k = 0; k < rank; ++k, p *= N) v[k] = p;
    for (int i = 0; i < n; ++i) pos[i] = dot(roots[i], v) > 0;
    for (int i = 0; i < n; ++i) {
      if (!pos[i]) continue;
      bool decomposable = false;
      for (int j = 0; j < n && !decomposable; ++j) {
        if (!pos[j]) continue;
        auto it = idx.find(axpy(roots[i], -1, roots[j]));
        if (it != idx.end() && pos[it->second]) decomposable = true;
      }
      if (!decomposable) simple.push_back(i);
    }
  }
  for (int s : simple)
    if (s < 0 || s >= n) fail_data("simple root index out of range");
  int r = int(simple.size());
  std::vector<IVec> coeff(n, IVec(r, 0));
  if (n > 0) {
    std::vector<QVec> srows;
    for (int s : simple) srows.push_back(to_q(roots[s]));
    if (chs::rank(srows) != r) fail_data("simple roots are linearly dependent");
    QMat A(rank, r);
    for (int j = 0; j < r; ++j)
      for (int i = 0; i < rank; ++i) A(i, j) = roots[simple[j]][i];
    for (int i = 0; i < n; ++i) {
      auto c = solve(A, to_q(roots[i]));
      if (!c || !is_integral(*c)) fail_data("simple roots are not a base: root " + to_string(roots[i]));
      coeff[i] = to_int(*c);
      bool nonneg = std::all_of(coeff[i].begin(), coeff[i].end(), [](long e) { return e >= 0; });
      bool nonpos = std::all_of(coeff[i].begin(), coeff[i].end(), [](long e) { return e <= 0; });
      if (!nonneg && !nonpos) fail_data("simple roots are not a base: mixed signs for " + to_string(roots[i]));
      pos[i] = nonneg;
    }
  }

  // canonical order: positives by height, then lexicographically descending
  // coefficients; negatives follow in the same order
  std::vector<int> P;
  for (int i = 0; i < n; ++i)
    if (pos[i]) P.push_back(i);
  auto height = [&](int i) { return std::accumulate(coeff[i].begin(), coeff[i].end(), 0L); };
  std::sort(P.begin(), P.end(), [&](int a, int b) {
    if (height(a) != height(b)) return height(a) < height(b);
    return coeff[a] > coeff[b];
  });
  RootDatum rd;
  rd.name = std::move(name);
  rd.rank = rank;
  std::vector<int> order = P;
  for (int i : P) order.push_back(idx[neg(roots[i])]);
  std::vector<int> newIndex(n);
  for (int k = 0; k < n; ++k) {
    newIndex[order[k]] = k;
    rd.roots.push_back(roots[order[k]]);
    rd.coroots.push_back(coroots[order[k]]);
    rd.coeffs.push_back(coeff[order[k]]);
    rd.positive.push_back(k < int(P.size()));
  }
  int np = int(P.size());
  for (int k = 0; k < n; ++k) rd.negation.push_back(k < np ? k + np : k - np);
  for (int s : simple) rd.simple.push_back(newIndex[s]);
  return rd;
}

// ---------------------------------------------------------------------------
// presets

namespace {

using Cartan = std::vector<std::vector<long>>;

Cartan cartan_of(char letter, int r) {
  Cartan C(r, std::vector<long>(r, 0));
  for (int i = 0; i < r; ++i) C[i][i] = 2;
  auto link = [&](int i, int j) { C[i][j] = C[j][i] = -1; };
  switch (letter) {
  case 'A':
    for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
    break;
  case 'B':
  case 'C':
    if (r < 2) fail_data("type " + std::string(1, letter) + " needs rank >= 2");
    for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
    // B: alpha_r short, so <alpha_r^vee, alpha_{r-1}> = -2
    if (letter == 'B') C[r - 1][r - 2] = -2;
    else C[r - 2][r - 1] = -2;
    break;
  case 'D':
    if (r < 4) fail_data("type D needs rank >= 4");
    for (int i = 0; i + 2 < r; ++i) link(i, i + 1);
    link(r - 3, r - 1);
    break;
  case 'G':
    if (r != 2) fail_data("type G exists only in rank 2");
    C[0][1] = -3; // alpha_1 short
    C[1][0] = -1;
    break;
  default:
    fail_data(std::string("unsupported Cartan type letter ") + letter);
  }
  return C;
}

struct Block {
  int rank = 0;
  std::vector<IVec> roots, coroots;
  std::vector<int> simple;
};

// Roots of a simple type with X_* spanned by the coroots plus `extra`
// (both in fundamental-coweight coordinates).
Block simple_block(char letter, int r, const std::vector<IVec>& extra) {
  Cartan C = cartan_of(letter, r);
  std::vector<IVec> gens;
  for (int i = 0; i < r; ++i) gens.push_back(C[i]);
  for (auto& e : extra) gens.push_back(e);
  std::vector<IVec> basis = lattice_basis(gens, r);
  if (int(basis.size()) != r) throw std::logic_error("lattice basis has the wrong rank");
  QMat M(r, r);
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < r; ++i) M(i, j) = basis[j][i];
  QMat Minv = inverse(M);
  Block b;
  b.rank = r;
  std::vector<IVec> sroots, scoroots;
  for (int i = 0; i < r; ++i) {
    IVec a(r, 0);
    a[i] = 1;
    QVec an = row_times(to_q(a), M);
    QVec cn = Minv * to_q(C[i]);
    sroots.push_back(to_int(an));
    scoroots.push_back(to_int(cn));
  }
  // close under simple reflections
  std::map<IVec, IVec> seen;
  std::deque<IVec> queue;
  for (int i = 0; i < r; ++i) {
    seen[sroots[i]] = scoroots[i];
    queue.push_back(sroots[i]);
  }
  while (!queue.empty()) {
    IVec a = queue.front();
    queue.pop_front();
    IVec ac = seen[a];
    for (int i = 0; i < r; ++i) {
      IVec b2 = axpy(a, -dot(a, scoroots[i]), sroots[i]);
      if (seen.count(b2)) continue;
      seen[b2] = axpy(ac, -dot(sroots[i], ac), scoroots[i]);
      queue.push_back(b2);
    }
  }
  for (auto& [a, c] : seen) {
    b.roots.push_back(a);
    b.coroots.push_back(c);
  }
  for (int i = 0; i < r; ++i)
    b.simple.push_back(int(std::find(b.roots.begin(), b.roots.end(), sroots[i]) - b.roots.begin()));
  return b;
}

Block gl_block(int n) {
  Block b;
  b.rank = n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      IVec v(n, 0);
      v[i] = 1;
      v[j] = -1;
      b.roots.push_back(v);
      b.coroots.push_back(v);
    }
  for (int i = 0; i + 1 < n; ++i) {
    IVec v(n, 0);
    v[i] = 1;
    v[i + 1] = -1;
    b.simple.push_back(int(std::find(b.roots.begin(), b.roots.end(), v) - b.roots.begin()));
  }
  return b;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size() || v < 0) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    fail_data("bad " + what + " in type string: '" + s + "'");
  }
}

Block factor_block(const std::string& f) {
  auto paren = [&](const std::string& prefix) -> int {
    if (f.rfind(prefix + "(", 0) != 0 || f.back() != ')') return -1;
    return parse_int(f.substr(prefix.size() + 1, f.size() - prefix.size() - 2), "size");
  };
  if (int n = paren("GL"); n >= 1) return gl_block(n);
  if (int n = paren("T"); n >= 1) {
    Block b;
    b.rank = n;
    return b;
  }
  if (int n = paren("SL"); n >= 2) return simple_block('A', n - 1, {});
  if (int n = paren("PGL"); n >= 2) {
    std::vector<IVec> extra;
    for (int i = 0; i < n - 1; ++i) {
      IVec e(n - 1, 0);
      e[i] = 1;
      extra.push_back(e);
    }
    return simple_block('A', n - 1, extra);
  }
  std::string head = f, iso = "sc";
  if (auto sp = f.find(' '); sp != std::string::npos) {
    head = f.substr(0, sp);
    iso = trim(f.substr(sp + 1));
  }
  if (head.size() < 2) fail_data("cannot parse type '" + f + "'");
  char letter = head[0];
  int r = parse_int(head.substr(1), "rank");
  if (r < 1) fail_data("rank must be positive in '" + f + "'");
  std::vector<IVec> extra;
  auto unit = [&](int i) {
    IVec e(r, 0);
    e[i] = 1;
    return e;
  };
  if (iso == "sc") {
  } else if (iso == "ad") {
    for (int i = 0; i < r; ++i) extra.push_back(unit(i));
  } else if (iso.size() > 1 && iso[0] == 'm' && letter == 'A') {
    // intermediate isogeny of A_r with fundamental group Z/d
    int d = parse_int(iso.substr(1), "isogeny order");
    if (d < 1 || (r + 1) % d != 0) fail_data("isogeny order must divide r+1 in '" + f + "'");
    IVec e = unit(0);
    e[0] = (r + 1) / d;
    extra.push_back(e);
  } else {
    fail_data("unknown isogeny '" + iso + "' in '" + f + "'");
  }
  return simple_block(letter, r, extra);
}

} // namespace

RootDatum preset_root_datum(const std::string& type) {
  std::vector<Block> blocks;
  std::string rest = type;
  for (;;) {
    size_t p = rest.find(" x ");
    blocks.push_back(factor_block(trim(rest.substr(0, p))));
    if (p == std::string::npos) break;
    rest = rest.substr(p + 3);
  }
  int rank = 0;
  for (auto& b : blocks) rank += b.rank;
  std::vector<IVec> roots, coroots;
  std::vector<int> simple;
  int off = 0;
  for (auto& b : blocks) {
    int base = int(roots.size());
    for (size_t i = 0; i < b.roots.size(); ++i) {
      IVec a(rank, 0), c(rank, 0);
      for (int k = 0; k < b.rank; ++k) {
        a[off + k] = b.roots[i][k];
        c[off + k] = b.coroots[i][k];
      }
      roots.push_back(a);
      coroots.push_back(c);
    }
    for (int s : b.simple) simple.push_back(base + s);
    off += b.rank;
  }
  return make_root_datum(type, rank, roots, coroots, simple);
}

// ---------------------------------------------------------------------------

int WeylGroup::index_of(const IMat& m) const {
  auto it = index.find(m);
  return it == index.end() ? -1 : it->second;
}

IMat reflection_matrix(const RootDatum& rd, int root) {
  IMat m = IMat::identity(rd.rank);
  const IVec& a = rd.roots[root];
  const IVec& c = rd.coroots[root];
  for (int i = 0; i < rd.rank; ++i)
    for (int j = 0; j < rd.rank; ++j) m(i, j) -= c[i] * a[j];
  return m;
}

WeylGroup weyl_group(const RootDatum& rd, size_t cap) {
  WeylGroup W;
  std::vector<QMat> gens;
  for (int s : rd.simple) gens.push_back(QMat(reflection_matrix(rd, s)));
  W.group = FiniteGroup::generate(rd.rank, gens, cap);
  for (size_t e = 0; e < W.group.order(); ++e) {
    const QMat& q = W.group.matrix(int(e));
    IMat m(q.rows, q.cols);
    for (size_t k = 0; k < q.a.size(); ++k) m.a[k] = q.a[k].get_num().get_si();
    W.index[m] = int(e);
    W.mats.push_back(std::move(m));
  }
  for (size_t e = 0; e < W.order(); ++e) W.inverses.push_back(W.mats[W.group.inv(int(e))]);
  std::map<IVec, int> ridx;
  for (int i = 0; i < rd.num_roots(); ++i) ridx[rd.roots[i]] = i;
  for (size_t e = 0; e < W.order(); ++e) {
    std::vector<int> perm(rd.num_roots());
    int len = 0;
    for (int i = 0; i < rd.num_roots(); ++i) {
      auto it = ridx.find(row_times(rd.roots[i], W.inverses[e]));
      if (it == ridx.end()) fail_check("Weyl group element does not permute the roots");
      perm[i] = it->second;
      if (rd.positive[i] && !rd.positive[perm[i]]) ++len;
    }
    W.rootPerm.push_back(std::move(perm));
    W.length.push_back(len);
  }
  for (int i = 0; i < rd.num_roots(); ++i) W.reflection.push_back(W.index_of(reflection_matrix(rd, i)));
  return W;
}

// ---------------------------------------------------------------------------

Levi levi_subdatum(const RootDatum& rd, const std::vector<int>& subset) {
  std::set<int> J(subset.begin(), subset.end());
  for (int p : J)
    if (p < 0 || p >= rd.semisimple_rank()) fail_data("Levi subset contains a non-simple index");
  std::vector<IVec> roots, coroots;
  std::vector<int> simple;
  for (int p : subset) {
    simple.push_back(int(roots.size()));
    roots.push_back(rd.roots[rd.simple[p]]);
    coroots.push_back(rd.coroots[rd.simple[p]]);
  }
  for (int i = 0; i < rd.num_roots(); ++i) {
    bool inside = true;
    for (int k = 0; k < rd.semisimple_rank(); ++k)
      if (rd.coeffs[i][k] != 0 && !J.count(k)) inside = false;
    bool isSimple = std::find(roots.begin(), roots.end(), rd.roots[i]) != roots.end();
    if (inside && !isSimple) {
      roots.push_back(rd.roots[i]);
      coroots.push_back(rd.coroots[i]);
    }
  }
  std::string name = rd.name + " | L{";
  for (size_t k = 0; k < subset.size(); ++k) name += (k ? "," : "") + std::to_string(subset[k]);
  name += "}";
  Levi L;
  L.datum = make_root_datum(name, rd.rank, roots, coroots, simple);
  L.simplePositions = subset;
  for (auto& r : L.datum.roots) L.rootMap.push_back(rd.root_index(r));
  // rational closedness: span(Phi_L) meets Phi exactly in Phi_L
  std::vector<QVec> span;
  for (auto& r : L.datum.roots) span.push_back(to_q(r));
  for (int i = 0; i < rd.num_roots(); ++i) {
    bool inL = std::find(L.rootMap.begin(), L.rootMap.end(), i) != L.rootMap.end();
    if (!inL && in_span(span, to_q(rd.roots[i])))
      fail_check("Levi root subsystem is not rationally closed");
  }
  return L;
}

// ---------------------------------------------------------------------------

std::vector<std::vector<long>> cartan_matrix(const RootDatum& rd, const std::vector<int>& base) {
  std::vector<std::vector<long>> C(base.size(), std::vector<long>(base.size()));
  for (size_t i = 0; i < base.size(); ++i)
    for (size_t j = 0; j < base.size(); ++j) C[i][j] = dot(rd.coroots[base[i]], rd.roots[base[j]]);
  return C;
}

namespace {

// Orders a connected Dynkin component the Bourbaki way and names it.
SimpleFactor classify_component(const RootDatum& rd, std::vector<int> comp) {
  std::sort(comp.begin(), comp.end());
  auto C = cartan_matrix(rd, comp);
  int k = int(comp.size());
  SimpleFactor f;
  f.rank = k;
  if (k == 1) {
    f.letter = 'A';
    f.base = comp;
    return f;
  }
  std::vector<std::vector<int>> adj(k);
  int maxBond = 1;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j && C[i][j] != 0) {
        adj[i].push_back(j);
        maxBond = std::max<long>(maxBond, C[i][j] * C[j][i]);
      }
  int maxDeg = 0;
  for (auto& a : adj) maxDeg = std::max(maxDeg, int(a.size()));
  auto walk = [&](int start) {
    std::vector<int> order{start};
    int prev = -1, cur = start;
    while (true) {
      int next = -1;
      for (int j : adj[cur])
        if (j != prev) next = j;
      if (next < 0) break;
      prev = cur;
      cur = next;
      order.push_back(cur);
    }
    return order;
  };
  std::vector<int> ends;
  for (int i = 0; i < k; ++i)
    if (adj[i].size() == 1) ends.push_back(i);
  if (maxDeg <= 2 && ends.size() == 2) {
    std::vector<int> path;
    if (maxBond == 3) {
      f.letter = 'G';
      // alpha_1 short: <alpha_1^vee, alpha_2> = -3
      path = C[0][1] == -3 ? std::vector<int>{0, 1} : std::vector<int>{1, 0};
    } else if (maxBond == 2) {
      // the double bond sits at one end; start from the other end
      int dbl = -1;
      for (int e : ends)
        for (int j : adj[e])
          if (C[e][j] * C[j][e] == 2) dbl = e;
      if (k == 2) {
        f.letter = 'B';
        // alpha_1 long: <alpha_1^vee, alpha_2> = -1, <alpha_2^vee, alpha_1> = -2
        path = C[0][1] == -1 ? std::vector<int>{0, 1} : std::vector<int>{1, 0};
      } else {
        int other = ends[0] == dbl ? ends[1] : ends[0];
        path = walk(other);
        int t = path.back(), p = path[path.size() - 2];
        f.letter = C[t][p] == -2 ? 'B' : 'C';
      }
    } else {
      f.letter = 'A';
      path = walk(std::min(ends[0], ends[1]));
    }
    for (int i : path) f.base.push_back(comp[i]);
    return f;
  }
  f.letter = (maxDeg == 3 && maxBond == 1) ? (k >= 4 ? 'D' : '?') : '?';
  if (f.letter == 'D') {
    // D_n: arms of length 1,1,n-3 around the branch node
    int branch = -1;
    for (int i = 0; i < k; ++i)
      if (adj[i].size() == 3) branch = i;
    int shortArms = 0;
    for (int j : adj[branch])
      if (adj[j].size() == 1) ++shortArms;
    if (shortArms < 2 && k > 4) f.letter = '?';
  }
  f.base = comp;
  return f;
}

// Invariant factors (other than 1) of (X_* meet span of the coroots of
// `base`) modulo the lattice those coroots span.
std::vector<Z> derived_pi1(const RootDatum& rd, const std::vector<int>& base) {
  if (base.empty()) return {};
  int n = rd.rank, K = int(base.size());
  std::vector<QVec> corootRows;
  for (int b : base) corootRows.push_back(to_q(rd.coroots[b]));
  std::vector<IVec> annihilator;
  for (auto& f : kernel(corootRows, n)) annihilator.push_back(to_int(Q(common_denominator(f)) * f));
  std::vector<IVec> L = integer_kernel(annihilator, n);
  if (int(L.size()) != K) throw std::logic_error("coroot span has the wrong rank");
  QMat B(n, K);
  for (int j = 0; j < K; ++j)
    for (int i = 0; i < n; ++i) B(i, j) = L[j][i];
  std::vector<IVec> coords;
  for (int b : base) {
    auto y = solve(B, to_q(rd.coroots[b]));
    if (!y || !is_integral(*y)) throw std::logic_error("coroot outside X_*");
    coords.push_back(to_int(*y));
  }
  std::vector<Z> out;
  for (auto& z : smith_invariants(coords, K))
    if (z != 1) out.push_back(z);
  return out;
}

} // namespace

TypeDecomposition simple_type_decomposition(const RootDatum& rd, const std::vector<int>& subsystem) {
  std::set<int> S(subsystem.begin(), subsystem.end());
  for (int a : S) {
    if (a < 0 || a >= rd.num_roots()) fail_data("root index out of range");
    for (int b : S) {
      IVec r = axpy(rd.roots[b], -dot(rd.roots[b], rd.coroots[a]), rd.roots[a]);
      int i = rd.root_index(r);
      if (i < 0 || !S.count(i)) fail_data("root subset is not closed under its reflections");
    }
  }
  std::vector<int> P;
  for (int a : S)
    if (rd.positive[a]) P.push_back(a);
  std::vector<int> base;
  for (int a : P) {
    bool decomposable = false;
    for (int b : P) {
      int c = rd.root_index(axpy(rd.roots[a], -1, rd.roots[b]));
      if (c >= 0 && S.count(c) && rd.positive[c]) decomposable = true;
    }
    if (!decomposable) base.push_back(a);
  }
  TypeDecomposition d;
  d.centralRank = rd.rank - int(base.size());
  // connected components of the Dynkin graph
  std::vector<int> comp(base.size(), -1);
  int ncomp = 0;
  for (size_t s = 0; s < base.size(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<size_t> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      size_t u = stack.back();
      stack.pop_back();
      for (size_t v = 0; v < base.size(); ++v)
        if (comp[v] < 0 && dot(rd.coroots[base[u]], rd.roots[base[v]]) != 0) {
          comp[v] = ncomp;
          stack.push_back(v);
        }
    }
    ++ncomp;
  }
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> members;
    for (size_t s = 0; s < base.size(); ++s)
      if (comp[s] == c) members.push_back(base[s]);
    SimpleFactor f = classify_component(rd, members);
    std::vector<QVec> span;
    for (int b : f.base) span.push_back(to_q(rd.roots[b]));
    for (int a : S)
      if (in_span(span, to_q(rd.roots[a]))) f.roots.push_back(a);
    // per-factor isogeny key: (X_* meet span of the factor's coroots) / coroot lattice
    Z order = 1;
    for (auto& z : derived_pi1(rd, f.base)) order *= z;
    auto C = cartan_matrix(rd, f.base);
    QMat Cq(f.rank, f.rank);
    for (int i = 0; i < f.rank; ++i)
      for (int j = 0; j < f.rank; ++j) Cq(i, j) = C[i][j];
    Q detC = abs(det(Cq));
    f.pi1Order = order;
    if (order == 1) f.key = "sc";
    else if (Q(order) == detC) f.key = "ad";
    else f.key = "Z" + order.get_str();
    d.factors.push_back(std::move(f));
  }
  std::sort(d.factors.begin(), d.factors.end(),
            [](const SimpleFactor& a, const SimpleFactor& b) { return a.roots < b.roots; });
  // fundamental group of the derived subgroup
  std::vector<int> allBase2;
  for (auto& f : d.factors) allBase2.insert(allBase2.end(), f.base.begin(), f.base.end());
  d.pi1 = derived_pi1(rd, allBase2);
  return d;
}

std::string TypeDecomposition::str() const {
  std::string s;
  Z prod = 1, glob = 1;
  for (auto& z : pi1) glob *= z;
  for (auto& f : factors) {
    if (!s.empty()) s += " x ";
    s += f.type() + "." + f.key;
    prod *= f.pi1Order;
  }
  if (prod != glob) {
    s += " [pi1=";
    for (size_t i = 0; i < pi1.size(); ++i) s += (i ? "+" : "") + ("Z" + pi1[i].get_str());
    if (pi1.empty()) s += "1";
    s += "]";
  }
  if (centralRank > 0) s += (s.empty() ? "" : " x ") + ("T" + std::to_string(centralRank));
  return s;
}

std::vector<int> fundamental_degrees(char letter, int r) {
  std::vector<int> d;
  switch (letter) {
  case 'A':
    for (int i = 2; i <= r + 1; ++i) d.push_back(i);
    break;
  case 'B':
  case 'C':
    for (int i = 1; i <= r; ++i) d.push_back(2 * i);
    break;
  case 'D':
    for (int i = 1; i < r; ++i) d.push_back(2 * i);
    d.push_back(r);
    break;
  case 'G':
    d = {2, 6};
    break;
  default:
    fail_data("no degree data for this type");
  }
  return d;
}

// ---------------------------------------------------------------------------

Q InvariantForm::operator()(const QVec& x, const QVec& y) const { return dot(x, gram * y); }

InvariantForm invariant_form(const RootDatum& rd) {
  int n = rd.rank;
  InvariantForm F;
  F.gram = QMat(n, n);
  std::vector<int> all(rd.num_roots());
  std::iota(all.begin(), all.end(), 0);
  TypeDecomposition d = simple_type_decomposition(rd, all);
  for (auto& f : d.factors) {
    QMat G(n, n);
    for (int a : f.roots)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) G(i, j) += Q(rd.roots[a][i] * rd.roots[a][j]);
    Q shortest = -1;
    for (int a : f.roots) {
      Q len = dot(to_q(rd.coroots[a]), G * to_q(rd.coroots[a]));
      if (shortest < 0 || len < shortest) shortest = len;
    }
    Q c = Q(2) / shortest;
    for (int k = 0; k < n * n; ++k) F.gram.a[k] += c * G.a[k];
  }
  // central part: identity in a basis of X_* meeting the centre, orthogonal
  // to the span of the coroots
  std::vector<IVec> rootRows(rd.roots.begin(), rd.roots.end());
  std::vector<IVec> zb = integer_kernel(rootRows, n);
  if (!zb.empty()) {
    QMat M(n, n);
    int col = 0;
    for (auto& z : zb) {
      for (int i = 0; i < n; ++i) M(i, col) = z[i];
      ++col;
    }
    for (int s : rd.simple) {
      for (int i = 0; i < n; ++i) M(i, col) = rd.coroots[s][i];
      ++col;
    }
    QMat Minv = inverse(M);
    int m = int(zb.size());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Q s = 0;
        for (int k = 0; k < m; ++k) s += Minv(k, i) * Minv(k, j);
        F.gram(i, j) += s;
      }
  }
  return F;
}

} // namespace chs
