#include "chs/cuspidal.hpp"

#include "chs/linalg.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>

namespace chs {

const TypeRecord& ClassificationTable::lookup(const std::string& type) const {
  auto it = types.find(type);
  if (it == types.end()) fail_data("classification data absent for type " + type);
  return it->second;
}

std::string default_classification_path() {
  if (const char* p = std::getenv("CHS_CLASSIFICATION")) return p;
  return std::string(CHS_DATA_DIR) + "/classification.json";
}

namespace {

QVec mod1(QVec v) {
  for (auto& q : v) q -= floor_q(q);
  return v;
}

} // namespace

std::vector<int> canonical_base(const RootDatum& rd, const std::vector<int>& roots) {
  std::set<int> S(roots.begin(), roots.end());
  std::vector<int> base;
  for (int a : roots) {
    if (!rd.positive[a]) continue;
    bool decomposable = false;
    for (int b : roots) {
      if (!rd.positive[b]) continue;
      IVec d = rd.roots[a];
      for (size_t i = 0; i < d.size(); ++i) d[i] -= rd.roots[b][i];
      int c = rd.root_index(d);
      if (c >= 0 && S.count(c) && rd.positive[c]) decomposable = true;
    }
    if (!decomposable) base.push_back(a);
  }
  std::sort(base.begin(), base.end());
  return base;
}

namespace {

QVec functional(const RootDatum& rd, const std::vector<int>& base, const QVec& coeffs) {
  QVec f(rd.rank, Q(0));
  for (size_t m = 0; m < base.size(); ++m) f = f + coeffs[m] * to_q(rd.roots[base[m]]);
  return f;
}

// Coefficients of the functional f in the given base (f must lie in its span).
QVec coefficients(const RootDatum& rd, const std::vector<int>& base, const QVec& f) {
  QMat A(rd.rank, int(base.size()));
  for (size_t m = 0; m < base.size(); ++m)
    for (int i = 0; i < rd.rank; ++i) A(i, int(m)) = rd.roots[base[m]][i];
  auto c = solve(A, f);
  if (!c) throw std::logic_error("central character outside the span of the factor's roots");
  return *c;
}

struct FactorOption {
  FactorCuspidal label;
  QVec f; // central character as a functional on t
  int orbit = 0;
};

// All local systems of one factor (cuspidal ones only when asked), with
// their central characters as functionals.
std::vector<FactorOption> factor_options(const Apartment& ap, const ClassificationTable& table,
                                         const SimpleFactor& fac, bool cuspidalOnly) {
  const RootDatum& rd = ap.rd;
  const TypeRecord& rec = table.lookup(fac.type());
  auto C = cartan_matrix(rd, fac.base);
  int l = fac.rank;
  QMat Cq(l, l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) Cq(i, j) = C[i][j];
  QMat Cinv = inverse(Cq);
  std::vector<int> base = canonical_base(rd, fac.roots);
  std::vector<FactorOption> out;
  for (size_t o = 0; o < rec.orbits.size(); ++o)
    for (auto& ls : rec.orbits[o].localSystems) {
      if (cuspidalOnly && !ls.cuspidal) continue;
      if (int(ls.centralCharacter.size()) != l) fail_data("central character of " + fac.type() + " has the wrong length");
      // omega = sum_i c_i omega_i = sum_m (C^-1 c)_m alpha_m in the Bourbaki base
      QVec d = Cinv * to_q(ls.centralCharacter);
      QVec f = functional(rd, fac.base, d);
      FactorOption opt;
      opt.label.roots = fac.roots;
      opt.label.type = fac.type();
      opt.label.orbit = rec.orbits[o].label;
      opt.label.localSystem = ls.label;
      opt.label.cc = mod1(coefficients(rd, base, f));
      opt.f = functional(rd, base, opt.label.cc);
      opt.orbit = int(o);
      out.push_back(std::move(opt));
    }
  return out;
}

// Calls visit(choice) for every tuple of options, one per factor.
template <class F>
void for_each_tuple(const std::vector<std::vector<FactorOption>>& opts, F visit) {
  std::vector<size_t> idx(opts.size(), 0);
  for (auto& o : opts)
    if (o.empty()) return;
  for (;;) {
    visit(idx);
    size_t j = 0;
    for (; j < idx.size(); ++j) {
      if (++idx[j] < opts[j].size()) break;
      idx[j] = 0;
    }
    if (j == idx.size()) return;
  }
}

} // namespace

ClassificationTable load_classification(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail_data("cannot open classification table '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail_data("classification table '" + path + "': " + e.what());
  }
  ClassificationTable t;
  try {
    if (j.at("format") != 1) fail_data("classification table: unsupported format");
    for (auto& [type, rec] : j.at("types").items()) {
      TypeRecord r;
      r.type = type;
      r.provenance = rec.value("provenance", "");
      r.normalizerAction = rec.value("normalizerAction", "trivial");
      if (r.normalizerAction != "trivial") fail_data("classification table: unsupported normalizerAction for " + type);
      r.totalPairs = rec.at("totalPairs").get<int>();
      int total = 0;
      std::set<std::pair<std::string, IVec>> cusp;
      for (auto& o : rec.at("orbits")) {
        OrbitRecord orb;
        orb.label = o.at("label").get<std::string>();
        orb.compGroupOrder = o.at("compGroupOrder").get<int>();
        for (auto& ls : o.at("localSystems")) {
          LocalSystem s;
          s.label = ls.at("label").get<std::string>();
          s.centralCharacter = ls.at("centralCharacter").get<IVec>();
          s.cuspidal = ls.at("cuspidal").get<bool>();
          if (s.cuspidal && !cusp.insert({orb.label, s.centralCharacter}).second)
            fail_data("classification table: cuspidal label not determined by (orbit, central character) in " + type);
          orb.localSystems.push_back(std::move(s));
          ++total;
        }
        if (int(orb.localSystems.size()) > orb.compGroupOrder)
          fail_data("classification table: more local systems than |A(u)| for " + type + " " + orb.label);
        r.orbits.push_back(std::move(orb));
      }
      if (total != r.totalPairs) fail_data("classification table: pair count mismatch for " + type);
      t.types[type] = std::move(r);
    }
  } catch (const nlohmann::json::exception& e) {
    fail_data("classification table '" + path + "': " + e.what());
  }
  return t;
}

std::string to_string(const CuspidalLabel& c) {
  if (c.factors.empty()) return "triv";
  std::string s;
  for (auto& f : c.factors) {
    if (!s.empty()) s += "*";
    s += f.type + ":" + f.orbit + ":" + f.localSystem;
  }
  return s;
}

std::vector<CuspidalLabel> cuspidal_set(const Apartment& ap, const ClassificationTable& table,
                                        const std::vector<int>& sub) {
  TypeDecomposition d = simple_type_decomposition(ap.rd, sub);
  std::vector<std::vector<FactorOption>> opts;
  for (auto& f : d.factors) opts.push_back(factor_options(ap, table, f, true));
  std::vector<CuspidalLabel> out;
  for_each_tuple(opts, [&](const std::vector<size_t>& idx) {
    QVec total(ap.rank(), Q(0));
    CuspidalLabel c;
    for (size_t j = 0; j < idx.size(); ++j) {
      total = total + opts[j][idx[j]].f;
      c.factors.push_back(opts[j][idx[j]].label);
    }
    if (!is_integral(total)) return; // does not descend to X_*
    std::sort(c.factors.begin(), c.factors.end());
    out.push_back(std::move(c));
  });
  std::sort(out.begin(), out.end());
  return out;
}

CuspidalLabel transport(const Apartment& ap, int w, const CuspidalLabel& c) {
  const RootDatum& rd = ap.rd;
  CuspidalLabel out;
  for (auto& f : c.factors) {
    FactorCuspidal g = f;
    std::vector<int> base = canonical_base(rd, f.roots);
    g.roots.clear();
    for (int a : f.roots) g.roots.push_back(ap.W.rootPerm[w][a]);
    std::sort(g.roots.begin(), g.roots.end());
    std::vector<int> image;
    for (int a : base) image.push_back(ap.W.rootPerm[w][a]);
    QVec fw = functional(rd, image, f.cc);
    g.cc = mod1(coefficients(rd, canonical_base(rd, g.roots), fw));
    out.factors.push_back(std::move(g));
  }
  std::sort(out.factors.begin(), out.factors.end());
  return out;
}

CuspidalLabel map_label(const RootDatum& from, const RootDatum& to, const std::vector<int>& rootMap,
                        const CuspidalLabel& c) {
  CuspidalLabel out;
  for (auto& f : c.factors) {
    FactorCuspidal g = f;
    QVec fn = functional(from, canonical_base(from, f.roots), f.cc);
    g.roots.clear();
    for (int a : f.roots) g.roots.push_back(rootMap[a]);
    std::sort(g.roots.begin(), g.roots.end());
    g.cc = mod1(coefficients(to, canonical_base(to, g.roots), fn));
    out.factors.push_back(std::move(g));
  }
  std::sort(out.factors.begin(), out.factors.end());
  return out;
}

long count_pairs(const Apartment& ap, const ClassificationTable& table, const std::vector<int>& sub) {
  TypeDecomposition d = simple_type_decomposition(ap.rd, sub);
  std::vector<std::vector<FactorOption>> opts;
  for (auto& f : d.factors) opts.push_back(factor_options(ap, table, f, false));
  long n = 0;
  for_each_tuple(opts, [&](const std::vector<size_t>& idx) {
    QVec total(ap.rank(), Q(0));
    for (size_t j = 0; j < idx.size(); ++j) total = total + opts[j][idx[j]].f;
    if (is_integral(total)) ++n;
  });
  return n;
}

std::vector<int> standard_levi_roots(const RootDatum& rd, const std::vector<int>& subset) {
  std::vector<int> out;
  for (int i = 0; i < rd.num_roots(); ++i) {
    bool inside = true;
    for (int k = 0; k < rd.semisimple_rank(); ++k)
      if (rd.coeffs[i][k] != 0 && std::find(subset.begin(), subset.end(), k) == subset.end()) inside = false;
    if (inside) out.push_back(i);
  }
  return out;
}

std::vector<int> image_of(const Apartment& ap, int w, const std::vector<int>& roots) {
  std::vector<int> out;
  for (int a : roots) out.push_back(ap.W.rootPerm[w][a]);
  std::sort(out.begin(), out.end());
  return out;
}

DatumMatch match_datum(const Apartment& ap, const std::vector<CuspidalDatum>& data,
                       const std::vector<int>& roots, const CuspidalLabel& label) {
  for (size_t i = 0; i < data.size(); ++i) {
    if (data[i].leviRoots.size() != roots.size()) continue;
    for (size_t w = 0; w < ap.W.order(); ++w) {
      if (image_of(ap, int(w), roots) != data[i].leviRoots) continue;
      if (transport(ap, int(w), label) == data[i].label) return {int(i), int(w)};
    }
  }
  return {};
}

std::vector<CuspidalDatum> cuspidal_data_of_G(const Apartment& ap, const ClassificationTable& table) {
  int r = ap.rd.semisimple_rank();
  std::vector<std::vector<int>> subsets;
  for (int mask = 0; mask < (1 << r); ++mask) {
    std::vector<int> s;
    for (int k = 0; k < r; ++k)
      if (mask >> k & 1) s.push_back(k);
    subsets.push_back(s);
  }
  std::stable_sort(subsets.begin(), subsets.end(), [](auto& a, auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<CuspidalDatum> out;
  for (auto& J : subsets) {
    std::vector<int> roots = standard_levi_roots(ap.rd, J);
    for (auto& label : cuspidal_set(ap, table, roots)) {
      if (match_datum(ap, out, roots, label).index >= 0) continue;
      out.push_back({J, roots, label, ap.rank() - int(J.size())});
    }
  }
  return out;
}

RelativeWeyl relative_weyl(const Apartment& ap, const CuspidalDatum& k) {
  RelativeWeyl rw;
  rw.normalizer = normalizer_parabolic(ap, k.leviRoots);
  const Normalizer& n = rw.normalizer;
  rw.quotientOf.assign(ap.W.order(), -1);
  int dz = int(n.zBasis.size());
  QMat Zm(ap.rank(), dz);
  for (int j = 0; j < dz; ++j)
    for (int i = 0; i < ap.rank(); ++i) Zm(i, j) = n.zBasis[j][i];
  for (int w : n.N) {
    if (!(transport(ap, w, k.label) == k.label))
      fail_check("normalizer element moves the cuspidal label " + to_string(k.label));
    QMat M(dz, dz);
    for (int j = 0; j < dz; ++j) {
      auto c = solve(Zm, ap.W.mats[w] * n.zBasis[j]);
      for (int i = 0; i < dz; ++i) M(i, j) = (*c)[i];
    }
    rw.quotientOf[w] = n.quotient.index_of(M);
    if (rw.quotientOf[w] < 0) fail_check("normalizer element outside the relative Weyl group");
  }
  return rw;
}

SpringerReport springer_identity_check(const Apartment& ap, const ClassificationTable& table) {
  SpringerReport rep;
  for (auto& k : cuspidal_data_of_G(ap, table)) rep.lhs += relative_weyl(ap, k).group().num_classes();
  std::vector<int> all(ap.rd.num_roots());
  for (int i = 0; i < ap.rd.num_roots(); ++i) all[i] = i;
  rep.rhs = count_pairs(ap, table, all);
  return rep;
}

long partition_count(int n) {
  std::vector<long> p(n + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int m = part; m <= n; ++m) p[m] += p[m - part];
  return p[n];
}

} // namespace chs
