#include "chs/character.hpp"

#include "chs/linalg.hpp"

#include <algorithm>

namespace chs {

LaurentPoly LaurentPoly::monomial(const Q& a, int e) {
  LaurentPoly p;
  if (a != 0) p.c[e] = a;
  return p;
}

Q LaurentPoly::coeff(int e) const {
  auto it = c.find(e);
  return it == c.end() ? Q(0) : it->second;
}

Q LaurentPoly::at_one() const {
  Q s = 0;
  for (auto& [e, a] : c) s += a;
  return s;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (auto& [e, a] : o.c) {
    Q v = coeff(e) + a;
    if (v == 0) c.erase(e);
    else c[e] = v;
  }
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + o * Q(-1); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (auto& [e, a] : c)
    for (auto& [f, b] : o.c) r += monomial(a * b, e + f);
  return r;
}

LaurentPoly LaurentPoly::operator*(const Q& s) const {
  LaurentPoly r;
  if (s == 0) return r;
  for (auto& [e, a] : c) r.c[e] = a * s;
  return r;
}

std::string LaurentPoly::str(const std::string& var) const {
  if (c.empty()) return "0";
  std::string s;
  for (auto& [e, a] : c) {
    std::string term = to_string(a);
    if (!s.empty()) s += a < 0 ? "" : "+";
    if (e == 0) {
      s += term;
      continue;
    }
    if (a == 1) term = "";
    else if (a == -1) term = "-";
    else term += "*";
    s += term + var + (e == 1 ? "" : "^" + std::to_string(e));
  }
  return s;
}

int identity_class(const FiniteGroup& g) { return g.class_of(0); }

namespace {

// Rows of a Q-basis of {B c : (A - lambda)(B c) = 0}, for a subspace with basis B.
std::vector<QVec> eigen_subspace(const QMat& A, const std::vector<QVec>& B, const Q& lambda) {
  int r = A.rows;
  int k = int(B.size());
  std::vector<QVec> rows(r, QVec(k));
  for (int j = 0; j < k; ++j) {
    QVec v = A * B[j] - lambda * B[j];
    for (int i = 0; i < r; ++i) rows[i][j] = v[i];
  }
  std::vector<QVec> out;
  for (auto& c : kernel(rows, k)) {
    QVec v(r, Q(0));
    for (int j = 0; j < k; ++j) v = v + c[j] * B[j];
    out.push_back(v);
  }
  return out;
}

} // namespace

CharacterTable character_table(const FiniteGroup& g) {
  const auto& classes = g.classes();
  int r = int(classes.size());
  long n = long(g.order());
  // class matrices: (A_j)_{ik} = #{x in K_j : x^-1 g_k in K_i}
  std::vector<QMat> A(r, QMat(r, r));
  for (int k = 0; k < r; ++k) {
    int gk = classes[k][0];
    for (long x = 0; x < n; ++x) {
      int j = g.class_of(int(x)), i = g.class_of(g.mul(g.inv(int(x)), gk));
      A[j](i, k) += 1;
    }
  }
  std::vector<std::vector<QVec>> spaces;
  {
    std::vector<QVec> all;
    for (int i = 0; i < r; ++i) {
      QVec e(r, Q(0));
      e[i] = 1;
      all.push_back(e);
    }
    spaces.push_back(all);
  }
  for (int j = 0; j < r; ++j) {
    long bound = long(classes[j].size());
    std::vector<std::vector<QVec>> next;
    for (auto& V : spaces) {
      if (V.size() == 1) {
        next.push_back(V);
        continue;
      }
      size_t found = 0;
      for (long lambda = -bound; lambda <= bound && found < V.size(); ++lambda) {
        auto E = eigen_subspace(A[j], V, Q(lambda));
        if (E.empty()) continue;
        found += E.size();
        next.push_back(E);
      }
      if (found != V.size()) fail_check("character table: class algebra does not split over Q");
    }
    spaces = std::move(next);
  }
  int id = identity_class(g);
  CharacterTable t;
  for (auto& V : spaces) {
    if (V.size() != 1) fail_check("character table: class algebra does not split over Q");
    QVec w = V[0];
    if (w[id] == 0) fail_check("character table: degenerate central character");
    w = Q(1 / w[id]) * w;
    // omega_k = |K_k| chi(g_k) / chi(1), and sum_k |K_k| chi(g_k)^2 = |G|
    Q s = 0;
    for (int k = 0; k < r; ++k) s += w[k] * w[k] / Q(long(classes[k].size()));
    Q d2 = Q(n) / s;
    if (d2.get_den() != 1) fail_check("character table: non-integral degree");
    Z d = sqrt(d2.get_num());
    if (d * d != d2.get_num()) fail_check("character table: non-integral degree");
    std::vector<Q> chi(r);
    for (int k = 0; k < r; ++k) {
      chi[k] = w[k] * Q(d) / Q(long(classes[k].size()));
      chi[k].canonicalize();
    }
    t.irr.push_back(chi);
  }
  std::sort(t.irr.begin(), t.irr.end(), [&](const std::vector<Q>& a, const std::vector<Q>& b) {
    if (a[id] != b[id]) return a[id] < b[id];
    return a > b;
  });
  if (t.irr.size() != size_t(r)) fail_check("character table: wrong number of irreducibles");
  return t;
}

GradedCharacter GradedCharacter::zero(const FiniteGroup& g) {
  return {&g, std::vector<LaurentPoly>(g.num_classes())};
}

GradedCharacter GradedCharacter::from_values(const FiniteGroup& g, const std::vector<Q>& v, int degree) {
  if (int(v.size()) != g.num_classes()) fail_data("character has the wrong number of class values");
  GradedCharacter x = zero(g);
  for (size_t k = 0; k < v.size(); ++k) x.values[k] = LaurentPoly::monomial(v[k], degree);
  return x;
}

GradedCharacter GradedCharacter::operator+(const GradedCharacter& o) const {
  if (group != o.group) throw std::logic_error("adding characters of different groups");
  GradedCharacter r = *this;
  for (size_t k = 0; k < values.size(); ++k) r.values[k] += o.values[k];
  return r;
}

GradedCharacter GradedCharacter::operator*(const LaurentPoly& s) const {
  GradedCharacter r = *this;
  for (auto& v : r.values) v = v * s;
  return r;
}

LaurentPoly GradedCharacter::dimension() const { return values[identity_class(*group)]; }

std::string GradedCharacter::str() const {
  std::string s;
  for (size_t k = 0; k < values.size(); ++k) s += (k ? "," : "") + values[k].str();
  return "(" + s + ")";
}

LaurentPoly pairing(const GradedCharacter& a, const GradedCharacter& b) {
  if (a.group != b.group) throw std::logic_error("pairing characters of different groups");
  const FiniteGroup& g = *a.group;
  LaurentPoly out;
  for (int k = 0; k < g.num_classes(); ++k) {
    Q size(long(g.classes()[k].size()));
    const LaurentPoly& bv = b.values[g.class_of(g.inv(g.classes()[k][0]))];
    for (auto& [e, x] : a.values[k].c) out += LaurentPoly::monomial(size * x * bv.coeff(e), e);
  }
  return out * Q(1, long(g.order()));
}

GradedCharacter restrict_character(const GradedCharacter& x, const FiniteGroup& small, const std::vector<int>& embed) {
  GradedCharacter r = GradedCharacter::zero(small);
  for (int k = 0; k < small.num_classes(); ++k)
    r.values[k] = x.values[x.group->class_of(embed[small.classes()[k][0]])];
  return r;
}

GradedCharacter induce_character(const GradedCharacter& y, const FiniteGroup& big, const std::vector<int>& embed) {
  const FiniteGroup& h = *y.group;
  std::vector<int> back(big.order(), -1);
  for (size_t e = 0; e < embed.size(); ++e) back[embed[e]] = int(e);
  GradedCharacter r = GradedCharacter::zero(big);
  for (int k = 0; k < big.num_classes(); ++k) {
    int gk = big.classes()[k][0];
    LaurentPoly s;
    for (size_t x = 0; x < big.order(); ++x) {
      int c = back[big.mul(big.mul(big.inv(int(x)), gk), int(x))];
      if (c >= 0) s += y.values[h.class_of(c)];
    }
    r.values[k] = s * Q(1, long(h.order()));
  }
  return r;
}

std::vector<LaurentPoly> decompose(const GradedCharacter& x, const CharacterTable& t) {
  const FiniteGroup& g = *x.group;
  std::vector<LaurentPoly> out;
  for (auto& chi : t.irr) {
    LaurentPoly m;
    for (int k = 0; k < g.num_classes(); ++k) {
      Q w = Q(long(g.classes()[k].size())) * chi[g.class_of(g.inv(g.classes()[k][0]))];
      m += x.values[k] * w;
    }
    out.push_back(m * Q(1, long(g.order())));
  }
  return out;
}

} // namespace chs
