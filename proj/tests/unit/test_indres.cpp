#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chs/indres.hpp"

#include <set>

using namespace chs;

namespace {

int element_order(const FiniteGroup& g, int e) {
  int k = 1;
  for (int x = e; x != 0; x = g.mul(x, e)) ++k;
  return k;
}

// coefficients of c * (1+t)^r / (1-t^2)^r by explicit multiplication
std::vector<long> series_product(long c, int r, int n) {
  std::vector<long> s(n, 0);
  s[0] = c;
  for (int f = 0; f < r; ++f) {
    std::vector<long> a(n, 0), b(n, 0);
    for (int i = 0; i < n; ++i) a[i] = s[i] + (i ? s[i - 1] : 0); // times (1+t)
    for (int i = 0; i < n; ++i)
      for (int j = 0; i + 2 * j < n; ++j) b[i + 2 * j] += a[i]; // times 1/(1-t^2)
    s = b;
  }
  return s;
}

// |W_L \ W / W_L| by orbits of W_L x W_L on W
long double_cosets(const FiniteGroup& W, const std::vector<int>& WL) {
  std::set<int> seen;
  long n = 0;
  for (int w = 0; w < int(W.order()); ++w) {
    if (seen.count(w)) continue;
    ++n;
    for (int a : WL)
      for (int b : WL) seen.insert(W.mul(W.mul(a, w), b));
  }
  return n;
}

} // namespace

TEST_CASE("Ind from S2 to S3 of the trivial character is (3, 1, 0)") {
  auto table = load_classification();
  Apartment ap = make_apartment(preset_root_datum("A2 sc"));
  LeviK G = levi_K(ap, table, all_simple(ap));
  LeviK L = levi_K(ap, table, {0});
  // principal datum: the torus, W^kappa = W
  const FiniteGroup& S2 = *L.data[0].group;
  const FiniteGroup& S3 = *G.data[0].group;
  REQUIRE(S3.order() == 6);
  REQUIRE(S2.order() == 2);
  KClass y{{0, GradedCharacter::from_values(S2, std::vector<Q>(S2.num_classes(), Q(1)))}};
  KClass x = ind_K(ap, G, L, y);
  const GradedCharacter& chi = x.at(0);
  for (int c = 0; c < S3.num_classes(); ++c) {
    int ord = element_order(S3, S3.classes()[c][0]);
    Q expect = ord == 1 ? Q(3) : ord == 2 ? Q(1) : Q(0);
    CHECK(chi.values[c] == LaurentPoly(expect));
  }
}

TEST_CASE("character tables: orthogonality and degrees") {
  for (const char* p : {"A1 sc", "A2 sc", "B2 sc", "G2", "A3 sc"}) {
    CAPTURE(p);
    Apartment ap = make_apartment(preset_root_datum(p));
    const FiniteGroup& W = ap.W.group;
    CharacterTable t = character_table(W);
    CHECK(t.size() == size_t(W.num_classes()));
    Q sumSquares = 0;
    for (size_t i = 0; i < t.size(); ++i) {
      auto gi = GradedCharacter::from_values(W, t.irr[i]);
      sumSquares += t.irr[i][identity_class(W)] * t.irr[i][identity_class(W)];
      for (size_t j = 0; j < t.size(); ++j) {
        auto gj = GradedCharacter::from_values(W, t.irr[j]);
        CHECK(pairing(gi, gj) == LaurentPoly(Q(i == j ? 1 : 0)));
      }
    }
    CHECK(sumSquares == Q(long(W.order())));
    for (auto& v : t.irr[0]) CHECK(v == 1); // trivial first
  }
}

TEST_CASE("Frobenius reciprocity and transitivity, exhaustive") {
  auto table = load_classification();
  std::mt19937_64 rng(0);
  for (const char* p : {"A1 sc", "A2 sc", "B2 sc", "A2 ad", "G2"}) {
    CAPTURE(p);
    Apartment ap = make_apartment(preset_root_datum(p));
    LeviK G = levi_K(ap, table, all_simple(ap));
    LeviK T = levi_K(ap, table, {});
    for (int j = 0; j < ap.rd.semisimple_rank(); ++j) {
      LeviK L = levi_K(ap, table, {j});
      CHECK(frobenius_check(ap, G, L, 10, rng).pass());
      CHECK(frobenius_check(ap, L, T, 10, rng).pass());
      CHECK(transitivity_check(ap, G, L, T));
      auto m = mackey_check(ap, G, L);
      CHECK(m.pass());
      CHECK(m.doubleCosets == double_cosets(ap.W.group, L.WL));
    }
    CHECK(frobenius_check(ap, G, T, 10, rng).pass());
  }
}

TEST_CASE("induction from the torus gives the regular character") {
  auto table = load_classification();
  Apartment ap = make_apartment(preset_root_datum("B2 sc"));
  LeviK G = levi_K(ap, table, all_simple(ap));
  LeviK T = levi_K(ap, table, {});
  auto one = GradedCharacter::from_values(*T.data[0].group, {Q(1)});
  auto x = ind_K(ap, G, T, KClass{{0, one}}).at(0);
  const FiniteGroup& W = *G.data[0].group;
  for (int c = 0; c < W.num_classes(); ++c)
    CHECK(x.values[c] == LaurentPoly(c == identity_class(W) ? Q(8) : Q(0)));
}

TEST_CASE("affine incidence partitions the L-blocks") {
  auto table = load_classification();
  for (auto [p, J] : std::vector<std::pair<const char*, std::vector<int>>>{{"A1 sc", {}}, {"A2 sc", {0}}, {"B2 sc", {1}}}) {
    CAPTURE(p);
    Apartment ap = make_apartment(preset_root_datum(p));
    auto inc = affine_res_incidence(ap, table, J);
    std::set<int> lBlocks;
    for (auto& row : inc.rows) {
      CHECK(lBlocks.insert(row.lBlock).second); // each L-block has one G-block
      CHECK(row.gBlock >= 0);
      CHECK(size_t(row.gBlock) < inc.g.blocks.size());
    }
    CHECK(lBlocks.size() == inc.l.blocks.size());
    CHECK(inc.lTriplesChecked == long(inc.l.triples.size()));
  }
}

TEST_CASE("Springer series") {
  Apartment a1 = make_apartment(preset_root_datum("A1 sc"));
  auto s = springer_endo_series(a1).coefficients(20);
  for (auto& c : s) CHECK(c == 2);
  Apartment a2 = make_apartment(preset_root_datum("A2 sc"));
  auto c2 = springer_endo_series(a2).coefficients(20);
  auto oracle = series_product(6, 2, 20);
  for (int k = 0; k < 20; ++k) CHECK(c2[k] == oracle[k]);
  Apartment g2 = make_apartment(preset_root_datum("G2"));
  auto cg = springer_endo_series(g2).coefficients(12);
  auto og = series_product(12, 2, 12);
  for (int k = 0; k < 12; ++k) CHECK(cg[k] == og[k]);
  CHECK(res_springer_rank(a2, 15).pass());
  CHECK(res_springer_rank(a2, 15).rank == 6);
  auto gl1 = springer_endo_series(make_apartment(preset_root_datum("GL(1)"))).coefficients(10);
  for (auto& c : gl1) CHECK(c == 1);
}

TEST_CASE("distinguished characters") {
  Apartment a1 = make_apartment(preset_root_datum("A1 sc"));
  auto d = distinguished_module_characters(a1, 6);
  const FiniteGroup& W = *d.sign.group;
  for (int c = 0; c < W.num_classes(); ++c) {
    bool id = c == identity_class(W);
    CHECK(d.sign.values[c] == LaurentPoly(Q(id ? 1 : -1)));
    // det(1 + q g) / det(1 - q^2 g) on a line: g = -1 gives (1 - q)/(1 + q^2)
    Q lead = d.cohomology.values[c].coeff(1);
    CHECK(lead == Q(id ? 1 : -1));
  }
}
