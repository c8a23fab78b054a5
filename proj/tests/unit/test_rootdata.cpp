#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chs/linalg.hpp"
#include "chs/rootdata.hpp"

#include <random>
#include <set>

using namespace chs;

namespace {

// Group generated by the simple reflections, closed by breadth-first
// search over plain integer matrices.
size_t brute_weyl_order(const RootDatum& rd) {
  int n = rd.rank;
  using M = std::vector<long>;
  std::vector<M> gens;
  for (int s : rd.simple) {
    M m(n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m[i * n + j] = (i == j) - rd.coroots[s][i] * rd.roots[s][j];
    gens.push_back(m);
  }
  M id(n * n);
  for (int i = 0; i < n; ++i) id[i * n + i] = 1;
  std::set<M> seen{id};
  std::vector<M> todo{id};
  while (!todo.empty()) {
    M a = todo.back();
    todo.pop_back();
    for (auto& g : gens) {
      M c(n * n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k) c[i * n + j] += a[i * n + k] * g[k * n + j];
      if (seen.insert(c).second) todo.push_back(c);
    }
  }
  return seen.size();
}

} // namespace

TEST_CASE("Weyl group orders against degrees and brute force") {
  struct Row {
    const char* preset;
    size_t order;
    size_t roots;
  };
  for (Row r : {Row{"A1 sc", 2, 2}, Row{"A2 sc", 6, 6}, Row{"A3 sc", 24, 12}, Row{"B2 sc", 8, 8}, Row{"G2", 12, 12},
                Row{"GL(3)", 6, 6}, Row{"T(2)", 1, 0}}) {
    CAPTURE(r.preset);
    RootDatum rd = preset_root_datum(r.preset);
    WeylGroup W = weyl_group(rd);
    CHECK(W.order() == r.order);
    CHECK(size_t(rd.num_roots()) == r.roots);
    CHECK(brute_weyl_order(rd) == r.order);
  }
  // product of degrees
  CHECK(fundamental_degrees('A', 2) == std::vector<int>{2, 3});
  CHECK(fundamental_degrees('G', 2) == std::vector<int>{2, 6});
  CHECK(fundamental_degrees('B', 2) == std::vector<int>{2, 4});
}

TEST_CASE("root datum axioms hold for every preset") {
  for (const char* p : {"A1 sc", "A1 ad", "A2 ad", "A3 m2", "B2 ad", "G2", "GL(2)", "SL(2) x GL(1)", "PGL(3)"}) {
    CAPTURE(p);
    RootDatum rd = preset_root_datum(p);
    WeylGroup W = weyl_group(rd);
    for (int i = 0; i < rd.num_roots(); ++i) {
      CHECK(dot(rd.roots[i], rd.coroots[i]) == 2);
      IVec neg = rd.roots[i];
      for (auto& x : neg) x = -x;
      CHECK(rd.roots[rd.negation[i]] == neg);
      CHECK(rd.positive[i] == (i < rd.num_positive()));
    }
    for (size_t w = 0; w < W.order(); ++w)
      for (int i = 0; i < rd.num_roots(); ++i) {
        // w acts on X_*; the root w(alpha) is alpha composed with w^-1
        IVec img = row_times(rd.roots[i], W.inverses[w]);
        CHECK(rd.root_index(img) == W.rootPerm[w][i]);
      }
  }
}

TEST_CASE("isogeny is visible in the fundamental group") {
  CHECK(simple_type_decomposition(preset_root_datum("A1 sc"), {0, 1}).pi1.empty());
  auto ad = simple_type_decomposition(preset_root_datum("A2 ad"), {0, 1, 2, 3, 4, 5});
  REQUIRE(ad.pi1.size() == 1);
  CHECK(ad.pi1[0] == 3);
  auto m2 = preset_root_datum("A3 m2");
  std::vector<int> all(m2.num_roots());
  for (int i = 0; i < m2.num_roots(); ++i) all[i] = i;
  auto d = simple_type_decomposition(m2, all);
  REQUIRE(d.pi1.size() == 1);
  CHECK(d.pi1[0] == 2);
}

TEST_CASE("invariant form is W-invariant (random vectors)") {
  std::mt19937_64 rng(3);
  for (const char* p : {"B2 sc", "G2", "A3 ad", "GL(2)"}) {
    RootDatum rd = preset_root_datum(p);
    WeylGroup W = weyl_group(rd);
    InvariantForm f = invariant_form(rd);
    for (int s = 0; s < 50; ++s) {
      QVec x(rd.rank), y(rd.rank);
      for (int i = 0; i < rd.rank; ++i) {
        x[i] = long(rng() % 11) - 5;
        y[i] = frac(long(rng() % 11) - 5, 3);
      }
      int w = int(rng() % W.order());
      CHECK(f(W.mats[w] * x, W.mats[w] * y) == f(x, y));
      if (!is_zero(x)) CHECK(f(x, x) > 0);
    }
  }
}

TEST_CASE("Levi subdatum shares the lattice") {
  RootDatum rd = preset_root_datum("B2 sc");
  for (int k = 0; k < 2; ++k) {
    Levi L = levi_subdatum(rd, {k});
    CHECK(L.datum.num_roots() == 2);
    for (int i = 0; i < L.datum.num_roots(); ++i) CHECK(rd.roots[L.rootMap[i]] == L.datum.roots[i]);
  }
  CHECK(levi_subdatum(rd, {}).datum.num_roots() == 0);
}

TEST_CASE("root-datum files") {
  RootDatum a = parse_root_datum("format = 1\ntype = \"A2 sc\"\n");
  CHECK(a.num_roots() == 6);
  // explicit matrices with a non-standard pairing give Sp(4)
  RootDatum c = parse_root_datum(
      "format = 1\n"
      "roots = [[1, -2], [0, 2], [1, 0], [2, -2],\n"
      "         [-1, 2], [0, -2], [-1, 0], [-2, 2]]  # wraps\n"
      "coroots = [[1, -1], [0, 1], [1, 1], [1, 0], [-1, 1], [0, -1], [-1, -1], [-1, 0]]\n"
      "pairing = [[1, 1], [0, 1]]\n");
  CHECK(weyl_group(c).order() == 8);
  for (int i = 0; i < c.num_roots(); ++i) CHECK(dot(c.roots[i], c.coroots[i]) == 2);
  CHECK_THROWS_AS(parse_root_datum("format = 2\ntype = \"A1 sc\"\n"), DataError);
  CHECK_THROWS_AS(parse_root_datum("type = \"Q7\"\n"), DataError);
  CHECK_THROWS_AS(parse_root_datum("format = 1\nroots = [[2]]\ncoroots = [[1]]\n"), DataError);
  CHECK_THROWS_AS(load_root_datum("/nonexistent/file"), DataError);
  for (const char* f : {"A1sc", "A2ad", "G2", "GL3", "SL2xGL1", "C2ex"})
    CHECK_NOTHROW(load_root_datum(std::string(CHS_DATA_DIR) + "/presets/" + f + ".toml"));
}
