#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chs/cuspidal.hpp"
#include "chs/facetcat.hpp"
#include "chs/linalg.hpp"

#include <algorithm>

using namespace chs;

namespace {

QVec q2(long a, long b, long c, long d) { return {frac(a, b), frac(c, d)}; }

} // namespace

TEST_CASE("Fourier-Motzkin feasibility") {
  // x > 0 and x < 0
  CHECK(!feasible({{{Q(1)}, Q(0), true}, {{Q(-1)}, Q(0), true}}, 1));
  // x >= 0 and x <= 0
  CHECK(feasible({{{Q(1)}, Q(0), false}, {{Q(-1)}, Q(0), false}}, 1));
  // x >= 0 and x < 0
  CHECK(!feasible({{{Q(1)}, Q(0), false}, {{Q(-1)}, Q(0), true}}, 1));
  // the open triangle x > 0, y > 0, x + y < 1 is nonempty; adding x + y > 1 empties it
  std::vector<LinearConstraint> tri{{{Q(1), Q(0)}, Q(0), true}, {{Q(0), Q(1)}, Q(0), true}, {{Q(-1), Q(-1)}, Q(1), true}};
  CHECK(feasible(tri, 2));
  auto t2 = tri;
  t2.push_back({{Q(1), Q(1)}, Q(-1), true});
  CHECK(!feasible(t2, 2));
  // random systems satisfied by a known point are feasible
  std::mt19937_64 rng(4);
  for (int s = 0; s < 200; ++s) {
    QVec p{frac(long(rng() % 9) - 4, 3), frac(long(rng() % 9) - 4, 5), Q(long(rng() % 3))};
    std::vector<LinearConstraint> cs;
    for (int k = 0; k < 6; ++k) {
      QVec a{Q(long(rng() % 5) - 2), Q(long(rng() % 5) - 2), Q(long(rng() % 5) - 2)};
      bool strict = rng() % 2;
      Q slack = strict ? Q(1) : Q(long(rng() % 2));
      cs.push_back({a, slack - dot(a, p), strict});
    }
    CHECK(feasible(cs, 3));
    // contradict the first constraint
    LinearConstraint neg{Q(-1) * cs[0].a, -cs[0].b, true};
    cs.push_back(neg);
    CHECK(!feasible(cs, 3));
  }
}

TEST_CASE("window sizes") {
  Apartment a1 = make_apartment(preset_root_datum("A1 sc"));
  Window w = build_window(a1, 2);
  CHECK(w.alcoves.size() == 5);
  CHECK(w.objects.size() == 11);
  CHECK(build_window(a1, 3).objects.size() == 15);
  Apartment a2 = make_apartment(preset_root_datum("A2 sc"));
  // 1 + 3 + 6 alcoves within two wall crossings
  CHECK(build_window(a2, 2).alcoves.size() == 10);
  for (auto& f : w.objects) CHECK(w.index_of(f) >= 0);
  CHECK(w.index_of(facet_of_point(a1, {Q(7)})) == -1);
  CHECK_THROWS_AS(build_window(a1, 0), DataError);
}

TEST_CASE("1-categorical checks and radius stability") {
  for (const char* p : {"A1 sc", "A1 ad", "A2 sc", "A2 ad", "B2 sc", "GL(1)", "GL(2)"}) {
    CAPTURE(p);
    Apartment ap = make_apartment(preset_root_datum(p));
    std::mt19937_64 rng(0);
    auto c2 = build_truncation(ap, 2);
    auto c3 = build_truncation(ap, 3);
    auto r2 = one_category_check(ap, c2, rng, 1000);
    auto r3 = one_category_check(ap, c3, rng, 1000);
    CHECK(r2.pass());
    CHECK(r2.stable() == r3.stable());
    CHECK(r2.compositionsChecked > 0);
    auto e2 = alcove_equivalence_check(ap, c2), e3 = alcove_equivalence_check(ap, c3);
    CHECK(e2.pass());
    CHECK(e2.stable() == e3.stable());
  }
}

TEST_CASE("sc alcove faces reproduce the face poset; other isogenies are skipped") {
  Apartment ap = make_apartment(preset_root_datum("A2 sc"));
  auto e = alcove_equivalence_check(ap, build_truncation(ap, 2));
  CHECK(e.applicable);
  CHECK(e.table.size() == 49);
  Apartment ad = make_apartment(preset_root_datum("A2 ad"));
  CHECK(!alcove_equivalence_check(ad, build_truncation(ad, 2)).applicable);
  Apartment gl = make_apartment(preset_root_datum("GL(2)"));
  CHECK(!alcove_equivalence_check(gl, build_truncation(gl, 2)).applicable);
}

TEST_CASE("1-cells: source lies in the closure of the moved target") {
  Apartment ap = make_apartment(preset_root_datum("B2 sc"));
  auto c = build_truncation(ap, 2);
  for (auto& cell : c.cells)
    CHECK(closure_le(c.window.objects[cell.source], act_facet(ap, cell.w, c.window.objects[cell.target])));
  // identity endomorphisms exist
  for (size_t I = 0; I < c.window.objects.size(); ++I) {
    bool found = false;
    for (int k : c.homs(int(I), int(I))) found |= c.cells[k].w == identity_element(ap);
    CHECK(found);
  }
}

TEST_CASE("Levi variant keeps 1-cells with finite part in W_L") {
  Apartment ap = make_apartment(preset_root_datum("A2 sc"));
  std::vector<int> L{0};
  auto c = build_truncation(ap, 2, &L);
  auto WL = reflection_subgroup(ap, standard_levi_roots(ap.rd, L));
  for (auto& cell : c.cells) CHECK(std::binary_search(WL.begin(), WL.end(), cell.w.w));
  std::mt19937_64 rng(0);
  CHECK(one_category_check(ap, c, rng, 1000).pass());
}

TEST_CASE("alpha fibres") {
  Apartment a1 = make_apartment(preset_root_datum("A1 sc"));
  // the closed fundamental alcove: two vertices below one edge
  auto r = alpha_fiber_report(a1, {}, {frac(1, 4)}, frac(1, 4));
  CHECK(r.poset.size() == 3);
  CHECK(r.reducedEuler == 0);
  CHECK(r.connected);
  // a tiny box inside the open alcove
  CHECK(alpha_fiber_report(a1, {}, {frac(1, 5)}, frac(1, 100)).poset.size() == 1);
  for (auto& fc : shipped_fiber_cases()) {
    CAPTURE(fc.preset);
    Apartment ap = make_apartment(preset_root_datum(fc.preset));
    auto rep = alpha_fiber_report(ap, fc.levi, fc.point, fc.halfWidth);
    CHECK(rep.pass());
    // every facet in the fibre lies in the L-facet of the point
    Facet jl = facet_of_point(ap, fc.point);
    for (auto& f : rep.poset)
      for (int a = 0; a < ap.rd.num_positive(); ++a) {
        bool inL = true;
        for (int k = 0; k < ap.rd.semisimple_rank(); ++k)
          if (ap.rd.coeffs[a][k] != 0 && std::find(fc.levi.begin(), fc.levi.end(), k) == fc.levi.end()) inL = false;
        if (inL) CHECK(f.code[a] == jl.code[a]);
      }
  }
  // A2 strip 0 < alpha_1 < 1 cut by a box
  Apartment a2 = make_apartment(preset_root_datum("A2 sc"));
  auto s = alpha_fiber_report(a2, {0}, q2(1, 4, 1, 8), Q(1));
  CHECK(s.reducedEuler == 0);
}

TEST_CASE("groupoid colimit on random samples") {
  for (const char* p : {"A1 sc", "A1 ad", "A2 sc", "A2 ad", "GL(2)"}) {
    CAPTURE(p);
    Apartment ap = make_apartment(preset_root_datum(p));
    auto c = build_truncation(ap, 2);
    std::mt19937_64 rng(0);
    auto pts = sample_window_points(ap, c.window, 100, rng);
    auto g = colim_check(ap, c, pts);
    CHECK(g.samples.size() == 100);
    for (auto& s : g.samples) {
      CAPTURE(to_string(s.x));
      CHECK(s.covered);
      CHECK(s.zigzagLength >= 0);
      CHECK(s.generatedOrder == s.directOrder);
    }
  }
  // the origin of A2: its stabilizer is the whole Weyl group
  Apartment a2 = make_apartment(preset_root_datum("A2 sc"));
  auto g = colim_check(a2, build_truncation(a2, 2), {QVec{Q(0), Q(0)}});
  CHECK(g.samples[0].directOrder == 6);
  CHECK(g.samples[0].pass());
}

TEST_CASE("points outside the truncation are reported") {
  Apartment ap = make_apartment(preset_root_datum("A2 sc"));
  auto wide = build_window(ap, 4);
  std::mt19937_64 rng(2);
  auto pts = sample_window_points(ap, wide, 60, rng);
  auto g = colim_check(ap, build_truncation(ap, 1), pts);
  long uncovered = 0;
  for (auto& s : g.samples) uncovered += !s.covered;
  CHECK(uncovered > 0);
  CHECK(!g.pass());
}

TEST_CASE("right-handed 2-cells leave the hom sets") {
  Apartment ap = make_apartment(preset_root_datum("A2 sc"));
  std::mt19937_64 rng(0);
  auto r = one_category_check(ap, build_truncation(ap, 2), rng, 100);
  CHECK(r.literalOutside > 0);
}
