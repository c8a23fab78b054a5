#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chs/basepoints.hpp"
#include "chs/linalg.hpp"

using namespace chs;

namespace {

const QVec& s_of(const BasepointAssignment& a, const Facet& f) { return a.s[a.window.index_of(f)]; }

} // namespace

TEST_CASE("A1 sc base points") {
  Apartment ap = make_apartment(preset_root_datum("A1 sc"));
  auto a = assign_s(ap, 2);
  // coordinates in units of alpha^vee
  CHECK(s_of(a, facet_of_point(ap, {frac(1, 3)})) == QVec{frac(1, 4)});
  CHECK(s_of(a, facet_of_point(ap, {Q(0)})) == QVec{Q(0)});
  CHECK(s_of(a, facet_of_point(ap, {frac(1, 2)})) == QVec{frac(1, 2)});
  // transported: the neighbouring alcove (1/2, 1) has base point 3/4
  CHECK(s_of(a, facet_of_point(ap, {frac(2, 3)})) == QVec{frac(3, 4)});
  // vertex 0 against the alcove: -alpha^vee/4 lies in span(alpha^vee)
  auto r = check_basepoints(ap, a);
  CHECK(r.pass());
  // the literal reading with the larger facet's coroots fails here
  CHECK(r.literalNestingFailures > 0);
}

TEST_CASE("GL(1): one facet, base point 0") {
  Apartment ap = make_apartment(preset_root_datum("GL(1)"));
  auto a = assign_s(ap, 2);
  REQUIRE(a.s.size() == 1);
  CHECK(a.s[0] == QVec{Q(0)});
  CHECK(a.origin[0] == BasepointOrigin::Barycenter);
}

TEST_CASE("A2 sc: edge base points are feet of perpendiculars") {
  Apartment ap = make_apartment(preset_root_datum("A2 sc"));
  auto a = assign_s(ap, 2);
  const auto& V = ap.alcove[0].vertices;
  QVec c = frac(1, 3) * (V[0] + V[1] + V[2]);
  CHECK(s_of(a, facet_of_point(ap, c)) == c);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      QVec d = V[j] - V[i];
      QVec foot = V[i] + (ap.form(c - V[i], d) / ap.form(d, d)) * d;
      Facet edge = facet_of_point(ap, frac(1, 2) * (V[i] + V[j]));
      CHECK(s_of(a, edge) == foot);
      CHECK(facet_of_point(ap, foot) == edge);
    }
  for (auto& v : V) CHECK(s_of(a, facet_of_point(ap, v)) == v);
}

TEST_CASE("A1 ad: the alcove symmetry swaps the vertex base points") {
  Apartment ap = make_apartment(preset_root_datum("A1 ad"));
  auto a = assign_s(ap, 2);
  auto faces = facets_of_closed_alcove(ap);
  auto omega = stabilizer_facet(ap, faces.back()).finite;
  REQUIRE(omega.size() == 2);
  for (auto& o : omega) {
    if (o == identity_element(ap)) continue;
    for (auto& f : faces) CHECK(act(ap, o, s_of(a, f)) == s_of(a, act_facet(ap, o, f)));
    CHECK(!(act_facet(ap, o, faces[0]) == faces[0]));
  }
}

TEST_CASE("projection is idempotent and orthogonal") {
  Apartment ap = make_apartment(preset_root_datum("B2 sc"));
  std::mt19937_64 rng(8);
  for (auto& f : facets_of_closed_alcove(ap))
    for (int s = 0; s < 20; ++s) {
      QVec x{frac(long(rng() % 17) - 8, 5), frac(long(rng() % 17) - 8, 7)};
      QVec y = project_to_span(ap, f, x);
      CHECK(project_to_span(ap, f, y) == y);
      CHECK(in_centre_plus_coroots(ap, f, x - y));
    }
}

TEST_CASE("full suite on every preset") {
  for (const char* p : {"A1 sc", "A1 ad", "GL(1)", "GL(2)", "GL(3)", "A2 sc", "A2 ad", "B2 sc", "B2 ad", "G2",
                        "SL(2) x GL(1)"}) {
    CAPTURE(p);
    Apartment ap = make_apartment(preset_root_datum(p));
    auto a = assign_s(ap, 2);
    auto r = check_basepoints(ap, a);
    CHECK(r.pass());
    CHECK(r.notInFacet == 0);
    CHECK(r.equivarianceChecked > 0);
    CHECK(r.telescopingChecked > 0);
    CHECK(a.transportPaths >= long(a.window.objects.size()));
  }
}

TEST_CASE("centre membership") {
  Apartment gl = make_apartment(preset_root_datum("GL(2)"));
  CHECK(in_centre(gl, {Q(1), Q(1)}));
  CHECK(!in_centre(gl, {Q(1), Q(0)}));
}

TEST_CASE("a perturbed assignment is caught") {
  Apartment ap = make_apartment(preset_root_datum("A2 sc"));
  auto a = assign_s(ap, 2);
  int edge = -1;
  for (size_t i = 0; i < a.s.size(); ++i)
    if (a.window.objects[i].dim == 1 && a.origin[i] == BasepointOrigin::Projection) edge = int(i);
  REQUIRE(edge >= 0);
  a.s[edge] = a.s[edge] + QVec{frac(1, 100), Q(0)};
  auto r = check_basepoints(ap, a);
  CHECK(!r.pass());
  CHECK(r.adjacentFailures > 0);
  CHECK(r.nestingFailures > 0);
}
