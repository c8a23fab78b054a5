#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chs/affweyl.hpp"
#include "chs/linalg.hpp"

#include <random>

using namespace chs;

namespace {

AffineWeylElement random_element(const Apartment& ap, std::mt19937_64& rng) {
  IVec t(ap.rank());
  for (auto& c : t) c = long(rng() % 7) - 3;
  return {int(rng() % ap.W.order()), t};
}

QVec random_point(const Apartment& ap, std::mt19937_64& rng) {
  QVec x(ap.rank());
  for (auto& c : x) c = frac(long(rng() % 41) - 20, long(rng() % 6) + 1);
  return x;
}

} // namespace

TEST_CASE("group laws of the extended affine Weyl group") {
  std::mt19937_64 rng(5);
  for (const char* p : {"A1 ad", "A2 sc", "B2 sc", "G2", "GL(2)"}) {
    CAPTURE(p);
    Apartment ap = make_apartment(preset_root_datum(p));
    for (int s = 0; s < 100; ++s) {
      auto g = random_element(ap, rng), h = random_element(ap, rng), k = random_element(ap, rng);
      QVec x = random_point(ap, rng);
      CHECK(compose(ap, compose(ap, g, h), k) == compose(ap, g, compose(ap, h, k)));
      CHECK(compose(ap, g, inverse(ap, g)) == identity_element(ap));
      CHECK(act(ap, compose(ap, g, h), x) == act(ap, g, act(ap, h, x)));
      CHECK(act_facet(ap, g, facet_of_point(ap, x)) == facet_of_point(ap, act(ap, g, x)));
    }
  }
}

TEST_CASE("affine reflections") {
  Apartment ap = make_apartment(preset_root_datum("A2 sc"));
  std::mt19937_64 rng(2);
  for (auto& a : alcove_walls(ap)) {
    auto r = affine_reflection(ap, a);
    CHECK(compose(ap, r, r) == identity_element(ap));
    for (int s = 0; s < 20; ++s) {
      QVec x = random_point(ap, rng);
      // r negates the affine functional
      CHECK(eval(ap, a, act(ap, r, x)) == -eval(ap, a, x));
    }
  }
  // A1 sc: the wall alpha = 1 sits at alpha^vee / 2 and reflects 1/4 to 3/4
  Apartment a1 = make_apartment(preset_root_datum("A1 sc"));
  for (auto& a : alcove_walls(a1)) {
    auto r = affine_reflection(a1, a);
    if (a.level != 0) CHECK(act(a1, r, {frac(1, 4)}) == QVec{frac(3, 4)});
    else CHECK(act(a1, r, {frac(1, 4)}) == QVec{frac(-1, 4)});
  }
}

TEST_CASE("reduction to the fundamental alcove") {
  std::mt19937_64 rng(9);
  for (const char* p : {"A1 sc", "A2 ad", "B2 sc", "G2", "GL(3)"}) {
    CAPTURE(p);
    Apartment ap = make_apartment(preset_root_datum(p));
    for (int s = 0; s < 100; ++s) {
      QVec x = random_point(ap, rng);
      Reduction r = reduce_to_fundamental(ap, x);
      CHECK(in_closed_alcove(ap, r.point));
      CHECK(act(ap, r.g, x) == r.point);
      CHECK(r.facet == facet_of_point(ap, r.point));
    }
  }
}

TEST_CASE("stabilizers") {
  // setwise stabilizer of the open alcove has order |pi1|
  for (auto [p, order] : std::vector<std::pair<const char*, size_t>>{
           {"A1 sc", 1}, {"A1 ad", 2}, {"A2 sc", 1}, {"A2 ad", 3}, {"B2 ad", 2}, {"A3 ad", 4}, {"A3 m2", 2}}) {
    CAPTURE(p);
    Apartment ap = make_apartment(preset_root_datum(p));
    auto faces = facets_of_closed_alcove(ap);
    CHECK(stabilizer_facet(ap, faces.back()).finite.size() == order);
    // origin: the full finite Weyl group
    CHECK(stabilizer_point(ap, QVec(ap.rank(), Q(0))).finite.size() == ap.W.order());
  }
  // GL(2): translations by the centre stabilize every facet
  Apartment gl = make_apartment(preset_root_datum("GL(2)"));
  auto st = stabilizer_facet(gl, facets_of_closed_alcove(gl).back());
  CHECK(st.lattice.size() == 1);
}

TEST_CASE("reflection subgroups and normalizers") {
  Apartment ap = make_apartment(preset_root_datum("B2 sc"));
  CHECK(reflection_subgroup(ap, {}).size() == 1);
  std::vector<int> all(ap.rd.num_roots());
  for (int i = 0; i < ap.rd.num_roots(); ++i) all[i] = i;
  CHECK(reflection_subgroup(ap, all).size() == 8);
  // a long root and its negative
  int a = ap.rd.simple[0];
  auto N = normalizer_parabolic(ap, {a, ap.rd.negation[a]});
  CHECK(N.Weps.size() == 2);
  CHECK(N.N.size() == 4);
  CHECK(N.quotient.order() == 2);
}
