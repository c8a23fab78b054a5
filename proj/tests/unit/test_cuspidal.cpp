#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chs/cuspidal.hpp"

using namespace chs;

namespace {

long partitions(int n, int maxPart) {
  if (n == 0) return 1;
  long s = 0;
  for (int k = 1; k <= std::min(n, maxPart); ++k) s += partitions(n - k, k);
  return s;
}

std::vector<int> all_roots(const Apartment& ap) {
  std::vector<int> v(ap.rd.num_roots());
  for (int i = 0; i < ap.rd.num_roots(); ++i) v[i] = i;
  return v;
}

} // namespace

TEST_CASE("Springer counting identity for GL(n) is p(n)") {
  auto table = load_classification();
  for (int n = 1; n <= 4; ++n) {
    Apartment ap = make_apartment(preset_root_datum("GL(" + std::to_string(n) + ")"));
    auto r = springer_identity_check(ap, table);
    CHECK(r.lhs == partitions(n, n));
    CHECK(r.rhs == partitions(n, n));
  }
}

TEST_CASE("Springer counting identity for every shipped type") {
  auto table = load_classification();
  for (const char* p : {"A1 sc", "A1 ad", "A2 sc", "A2 ad", "B2 sc", "B2 ad", "G2", "A3 sc", "A3 m2", "A3 ad"}) {
    CAPTURE(p);
    auto r = springer_identity_check(make_apartment(preset_root_datum(p)), table);
    CHECK(r.pass());
    CHECK(r.lhs > 0);
  }
}

TEST_CASE("cuspidal labels descend only with the right centre") {
  auto table = load_classification();
  Apartment sc = make_apartment(preset_root_datum("A1 sc"));
  Apartment ad = make_apartment(preset_root_datum("A1 ad"));
  CHECK(cuspidal_set(sc, table, all_roots(sc)).size() == 1);
  CHECK(cuspidal_set(ad, table, all_roots(ad)).empty());
  // torus: one (trivial) label
  CHECK(cuspidal_set(sc, table, {}).size() == 1);
  // SL(3) carries two cuspidal local systems on the regular orbit, PGL(3) none
  Apartment a2 = make_apartment(preset_root_datum("A2 sc"));
  CHECK(cuspidal_set(a2, table, all_roots(a2)).size() == 2);
  Apartment a2ad = make_apartment(preset_root_datum("A2 ad"));
  CHECK(cuspidal_set(a2ad, table, all_roots(a2ad)).empty());
  // G2 has one cuspidal pair
  Apartment g2 = make_apartment(preset_root_datum("G2"));
  CHECK(cuspidal_set(g2, table, all_roots(g2)).size() == 1);
}

TEST_CASE("labels are stable under transport") {
  auto table = load_classification();
  Apartment ap = make_apartment(preset_root_datum("A3 sc"));
  auto labels = cuspidal_set(ap, table, standard_levi_roots(ap.rd, {0, 2}));
  REQUIRE(!labels.empty());
  for (auto& c : labels) {
    CHECK(transport(ap, 0, c) == c);
    for (size_t w = 0; w < ap.W.order(); ++w) {
      auto moved = transport(ap, int(w), c);
      CHECK(transport(ap, ap.W.group.inv(int(w)), moved) == c);
    }
  }
}

TEST_CASE("cuspidal data of G") {
  auto table = load_classification();
  // GL(n): only the torus
  CHECK(cuspidal_data_of_G(make_apartment(preset_root_datum("GL(3)")), table).size() == 1);
  // SL(2): torus and G
  auto d = cuspidal_data_of_G(make_apartment(preset_root_datum("A1 sc")), table);
  CHECK(d.size() == 2);
  // relative Weyl group of the torus datum is W
  Apartment ap = make_apartment(preset_root_datum("B2 sc"));
  auto data = cuspidal_data_of_G(ap, table);
  for (auto& k : data)
    if (k.leviRoots.empty()) CHECK(relative_weyl(ap, k).group().order() == 8);
}

TEST_CASE("classification data errors") {
  CHECK_THROWS_AS(load_classification("/nonexistent.json"), DataError);
  CHECK(partition_count(5) == 7);
}
