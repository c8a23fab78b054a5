#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chs/blocks.hpp"

#include <random>

using namespace chs;

TEST_CASE("bijection K ~ D ~ c//W") {
  auto table = load_classification();
  for (const char* p : {"GL(1)", "GL(2)", "GL(3)", "A1 sc", "A1 ad", "A2 sc", "A2 ad", "B2 sc", "G2"}) {
    CAPTURE(p);
    auto r = bijection_check(make_apartment(preset_root_datum(p)), table);
    CHECK(r.pass());
    CHECK(r.kSize > 0);
  }
}

TEST_CASE("finite model: orbit sizes add up") {
  auto table = load_classification();
  for (const char* p : {"A1 sc", "A2 sc", "B2 sc"}) {
    Apartment ap = make_apartment(preset_root_datum(p));
    FiniteC f = finite_C(ap, table);
    size_t total = 0;
    for (auto& o : f.orbits) {
      total += o.size;
      CHECK(size_t(o.size) * o.stabilizer.size() == ap.W.order());
      CHECK(o.injective);
    }
    CHECK(total == f.triples.size());
  }
}

TEST_CASE("affine blocks: counts") {
  auto table = load_classification();
  struct Row {
    const char* preset;
    size_t blocks;
  };
  for (Row r : {Row{"A1 sc", 3}, Row{"A1 ad", 1}, Row{"GL(1)", 1}, Row{"GL(2)", 1}, Row{"GL(3)", 1},
                Row{"A2 sc", 7}, Row{"A2 ad", 1}, Row{"B2 sc", 4}, Row{"B2 ad", 2}, Row{"G2", 5}}) {
    CAPTURE(r.preset);
    Apartment ap = make_apartment(preset_root_datum(r.preset));
    AffineC c = affine_blocks(ap, table);
    CHECK(c.blocks.size() == r.blocks);
    CHECK(principal_block_check(ap, c).pass());
    size_t principal = 0;
    for (auto& b : c.blocks) principal += b.principal;
    CHECK(principal == 1);
  }
}

TEST_CASE("A1 sc affine blocks: two cuspidal points and the principal block") {
  auto table = load_classification();
  Apartment ap = make_apartment(preset_root_datum("A1 sc"));
  AffineC c = affine_blocks(ap, table);
  int cusp = 0;
  for (auto& b : c.blocks) {
    if (b.principal) {
      CHECK(b.zDim == 1);
      CHECK(b.series.numerator == 2);
      CHECK(b.series.coefficient(3) == 2);
    } else {
      ++cusp;
      CHECK(b.zDim == 0);
      CHECK(b.finite.size() == 1);
      CHECK(b.series.coefficient(0) == 1);
      CHECK(b.series.coefficient(1) == 0);
    }
  }
  CHECK(cusp == 2);
}

TEST_CASE("block table does not depend on the frame") {
  auto table = load_classification();
  std::mt19937_64 rng(1);
  for (const char* p : {"A1 ad", "A2 sc", "B2 sc"}) {
    CAPTURE(p);
    Apartment ap = make_apartment(preset_root_datum(p));
    auto base = block_signature(ap, affine_blocks(ap, table));
    for (int s = 0; s < 3; ++s) {
      IVec t(ap.rank());
      for (auto& x : t) x = long(rng() % 5) - 2;
      AffineWeylElement frame{int(rng() % ap.W.order()), t};
      CHECK(block_signature(ap, affine_blocks(ap, table, &frame)) == base);
    }
  }
}

TEST_CASE("products multiply block counts") {
  auto table = load_classification();
  auto n = [&](const char* p) { return affine_blocks(make_apartment(preset_root_datum(p)), table).blocks.size(); };
  CHECK(n("A1 sc x A1 sc") == n("A1 sc") * n("A1 sc"));
  CHECK(n("SL(2) x GL(1)") == n("A1 sc") * n("GL(1)"));
}

TEST_CASE("bigraded series") {
  BigradedSeries s;
  s.numerator = 6;
  s.zDim = 2;
  // 6 / (1 - x)^2 = 6 (k + 1) x^k
  for (int k = 0; k < 10; ++k) CHECK(s.coefficient(k) == 6 * (k + 1));
  BigradedSeries one;
  CHECK(one.coefficient(0) == 1);
  CHECK(one.coefficient(4) == 0);
}
