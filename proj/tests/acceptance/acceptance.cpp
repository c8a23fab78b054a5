// One PASS/FAIL line per acceptance criterion.  All comparisons are exact;
// the only tolerance is the pinned sample count and seed below.

#include "chs/basepoints.hpp"
#include "chs/indres.hpp"

#include <array>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <sys/wait.h>

using namespace chs;

namespace {

constexpr int kColimSamples = 100;
constexpr std::uint64_t kSeed = 0;
constexpr int kRadius = 2;

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (detail.size() < 400) detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

std::vector<std::string> preset_files() {
  std::vector<std::string> out;
  for (auto& e : std::filesystem::directory_iterator(std::string(CHS_DATA_DIR) + "/presets"))
    if (e.path().extension() == ".toml") out.push_back(e.path().string());
  std::sort(out.begin(), out.end());
  return out;
}

long partitions(int n, int maxPart) {
  if (n == 0) return 1;
  long s = 0;
  for (int k = 1; k <= std::min(n, maxPart); ++k) s += partitions(n - k, k);
  return s;
}

Apartment ap_of(const std::string& preset) { return make_apartment(preset_root_datum(preset)); }

Outcome weyl_orders() {
  Outcome o;
  for (auto [p, letter, n, expect] : std::vector<std::tuple<const char*, char, int, size_t>>{
           {"A1 sc", 'A', 1, 2}, {"A2 sc", 'A', 2, 6}, {"B2 sc", 'B', 2, 8}, {"G2", 'G', 2, 12}}) {
    size_t prod = 1;
    for (int d : fundamental_degrees(letter, n)) prod *= size_t(d);
    size_t w = ap_of(p).W.order();
    o.require(w == expect && prod == expect, std::string(p) + " |W|=" + std::to_string(w));
  }
  return o;
}

Outcome facet_counts() {
  Outcome o;
  for (auto [p, expect] : std::vector<std::pair<const char*, size_t>>{{"A1 sc", 3}, {"A2 sc", 7}}) {
    Apartment ap = ap_of(p);
    size_t a = facets_of_closed_alcove(ap).size(), b = facets_of_closed_alcove_by_grid(ap).size();
    o.require(a == expect && b == expect, std::string(p) + " " + std::to_string(a) + "/" + std::to_string(b));
  }
  return o;
}

Outcome bijection(const ClassificationTable& t) {
  Outcome o;
  for (const char* p : {"GL(1)", "GL(2)", "GL(3)", "A1 sc", "A1 ad", "A2 sc"}) {
    auto r = bijection_check(ap_of(p), t);
    o.require(r.pass(), std::string(p) + " K=" + std::to_string(r.kSize) + " D=" + std::to_string(r.dSize) +
                            " orbits=" + std::to_string(r.orbitCount));
  }
  return o;
}

Outcome springer_identity(const ClassificationTable& t) {
  Outcome o;
  for (int n = 1; n <= 3; ++n) {
    auto r = springer_identity_check(ap_of("GL(" + std::to_string(n) + ")"), t);
    long p = partitions(n, n);
    o.require(r.lhs == p && r.rhs == p, "GL(" + std::to_string(n) + ")");
  }
  for (auto& f : preset_files()) {
    Apartment ap = make_apartment(load_root_datum(f));
    auto r = springer_identity_check(ap, t);
    o.require(r.pass(), ap.rd.name + " " + std::to_string(r.lhs) + "!=" + std::to_string(r.rhs));
  }
  return o;
}

Outcome principal_block(const ClassificationTable& t) {
  Outcome o;
  for (auto& f : preset_files()) {
    Apartment ap = make_apartment(load_root_datum(f));
    AffineC c = affine_blocks(ap, t);
    auto r = principal_block_check(ap, c);
    o.require(r.pass(), ap.rd.name);
  }
  return o;
}

// c (1+t)^r / (1-t^2)^r by repeated multiplication
std::vector<Z> series_product(const Z& c, int r, int n) {
  std::vector<Z> s(n, Z(0));
  s[0] = c;
  for (int f = 0; f < r; ++f) {
    std::vector<Z> a(n, Z(0)), b(n, Z(0));
    for (int i = 0; i < n; ++i) a[i] = s[i] + (i ? s[i - 1] : Z(0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; i + 2 * j < n; ++j) b[i + 2 * j] += a[i];
    s = b;
  }
  return s;
}

Outcome formality() {
  Outcome o;
  auto a1 = springer_endo_series(ap_of("A1 sc")).coefficients(20);
  for (auto& c : a1) o.require(c == 2, "A1 coefficient " + c.get_str());
  for (auto& f : preset_files()) {
    Apartment ap = make_apartment(load_root_datum(f));
    auto s = springer_endo_series(ap);
    o.require(s.coefficients(16) == series_product(Z(long(ap.W.order())), ap.rank(), 16), ap.rd.name + " series");
    auto res = res_springer_rank(ap, 12);
    o.require(res.pass() && res.rank == long(ap.W.order()), ap.rd.name + " restriction rank");
  }
  return o;
}

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

Outcome frobenius(const ClassificationTable& t) {
  Outcome o;
  std::mt19937_64 rng(kSeed);
  for (const char* p : {"A1 sc", "A2 sc", "B2 sc"}) {
    Apartment ap = ap_of(p);
    LeviK G = levi_K(ap, t, all_simple(ap));
    LeviK T = levi_K(ap, t, {});
    o.require(frobenius_check(ap, G, T, 0, rng).pass(), std::string(p) + " G/T");
    int r = ap.rd.semisimple_rank();
    for (int j = 0; r > 1 && j < r; ++j) {
      LeviK L = levi_K(ap, t, {j});
      std::string name = std::string(p) + " L{" + std::to_string(j) + "}";
      o.require(frobenius_check(ap, G, L, 0, rng).pass(), name + " G/L");
      o.require(frobenius_check(ap, L, T, 0, rng).pass(), name + " L/T");
      o.require(transitivity_check(ap, G, L, T), name + " transitivity");
      auto m = mackey_check(ap, G, L);
      o.require(m.pass() && m.doubleCosets == double_cosets(ap.W.group, L.WL), name + " res ind");
    }
  }
  return o;
}

Outcome incidence(const ClassificationTable& t) {
  Outcome o;
  for (auto [p, J] : std::vector<std::pair<const char*, std::vector<int>>>{{"A1 sc", {}}, {"A2 sc", {0}}}) {
    Apartment ap = ap_of(p);
    auto inc = affine_res_incidence(ap, t, J);
    std::vector<int> hits(inc.l.blocks.size(), 0);
    for (auto& row : inc.rows) ++hits[row.lBlock];
    for (int h : hits) o.require(h == 1, std::string(p) + " L-block rows " + std::to_string(h));
    o.require(inc.lTriplesChecked == long(inc.l.triples.size()), std::string(p) + " triples");
  }
  return o;
}

const std::vector<std::string> kRank2 = {"GL(1)", "GL(2)", "A1 sc", "A1 ad", "A2 sc", "A2 ad", "B2 sc", "B2 ad", "G2"};

Outcome facet_category() {
  Outcome o;
  for (auto& p : kRank2) {
    Apartment ap = ap_of(p);
    std::string s[2], e[2];
    for (int k = 0; k < 2; ++k) {
      std::mt19937_64 rng(kSeed);
      auto c = build_truncation(ap, kRadius + k);
      auto r = one_category_check(ap, c, rng);
      auto a = alcove_equivalence_check(ap, c);
      if (k == 0) o.require(r.pass() && a.pass(), p + " radius 2");
      s[k] = r.stable();
      e[k] = a.stable();
    }
    o.require(s[0] == s[1] && e[0] == e[1], p + " radius 3 differs");
  }
  for (auto& fc : shipped_fiber_cases()) {
    auto r = alpha_fiber_report(ap_of(fc.preset), fc.levi, fc.point, fc.halfWidth);
    o.require(r.reducedEuler == 0 && r.connected, fc.preset + " fibre chi=" + std::to_string(r.reducedEuler));
  }
  return o;
}

Outcome colimit() {
  Outcome o;
  for (const char* p : {"A1 sc", "A1 ad", "A2 sc", "A2 ad"}) {
    Apartment ap = ap_of(p);
    auto c = build_truncation(ap, kRadius);
    std::mt19937_64 rng(kSeed);
    auto g = colim_check(ap, c, sample_window_points(ap, c.window, kColimSamples, rng));
    long ok = 0;
    for (auto& s : g.samples) ok += s.pass();
    o.require(ok == kColimSamples, std::string(p) + " " + std::to_string(ok) + "/" + std::to_string(kColimSamples));
  }
  return o;
}

Outcome basepoints() {
  Outcome o;
  for (auto& f : preset_files()) {
    Apartment ap = make_apartment(load_root_datum(f));
    try {
      auto a = assign_s(ap, kRadius);
      o.require(check_basepoints(ap, a).pass(), ap.rd.name);
    } catch (const CheckFailure& e) {
      o.require(false, ap.rd.name + ": " + e.what());
    }
  }
  return o;
}

std::string run_cli(const std::string& args, int& code) {
  std::string cmd = std::string(CHS_CLI_PATH) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return "";
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  code = WEXITSTATUS(pclose(p));
  return out;
}

Outcome determinism() {
  Outcome o;
  std::string dir = std::string(CHS_DATA_DIR) + "/presets/";
  for (std::string args : {"info " + dir + "G2.toml", "blocks " + dir + "A2sc.toml", "bijection " + dir + "GL3.toml",
                           "indres --seed 3 " + dir + "B2sc.toml", "springer " + dir + "A2ad.toml",
                           "basepoints --json " + dir + "B2ad.toml",
                           "verify --samples 100 --seed 0 " + dir + "A2sc.toml",
                           "verify --json --samples 50 --seed 7 " + dir + "A1ad.toml"}) {
    int c1 = -1, c2 = -1;
    std::string a = run_cli(args, c1), b = run_cli(args, c2);
    o.require(!a.empty() && a == b && c1 == c2 && c1 == 0, args);
  }
  return o;
}

} // namespace

int main() {
  ClassificationTable table;
  try {
    table = load_classification();
  } catch (const std::exception& e) {
    std::cout << "FAIL classification data: " << e.what() << "\n";
    return 1;
  }
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 Weyl orders match product of degrees", weyl_orders},
      {"2 alcove facet counts by two methods", facet_counts},
      {"3 bijection K = D = c//W", [&] { return bijection(table); }},
      {"4 Springer counting identity", [&] { return springer_identity(table); }},
      {"5 principal affine block", [&] { return principal_block(table); }},
      {"6 formality series", formality},
      {"7 Frobenius reciprocity and transitivity", [&] { return frobenius(table); }},
      {"8 affine incidence partition", [&] { return incidence(table); }},
      {"9 facet category suite", facet_category},
      {"10 colimit verifier", colimit},
      {"11 base point suite", basepoints},
      {"12 CLI determinism", determinism},
  };
  bool all = true;
  for (auto& [name, f] : criteria) {
    Outcome o;
    try {
      o = f();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = e.what();
    }
    all &= o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << (o.detail.empty() ? "" : " (" + o.detail + ")") << std::endl;
  }
  return all ? 0 : 1;
}
