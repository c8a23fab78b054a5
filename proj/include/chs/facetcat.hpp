// Truncations of the facet (2,1)-categories F_G and F_{L in G}, their
// 1-categorical checks, alpha-fibre proxies and the groupoid-colimit check.
//
// 2-cells follow the left convention: u : w1 => w2 for u = w2 w1^-1 in W_I,
// the pointwise fixer of I generated by affine reflections through I.  The
// right-handed reading w2 = w1 u is evaluated as a diagnostic only.

#ifndef CHS_FACETCAT_HPP_
#define CHS_FACETCAT_HPP_

#include "chs/affweyl.hpp"

#include <random>

namespace chs {

// Alcoves within `radius` wall crossings of the fundamental alcove and the
// facets of their closures.
struct Window {
  int radius = 0;
  std::vector<AffineWeylElement> alcoves; // g with alcove g(A), BFS order
  std::vector<Facet> objects;             // sorted by (dim, code)
  std::vector<int> face;                  // per object: index into alcoveFaces
  std::vector<AffineWeylElement> toObject; // per object: g with g(alcoveFaces[face]) = object
  std::vector<Facet> alcoveFaces;
  int index_of(const Facet& f) const; // -1 outside the window
};

Window build_window(const Apartment& ap, int radius);

struct OneCell {
  int source = 0, target = 0; // w : source -> target, source in closure(w(target))
  AffineWeylElement w;
};

struct FacetCategory {
  Window window;
  std::vector<int> levi; // empty for F_G, else the Levi's simple positions (F_{L in G})
  bool isLevi = false;
  std::vector<std::vector<int>> hom; // hom[I * n + J] -> indices into cells
  std::vector<OneCell> cells;
  const std::vector<int>& homs(int I, int J) const { return hom[size_t(I) * window.objects.size() + J]; }
};

// Central translations are truncated to coefficients in [-radius, radius]
// of the centre lattice basis.
FacetCategory build_truncation(const Apartment& ap, int radius, const std::vector<int>* levi = nullptr);

// u in W_I (or W_{I_L} for the Levi variant).
bool in_fixer(const Apartment& ap, const FacetCategory& c, int I, const AffineWeylElement& u);

struct OneCategoryReport {
  bool unique = true;         // at most one 2-cell per parallel pair
  bool equivalence = true;    // 2-cell relation is an equivalence relation
  bool composition = true;    // compatible with composition
  long parallelPairs = 0, twoCells = 0, compositionsChecked = 0;
  long literalOutside = 0;    // right-handed u with w1 u not a 1-cell
  bool pass() const { return unique && equivalence && composition; }
  std::string stable() const; // radius-independent summary
};

OneCategoryReport one_category_check(const Apartment& ap, const FacetCategory& c, std::mt19937_64& rng,
                                     long compositionSamples = 4000);

struct AlcoveEquivalenceReport {
  bool applicable = false;
  bool essentiallySurjective = true;
  bool homsMatch = true;
  std::vector<std::string> table; // per pair of alcove faces: "i j poset classes"
  bool pass() const { return !applicable || (essentiallySurjective && homsMatch); }
  std::string stable() const;
};

AlcoveEquivalenceReport alcove_equivalence_check(const Apartment& ap, const FacetCategory& c);

// Poset of G-facets contained in the L-facet J_L (the L-facet of `point`)
// that meet the box |x_i - point_i| <= halfWidth.
struct FiberReport {
  std::vector<Facet> poset;
  long reducedEuler = 0;
  bool connected = false;
  bool pass() const { return !poset.empty() && reducedEuler == 0 && connected; }
};

FiberReport alpha_fiber_report(const Apartment& ap, const std::vector<int>& leviSubset, const QVec& point,
                               const Q& halfWidth);

struct FiberCase {
  std::string preset;
  std::vector<int> levi;
  QVec point;
  Q halfWidth;
};
std::vector<FiberCase> shipped_fiber_cases();

struct ColimSample {
  QVec x;
  bool covered = false;     // (a)
  int zigzagLength = -1;    // (b), -1 when no zigzag was found
  size_t generatedOrder = 0, directOrder = 0; // (c)
  bool pass() const { return covered && zigzagLength >= 0 && generatedOrder == directOrder; }
};

struct GroupoidReport {
  std::vector<ColimSample> samples;
  bool pass() const {
    for (auto& s : samples)
      if (!s.pass()) return false;
    return true;
  }
};

// Random rational points in the closures of window alcoves.
std::vector<QVec> sample_window_points(const Apartment& ap, const Window& w, int count, std::mt19937_64& rng);

GroupoidReport colim_check(const Apartment& ap, const FacetCategory& c, const std::vector<QVec>& points);

// Exact feasibility of { a.x + b > 0 (strict) or >= 0 } by Fourier-Motzkin.
struct LinearConstraint {
  QVec a;
  Q b;
  bool strict = false;
};
bool feasible(std::vector<LinearConstraint> cs, int n);

} // namespace chs

#endif
