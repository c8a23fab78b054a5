// The extended affine Weyl group X_* x| W acting on t and on facets.

#ifndef CHS_AFFWEYL_HPP_
#define CHS_AFFWEYL_HPP_

#include "chs/apartment.hpp"

namespace chs {

// x -> W.mats[w] x + t
struct AffineWeylElement {
  int w = 0;
  IVec t;
  auto operator<=>(const AffineWeylElement&) const = default;
};

AffineWeylElement identity_element(const Apartment& ap);
AffineWeylElement translation(const Apartment& ap, const IVec& t);
AffineWeylElement compose(const Apartment& ap, const AffineWeylElement& g, const AffineWeylElement& h);
AffineWeylElement inverse(const Apartment& ap, const AffineWeylElement& g);
// Reflection in the zero set of the affine root alpha + level.
AffineWeylElement affine_reflection(const Apartment& ap, const AffineRoot& a);

QVec act(const Apartment& ap, const AffineWeylElement& g, const QVec& x);
Facet act_facet(const Apartment& ap, const AffineWeylElement& g, const Facet& I);
// (g a)(x) = a(g^-1 x)
AffineRoot act_root(const Apartment& ap, const AffineWeylElement& g, const AffineRoot& a);

// Total order used for every tie-break: (length of w, matrix of w, t).
bool element_less(const Apartment& ap, const AffineWeylElement& a, const AffineWeylElement& b);

std::string to_string(const Apartment& ap, const AffineWeylElement& g);

// Lattice part plus coset representatives.  The group is
// { translation(l) * f : l in span(lattice), f in finite }.
struct AffineStabilizer {
  std::vector<IVec> lattice;
  std::vector<AffineWeylElement> finite;
};

struct Reduction {
  AffineWeylElement g; // g(x) lies in the closed alcove
  QVec point;          // g(x)
  Facet facet;         // facet of g(x), a face of the closed alcove
};

// Alcove walk followed by the deterministic choice of g among all
// elements carrying x to the same point.
Reduction reduce_to_fundamental(const Apartment& ap, const QVec& x);
// Same for a facet; g is chosen among all elements carrying I onto the
// same alcove face.
Reduction reduce_facet(const Apartment& ap, const Facet& I);

AffineStabilizer stabilizer_point(const Apartment& ap, const QVec& x);
AffineStabilizer stabilizer_facet(const Apartment& ap, const Facet& I);

struct Normalizer {
  std::vector<int> N;       // {w : w(Phi_eps) = Phi_eps}, sorted
  std::vector<int> Weps;    // W_eps, sorted
  std::vector<int> reps;    // one element of N per coset of W_eps (minimal index)
  std::vector<QVec> zBasis; // basis of z_eps
  std::vector<QMat> zAction; // restriction of reps[k] to z_eps in zBasis
  FiniteGroup quotient;     // generated by zAction, so of order |N / W_eps|
};

// `eps` is a reflection-closed set of root indices.
Normalizer normalizer_parabolic(const Apartment& ap, const std::vector<int>& eps);

// Subgroup of W generated by the reflections in `roots`.
std::vector<int> reflection_subgroup(const Apartment& ap, const std::vector<int>& roots);

} // namespace chs

#endif
