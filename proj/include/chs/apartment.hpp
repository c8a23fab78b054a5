// Facets of the finite and affine root-hyperplane arrangements on t.
//
// A facet is stored by its code on the positive roots.  In the affine
// arrangement the code of alpha at x is 2k when alpha(x) = k is an integer
// and 2*floor(alpha(x)) + 1 otherwise; in the finite arrangement it is the
// sign of alpha(x).  Two points lie in the same facet iff their codes
// agree, so the code is a canonical name and no level bound is needed.

#ifndef CHS_APARTMENT_HPP_
#define CHS_APARTMENT_HPP_

#include "chs/rootdata.hpp"

namespace chs {

enum class Ambient { Finite, Affine };

// x -> roots[root](x) + level
struct AffineRoot {
  long level = 0;
  int root = 0;
  auto operator<=>(const AffineRoot&) const = default;
};

struct Facet {
  Ambient ambient = Ambient::Affine;
  IVec code;     // one entry per positive root
  QVec witness;  // a point of the facet
  int dim = 0;

  bool operator==(const Facet& o) const { return ambient == o.ambient && code == o.code; }
  bool operator<(const Facet& o) const {
    if (ambient != o.ambient) return ambient < o.ambient;
    return code < o.code;
  }
};

struct Support {
  QVec point;                      // a point of the affine span epsilon
  std::vector<QVec> direction;     // basis of z = intersection of the kernels
  std::vector<AffineRoot> vanishing; // Phi_epsilon, sorted
  auto key() const { return vanishing; }
};

// One simple factor of the closed fundamental alcove.
struct AlcoveFactor {
  std::vector<int> base;      // simple root indices, Bourbaki order
  int highest = -1;           // index of the highest root
  IVec marks;                 // coefficients of the highest root
  std::vector<QVec> vertices; // 0 followed by fundamental coweights / marks
};

// A root datum together with its Weyl group, invariant form and alcove.
struct Apartment {
  RootDatum rd;
  WeylGroup W;
  InvariantForm form;
  TypeDecomposition type;
  std::vector<AlcoveFactor> alcove;
  std::vector<IVec> centerLattice; // Z-basis of X_* meet the centre of t

  int rank() const { return rd.rank; }
  bool semisimple() const { return centerLattice.empty(); }
};

Apartment make_apartment(RootDatum rd, size_t cap = kDefaultElementCap);

Facet facet_of_point(const Apartment& ap, const QVec& x, Ambient ambient = Ambient::Affine);

// Roots (affine or linear) vanishing identically on the facet.
std::vector<AffineRoot> vanishing_roots(const Apartment& ap, const Facet& f);
// Indices of the finite parts of the vanishing roots (both signs).
std::vector<int> vanishing_root_indices(const Apartment& ap, const Facet& f);

Support support(const Apartment& ap, const Facet& f);

// I is contained in the closure of J.
bool closure_le(const Facet& I, const Facet& J);

// x lies in the star of I.
bool star_membership(const Apartment& ap, const Facet& I, const QVec& x);

// Faces of the closed fundamental alcove, from the vertex description;
// witnesses are vertex barycentres with central coordinate 0.  Sorted by
// (dim, code).
std::vector<Facet> facets_of_closed_alcove(const Apartment& ap);

// Independent enumeration: facets of points on a rational grid of the
// closed alcove, described by simple-root and highest-root inequalities.
std::vector<Facet> facets_of_closed_alcove_by_grid(const Apartment& ap);

// x lies in the closed fundamental alcove.
bool in_closed_alcove(const Apartment& ap, const QVec& x);

// Affine roots bounding the fundamental alcove: simple roots at level 0 and
// 1 - theta_j per factor.
std::vector<AffineRoot> alcove_walls(const Apartment& ap);

Q eval(const Apartment& ap, const AffineRoot& a, const QVec& x);

} // namespace chs

#endif
