// Equivariant base points s_I of the window facets: the barycenter of the
// fundamental alcove, its orthogonal projections onto the affine spans of
// the alcove faces, and transport by the affine Weyl group elsewhere.

#ifndef CHS_BASEPOINTS_HPP_
#define CHS_BASEPOINTS_HPP_

#include "chs/facetcat.hpp"

namespace chs {

enum class BasepointOrigin { Barycenter, Projection, Transport };
std::string to_string(BasepointOrigin o);

struct BasepointAssignment {
  Window window;
  std::vector<QVec> s;                 // per window object
  std::vector<BasepointOrigin> origin; // per window object
  long transportPaths = 0;             // (alcove, face) pairs agreeing with s
};

// Throws CheckFailure when two transport paths disagree.
BasepointAssignment assign_s(const Apartment& ap, int radius);

// Orthogonal projection, for the invariant form, onto the affine span of f.
QVec project_to_span(const Apartment& ap, const Facet& f, const QVec& x);

// span of the coroots of the roots vanishing on f, together with the centre.
bool in_centre_plus_coroots(const Apartment& ap, const Facet& f, const QVec& v);
bool in_centre(const Apartment& ap, const QVec& v);

struct BasepointReport {
  long inFacet = 0, notInFacet = 0;          // s_I in I
  long adjacentChecked = 0, adjacentFailures = 0; // projections from every window alcove
  long equivarianceChecked = 0, equivarianceFailures = 0;
  long nestingChecked = 0, nestingFailures = 0;   // s_I - s_J in z + span(Phi_I^vee)
  long cartanFailures = 0;                   // span(Phi_J^vee) in span(Phi_I^vee)
  long literalNestingFailures = 0;           // s_I - s_J in z + span(Phi_J^vee), diagnostic only
  long telescopingChecked = 0, telescopingFailures = 0;
  bool pass() const {
    return notInFacet == 0 && adjacentFailures == 0 && equivarianceFailures == 0 && nestingFailures == 0 &&
           cartanFailures == 0 && telescopingFailures == 0;
  }
};

// Equivariance is checked against every 1-cell of the radius truncation of
// the facet category and every wall reflection and alcove symmetry.
BasepointReport check_basepoints(const Apartment& ap, const BasepointAssignment& a);

} // namespace chs

#endif
