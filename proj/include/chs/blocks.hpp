// Triples (support, positive system, cuspidal label), their orbits under W
// (finite model) and the extended affine Weyl group (affine model), block
// stabilizers and Hilbert series.

#ifndef CHS_BLOCKS_HPP_
#define CHS_BLOCKS_HPP_

#include "chs/cuspidal.hpp"

namespace chs {

// Generating function numerator / (1 - t^2 q^2)^zDim of C[K] # Sym(z^*[-2]<-2>)
// for a finite group K of order `numerator`.  Lattice-smash blocks keep
// numerator 1 and a symbolic group factor.
struct BigradedSeries {
  Z numerator = 1;
  int zDim = 0;
  std::string groupFactor; // empty for finite K, else e.g. "C[K_c]"
  // generators in bidegree (2,2); the Koszul-dual side Sym(z[1]) has (-1,2)
  static constexpr int genT = 2, genQ = 2, dualT = -1, dualQ = 2;
  Z coefficient(int k) const; // coefficient of (t^2 q^2)^k
  std::string str() const;
};

// ---- finite (Lie algebra) model

struct TripleC {
  std::vector<int> eps;    // Phi_eps, sorted root indices
  std::vector<int> borel;  // a positive system of Phi_eps, sorted
  CuspidalLabel label;
  auto key() const { return std::tie(eps, borel, label); }
  bool operator==(const TripleC& o) const { return key() == o.key(); }
  bool operator<(const TripleC& o) const { return key() < o.key(); }
};

TripleC act_triple(const Apartment& ap, int w, const TripleC& c);

struct FiniteOrbit {
  TripleC rep;
  int size = 0;
  std::vector<int> stabilizer; // W_c, sorted
  int weps = 0;                // |W^eps| = |N_W(W_eps) / W_eps|
  bool injective = false;      // W_c meets W_eps trivially
  int zDim = 0;
  std::string type;
  BigradedSeries series;
};

struct FiniteC {
  std::vector<TripleC> triples;
  std::vector<int> orbitOf;
  std::vector<FiniteOrbit> orbits;
};

FiniteC finite_C(const Apartment& ap, const ClassificationTable& table);

struct BijectionReport {
  size_t kSize = 0, dSize = 0, orbitCount = 0;
  bool wellDefined = true, injective = true, surjective = true, stabilizersMatch = true;
  std::vector<std::string> failures;
  bool pass() const {
    return kSize == dSize && dSize == orbitCount && wellDefined && injective && surjective && stabilizersMatch;
  }
};

BijectionReport bijection_check(const Apartment& ap, const ClassificationTable& table);

// ---- affine model

struct AffineSupport {
  Facet face;               // an alcove face spanning the support
  std::vector<int> rootsBar; // finite parts of the vanishing affine roots, sorted
  std::vector<int> base;     // canonical base of rootsBar
};

struct AffineTriple {
  int support = 0;
  std::vector<int> borel;
  CuspidalLabel label;
};

struct AffineBlock {
  int rep = 0;                 // index into AffineC::triples
  std::vector<IVec> lattice;   // Lambda_c = X_* meet z_c
  std::vector<AffineWeylElement> finite; // coset representatives of K_c / Lambda_c
  int zDim = 0;
  std::string type;
  BigradedSeries series;
  bool principal = false;
};

struct AffineC {
  AffineWeylElement frame;   // supports are frame(alcove faces)
  std::vector<AffineSupport> supports;
  std::vector<AffineTriple> triples;
  std::vector<int> blockOf;  // per triple
  std::vector<AffineBlock> blocks;
  int supportOrbits = 0;
};

// `frame` moves the fundamental alcove; the default is the identity.
AffineC affine_blocks(const Apartment& ap, const ClassificationTable& table,
                      const AffineWeylElement* frame = nullptr);

// Element g with g(eps_from) = eps_to and finite part w, if any.
std::optional<AffineWeylElement> support_map(const Apartment& ap, const AffineSupport& from,
                                             const AffineSupport& to, int w);

struct PrincipalReport {
  bool latticeIsFull = false, finitePartIsW = false, zDimIsRank = false;
  bool pass() const { return latticeIsFull && finitePartIsW && zDimIsRank; }
};

PrincipalReport principal_block_check(const Apartment& ap, const AffineC& c);

// Frame-independent summary of a block: (type, label, zDim, |K_c/Lambda|, Lambda rank).
std::vector<std::string> block_signature(const Apartment& ap, const AffineC& c);

} // namespace chs

#endif
