// Cuspidal data: the shipped classification table, cuspidal labels of
// pseudo-Levi subgroups, the set K_G of cuspidal data up to conjugacy, and
// relative Weyl groups.

#ifndef CHS_CUSPIDAL_HPP_
#define CHS_CUSPIDAL_HPP_

#include "chs/affweyl.hpp"

namespace chs {

struct LocalSystem {
  std::string label;
  IVec centralCharacter; // fundamental-weight coordinates, Bourbaki order
  bool cuspidal = false;
};

struct OrbitRecord {
  std::string label;
  int compGroupOrder = 1;
  std::vector<LocalSystem> localSystems;
};

struct TypeRecord {
  std::string type; // e.g. "A2", simply connected normalization
  std::string provenance;
  std::string normalizerAction;
  int totalPairs = 0;
  std::vector<OrbitRecord> orbits;
};

struct ClassificationTable {
  std::map<std::string, TypeRecord> types;
  // Throws DataError("classification data absent for type X").
  const TypeRecord& lookup(const std::string& type) const;
};

std::string default_classification_path();
ClassificationTable load_classification(const std::string& path = default_classification_path());

// A cuspidal local system on one simple factor of a pseudo-Levi.  The
// central character is stored as a functional modulo the factor's root
// lattice: coefficients in the factor's base reduced to [0, 1).  Together
// with the root set this names the label independently of any choice of
// base, so labels can be compared after transport by the Weyl group.
struct FactorCuspidal {
  std::vector<int> roots; // all roots of the factor, sorted
  std::string type;
  std::string orbit;
  std::string localSystem;
  QVec cc;
  auto key() const { return std::tie(roots, orbit, cc); }
  bool operator==(const FactorCuspidal& o) const { return key() == o.key(); }
  bool operator<(const FactorCuspidal& o) const { return key() < o.key(); }
};

struct CuspidalLabel {
  std::vector<FactorCuspidal> factors; // sorted; empty for a torus
  bool operator==(const CuspidalLabel& o) const { return factors == o.factors; }
  bool operator<(const CuspidalLabel& o) const { return factors < o.factors; }
};

std::string to_string(const CuspidalLabel& c);

// Cuspidal labels of the connected reductive subgroup with roots `sub`
// (reflection closed) and the ambient cocharacter lattice.
std::vector<CuspidalLabel> cuspidal_set(const Apartment& ap, const ClassificationTable& table,
                                        const std::vector<int>& sub);

// Transport of a label along the finite Weyl element w.
CuspidalLabel transport(const Apartment& ap, int w, const CuspidalLabel& c);

// The same label seen through a root-index map between two data on the
// same lattice (e.g. a Levi and its ambient group).
CuspidalLabel map_label(const RootDatum& from, const RootDatum& to, const std::vector<int>& rootMap,
                        const CuspidalLabel& c);

// Number of pairs (O, L) for the subgroup with roots `sub`, read from the
// table and filtered by descent to X_*.
long count_pairs(const Apartment& ap, const ClassificationTable& table, const std::vector<int>& sub);

// Roots of the standard Levi spanned by rd.simple[k], k in subset; sorted.
std::vector<int> standard_levi_roots(const RootDatum& rd, const std::vector<int>& subset);
// Sorted images w(roots).
std::vector<int> image_of(const Apartment& ap, int w, const std::vector<int>& roots);
// Positive roots of the set that are not sums of two positive roots of the set.
std::vector<int> canonical_base(const RootDatum& rd, const std::vector<int>& roots);

struct CuspidalDatum {
  std::vector<int> leviSubset; // positions in rd.simple
  std::vector<int> leviRoots;  // Phi_M, sorted
  CuspidalLabel label;
  int zDim = 0;
};

// One entry per W-conjugacy class of (standard Levi, cuspidal label).
std::vector<CuspidalDatum> cuspidal_data_of_G(const Apartment& ap, const ClassificationTable& table);

// Index into `data` of the class containing (roots, label), with a Weyl
// element carrying that pair onto the representative; -1 if absent.
struct DatumMatch {
  int index = -1;
  int conjugator = 0;
};
DatumMatch match_datum(const Apartment& ap, const std::vector<CuspidalDatum>& data,
                       const std::vector<int>& roots, const CuspidalLabel& label);

struct RelativeWeyl {
  Normalizer normalizer;   // of W_M in W
  const FiniteGroup& group() const { return normalizer.quotient; }
  // quotient element of each normalizer element
  std::vector<int> quotientOf; // indexed by W element, -1 outside N
};

// N_W(W_M)/W_M acting on z_kappa.  Checks that every normalizer element
// fixes the cuspidal label.
RelativeWeyl relative_weyl(const Apartment& ap, const CuspidalDatum& k);

struct SpringerReport {
  long lhs = 0; // sum over K_G of #Irr(W^kappa)
  long rhs = 0; // number of pairs (O, L)
  bool pass() const { return lhs == rhs; }
};

SpringerReport springer_identity_check(const Apartment& ap, const ClassificationTable& table);

long partition_count(int n);

} // namespace chs

#endif
