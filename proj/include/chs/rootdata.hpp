// Root data, Weyl groups, Levi subdata, simple-type decomposition and
// invariant forms.
//
// Coordinates: the cocharacter lattice X_* is Z^n with its standard basis
// and X^* is the dual Z^n, so a root is an integer row vector acting on
// points of t = X_* (x) Q by the dot product.  Input files with a
// non-standard pairing are converted on load.

#ifndef CHS_ROOTDATA_HPP_
#define CHS_ROOTDATA_HPP_

#include "chs/core.hpp"
#include "chs/group.hpp"

#include <map>
#include <optional>
#include <string>

namespace chs {

struct RootDatum {
  std::string name;
  int rank = 0;                 // dim t
  std::vector<IVec> roots;      // positives first (by height), then negatives in the same order
  std::vector<IVec> coroots;    // coroots[i] matches roots[i]
  std::vector<int> simple;      // indices of the simple roots
  std::vector<bool> positive;
  std::vector<int> negation;    // negation[i] = index of -roots[i]
  std::vector<IVec> coeffs;     // root as an integer combination of the simple roots

  int num_roots() const { return int(roots.size()); }
  int num_positive() const { return int(roots.size()) / 2; }
  int semisimple_rank() const { return int(simple.size()); }
  int root_index(const IVec& r) const; // -1 when r is not a root
  Q eval(int root, const QVec& x) const;
};

// Validates and canonicalizes.  When `simple` is empty a base is chosen
// from a generic linear functional.
RootDatum make_root_datum(std::string name, int rank, std::vector<IVec> roots,
                          std::vector<IVec> coroots, std::vector<int> simple = {});

// Named presets: "A2 sc", "B2 ad", "A3 m2", "G2", "GL(3)", "SL(2)", "PGL(3)",
// "T(2)", and products joined by " x ".
RootDatum preset_root_datum(const std::string& type);

// Structured text (one `key = value` per line, values in JSON syntax).
RootDatum parse_root_datum(const std::string& text);
RootDatum load_root_datum(const std::string& path);

struct WeylGroup {
  FiniteGroup group;
  std::vector<IMat> mats;                 // action on X_*
  std::vector<IMat> inverses;
  std::vector<std::vector<int>> rootPerm; // rootPerm[w][i] = index of w(roots[i])
  std::vector<int> length;
  std::vector<int> reflection;            // element index of s_alpha per root
  std::map<IMat, int> index;

  size_t order() const { return mats.size(); }
  int index_of(const IMat& m) const;
};

WeylGroup weyl_group(const RootDatum& rd, size_t cap = kDefaultElementCap);

// Reflection s_alpha(x) = x - alpha(x) alpha^vee as a matrix on X_*.
IMat reflection_matrix(const RootDatum& rd, int root);

struct Levi {
  RootDatum datum;
  std::vector<int> rootMap;        // Levi root index -> ambient root index
  std::vector<int> simplePositions; // positions inside the ambient `simple`
};

// `subset` holds positions into rd.simple.
Levi levi_subdatum(const RootDatum& rd, const std::vector<int>& subset);

struct SimpleFactor {
  char letter = '?';      // A, B, C, D, G, or '?' for unsupported shapes
  int rank = 0;
  std::string key;        // sc, ad, or Z<d> for intermediate isogenies
  Z pi1Order = 1;         // order of the factor's own fundamental group
  std::vector<int> base;  // Bourbaki-ordered simple roots of the factor
  std::vector<int> roots; // all roots of the factor, sorted
  std::string type() const { return std::string(1, letter) + std::to_string(rank); }
};

struct TypeDecomposition {
  std::vector<SimpleFactor> factors;
  int centralRank = 0;
  // invariant factors of (X_* meet span of the coroots) / (coroot
  // lattice): the fundamental group of the derived subgroup
  std::vector<Z> pi1;
  std::string str() const;
};

// Decomposition of a reflection-closed root subset.  Throws DataError
// when the subset is not closed under its own reflections.
TypeDecomposition simple_type_decomposition(const RootDatum& rd, const std::vector<int>& subsystem);

// Degrees of the basic invariants of the Weyl group of a simple type.
std::vector<int> fundamental_degrees(char letter, int rank);

struct InvariantForm {
  QMat gram; // on t in the coordinates of X_*
  Q operator()(const QVec& x, const QVec& y) const;
};

InvariantForm invariant_form(const RootDatum& rd);

// Cartan matrix C[i][j] = <alpha_i^vee, alpha_j> for the given roots.
std::vector<std::vector<long>> cartan_matrix(const RootDatum& rd, const std::vector<int>& base);

} // namespace chs

#endif
