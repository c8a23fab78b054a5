// Parabolic induction and restriction at the level of graded characters of
// relative Weyl groups (finite model), orbit incidence of affine blocks
// (affine model), and the Springer-sheaf series.

#ifndef CHS_INDRES_HPP_
#define CHS_INDRES_HPP_

#include "chs/blocks.hpp"
#include "chs/character.hpp"

#include <random>

namespace chs {

// Relative Weyl group N_{W_L}(W_M)/W_M of one cuspidal datum of a standard
// Levi L, acting faithfully on z_M.
struct KGroup {
  CuspidalDatum datum;
  std::shared_ptr<FiniteGroup> group;
  std::vector<int> quotientOf; // per element of W (of G), -1 outside N_{W_L}(W_M)
  std::vector<int> repOf;      // per quotient element, an element of W mapping to it
  CharacterTable table;
};

// The set K_L for the standard Levi spanned by rd.simple[k], k in J, with
// everything expressed inside the apartment of G.
struct LeviK {
  std::vector<int> J;
  std::vector<int> roots; // Phi_L
  std::vector<int> WL;    // W_L as elements of W, sorted
  std::vector<KGroup> data;
};

LeviK levi_K(const Apartment& ap, const ClassificationTable& table, const std::vector<int>& J);
std::vector<int> all_simple(const Apartment& ap);

// For each datum of L: its index in K_G and the homomorphism W_L^kappa -> W_G^kappa.
struct KEmbedding {
  int target = -1;
  int conjugator = 0;      // w in W_G carrying the L-datum onto the G-datum
  std::vector<int> map;    // quotient element of L -> quotient element of G
};

std::vector<KEmbedding> k_embeddings(const Apartment& ap, const LeviK& G, const LeviK& L);

using KClass = std::map<int, GradedCharacter>; // datum index -> character

KClass res_K(const Apartment& ap, const LeviK& G, const LeviK& L, const KClass& x);
KClass ind_K(const Apartment& ap, const LeviK& G, const LeviK& L, const KClass& y);
bool kclass_equal(const KClass& a, const KClass& b);

// Every irreducible of every datum, in degree 0.
std::vector<std::pair<int, GradedCharacter>> irreducible_basis(const LeviK& K);

struct FrobeniusReport {
  long pairsChecked = 0;
  long violations = 0;
  bool indexOk = true; // dim(ind x) = [W_G^kappa : W_L^kappa] dim(x)
  bool pass() const { return violations == 0 && indexOk; }
};

// Exhaustive over irreducible pairs, plus `samples` random graded
// combinations drawn with `rng`.
FrobeniusReport frobenius_check(const Apartment& ap, const LeviK& G, const LeviK& L, int samples,
                                std::mt19937_64& rng);

// res(G->M) = res(L->M) res(G->L) and ind(M->G) = ind(L->G) ind(M->L) on the
// irreducible bases, for nested standard Levis M in L in G.
bool transitivity_check(const Apartment& ap, const LeviK& G, const LeviK& L, const LeviK& M);

// res ind of the trivial principal character of W_L compared with the
// permutation character of W_L on W/W_L, and the multiplicity of the
// trivial character with the number of double cosets.
struct MackeyReport {
  long doubleCosets = 0;
  LaurentPoly trivialMultiplicity;
  bool characterMatches = false;
  bool pass() const { return characterMatches && trivialMultiplicity == LaurentPoly(Q(doubleCosets)); }
};

MackeyReport mackey_check(const Apartment& ap, const LeviK& G, const LeviK& L);

// Affine model: G-blocks against the blocks of the Levi L.
struct IncidenceRow {
  int lBlock = 0;
  int gBlock = 0;
  AffineWeylElement conjugator;               // carries the L-representative onto the G-representative
  std::vector<AffineWeylElement> generatorImages; // g h g^-1 for generators h of K^L
};

struct IncidenceTable {
  AffineC g, l;
  std::vector<IncidenceRow> rows;
  long lTriplesChecked = 0; // triples of the L-fundamental domain whose G-block was recomputed
};

IncidenceTable affine_res_incidence(const Apartment& ap, const ClassificationTable& table, const std::vector<int>& J);

// Triple index of c equivalent under W~ to the triple (support point, rootsBar, borel, label).
struct TripleLocation {
  int triple = -1;
  AffineWeylElement g;
};
TripleLocation locate_triple(const Apartment& ap, const AffineC& c, const QVec& point,
                             const std::vector<int>& rootsBar, const std::vector<int>& borel,
                             const CuspidalLabel& label);

// Springer sheaf: |W| (1+t)^r / (1-t^2)^r, with r = dim t.
struct SpringerSeries {
  Z order;
  int r = 0;
  std::vector<Z> coefficients(int n) const;
  std::string str() const;
};

SpringerSeries springer_endo_series(const Apartment& ap);

struct SpringerRestriction {
  Z rank;                      // |W|
  std::vector<Z> endoSeries;   // End_C(C[W]) (x) H*(BT) (x) H*(T)
  std::vector<Z> bimoduleSeries; // rank^2 copies of H*(BT) (x) H*(T)
  bool pass() const { return endoSeries == bimoduleSeries; }
};

SpringerRestriction res_springer_rank(const Apartment& ap, int n);

// Sign character of W, and the truncated graded character
// g -> det(1 + t g) / det(1 - t^2 g) of H*(BT) (x) H*(T) on t^*.
struct DistinguishedCharacters {
  GradedCharacter sign;
  GradedCharacter cohomology; // truncated at t^n, variable written as q
};

DistinguishedCharacters distinguished_module_characters(const Apartment& ap, int n);

} // namespace chs

#endif
