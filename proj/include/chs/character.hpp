// Laurent polynomials in q, rational character tables of finite matrix
// groups, and graded characters with induction, restriction and pairing.

#ifndef CHS_CHARACTER_HPP_
#define CHS_CHARACTER_HPP_

#include "chs/group.hpp"

#include <memory>

namespace chs {

struct LaurentPoly {
  std::map<int, Q> c; // exponent -> nonzero coefficient

  LaurentPoly() = default;
  LaurentPoly(const Q& constant) { if (constant != 0) c[0] = constant; }
  static LaurentPoly monomial(const Q& a, int e);

  bool is_zero() const { return c.empty(); }
  Q coeff(int e) const;
  Q at_one() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator*(const Q& s) const;
  bool operator==(const LaurentPoly& o) const { return c == o.c; }
  std::string str(const std::string& var = "q") const;
};

// Irreducible characters, one row per character and one column per class
// of `group` (class order as in FiniteGroup::classes).  Rows are sorted by
// degree, ties broken by values in decreasing order, so the trivial
// character comes first.  Throws CheckFailure when the class algebra does
// not split over Q (a non-rational character).
struct CharacterTable {
  std::vector<std::vector<Q>> irr;
  size_t size() const { return irr.size(); }
};

CharacterTable character_table(const FiniteGroup& g);

// Class function with values in Laurent polynomials.  The group must
// outlive the character.
struct GradedCharacter {
  const FiniteGroup* group = nullptr;
  std::vector<LaurentPoly> values; // per class

  static GradedCharacter zero(const FiniteGroup& g);
  static GradedCharacter from_values(const FiniteGroup& g, const std::vector<Q>& v, int degree = 0);
  GradedCharacter operator+(const GradedCharacter& o) const;
  GradedCharacter operator*(const LaurentPoly& s) const;
  bool operator==(const GradedCharacter& o) const { return values == o.values; }
  LaurentPoly dimension() const; // value at the identity
  std::string str() const;
};

int identity_class(const FiniteGroup& g);

// Degreewise pairing: the coefficient of q^d is the class-averaged
// product of the q^d parts.
LaurentPoly pairing(const GradedCharacter& a, const GradedCharacter& b);

// `embed[h]` is the element of `big` that element h of `small` maps to.
GradedCharacter restrict_character(const GradedCharacter& x, const FiniteGroup& small, const std::vector<int>& embed);
GradedCharacter induce_character(const GradedCharacter& y, const FiniteGroup& big, const std::vector<int>& embed);

// Multiplicity of each irreducible in `x`, as a polynomial in q.
std::vector<LaurentPoly> decompose(const GradedCharacter& x, const CharacterTable& t);

} // namespace chs

#endif
