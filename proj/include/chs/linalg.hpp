// Exact linear algebra over Q and Z.

#ifndef CHS_LINALG_HPP_
#define CHS_LINALG_HPP_

#include "chs/core.hpp"

#include <optional>

namespace chs {

int rank(std::vector<QVec> rows);
bool in_span(const std::vector<QVec>& vecs, const QVec& v);

// Basis of {x in Q^n : f(x) = 0 for every row f}.  Deterministic
// (one vector per free column of the reduced echelon form).
std::vector<QVec> kernel(const std::vector<QVec>& rows, int n);

// Some solution of A x = b (free variables set to zero), if any.
std::optional<QVec> solve(const QMat& A, const QVec& b);

Q det(QMat m);
QMat inverse(const QMat& m); // throws DataError if singular
QMat transpose(const QMat& m);

// Integer lattice routines.  Rows of `rows` are functionals on Z^n.

// Z-basis of {x in Z^n : f(x) = 0 for every row}.
std::vector<IVec> integer_kernel(const std::vector<IVec>& rows, int n);

// Some x in Z^n with f_i(x) = t_i, if one exists.
std::optional<IVec> integer_solve(const std::vector<IVec>& rows, int n, const QVec& t);

// Z-basis of the lattice spanned by `gens` inside Z^n.
std::vector<IVec> lattice_basis(const std::vector<IVec>& gens, int n);

// Invariant factors (nonzero diagonal of the Smith form) of the matrix
// whose rows are given.
std::vector<Z> smith_invariants(const std::vector<IVec>& rows, int n);

// Smallest positive integer d with d*v integral.
Z common_denominator(const QVec& v);

} // namespace chs

#endif
