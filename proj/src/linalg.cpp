#include "chs/linalg.hpp"

#include <algorithm>
#include <utility>

namespace chs {

IMat operator*(const IMat& x, const IMat& y) {
  IMat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      long v = x(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j) r(i, j) += v * y(k, j);
    }
  return r;
}

QMat operator*(const QMat& x, const QMat& y) {
  QMat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (sgn(x(i, k)) == 0) continue;
      for (int j = 0; j < y.cols; ++j) r(i, j) += x(i, k) * y(k, j);
    }
  return r;
}

IVec operator*(const IMat& m, const IVec& v) {
  IVec r(m.rows, 0);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) r[i] += m(i, j) * v[j];
  return r;
}

QVec operator*(const IMat& m, const QVec& v) {
  QVec r(m.rows, Q(0));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (m(i, j) != 0) r[i] += Q(m(i, j)) * v[j];
  return r;
}

QVec operator*(const QMat& m, const QVec& v) {
  QVec r(m.rows, Q(0));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) r[i] += m(i, j) * v[j];
  return r;
}

IVec row_times(const IVec& f, const IMat& m) {
  IVec r(m.cols, 0);
  for (int i = 0; i < m.rows; ++i)
    if (f[i] != 0)
      for (int j = 0; j < m.cols; ++j) r[j] += f[i] * m(i, j);
  return r;
}

QVec row_times(const QVec& f, const QMat& m) {
  QVec r(m.cols, Q(0));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) r[j] += f[i] * m(i, j);
  return r;
}

Q dot(const IVec& f, const QVec& x) {
  Q s = 0;
  for (size_t i = 0; i < f.size(); ++i)
    if (f[i] != 0) s += Q(f[i]) * x[i];
  return s;
}

Q dot(const QVec& f, const QVec& x) {
  Q s = 0;
  for (size_t i = 0; i < f.size(); ++i) s += f[i] * x[i];
  return s;
}

long dot(const IVec& f, const IVec& x) {
  long s = 0;
  for (size_t i = 0; i < f.size(); ++i) s += f[i] * x[i];
  return s;
}

QVec to_q(const IVec& v) { return QVec(v.begin(), v.end()); }

QVec operator+(const QVec& x, const QVec& y) {
  QVec r(x);
  for (size_t i = 0; i < r.size(); ++i) r[i] += y[i];
  return r;
}

QVec operator-(const QVec& x, const QVec& y) {
  QVec r(x);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= y[i];
  return r;
}

QVec operator*(const Q& s, const QVec& x) {
  QVec r(x);
  for (auto& e : r) e *= s;
  return r;
}

bool is_zero(const QVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Q& q) { return sgn(q) == 0; });
}

bool is_integral(const QVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Q& q) { return q.get_den() == 1; });
}

IVec to_int(const QVec& v) {
  IVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i].get_den() != 1 || !v[i].get_num().fits_slong_p())
      throw std::logic_error("to_int: entry " + v[i].get_str() + " is not a small integer");
    r[i] = v[i].get_num().get_si();
  }
  return r;
}

std::string to_string(const Q& q) { return q.get_str(); }

std::string to_string(const QVec& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += v[i].get_str();
  }
  return s;
}

std::string to_string(const IVec& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

long floor_q(const Q& q) {
  Z f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f.get_si();
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<int> rref(std::vector<QVec>& m, int ncols) {
  std::vector<int> pivots;
  size_t row = 0;
  for (int c = 0; c < ncols && row < m.size(); ++c) {
    size_t p = row;
    while (p < m.size() && sgn(m[p][c]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    Q inv = 1 / m[row][c];
    for (auto& e : m[row]) e *= inv;
    for (size_t r = 0; r < m.size(); ++r) {
      if (r == row || sgn(m[r][c]) == 0) continue;
      Q f = m[r][c];
      for (size_t j = 0; j < m[r].size(); ++j) m[r][j] -= f * m[row][j];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

using ZMat = std::vector<std::vector<Z>>;

ZMat to_z(const std::vector<IVec>& rows, int n) {
  ZMat m(rows.size(), std::vector<Z>(n));
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < n; ++j) m[i][j] = Z(static_cast<long>(rows[i][j]));
  return m;
}

long small(const Z& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer lattice entry too large");
  return z.get_si();
}

// Column-style Hermite reduction: A*U = H with H column echelon.
// Returns the number of pivot columns; H and U are updated in place.
struct ColumnEchelon {
  ZMat H, U;
  std::vector<int> pivotRow; // pivotRow[c] = row of the pivot in column c
  int rankCols = 0;
};

ColumnEchelon column_echelon(const std::vector<IVec>& rows, int n) {
  ColumnEchelon e;
  e.H = to_z(rows, n);
  e.U.assign(n, std::vector<Z>(n));
  for (int i = 0; i < n; ++i) e.U[i][i] = 1;
  auto col_op = [&](int dst, int src, const Z& f) { // col dst -= f * col src
    for (auto& r : e.H) r[dst] -= f * r[src];
    for (auto& r : e.U) r[dst] -= f * r[src];
  };
  auto col_swap = [&](int a, int b) {
    for (auto& r : e.H) std::swap(r[a], r[b]);
    for (auto& r : e.U) std::swap(r[a], r[b]);
  };
  auto col_neg = [&](int a) {
    for (auto& r : e.H) r[a] = -r[a];
    for (auto& r : e.U) r[a] = -r[a];
  };
  int c = 0;
  for (size_t i = 0; i < e.H.size() && c < n; ++i) {
    for (;;) {
      int best = -1;
      for (int j = c; j < n; ++j)
        if (e.H[i][j] != 0 && (best < 0 || abs(e.H[i][j]) < abs(e.H[i][best]))) best = j;
      if (best < 0) break;
      if (best != c) col_swap(best, c);
      bool done = true;
      for (int j = c + 1; j < n; ++j) {
        if (e.H[i][j] == 0) continue;
        Z q;
        mpz_fdiv_q(q.get_mpz_t(), e.H[i][j].get_mpz_t(), e.H[i][c].get_mpz_t());
        col_op(j, c, q);
        if (e.H[i][j] != 0) done = false;
      }
      if (done) break;
    }
    if (c < n && e.H[i][c] != 0) {
      if (e.H[i][c] < 0) col_neg(c);
      e.pivotRow.push_back(int(i));
      ++c;
    }
  }
  e.rankCols = c;
  return e;
}

} // namespace

int rank(std::vector<QVec> rows) {
  if (rows.empty()) return 0;
  return int(rref(rows, int(rows[0].size())).size());
}

bool in_span(const std::vector<QVec>& vecs, const QVec& v) {
  if (vecs.empty()) return is_zero(v);
  int r = rank(vecs);
  auto ext = vecs;
  ext.push_back(v);
  return rank(ext) == r;
}

std::vector<QVec> kernel(const std::vector<QVec>& rows, int n) {
  std::vector<QVec> m = rows;
  std::vector<int> piv = rref(m, n);
  std::vector<bool> isPivot(n, false);
  for (int p : piv) isPivot[p] = true;
  std::vector<QVec> basis;
  for (int f = 0; f < n; ++f) {
    if (isPivot[f]) continue;
    QVec v(n, Q(0));
    v[f] = 1;
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVec> solve(const QMat& A, const QVec& b) {
  std::vector<QVec> m(A.rows, QVec(A.cols + 1));
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) m[i][j] = A(i, j);
    m[i][A.cols] = b[i];
  }
  std::vector<int> piv = rref(m, A.cols + 1);
  if (!piv.empty() && piv.back() == A.cols) return std::nullopt;
  QVec x(A.cols, Q(0));
  for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = m[r][A.cols];
  return x;
}

Q det(QMat m) {
  int n = m.rows;
  Q d = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      d = -d;
    }
    d *= m(c, c);
    for (int r = c + 1; r < n; ++r) {
      if (sgn(m(r, c)) == 0) continue;
      Q f = m(r, c) / m(c, c);
      for (int j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return d;
}

QMat inverse(const QMat& A) {
  int n = A.rows;
  std::vector<QVec> m(n, QVec(2 * n, Q(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = A(i, j);
    m[i][n + i] = 1;
  }
  std::vector<int> piv = rref(m, n);
  if (int(piv.size()) != n) fail_data("inverse: singular matrix");
  QMat r(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r(i, j) = m[i][n + j];
  return r;
}

QMat transpose(const QMat& m) {
  QMat t(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) t(j, i) = m(i, j);
  return t;
}

std::vector<IVec> integer_kernel(const std::vector<IVec>& rows, int n) {
  ColumnEchelon e = column_echelon(rows, n);
  std::vector<IVec> basis;
  for (int c = e.rankCols; c < n; ++c) {
    IVec v(n);
    for (int i = 0; i < n; ++i) v[i] = small(e.U[i][c]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<IVec> integer_solve(const std::vector<IVec>& rows, int n, const QVec& t) {
  if (!is_integral(t)) return std::nullopt;
  ColumnEchelon e = column_echelon(rows, n);
  std::vector<Z> y(n);
  size_t nextPivot = 0;
  for (size_t i = 0; i < rows.size(); ++i) {
    Z rhs = t[i].get_num();
    int upto = (nextPivot < e.pivotRow.size() && e.pivotRow[nextPivot] == int(i)) ? int(nextPivot) : -1;
    int known = upto >= 0 ? upto : int(nextPivot);
    for (int j = 0; j < known; ++j) rhs -= e.H[i][j] * y[j];
    if (upto >= 0) {
      const Z& p = e.H[i][upto];
      if (!mpz_divisible_p(rhs.get_mpz_t(), p.get_mpz_t())) return std::nullopt;
      y[upto] = rhs / p;
      ++nextPivot;
    } else if (rhs != 0) {
      return std::nullopt;
    }
  }
  IVec x(n, 0);
  for (int i = 0; i < n; ++i) {
    Z s = 0;
    for (int j = 0; j < e.rankCols; ++j) s += e.U[i][j] * y[j];
    x[i] = small(s);
  }
  return x;
}

std::vector<IVec> lattice_basis(const std::vector<IVec>& gens, int n) {
  // generators as columns of an n x k matrix
  std::vector<IVec> rows(n, IVec(gens.size()));
  for (size_t k = 0; k < gens.size(); ++k)
    for (int i = 0; i < n; ++i) rows[i][k] = gens[k][i];
  ColumnEchelon e = column_echelon(rows, int(gens.size()));
  std::vector<IVec> basis;
  for (int c = 0; c < e.rankCols; ++c) {
    IVec v(n);
    for (int i = 0; i < n; ++i) v[i] = small(e.H[i][c]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Z> smith_invariants(const std::vector<IVec>& rows, int n) {
  ZMat m = to_z(rows, n);
  size_t R = m.size();
  std::vector<Z> diag;
  size_t t = 0;
  while (t < R && int(t) < n) {
    // pick the smallest nonzero entry in the remaining block
    size_t pi = R;
    int pj = -1;
    for (size_t i = t; i < R; ++i)
      for (int j = int(t); j < n; ++j)
        if (m[i][j] != 0 && (pj < 0 || abs(m[i][j]) < abs(m[pi][pj]))) pi = i, pj = j;
    if (pj < 0) break;
    std::swap(m[pi], m[t]);
    for (auto& r : m) std::swap(r[pj], r[t]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = t + 1; i < R; ++i) {
        Z q;
        mpz_fdiv_q(q.get_mpz_t(), m[i][t].get_mpz_t(), m[t][t].get_mpz_t());
        for (int j = int(t); j < n; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) {
          clean = false;
          std::swap(m[i], m[t]);
        }
      }
      for (int j = int(t) + 1; j < n; ++j) {
        Z q;
        mpz_fdiv_q(q.get_mpz_t(), m[t][j].get_mpz_t(), m[t][t].get_mpz_t());
        for (size_t i = t; i < R; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) {
          clean = false;
          for (auto& r : m) std::swap(r[j], r[t]);
        }
      }
      if (clean) {
        // divisibility condition: pivot must divide the rest of the block
        for (size_t i = t + 1; i < R && clean; ++i)
          for (int j = int(t) + 1; j < n; ++j)
            if (!mpz_divisible_p(m[i][j].get_mpz_t(), m[t][t].get_mpz_t())) {
              for (int k = int(t); k < n; ++k) m[t][k] += m[i][k];
              clean = false;
              break;
            }
      }
    }
    diag.push_back(abs(m[t][t]));
    ++t;
  }
  return diag;
}

Z common_denominator(const QVec& v) {
  Z d = 1;
  for (const Q& q : v) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), q.get_den_mpz_t());
  return d;
}

} // namespace chs
