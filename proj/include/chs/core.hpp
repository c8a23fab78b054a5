// Basic numeric types and error classes shared by every module.

#ifndef CHS_CORE_HPP_
#define CHS_CORE_HPP_

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace chs {

using Q = mpq_class;
using Z = mpz_class;
using QVec = std::vector<Q>;
using IVec = std::vector<long>;

// Malformed input: spec files, table files, command lines.  Exit code 2.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A verification that should hold by theorem did not.  Exit code 1.
struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

[[noreturn]] inline void fail_data(const std::string& msg) { throw DataError(msg); }
[[noreturn]] inline void fail_check(const std::string& msg) { throw CheckFailure(msg); }

// Dense integer matrix, row-major.  Weyl group elements live here.
struct IMat {
  int rows = 0, cols = 0;
  std::vector<long> a;

  IMat() = default;
  IMat(int r, int c) : rows(r), cols(c), a(size_t(r) * c, 0) {}
  static IMat identity(int n) {
    IMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  long& operator()(int i, int j) { return a[size_t(i) * cols + j]; }
  long operator()(int i, int j) const { return a[size_t(i) * cols + j]; }
  auto operator<=>(const IMat&) const = default;
};

// Dense rational matrix, row-major.
struct QMat {
  int rows = 0, cols = 0;
  std::vector<Q> a;

  QMat() = default;
  QMat(int r, int c) : rows(r), cols(c), a(size_t(r) * c, Q(0)) {}
  static QMat identity(int n) {
    QMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  explicit QMat(const IMat& m) : rows(m.rows), cols(m.cols), a(m.a.begin(), m.a.end()) {}
  Q& operator()(int i, int j) { return a[size_t(i) * cols + j]; }
  const Q& operator()(int i, int j) const { return a[size_t(i) * cols + j]; }
  bool operator==(const QMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
  bool operator<(const QMat& o) const {
    if (rows != o.rows) return rows < o.rows;
    if (cols != o.cols) return cols < o.cols;
    return a < o.a;
  }
};

IMat operator*(const IMat& x, const IMat& y);
QMat operator*(const QMat& x, const QMat& y);
IVec operator*(const IMat& m, const IVec& v);
QVec operator*(const IMat& m, const QVec& v);
QVec operator*(const QMat& m, const QVec& v);

// row vector times matrix; used to transport functionals
IVec row_times(const IVec& f, const IMat& m);
QVec row_times(const QVec& f, const QMat& m);

Q dot(const IVec& f, const QVec& x);
Q dot(const QVec& f, const QVec& x);
long dot(const IVec& f, const IVec& x);

QVec to_q(const IVec& v);
QVec operator+(const QVec& x, const QVec& y);
QVec operator-(const QVec& x, const QVec& y);
QVec operator*(const Q& s, const QVec& x);
bool is_zero(const QVec& v);
bool is_integral(const QVec& v);
IVec to_int(const QVec& v); // requires integral entries

std::string to_string(const Q& q);
std::string to_string(const QVec& v);
std::string to_string(const IVec& v);

long floor_q(const Q& q);

// a/b in lowest terms (mpq_class(a, b) does not canonicalize)
inline Q frac(long a, long b) {
  Q q(a, b);
  q.canonicalize();
  return q;
}

} // namespace chs

#endif
