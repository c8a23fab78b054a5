// Finite matrix groups with multiplication tables and conjugacy classes.

#ifndef CHS_GROUP_HPP_
#define CHS_GROUP_HPP_

#include "chs/core.hpp"

#include <map>

namespace chs {

inline constexpr size_t kDefaultElementCap = 1000000;

// A finite group given by a faithful rational matrix representation.
// Element 0 is the identity; the remaining order is the breadth-first
// order of the generating words, so it is reproducible.
class FiniteGroup {
public:
  FiniteGroup() = default;

  // Closure of the generators under multiplication.
  static FiniteGroup generate(int dim, const std::vector<QMat>& gens,
                              size_t cap = kDefaultElementCap);

  size_t order() const { return mats_.size(); }
  int dim() const { return dim_; }
  const QMat& matrix(int e) const { return mats_[e]; }
  int index_of(const QMat& m) const; // -1 when absent
  int mul(int a, int b) const { return table_[size_t(a) * order() + b]; }
  int inv(int a) const { return inverse_[a]; }

  int num_classes() const { return int(classes_.size()); }
  const std::vector<std::vector<int>>& classes() const { return classes_; }
  int class_of(int e) const { return classOf_[e]; }

  // Sorted element indices of the subgroup generated by `gens`.
  std::vector<int> subgroup(const std::vector<int>& gens) const;

private:
  void finish();

  int dim_ = 0;
  std::vector<QMat> mats_;
  std::map<QMat, int> index_;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> classOf_;
};

} // namespace chs

#endif
