#include "chs/group.hpp"

#include "chs/linalg.hpp"

#include <algorithm>
#include <deque>

namespace chs {

FiniteGroup FiniteGroup::generate(int dim, const std::vector<QMat>& gens, size_t cap) {
  FiniteGroup g;
  g.dim_ = dim;
  QMat id = QMat::identity(dim);
  g.mats_.push_back(id);
  g.index_[id] = 0;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (const QMat& s : gens) {
      QMat p = g.mats_[cur] * s;
      if (g.index_.count(p)) continue;
      if (g.mats_.size() >= cap)
        fail_data("group closure exceeded the element cap of " + std::to_string(cap));
      g.index_[p] = int(g.mats_.size());
      g.mats_.push_back(std::move(p));
      queue.push_back(int(g.mats_.size()) - 1);
    }
  }
  g.finish();
  return g;
}

int FiniteGroup::index_of(const QMat& m) const {
  auto it = index_.find(m);
  return it == index_.end() ? -1 : it->second;
}

void FiniteGroup::finish() {
  size_t n = mats_.size();
  table_.assign(n * n, -1);
  inverse_.assign(n, -1);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      int p = index_of(mats_[a] * mats_[b]);
      if (p < 0) throw std::logic_error("FiniteGroup: set is not closed under products");
      table_[a * n + b] = p;
      if (p == 0) inverse_[a] = int(b);
    }
  classOf_.assign(n, -1);
  classes_.clear();
  for (size_t e = 0; e < n; ++e) {
    if (classOf_[e] >= 0) continue;
    std::vector<int> cls;
    for (size_t x = 0; x < n; ++x) {
      int c = mul(mul(int(x), int(e)), inverse_[x]);
      if (classOf_[c] < 0) {
        classOf_[c] = int(classes_.size());
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes_.push_back(std::move(cls));
  }
}

std::vector<int> FiniteGroup::subgroup(const std::vector<int>& gens) const {
  std::vector<bool> seen(order(), false);
  std::vector<int> out{0};
  seen[0] = true;
  for (size_t i = 0; i < out.size(); ++i)
    for (int s : gens) {
      int p = mul(out[i], s);
      if (!seen[p]) {
        seen[p] = true;
        out.push_back(p);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace chs
