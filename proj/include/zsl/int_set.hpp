#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "zsl/util.hpp"

namespace zsl {

// Finite subset of Z kept as a sorted, duplicate-free vector.
class IntSet {
 public:
  IntSet() = default;

  explicit IntSet(std::vector<i64> elems) : v_(std::move(elems)) {
    std::sort(v_.begin(), v_.end());
    v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
  }

  static IntSet interval(i64 lo, i64 len) {
    std::vector<i64> v;
    v.reserve(static_cast<std::size_t>(std::max<i64>(len, 0)));
    for (i64 i = 0; i < len; ++i) v.push_back(lo + i);
    return IntSet(std::move(v));
  }

  const std::vector<i64>& elements() const { return v_; }
  std::size_t size() const { return v_.size(); }
  bool empty() const { return v_.empty(); }
  i64 min() const { return v_.front(); }
  i64 max() const { return v_.back(); }
  bool contains(i64 x) const { return std::binary_search(v_.begin(), v_.end(), x); }

  bool operator==(const IntSet& o) const { return v_ == o.v_; }
  bool operator!=(const IntSet& o) const { return v_ != o.v_; }

  IntSet translated(i64 t) const {
    std::vector<i64> v = v_;
    for (i64& x : v) x += t;
    IntSet r;
    r.v_ = std::move(v);
    return r;
  }

  IntSet scaled(i64 c) const {
    std::vector<i64> v = v_;
    for (i64& x : v) x *= c;
    return IntSet(std::move(v));
  }

 private:
  std::vector<i64> v_;
};

inline IntSet sumset(const IntSet& a, const IntSet& b) {
  std::set<i64> acc;
  for (i64 x : a.elements())
    for (i64 y : b.elements()) acc.insert(x + y);
  IntSet r(std::vector<i64>(acc.begin(), acc.end()));
  return r;
}

// gcd of all pairwise differences; 0 for sets of size < 2.
inline i64 common_difference_gcd(const IntSet& a) {
  if (a.size() < 2) return 0;
  i64 g = 0;
  i64 base = a.min();
  for (i64 x : a.elements()) g = std::gcd(g, x - base);
  return g;
}

}  // namespace zsl
