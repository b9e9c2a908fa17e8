#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "zsl/util.hpp"

namespace zsl {

// Subset of Z/n as an n-bit set, n >= 1.  Bit i = membership of residue i.
// Word 0 holds residues 0..63, word 1 residues 64..127, and so on.  Sets
// with n <= 64 never touch the heap: the overflow vector stays empty.
class CyclicSet {
 public:
  CyclicSet() : n_(1), w0_(0) {}

  explicit CyclicSet(int n) : n_(check_n(n)), w0_(0) {
    if (n_ > 64) rest_.assign(words() - 1, 0);
  }

  CyclicSet(int n, const std::vector<i64>& elems) : CyclicSet(n) {
    for (i64 e : elems) add(e);
  }

  static CyclicSet from_mask(int n, u64 mask) {
    CyclicSet s(n);
    if (n < 64 && (mask >> n) != 0) throw usage_error("from_mask: bits outside range");
    s.w0_ = mask;
    return s;
  }

  static CyclicSet full(int n) { return CyclicSet(n).complemented(); }

  static CyclicSet interval(int n, i64 lo, i64 len) {
    CyclicSet s(n);
    for (i64 i = 0; i < len; ++i) s.add(lo + i);
    return s;
  }

  int modulus() const { return n_; }
  u64 mask0() const { return w0_; }

  bool test(i64 x) const {
    i64 r = mod_floor(x, n_);
    return (word(static_cast<int>(r >> 6)) >> (r & 63)) & 1;
  }

  void add(i64 x) {
    i64 r = mod_floor(x, n_);
    word_ref(static_cast<int>(r >> 6)) |= u64{1} << (r & 63);
  }

  void remove(i64 x) {
    i64 r = mod_floor(x, n_);
    word_ref(static_cast<int>(r >> 6)) &= ~(u64{1} << (r & 63));
  }

  int cardinality() const {
    int c = popcount64(w0_);
    for (u64 w : rest_) c += popcount64(w);
    return c;
  }

  bool empty() const {
    if (w0_) return false;
    for (u64 w : rest_) if (w) return false;
    return true;
  }

  bool is_full() const { return cardinality() == n_; }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(cardinality());
    for_each([&](int x) { out.push_back(x); });
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    for (int wi = 0; wi < words(); ++wi) {
      u64 w = word(wi);
      while (w) {
        int b = ctz64(w);
        f(wi * 64 + b);
        w &= w - 1;
      }
    }
  }

  bool operator==(const CyclicSet& o) const {
    return n_ == o.n_ && w0_ == o.w0_ && rest_ == o.rest_;
  }
  bool operator!=(const CyclicSet& o) const { return !(*this == o); }

  // Member-first order: compare indicator strings from residue 0 upward
  // with member < non-member.  Total order on subsets of a fixed Z/n.
  static int compare(const CyclicSet& a, const CyclicSet& b) {
    if (a.n_ != b.n_) throw usage_error("compare: modulus mismatch");
    for (int wi = 0; wi < a.words(); ++wi) {
      u64 x = a.word(wi) ^ b.word(wi);
      if (x) {
        u64 low = x & (~x + 1);
        return (a.word(wi) & low) ? -1 : 1;
      }
    }
    return 0;
  }

  bool subset_of(const CyclicSet& o) const {
    for (int wi = 0; wi < words(); ++wi)
      if (word(wi) & ~o.word(wi)) return false;
    return true;
  }

  CyclicSet complemented() const {
    CyclicSet r(*this);
    r.w0_ = ~r.w0_;
    for (u64& w : r.rest_) w = ~w;
    r.trim();
    return r;
  }

  CyclicSet intersect(const CyclicSet& o) const {
    require_same(o);
    CyclicSet r(*this);
    r.w0_ &= o.w0_;
    for (std::size_t i = 0; i < rest_.size(); ++i) r.rest_[i] &= o.rest_[i];
    return r;
  }

  CyclicSet unite(const CyclicSet& o) const {
    require_same(o);
    CyclicSet r(*this);
    r.w0_ |= o.w0_;
    for (std::size_t i = 0; i < rest_.size(); ++i) r.rest_[i] |= o.rest_[i];
    return r;
  }

  // x -> x + t.
  CyclicSet rotated(i64 t) const {
    t = mod_floor(t, n_);
    if (t == 0) return *this;
    CyclicSet r(n_);
    if (n_ <= 64) {
      r.w0_ = rot_mask(w0_, static_cast<int>(t), n_);
    } else {
      for_each([&](int x) { r.add(x + t); });
    }
    return r;
  }

  // x -> u * x; requires gcd(u, n) = 1.
  CyclicSet dilated(i64 u) const {
    u = mod_floor(u, n_);
    if (std::gcd(u, static_cast<i64>(n_)) != 1)
      throw usage_error("dilated: unit required");
    CyclicSet r(n_);
    for_each([&](int x) { r.add(static_cast<i64>(x) * u); });
    return r;
  }

  // x -> -x.
  CyclicSet negated() const {
    CyclicSet r(n_);
    for_each([&](int x) { r.add(-static_cast<i64>(x)); });
    return r;
  }

  static u64 rot_mask(u64 m, int t, int n) {
    if (t == 0) return m;
    u64 full = (n == 64) ? ~u64{0} : ((u64{1} << n) - 1);
    return ((m << t) | (m >> (n - t))) & full;
  }

 private:
  int n_;
  u64 w0_;
  std::vector<u64> rest_;

  static int check_n(int n) {
    if (n < 1) throw usage_error("CyclicSet: modulus must be positive");
    return n;
  }

  int words() const { return (n_ + 63) >> 6; }
  u64 word(int i) const { return i == 0 ? w0_ : rest_[i - 1]; }
  u64& word_ref(int i) { return i == 0 ? w0_ : rest_[i - 1]; }

  void trim() {
    int top = (n_ - 1) >> 6;
    u64 full = (n_ & 63) ? ((u64{1} << (n_ & 63)) - 1) : ~u64{0};
    if (top == 0) {
      w0_ &= full;
    } else {
      rest_[top - 1] &= full;
    }
  }

  void require_same(const CyclicSet& o) const {
    if (n_ != o.n_) throw usage_error("CyclicSet: modulus mismatch");
  }

  friend CyclicSet sumset(const CyclicSet&, const CyclicSet&);
  friend CyclicSet stabilizer(const CyclicSet&);
};

// A + B = {a + b}.  Empty operand gives the empty set.
inline CyclicSet sumset(const CyclicSet& a, const CyclicSet& b) {
  if (a.modulus() != b.modulus()) throw usage_error("sumset: modulus mismatch");
  const CyclicSet& small = a.cardinality() <= b.cardinality() ? a : b;
  const CyclicSet& big = a.cardinality() <= b.cardinality() ? b : a;
  CyclicSet r(a.modulus());
  if (a.modulus() <= 64) {
    int n = a.modulus();
    u64 acc = 0;
    small.for_each([&](int t) { acc |= CyclicSet::rot_mask(big.w0_, t, n); });
    r.w0_ = acc;
  } else {
    small.for_each([&](int t) {
      big.for_each([&](int x) { r.add(static_cast<i64>(x) + t); });
    });
  }
  return r;
}

// A - B = A + (-B).
inline CyclicSet difference_set(const CyclicSet& a, const CyclicSet& b) {
  if (a.modulus() != b.modulus()) throw usage_error("difference_set: modulus mismatch");
  return sumset(a, b.negated());
}

// H(A) = {x : x + A = A}.  Convention: H(empty) = G.
inline CyclicSet stabilizer(const CyclicSet& a) {
  int n = a.modulus();
  CyclicSet h(n);
  if (a.empty()) return CyclicSet::full(n);
  if (n <= 64) {
    for (int t = 0; t < n; ++t)
      if (CyclicSet::rot_mask(a.w0_, t, n) == a.w0_) h.add(t);
  } else {
    for (int t = 0; t < n; ++t)
      if (a.rotated(t) == a) h.add(t);
  }
  return h;
}

// Affine map x -> u*x + v on Z/n; u must be a unit.
struct AffineMap {
  int n;
  i64 u;
  i64 v;

  AffineMap(int n_, i64 u_, i64 v_) : n(n_), u(mod_floor(u_, n_)), v(mod_floor(v_, n_)) {
    if (std::gcd(u, static_cast<i64>(n)) != 1)
      throw usage_error("AffineMap: multiplier must be a unit");
  }

  CyclicSet operator()(const CyclicSet& a) const {
    if (a.modulus() != n) throw usage_error("AffineMap: modulus mismatch");
    return a.dilated(u).rotated(v);
  }

  i64 operator()(i64 x) const { return mod_floor(u * x + v, n); }
};

struct CanonicalPair {
  CyclicSet A;
  CyclicSet B;
  i64 u;   // shared dilation
  i64 vA;  // translation applied to A
  i64 vB;  // translation applied to B
};

// Joint affine canonical form: minimize (key(u*A + vA), key(u*B + vB)) in the
// member-first order, A-key first; ties broken by ascending (u, vA, vB).
inline CanonicalPair canonical_pair(const CyclicSet& a, const CyclicSet& b) {
  if (a.modulus() != b.modulus()) throw usage_error("canonical_pair: modulus mismatch");
  int n = a.modulus();
  bool have = false;
  CanonicalPair best{a, b, 1, 0, 0};
  for (i64 u = 1; u < n || (n == 1 && u == 1); ++u) {
    if (std::gcd(u, static_cast<i64>(n)) != 1) continue;
    CyclicSet ua = a.dilated(u);
    CyclicSet ub = b.dilated(u);
    // Smallest translate of u*A, smallest vA on key ties.  The B key does not
    // depend on vA, so the first minimizing vA is the canonical witness.
    CyclicSet bestA = ua;
    i64 va0 = 0;
    for (i64 v = 1; v < n; ++v) {
      CyclicSet cand = ua.rotated(v);
      if (CyclicSet::compare(cand, bestA) < 0) {
        bestA = cand;
        va0 = v;
      }
    }
    CyclicSet bestB = ub;
    i64 vb0 = 0;
    for (i64 v = 1; v < n; ++v) {
      CyclicSet cand = ub.rotated(v);
      if (CyclicSet::compare(cand, bestB) < 0) {
        bestB = cand;
        vb0 = v;
      }
    }
    if (!have) {
      best = {bestA, bestB, u, va0, vb0};
      have = true;
    } else {
      int ca = CyclicSet::compare(bestA, best.A);
      if (ca < 0 || (ca == 0 && CyclicSet::compare(bestB, best.B) < 0))
        best = {bestA, bestB, u, va0, vb0};
    }
    if (n == 1) break;
  }
  return best;
}

// |A+B| - (|H+A| + |H+B| - |H|) with H = H(A+B).  Nonnegative for nonempty A, B.
inline i64 kneser_slack(const CyclicSet& a, const CyclicSet& b) {
  if (a.empty() || b.empty()) throw usage_error("kneser_slack: nonempty sets required");
  CyclicSet s = sumset(a, b);
  CyclicSet h = stabilizer(s);
  i64 lhs = s.cardinality();
  i64 rhs = sumset(h, a).cardinality() + sumset(h, b).cardinality() - h.cardinality();
  return lhs - rhs;
}

}  // namespace zsl
