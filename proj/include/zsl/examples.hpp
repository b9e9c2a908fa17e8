#pragma once

#include <string>
#include <vector>

#include "zsl/progressions.hpp"
#include "zsl/trios.hpp"

namespace zsl {

// Shortest integer AP containing A: difference = gcd of differences, length
// span / d + 1.
inline ApCover int_min_cover(const IntSet& a) {
  if (a.empty()) throw usage_error("int_min_cover: empty set");
  i64 g = common_difference_gcd(a);
  if (g == 0) g = 1;
  ApCover c;
  c.n = 0;
  c.start = a.min();
  c.d = g;
  c.len = (a.max() - a.min()) / g + 1;
  return c;
}

struct ExampleFact {
  std::string name;
  i64 expected = 0;
  i64 actual = 0;
  bool ok = false;
};

// One instantiated construction, over Z (modulus == 0) or over Z/p.
struct ExampleResult {
  int id = 0;
  int modulus = 0;
  IntSet zA, zB;
  CyclicSet cA, cB;
  std::vector<ExampleFact> facts;
  bool all_ok = true;

  void fact(const std::string& name, i64 expected, i64 actual) {
    bool ok = expected == actual;
    facts.push_back({name, expected, actual, ok});
    all_ok = all_ok && ok;
  }
};

// Tightness family: A = {0, 2, ..., 2(r+1)} u [2r+3, m], B likewise with n.
// All three cover bounds hold with equality.
inline ExampleResult example1(i64 r, i64 m, i64 n) {
  if (r < -1 || n < 2 * r + 3 || m < n || m < 2 * r + 4)
    throw usage_error("example1: need r >= -1, m >= n >= 2r+3, m >= 2r+4");
  auto build = [&](i64 top) {
    std::vector<i64> v;
    for (i64 i = 0; i <= r + 1; ++i) v.push_back(2 * i);
    for (i64 x = 2 * r + 3; x <= top; ++x) v.push_back(x);
    return IntSet(std::move(v));
  };
  ExampleResult out;
  out.id = 1;
  out.zA = build(m);
  out.zB = build(n);
  IntSet s = sumset(out.zA, out.zB);
  out.fact("size_A", m - r, static_cast<i64>(out.zA.size()));
  out.fact("size_B", n - r, static_cast<i64>(out.zB.size()));
  out.fact("size_AB", m + n - r, static_cast<i64>(s.size()));
  Verdict3k4Z v = verify_3k4_integers(out.zA, out.zB);
  out.fact("r", r, v.r);
  out.fact("pa_tight", static_cast<i64>(out.zA.size()) + v.r + 1, v.pa.len);
  out.fact("pb_tight", static_cast<i64>(out.zB.size()) + v.r + 1, v.pb.len);
  out.fact("pab_tight", static_cast<i64>(out.zA.size() + out.zB.size()) - 1, v.pab.len);
  return out;
}

// Two-interval square: A = B = [0, r+1] u [M, M+1) shifted so |A| = r+3 and
// |2A| = 3|A| - 3.  The translate flag raises the hypothesis bar by one and
// the integer cover of A is forced to length M + 1.
inline ExampleResult example2(i64 r, i64 M) {
  if (r < 0 || M < 2 * r + 5) throw usage_error("example2: need r >= 0, M >= 2r+5");
  std::vector<i64> v;
  for (i64 i = 0; i <= r + 1; ++i) v.push_back(i);  // block of size r+2
  v.push_back(M);                                   // block of size 1
  ExampleResult out;
  out.id = 2;
  out.zA = IntSet(std::move(v));
  out.zB = out.zA;
  IntSet s = sumset(out.zA, out.zA);
  i64 k = static_cast<i64>(out.zA.size());
  out.fact("size_A", r + 3, k);
  out.fact("size_2A", 3 * k - 3, static_cast<i64>(s.size()));
  Verdict3k4Z vv = verify_3k4_integers(out.zA, out.zB);
  out.fact("delta", 1, vv.delta);
  // |2A| exceeds the hypothesis bound |A| + 2|A| - 3 - delta by exactly 1.
  out.fact("hypothesis_gap", 1,
           static_cast<i64>(s.size()) - (3 * k - 3 - vv.delta));
  ApCover c = int_min_cover(out.zA);
  out.fact("min_cover_len", M + 1, c.len);
  out.fact("cover_excess", M + 1 - (k + r + 1), c.len - (k + r + 1));
  return out;
}

// Interval plus far point against an interval: |A+B| = |A| + 2|B| - 2, one
// above the hypothesis bound, and the cover of A is forced to length M + 1.
inline ExampleResult example3(i64 r, i64 M, i64 asize) {
  if (r < -1 || asize < std::max<i64>(r + 2, 3) || M < asize + r + 1)
    throw usage_error("example3: need r >= -1, asize >= max(r+2, 3), M >= asize+r+1");
  std::vector<i64> v;
  for (i64 i = 0; i + 1 < asize; ++i) v.push_back(i);
  v.push_back(M);
  ExampleResult out;
  out.id = 3;
  out.zA = IntSet(std::move(v));
  out.zB = IntSet::interval(0, r + 2);
  IntSet s = sumset(out.zA, out.zB);
  i64 ka = asize, kb = r + 2;
  out.fact("size_AB", ka + 2 * kb - 2, static_cast<i64>(s.size()));
  Verdict3k4Z vv = verify_3k4_integers(out.zA, out.zB);
  out.fact("hypothesis_gap", 1 + vv.delta,
           static_cast<i64>(s.size()) - (ka + 2 * kb - 3 - vv.delta));
  ApCover c = int_min_cover(out.zA);
  out.fact("min_cover_len", M + 1, c.len);
  return out;
}

// Cyclic completion of an interval trio: C = [0, r+1], B a split interval,
// A = -(B+C)^c.  C is saturated in B + C, so A + B = -C^c and the pair sits
// one above the complement-side hypothesis bound.
inline ExampleResult example4(i64 r, i64 M, i64 b1, i64 b2, i64 p) {
  if (r < -1 || b1 < 1 || b2 < 1 || M < b1 + r + 1)
    throw usage_error("example4: need r >= -1, b1, b2 >= 1, M >= b1+r+1");
  // second bound keeps e+M from wrapping back into [0, b1+r], which would
  // let C grow without changing B+C
  if (!is_prime(p) || p < M + b2 + 2 * r + 4 || p < 2 * M + b2 + r + 2 - b1)
    throw usage_error(
        "example4: p must be prime, at least M+b2+2r+4 and at least 2M+b2+r+2-b1");
  ExampleResult out;
  out.id = 4;
  out.modulus = static_cast<int>(p);
  CyclicSet b(static_cast<int>(p)), c0(static_cast<int>(p));
  for (i64 i = 0; i < b1; ++i) b.add(i);
  for (i64 i = 0; i < b2; ++i) b.add(M + i);
  for (i64 i = 0; i <= r + 1; ++i) c0.add(i);
  CyclicSet bc = sumset(b, c0);
  CyclicSet a = bc.complemented().negated();
  out.cA = a;
  out.cB = b;
  Trio t(a, b, c0);
  out.fact("r", r, t.r());
  // Pair saturation of C in C + B drives the dual identity A + B = -C^c.
  VosperDual vd = vosper_dual(c0, b);
  out.fact("saturated_C", 1, vd.saturated ? 1 : 0);
  CyclicSet ab = sumset(a, b);
  out.fact("AB_is_dual_of_C", 1, ab == c0.complemented().negated() ? 1 : 0);
  out.fact("size_AB", p - r - 2, ab.cardinality());
  DeltaFlags df = delta_flags(t);
  // |A+B| exceeds p - r - 3 - delta_C by exactly 1 + delta_C.
  out.fact("hypothesis_gap", 1 + df.dC, ab.cardinality() - (p - r - 3 - df.dC));
  return out;
}

// Self-dual split interval: B = {0} u [M, M+r+1], A = -(2B)^c.  Then
// A + B = -B^c, C = B, and the pair misses the hypothesis by exactly one.
inline ExampleResult example5(i64 r, i64 M, i64 p) {
  if (r < 0 || M < r + 3) throw usage_error("example5: need r >= 0, M >= r+3");
  if (!is_prime(p) || p < 2 * M + 2 * r + 4)
    throw usage_error("example5: p must be prime and at least 2M+2r+4");
  ExampleResult out;
  out.id = 5;
  out.modulus = static_cast<int>(p);
  CyclicSet b(static_cast<int>(p));
  b.add(0);
  for (i64 i = 0; i <= r + 1; ++i) b.add(M + i);
  CyclicSet bb = sumset(b, b);
  CyclicSet a = bb.complemented().negated();
  out.cA = a;
  out.cB = b;
  out.fact("size_B", r + 3, b.cardinality());
  out.fact("size_2B", 3 * (r + 3) - 3, bb.cardinality());
  out.fact("saturated_B", 1, vosper_dual(b, b).saturated ? 1 : 0);
  CyclicSet ab = sumset(a, b);
  out.fact("AB_is_dual_of_B", 1, ab == b.complemented().negated() ? 1 : 0);
  out.fact("size_AB", p - r - 3, ab.cardinality());
  CyclicSet c = ab.complemented().negated();
  out.fact("C_equals_B", 1, c == b ? 1 : 0);
  DeltaFlags df = delta_flags(Trio(a, b, c));
  out.fact("delta_C", 1, df.dC);
  out.fact("hypothesis_gap", 1, ab.cardinality() - (p - r - 3 - df.dC));
  out.fact("cover_excess_B", min_cover(b).len - (r + 3 + r + 1),
           min_cover(b).len - (b.cardinality() + r + 1));
  return out;
}

inline CyclicSet example6_set(i64 r, i64 n) {
  CyclicSet a(static_cast<int>(n));
  for (i64 i = 0; i <= r + 1; ++i) a.add(i);
  a.add(r + 3);
  a.add(2 * r + 6);
  return a;
}

// Sharpness witness at p = 4r + 11: A = B = [0, r+1] u {r+3, 2r+6} has
// |2A| = 3|A| - 4 = p - r - 3, all three translate flags raised, no common
// short covers, and minimal cover length 2r + 7.
inline ExampleResult example6(i64 r) {
  if (r < 2) throw usage_error("example6: need r >= 2");
  const i64 p = 4 * r + 11;
  if (!is_prime(p)) throw usage_error("example6: 4r + 11 must be prime");
  ExampleResult out;
  out.id = 6;
  out.modulus = static_cast<int>(p);
  CyclicSet a = example6_set(r, p);
  out.cA = a;
  out.cB = a;
  CyclicSet s = sumset(a, a);
  out.fact("size_A", r + 4, a.cardinality());
  out.fact("size_2A", 3 * r + 8, s.cardinality());
  out.fact("threek4_value", 3 * a.cardinality() - 4, s.cardinality());
  out.fact("prc_value", p - r - 3, s.cardinality());
  CyclicSet c = s.complemented().negated();
  out.fact("size_C", r + 3, c.cardinality());
  CyclicSet a_minus_zero = a;
  a_minus_zero.remove(0);
  out.fact("C_is_A_minus_0", 1, c == a_minus_zero ? 1 : 0);
  DeltaFlags df = delta_flags(Trio(a, a, c));
  out.fact("delta_A", 1, df.dA);
  out.fact("delta_B", 1, df.dB);
  out.fact("delta_C", 1, df.dC);
  out.fact("conclusion_absent", 1, conjecture_conclusion(a, a) ? 0 : 1);
  out.fact("min_cover_len", 2 * r + 7, min_cover(a).len);
  return out;
}

// The same configuration at any modulus n = 4r + 11, prime or not: the
// minimal AP cover of A has length exactly 2r + 7.
inline ExampleResult prop13_example(i64 r) {
  if (r < 1) throw usage_error("prop13_example: need r >= 1");
  const i64 n = 4 * r + 11;
  ExampleResult out;
  out.id = 13;
  out.modulus = static_cast<int>(n);
  CyclicSet a = example6_set(r, n);
  out.cA = a;
  out.cB = a;
  out.fact("min_cover_len", 2 * r + 7, min_cover(a).len);
  out.fact("size_A", r + 4, a.cardinality());
  return out;
}

}  // namespace zsl
