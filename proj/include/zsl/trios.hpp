#pragma once

#include <optional>
#include <string>

#include "zsl/progressions.hpp"

namespace zsl {

// Additive trio: nonempty A, B, C in Z/n with A + B + C != G.
struct Trio {
  CyclicSet A, B, C;

  Trio(CyclicSet a, CyclicSet b, CyclicSet c)
      : A(std::move(a)), B(std::move(b)), C(std::move(c)) {
    if (A.modulus() != B.modulus() || A.modulus() != C.modulus())
      throw usage_error("Trio: modulus mismatch");
    if (A.empty() || B.empty() || C.empty()) throw usage_error("Trio: empty member");
    if (sumset(sumset(A, B), C).is_full())
      throw domain_error("Trio: A + B + C covers the group");
  }

  int modulus() const { return A.modulus(); }

  // r = n - |A| - |B| - |C|; at least -1 when n is prime.
  i64 r() const {
    return static_cast<i64>(modulus()) - A.cardinality() - B.cardinality() - C.cardinality();
  }

  const CyclicSet& get(char which) const {
    switch (which) {
      case 'A': return A;
      case 'B': return B;
      case 'C': return C;
    }
    throw usage_error("Trio: member must be A, B or C");
  }

  CyclicSet& get(char which) {
    switch (which) {
      case 'A': return A;
      case 'B': return B;
      case 'C': return C;
    }
    throw usage_error("Trio: member must be A, B or C");
  }
};

// Trio completion of a pair: C = -(A+B)^c.  Requires A + B != G.
inline Trio complement_trio(const CyclicSet& a, const CyclicSet& b) {
  CyclicSet s = sumset(a, b);
  if (s.is_full()) throw domain_error("complement_trio: A + B covers the group");
  return Trio(a, b, s.complemented().negated());
}

// X is saturated when adding any element outside X makes the triple sum all
// of G.
inline bool is_saturated(const Trio& t, char which) {
  const CyclicSet& x = t.get(which);
  const CyclicSet& y = t.get(which == 'A' ? 'B' : 'A');
  const CyclicSet& z = t.get(which == 'C' ? 'B' : 'C');
  CyclicSet yz = sumset(y, z);
  CyclicSet miss = sumset(x, yz).complemented();
  // Adding e fills the sum iff miss lies inside e + (Y+Z).
  const int n = t.modulus();
  for (int e = 0; e < n; ++e) {
    if (x.test(e)) continue;
    if (!miss.subset_of(yz.rotated(e)))
      return false;
  }
  return true;
}

// Replace each member in the given order by the largest set keeping z outside
// the triple sum: X <- z - (Y + Z)^c with Y, Z the current other members.
// Requires z outside A + B + C.  Idempotent once all members are saturated.
inline Trio saturate(const Trio& t, i64 z, const std::string& order = "CBA") {
  if (sumset(sumset(t.A, t.B), t.C).test(z))
    throw usage_error("saturate: z lies in A + B + C");
  std::string sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != "ABC") throw usage_error("saturate: order must name A, B, C once each");
  Trio cur = t;
  for (char which : order) {
    const CyclicSet& y = cur.get(which == 'A' ? 'B' : 'A');
    const CyclicSet& zz = cur.get(which == 'C' ? 'B' : 'C');
    cur.get(which) = sumset(y, zz).complemented().negated().rotated(z);
  }
  return cur;
}

struct VosperDual {
  CyclicSet lhs;        // -(A+B)^c + B
  bool contained;       // lhs inside -A^c, always true
  bool equality;        // lhs equals -A^c
  bool saturated;       // A saturated in A + B
  i64 r;                // |A+B| - |A| - |B|
  bool size_identity;   // at equality, |lhs| = |(A+B)^c| + |B| + r
};

// Dual pair inclusion -(A+B)^c + B inside -A^c; equality exactly when A is
// saturated in A + B (no x outside A has x + B inside A + B).
inline VosperDual vosper_dual(const CyclicSet& a, const CyclicSet& b) {
  if (a.modulus() != b.modulus()) throw usage_error("vosper_dual: modulus mismatch");
  if (a.empty() || b.empty()) throw usage_error("vosper_dual: empty set");
  const int n = a.modulus();
  CyclicSet s = sumset(a, b);
  CyclicSet lhs = sumset(s.complemented().negated(), b);
  CyclicSet rhs = a.complemented().negated();
  VosperDual out;
  out.lhs = lhs;
  out.contained = lhs.subset_of(rhs);
  out.equality = (lhs == rhs);
  out.saturated = true;
  for (int e = 0; e < n && out.saturated; ++e)
    if (!a.test(e) && b.rotated(e).subset_of(s)) out.saturated = false;
  out.r = static_cast<i64>(s.cardinality()) - a.cardinality() - b.cardinality();
  out.size_identity = !out.equality ||
                      lhs.cardinality() == static_cast<i64>(n) - s.cardinality() +
                                               b.cardinality() + out.r;
  return out;
}

inline bool is_translate(const CyclicSet& x, const CyclicSet& y) {
  if (x.modulus() != y.modulus()) throw usage_error("is_translate: modulus mismatch");
  if (x.cardinality() != y.cardinality()) return false;
  const int n = x.modulus();
  for (int t = 0; t < n; ++t)
    if (y.rotated(t) == x) return true;
  return false;
}

struct DeltaFlags {
  int dA = 0, dB = 0, dC = 0;
  int get(char which) const {
    switch (which) {
      case 'A': return dA;
      case 'B': return dB;
      case 'C': return dC;
    }
    throw usage_error("DeltaFlags: member must be A, B or C");
  }
};

// Per-member exceptional flags: delta_X = 1 when r >= 0 and X is a translate
// of another member, or when r >= 2 and the other two members are translates
// of each other of common size r + 4.
inline DeltaFlags delta_flags(const Trio& t) {
  const i64 r = t.r();
  DeltaFlags f;
  auto one = [&](const CyclicSet& x, const CyclicSet& y, const CyclicSet& z) -> int {
    if (r >= 0 && (is_translate(x, y) || is_translate(x, z))) return 1;
    if (r >= 2 && y.cardinality() == r + 4 && z.cardinality() == r + 4 && is_translate(y, z))
      return 1;
    return 0;
  };
  f.dA = one(t.A, t.B, t.C);
  f.dB = one(t.B, t.A, t.C);
  f.dC = one(t.C, t.A, t.B);
  return f;
}

struct Prop7Result {
  bool applicable = false;
  i64 r = 0;
  DeltaFlags deltas;
  bool s1 = false, s2 = false, s3 = false;
  i64 d1 = 0, d2 = 0, d3 = 0;  // smallest witnesses, 0 when absent
};

// Three statements about a trio over Z/p whose equivalence is exercised by
// the harness: s1 = common-difference covers of length |X| + r + 1 exist;
// s2 = some d gives ell_d(X) + ell_d(Y) <= p + 1 for every pair; s3 = the
// same for at least one pair.  Applicability gate: |X| >= r + 3 + delta_X.
inline Prop7Result prop7_statements(const CyclicSet& a, const CyclicSet& b) {
  Trio t = complement_trio(a, b);
  const int p = t.modulus();
  if (!is_prime(p)) throw usage_error("prop7_statements: prime modulus required");
  Prop7Result out;
  out.r = t.r();
  out.deltas = delta_flags(t);
  for (char w : {'A', 'B', 'C'})
    if (t.get(w).cardinality() < out.r + 3 + out.deltas.get(w)) return out;
  out.applicable = true;
  if (auto cert = conjecture_conclusion(a, b)) {
    out.s1 = true;
    out.d1 = cert->d;
  }
  for (i64 d = 1; d < p && (!out.s2 || !out.s3); ++d) {
    i64 la = *ell(t.A, d), lb = *ell(t.B, d), lc = *ell(t.C, d);
    bool ab = la + lb <= p + 1, ac = la + lc <= p + 1, bc = lb + lc <= p + 1;
    if (!out.s2 && ab && ac && bc) {
      out.s2 = true;
      out.d2 = d;
    }
    if (!out.s3 && (ab || ac || bc)) {
      out.s3 = true;
      out.d3 = d;
    }
  }
  return out;
}

// One reduction step: a short cover of A at overhead h, together with size
// slack in A and B (strict in at least one) and |C| >= r + 3, forces covers
// of length |X| + r + 1 for all members at the same d.  Returns the verdict,
// or nothing when the hypothesis does not hold.
inline std::optional<bool> reduction_check_part1(const Trio& t, i64 d, i64 h) {
  const i64 r = t.r();
  auto la = ell(t.A, d);
  if (!la || *la > t.A.cardinality() + h) return std::nullopt;
  const i64 c1 = t.A.cardinality() - (r + 3 + h);
  const i64 c2 = t.B.cardinality() - (r + 3 + 2 * h);
  if (c1 < 0 || c2 < 0 || (c1 == 0 && c2 == 0)) return std::nullopt;
  if (t.C.cardinality() < r + 3) return std::nullopt;
  for (char w : {'A', 'B', 'C'}) {
    auto l = ell(t.get(w), d);
    if (!l || *l > t.get(w).cardinality() + r + 1) return false;
  }
  return true;
}

}  // namespace zsl
