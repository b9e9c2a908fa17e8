#pragma once

#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "zsl/cyclic_set.hpp"
#include "zsl/int_set.hpp"

namespace zsl {

// Isoperimetric data of B at level k.  X ranges over sets with |X| >= k and
// |(X+B)^c| >= k; kappa is the minimal boundary |X+B| - |X|, fragments
// attain it, atoms are the fragments of minimal cardinality alpha.
struct AtomReport {
  int n = 0;
  int k = 0;
  i64 kappa = 0;
  i64 r = 0;  // kappa - |B|
  i64 alpha = 0;
  i64 fragment_count = 0;
  i64 atom_count = 0;
  std::vector<CyclicSet> fragments;  // capped at fragment_cap
  std::vector<CyclicSet> atoms;      // capped at atom_cap
  bool fragments_truncated = false;
  bool atoms_truncated = false;

  static constexpr i64 fragment_cap = 1000;
  static constexpr i64 atom_cap = 10000;
};

namespace detail {

inline u64 mask_sumset(u64 x, const std::vector<int>& b_elems, int n) {
  u64 s = 0;
  for (int t : b_elems) s |= CyclicSet::rot_mask(x, t, n);
  return s;
}

// Streams every admissible X for level k, calling f(mask, boundary).
template <class F>
void for_each_admissible(const CyclicSet& b, int k, F&& f) {
  const int n = b.modulus();
  const auto be = b.elements();
  const u64 lim = (n == 64) ? 0 : (u64{1} << n);
  for (u64 x = 1; x != lim; ++x) {
    int cx = popcount64(x);
    if (cx < k) continue;
    u64 s = mask_sumset(x, be, n);
    if (n - popcount64(s) < k) continue;
    f(x, static_cast<i64>(popcount64(s)) - cx);
  }
}

}  // namespace detail

// Exhaustive kappa/fragment/atom computation.  Absent when no admissible X
// exists (B not k-separable).  Capacity: n <= 24.
inline std::optional<AtomReport> kappa_atoms(const CyclicSet& b, int k) {
  const int n = b.modulus();
  if (n > 24) throw capacity_error("kappa_atoms: modulus above enumeration cap 24");
  if (b.empty()) throw usage_error("kappa_atoms: empty set");
  if (k < 1) throw usage_error("kappa_atoms: k must be positive");
  AtomReport rep;
  rep.n = n;
  rep.k = k;
  bool found = false;
  i64 kappa = 0, alpha = 0;
  std::vector<u64> fragments, atoms;
  i64 frag_count = 0, atom_count = 0;
  detail::for_each_admissible(b, k, [&](u64 x, i64 inc) {
    int cx = popcount64(x);
    if (!found || inc < kappa) {
      found = true;
      kappa = inc;
      fragments.clear();
      atoms.clear();
      frag_count = 0;
      atom_count = 0;
      alpha = cx;
    }
    if (inc != kappa) return;
    ++frag_count;
    if (static_cast<i64>(fragments.size()) < AtomReport::fragment_cap) fragments.push_back(x);
    if (cx < alpha) {
      alpha = cx;
      atoms.clear();
      atom_count = 0;
    }
    if (cx == alpha) {
      ++atom_count;
      if (static_cast<i64>(atoms.size()) < AtomReport::atom_cap) atoms.push_back(x);
    }
  });
  if (!found) return std::nullopt;
  rep.kappa = kappa;
  rep.r = kappa - b.cardinality();
  rep.alpha = alpha;
  rep.fragment_count = frag_count;
  rep.atom_count = atom_count;
  rep.fragments_truncated = frag_count > static_cast<i64>(fragments.size());
  rep.atoms_truncated = atom_count > static_cast<i64>(atoms.size());
  for (u64 m : fragments) rep.fragments.push_back(CyclicSet::from_mask(n, m));
  for (u64 m : atoms) rep.atoms.push_back(CyclicSet::from_mask(n, m));
  return rep;
}

inline bool is_coset(const CyclicSet& x) {
  const int n = x.modulus();
  const i64 c = x.cardinality();
  if (c == 0) return false;
  if (n % c != 0) return false;
  const i64 m = n / c;
  const auto e = x.elements();
  for (int v : e)
    if ((v - e[0]) % m != 0) return false;
  return true;
}

// Image of X under Z/n -> Z/m where m divides n.
inline CyclicSet quotient_image(const CyclicSet& x, int m) {
  CyclicSet out(m);
  x.for_each([&](int v) { out.add(v % m); });
  return out;
}

struct TheoremCheck {
  std::string name;
  bool applicable = false;
  bool holds = true;  // vacuously true when not applicable
};

struct AtomTheoremsReport {
  std::optional<AtomReport> base;
  std::vector<TheoremCheck> checks;

  const TheoremCheck& get(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return c;
    throw usage_error("AtomTheoremsReport: unknown check " + name);
  }
};

// Evaluates the structural facts about kappa, fragments and atoms on one
// (B, k) instance: the fragment/atom lattice facts, stabilizer transfer,
// the boundary lower bound, the small-atom bounds over prime moduli, the
// quotient recursion bound and atom behaviour modulo the atom stabilizer.
inline AtomTheoremsReport check_atom_theorems(const CyclicSet& b, int k) {
  AtomTheoremsReport rep;
  rep.base = kappa_atoms(b, k);
  const int n = b.modulus();
  auto push = [&](const std::string& name, bool app, bool holds) {
    rep.checks.push_back({name, app, app ? holds : true});
  };
  if (!rep.base) {
    for (const char* nm : {"fundamental", "stab_preserved", "iso_bound", "thm8", "thm9_1",
                           "thm9_2", "thm10", "cor11_1", "cor11_2", "cor11_3", "modatoms"})
      push(nm, false, true);
    return rep;
  }
  const AtomReport& base = *rep.base;
  const i64 kappa = base.kappa;
  const i64 r = base.r;
  const i64 alpha = base.alpha;
  const auto be = b.elements();

  std::vector<u64> atom_masks;
  for (const auto& a : base.atoms) atom_masks.push_back(a.mask0());

  // Fundamental facts: an atom meeting a fragment in >= k points lies inside
  // it; distinct atoms meet in at most k - 1 points.
  {
    bool holds = true;
    detail::for_each_admissible(b, k, [&](u64 f, i64 inc) {
      if (inc != kappa || !holds) return;
      for (u64 x : atom_masks)
        if (popcount64(x & f) >= k && (x & ~f) != 0) holds = false;
    });
    for (std::size_t i = 0; i < atom_masks.size() && holds; ++i)
      for (std::size_t j = i + 1; j < atom_masks.size() && holds; ++j)
        if (popcount64(atom_masks[i] & atom_masks[j]) >= k) holds = false;
    push("fundamental", true, holds);
  }

  // H(X) = H(X+B) for atoms.
  {
    bool holds = true;
    for (const auto& x : base.atoms)
      if (stabilizer(x) != stabilizer(sumset(x, b))) holds = false;
    push("stab_preserved", true, holds);
  }

  // |Y+B| >= min(n-k+1, |Y|+kappa) for every |Y| >= k.
  {
    bool holds = true;
    auto check_y = [&](u64 y) {
      i64 cy = popcount64(y);
      if (cy < k) return;
      i64 s = popcount64(detail::mask_sumset(y, be, n));
      if (s < std::min<i64>(n - k + 1, cy + kappa)) holds = false;
    };
    if (n <= 20) {
      const u64 lim = (u64{1} << n);
      for (u64 y = 1; y != lim; ++y) check_y(y);
    } else {
      std::mt19937_64 rng(12345);
      const u64 full = (n == 64) ? ~u64{0} : ((u64{1} << n) - 1);
      for (int t = 0; t < 20000; ++t) check_y(rng() & full);
    }
    push("iso_bound", true, holds);
  }

  bool some_atom_noncoset = false;
  for (const auto& x : base.atoms)
    if (!is_coset(x)) some_atom_noncoset = true;

  // alpha_2 <= r + 3 when a 2-atom is not a coset.
  push("thm8", k == 2 && some_atom_noncoset, alpha <= r + 3);

  const bool prime = is_prime(n);
  // Prime small-atom bounds at k = 2.
  {
    bool app = prime && k == 2 && b.cardinality() >= 2 && b.cardinality() <= n - 3 * r - 4;
    i64 t = alpha - 2;
    push("thm9_1", app, t <= 0 || t * t <= 2 * r + 2);
  }
  {
    bool app = prime && k == 2 && b.cardinality() >= 2 && r >= 1 &&
               b.cardinality() <= n - 3 * r - 5;
    i64 t = 2 * alpha - 1;
    push("thm9_2", app, t <= 0 || t * t <= 8 * r + 17);
  }

  // Quotient recursion: for k >= 2, <B-B> = G and a k-atom X that is not a
  // coset, with H = H(X), h = |H|:
  //   alpha_k <= ceil(k/h)*h - h + r + h*alpha_2(Xbar) <= k - 1 + r + h*alpha_2(Xbar).
  {
    i64 gg = n;
    b.for_each([&](int x) {
      b.for_each([&](int y) { gg = std::gcd(gg, static_cast<i64>(mod_floor(x - y, n))); });
    });
    bool gen = (gg == 1);
    bool app = k >= 2 && gen && some_atom_noncoset;
    bool holds = true;
    if (app) {
      for (const auto& x : base.atoms) {
        if (is_coset(x)) continue;
        i64 h = stabilizer(x).cardinality();
        int m = static_cast<int>(n / h);
        auto sub = kappa_atoms(quotient_image(x, m), 2);
        if (!sub) {
          holds = false;
          continue;
        }
        i64 ceil_kh = (k + h - 1) / h;
        i64 bound1 = ceil_kh * h - h + r + h * sub->alpha;
        i64 bound2 = k - 1 + r + h * sub->alpha;
        if (!(alpha <= bound1 && alpha <= bound2)) holds = false;
      }
    }
    push("thm10", app, holds);
  }

  // Prime corollaries for general k.
  {
    bool app = prime && k >= 2 && b.cardinality() >= 2;
    push("cor11_1", app, alpha <= k + 2 * r + 2);
    {
      bool app2 = app && k <= n - 5 * r - 6;
      i64 t = alpha - k - r - 1;
      push("cor11_2", app2, t <= 0 || t * t <= 2 * r + 2);
    }
    {
      bool app3 = app && r >= 1 && k <= n - 5 * r - 7;
      i64 t = 2 * (alpha - k - r) + 1;
      push("cor11_3", app3, t <= 0 || t * t <= 8 * r + 17);
    }
  }

  // Atoms with nontrivial stabilizer project onto ceil(k/h)-atoms of the
  // projected B.
  {
    bool app = false;
    bool holds = true;
    for (const auto& x : base.atoms) {
      i64 h = stabilizer(x).cardinality();
      if (h <= 1) continue;
      app = true;
      int m = static_cast<int>(n / h);
      int kq = static_cast<int>((k + h - 1) / h);
      CyclicSet bq = quotient_image(b, m);
      CyclicSet xq = quotient_image(x, m);
      auto sub = kappa_atoms(bq, kq);
      if (!sub) {
        holds = false;
        continue;
      }
      bool member = false;
      for (const auto& a : sub->atoms)
        if (a == xq) member = true;
      if (sub->atoms_truncated) continue;  // cannot refute from a capped list
      if (!member) holds = false;
    }
    push("modatoms", app, holds);
  }

  return rep;
}

// Subset A' of A minimizing |A'+B| / |A'|; ties prefer smaller |A'|, then the
// lexicographically smallest element list.  Exact rational kept as a pair.
struct PetridisResult {
  std::vector<i64> a_prime;
  i64 num = 0;  // reduced |A'+B| / |A'|
  i64 den = 0;
};

namespace detail {

// Shared subset scan: sizes come from size_of(submask), elements from elems.
template <class SizeOf>
PetridisResult petridis_scan(const std::vector<i64>& elems, SizeOf&& size_of) {
  const int m = static_cast<int>(elems.size());
  PetridisResult best;
  std::vector<i64> best_elems;
  auto pick = [&](u64 sub) {
    std::vector<i64> out;
    for (int i = 0; i < m; ++i)
      if ((sub >> i) & 1) out.push_back(elems[i]);
    return out;
  };
  for (u64 sub = 1; sub < (u64{1} << m); ++sub) {
    i64 den = popcount64(sub);
    i64 num = size_of(sub);
    if (best.den == 0 || num * best.den < best.num * den ||
        (num * best.den == best.num * den && den < best.den)) {
      best.num = num;
      best.den = den;
      best_elems = pick(sub);
    } else if (num * best.den == best.num * den && den == best.den) {
      std::vector<i64> cand = pick(sub);
      if (cand < best_elems) best_elems = cand;
    }
  }
  best.a_prime = best_elems;
  i64 g = std::gcd(best.num, best.den);
  if (g > 1) {
    best.num /= g;
    best.den /= g;
  }
  return best;
}

}  // namespace detail

inline PetridisResult petridis_minimizer(const CyclicSet& a, const CyclicSet& b) {
  if (a.modulus() != b.modulus()) throw usage_error("petridis_minimizer: modulus mismatch");
  if (a.empty() || b.empty()) throw usage_error("petridis_minimizer: empty set");
  if (a.cardinality() > 20) throw capacity_error("petridis_minimizer: |A| above cap 20");
  const int n = a.modulus();
  const auto ai = a.elements();
  std::vector<i64> ae(ai.begin(), ai.end());
  const auto be = b.elements();
  if (n <= 64) {
    return detail::petridis_scan(ae, [&](u64 sub) {
      u64 xmask = 0;
      for (std::size_t i = 0; i < ae.size(); ++i)
        if ((sub >> i) & 1) xmask |= u64{1} << ae[i];
      return static_cast<i64>(popcount64(detail::mask_sumset(xmask, be, n)));
    });
  }
  return detail::petridis_scan(ae, [&](u64 sub) {
    CyclicSet x(n);
    for (std::size_t i = 0; i < ae.size(); ++i)
      if ((sub >> i) & 1) x.add(ae[i]);
    return static_cast<i64>(sumset(x, b).cardinality());
  });
}

inline PetridisResult petridis_minimizer(const IntSet& a, const IntSet& b) {
  if (a.empty() || b.empty()) throw usage_error("petridis_minimizer: empty set");
  if (a.size() > 20) throw capacity_error("petridis_minimizer: |A| above cap 20");
  const auto& ae = a.elements();
  const auto& be = b.elements();
  return detail::petridis_scan(ae, [&](u64 sub) {
    std::set<i64> s;
    for (std::size_t i = 0; i < ae.size(); ++i)
      if ((sub >> i) & 1)
        for (i64 y : be) s.insert(ae[i] + y);
    return static_cast<i64>(s.size());
  });
}

}  // namespace zsl
