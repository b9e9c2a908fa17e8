#pragma once

#include <chrono>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <thread>

#include "zsl/certificates.hpp"
#include "zsl/trios.hpp"

namespace zsl {

enum class ScanMode { conjecture, prop12, mario1, smallr, feasibility };

inline const char* scan_mode_name(ScanMode m) {
  switch (m) {
    case ScanMode::conjecture: return "conjecture";
    case ScanMode::prop12: return "prop12";
    case ScanMode::mario1: return "mario1";
    case ScanMode::smallr: return "smallr";
    case ScanMode::feasibility: return "feasibility";
  }
  return "?";
}

inline ScanMode scan_mode_from_name(const std::string& s) {
  for (ScanMode m : {ScanMode::conjecture, ScanMode::prop12, ScanMode::mario1,
                     ScanMode::smallr, ScanMode::feasibility})
    if (s == scan_mode_name(m)) return m;
  throw usage_error("unknown scan mode: " + s);
}

struct ScanConfig {
  ScanMode mode = ScanMode::conjecture;
  std::vector<int> primes;
  int max_prime = 0;    // when primes is empty: all primes <= max_prime
  int jobs = 0;         // 0 -> ZSL_JOBS env or 1
  bool emit_all = false;
  std::string output_path;  // empty: keep the stream in memory only
  i64 sample_count = 0;     // 0: exhaustive (capacity p <= 19)
  u64 seed = 1;
};

struct ScanCounters {
  i64 orbits = 0;
  i64 applicable = 0;
  i64 holds = 0;
  i64 violations = 0;
  std::array<i64, 4> feasible{0, 0, 0, 0};  // thm2, thm15, thm19, thm3 triples

  void operator+=(const ScanCounters& o) {
    orbits += o.orbits;
    applicable += o.applicable;
    holds += o.holds;
    violations += o.violations;
    for (int i = 0; i < 4; ++i) feasible[i] += o.feasible[i];
  }
};

struct ScanReport {
  ScanConfig config;
  std::map<int, ScanCounters> per_prime;
  ScanCounters total;
  std::vector<ScanRecord> violation_records;
  std::string jsonl;
  u64 content_hash = 0;
  double wall_ms = 0;
};

namespace scan_detail {

// Mask workbench for one modulus p <= 61: all sets are u64 bit masks with
// residue i at bit i.
struct MaskCtx {
  int p;
  u64 full;
  std::vector<std::array<i64, 64>> mulbit;  // mulbit[u][i] = bit of u*i mod p
  std::vector<i64> inv;                     // modular inverses, inv[0] unused

  explicit MaskCtx(int p_) : p(p_) {
    if (p > 61) throw capacity_error("MaskCtx: modulus above mask cap 61");
    full = (u64{1} << p) - 1;
    mulbit.resize(p);
    inv.assign(p, 0);  // inv[u] = 0 marks a non-unit at composite moduli
    for (i64 u = 1; u < p; ++u) {
      for (i64 i = 0; i < p; ++i) mulbit[u][i] = (u * i) % p;
      if (std::gcd(u, static_cast<i64>(p)) == 1) inv[u] = inv_mod(u, p);
    }
  }

  u64 rot(u64 m, i64 t) const {
    t = mod_floor(t, p);
    if (t == 0) return m;
    return ((m << t) | (m >> (p - t))) & full;
  }

  u64 mul(u64 m, i64 u) const {
    u64 out = 0;
    const auto& tab = mulbit[u];
    while (m) {
      int b = ctz64(m);
      out |= u64{1} << tab[b];
      m &= m - 1;
    }
    return out;
  }

  // Member-first comparison: lowest differing residue, member wins.
  static int cmp(u64 a, u64 b) {
    u64 x = a ^ b;
    if (!x) return 0;
    u64 low = x & (~x + 1);
    return (a & low) ? -1 : 1;
  }

  u64 sum(u64 a, u64 b) const {
    u64 out = 0;
    u64 m = b;
    while (m) {
      int t = ctz64(m);
      out |= rot(a, t);
      m &= m - 1;
    }
    return out;
  }

  u64 negate(u64 m) const { return mul(m, p - 1); }

  // Minimal translate in member-first order; only translates that bring a
  // member to residue 0 can compete.
  u64 min_translate(u64 m, i64* v_out = nullptr) const {
    u64 best = 0;
    i64 bv = 0;
    bool have = false;
    u64 mm = m;
    while (mm) {
      int e = ctz64(mm);
      mm &= mm - 1;
      i64 v = (p - e) % p;
      u64 cand = rot(m, v);
      if (!have || cmp(cand, best) < 0 || (cmp(cand, best) == 0 && v < bv)) {
        if (!have || cmp(cand, best) < 0) {
          best = cand;
          bv = v;
        }
        have = true;
      }
    }
    if (v_out) *v_out = bv;
    return best;
  }

  bool is_canonical_set(u64 m) const {
    for (i64 u = 1; u < p; ++u) {
      if (inv[u] == 0) continue;
      u64 mu = mul(m, u);
      u64 mm = mu;
      while (mm) {
        int e = ctz64(mm);
        mm &= mm - 1;
        if (cmp(rot(mu, (p - e) % p), m) < 0) return false;
      }
    }
    return true;
  }

  std::vector<i64> units_fixing(u64 canonical_a) const {
    std::vector<i64> us;
    for (i64 u = 1; u < p; ++u)
      if (inv[u] != 0 && min_translate(mul(canonical_a, u)) == canonical_a) us.push_back(u);
    return us;
  }

  bool is_canonical_b(u64 b, const std::vector<i64>& units) const {
    for (i64 u : units) {
      u64 bu = mul(b, u);
      u64 mm = bu;
      while (mm) {
        int e = ctz64(mm);
        mm &= mm - 1;
        if (cmp(rot(bu, (p - e) % p), b) < 0) return false;
      }
    }
    return true;
  }

  // ell_d over the mask: positions in the d-order, p - maxgap + 1.
  i64 ell_mask(u64 m, i64 d) const {
    if (inv[d] == 0) throw usage_error("ell_mask: difference is not a unit");
    u64 pos = mul(m, inv[d]);
    int prev = -1, first = -1;
    i64 maxgap = 0;
    u64 mm = pos;
    while (mm) {
      int e = ctz64(mm);
      mm &= mm - 1;
      if (first < 0)
        first = e;
      else
        maxgap = std::max<i64>(maxgap, e - prev);
      prev = e;
    }
    maxgap = std::max<i64>(maxgap, p - prev + first);
    return p - maxgap + 1;
  }

  bool translates_mask(u64 x, u64 y) const {
    if (popcount64(x) != popcount64(y)) return false;
    for (i64 t = 0; t < p; ++t)
      if (rot(y, t) == x) return true;
    return false;
  }

  // Max points of the mask inside a window of each length, in the g-order.
  // out[l] for l in [1, p].
  void window_profile(u64 m, i64 g, std::vector<i64>& out) const {
    if (inv[g] == 0) throw usage_error("window_profile: order is not a unit");
    u64 pos = mul(m, inv[g]);
    int k = popcount64(pos);
    std::vector<int> ps;
    ps.reserve(2 * k);
    u64 mm = pos;
    while (mm) {
      int e = ctz64(mm);
      mm &= mm - 1;
      ps.push_back(e);
    }
    for (int i = 0; i < k; ++i) ps.push_back(ps[i] + p);
    out.assign(p + 1, 0);
    for (int i = 0; i < k; ++i) {
      int j = i;
      for (i64 l = 1; l <= p; ++l) {
        while (j + 1 < i + k && ps[j + 1] <= ps[i] + l - 1) ++j;
        out[l] = std::max(out[l], static_cast<i64>(j - i + 1));
      }
    }
  }
};

inline int ceil_log2(int p) {
  int r = 0;
  while ((1 << r) < p) ++r;
  return r;
}

struct PairEval {
  bool applicable = false;
  bool holds = false;
};

// Conjecture-shape conclusion: some d covers all of A, B, C within
// |X| + r + 1 terms.
inline bool masks_conclude(const MaskCtx& ctx, u64 a, u64 b, u64 c, i64 r) {
  const i64 ca = popcount64(a), cb = popcount64(b), cc = popcount64(c);
  for (i64 d = 1; d < ctx.p; ++d) {
    if (ctx.ell_mask(a, d) <= ca + r + 1 && ctx.ell_mask(b, d) <= cb + r + 1 &&
        ctx.ell_mask(c, d) <= cc + r + 1)
      return true;
  }
  return false;
}

inline PairEval eval_conjecture(const MaskCtx& ctx, u64 a, u64 b) {
  PairEval ev;
  u64 s = ctx.sum(a, b);
  u64 c = ctx.negate(ctx.full & ~s);
  const i64 ca = popcount64(a), cb = popcount64(b), cs = popcount64(s);
  const i64 r = cs - ca - cb;
  if (ca < cb) return ev;
  // delta_B: B a translate of A or C (r >= 0), or A ~ C of size r + 4 (r >= 2).
  auto delta_of = [&](u64 x, u64 y, u64 z) -> i64 {
    if (r >= 0 && (ctx.translates_mask(x, y) || ctx.translates_mask(x, z))) return 1;
    if (r >= 2 && popcount64(y) == r + 4 && popcount64(z) == r + 4 &&
        ctx.translates_mask(y, z))
      return 1;
    return 0;
  };
  i64 db = delta_of(b, a, c);
  i64 dc = delta_of(c, a, b);
  i64 bound = std::min<i64>(ca + 2 * cb - 3 - db, ctx.p - r - 3 - dc);
  if (cs > bound) return ev;
  ev.applicable = true;
  ev.holds = masks_conclude(ctx, a, b, c, r);
  return ev;
}

inline PairEval eval_smallr(const MaskCtx& ctx, u64 a, u64 b) {
  PairEval ev;
  u64 s = ctx.sum(a, b);
  const i64 ca = popcount64(a), cb = popcount64(b), cs = popcount64(s);
  if (ca < cb) return ev;
  if (popcount64(a | b) > ceil_log2(ctx.p)) return ev;
  i64 delta = ctx.translates_mask(a, b) ? 1 : 0;
  if (cs > ca + 2 * cb - 3 - delta) return ev;
  ev.applicable = true;
  u64 c = ctx.negate(ctx.full & ~s);
  ev.holds = masks_conclude(ctx, a, b, c, cs - ca - cb);
  return ev;
}

inline PairEval eval_mario1(const MaskCtx& ctx, u64 a, u64 b) {
  PairEval ev;
  u64 s = ctx.sum(a, b);
  u64 c = ctx.negate(ctx.full & ~s);
  const i64 sz[3] = {popcount64(a), popcount64(b), popcount64(c)};
  const i64 r = static_cast<i64>(ctx.p) - sz[0] - sz[1] - sz[2];
  bool any_applicable = false, all_hold = true;
  for (i64 d = 1; d < ctx.p; ++d) {
    const i64 l[3] = {ctx.ell_mask(a, d), ctx.ell_mask(b, d), ctx.ell_mask(c, d)};
    bool hyp = false;
    for (int x = 0; x < 3 && !hyp; ++x) {
      for (int y = 0; y < 3 && !hyp; ++y) {
        if (y == x) continue;
        int z = 3 - x - y;
        i64 h = l[x] - sz[x];
        i64 c1 = sz[x] - (r + 3 + h);
        i64 c2 = sz[y] - (r + 3 + 2 * h);
        if (c1 < 0 || c2 < 0 || (c1 == 0 && c2 == 0)) continue;
        if (sz[z] < r + 3) continue;
        hyp = true;
      }
    }
    if (!hyp) continue;
    any_applicable = true;
    bool concl = l[0] <= sz[0] + r + 1 && l[1] <= sz[1] + r + 1 && l[2] <= sz[2] + r + 1;
    if (!concl) all_hold = false;
  }
  ev.applicable = any_applicable;
  ev.holds = any_applicable && all_hold;
  return ev;
}

inline PairEval eval_prop12(const MaskCtx& ctx, u64 a, u64 b) {
  PairEval ev;
  u64 s = ctx.sum(a, b);
  const i64 cs = popcount64(s);
  const i64 r = cs - popcount64(a) - popcount64(b);
  const i64 p = ctx.p;
  if (4 * cs > 3 * (p + 1)) return ev;
  if (p < 4 * r + 9) return ev;
  bool exists = false;
  std::vector<i64> wa, wb;
  for (i64 g = 1; g < p && !exists; ++g) {
    ctx.window_profile(a, g, wa);
    ctx.window_profile(b, g, wb);
    for (i64 l1 = 1; l1 <= p && !exists; ++l1) {
      i64 l2 = p + 1 - l1;
      if (l2 < 1 || l2 > p) continue;
      // role (A' from A, B' from B) and the swap
      i64 u1 = wa[l1], v1 = wb[l2];
      if (u1 + 2 * std::min(u1, v1) - 4 >= cs) exists = true;
      i64 u2 = wb[l1], v2 = wa[l2];
      if (u2 + 2 * std::min(u2, v2) - 4 >= cs) exists = true;
    }
  }
  if (!exists) return ev;
  ev.applicable = true;
  u64 c = ctx.negate(ctx.full & ~s);
  ev.holds = masks_conclude(ctx, a, b, c, r);
  return ev;
}

inline PairEval eval_pair(ScanMode mode, const MaskCtx& ctx, u64 a, u64 b) {
  switch (mode) {
    case ScanMode::conjecture: return eval_conjecture(ctx, a, b);
    case ScanMode::smallr: return eval_smallr(ctx, a, b);
    case ScanMode::mario1: return eval_mario1(ctx, a, b);
    case ScanMode::prop12: return eval_prop12(ctx, a, b);
    case ScanMode::feasibility: break;
  }
  throw usage_error("eval_pair: mode has no per-pair evaluation");
}

// Feasible (a, b, l) triples for the analytic theorems at modulus p; the
// domain is 1 <= b <= a <= p with max(a, min(p, a+b-1)) <= l <= p-1 and
// r = l - a - b.
inline std::array<i64, 4> feasible_counts(int p) {
  std::array<i64, 4> out{0, 0, 0, 0};
  for (i64 a = 1; a <= p; ++a) {
    for (i64 b = 1; b <= a; ++b) {
      i64 lo = std::max(a, std::min<i64>(p, a + b - 1));
      for (i64 l = lo; l <= p - 1; ++l) {
        i64 r = l - a - b;
        // thm2: l <= a + 1.0527 b - 3 and l <= p - 9(r+3)
        if (10000 * l <= 10000 * a + 10527 * b - 30000 && l <= p - 9 * (r + 3))
          out[0] += 1;
        // thm15: l <= a + (10/9) b - 3, l <= p - 9(r+3), and the sqrt gate
        if (9 * l <= 9 * a + 10 * b - 27 && l <= p - 9 * (r + 3)) {
          i128 w = static_cast<i128>(3926) * p - 185060 * r - 490409;
          if (w >= 0 && 4 * w * w >= static_cast<i128>(18506) * 18506 * (8 * r + 17))
            out[1] += 1;
        }
        // thm19: l <= a + 1.01 b - 3 and l <= p - r - 3
        if (100 * l <= 100 * a + 101 * b - 300 && l <= p - r - 3) out[2] += 1;
        // thm3 relaxation: r + 3 <= 0.212 b and a <= (5/14) p
        if (1000 * (r + 3) <= 212 * b && 14 * a <= 5 * p) out[3] += 1;
      }
    }
  }
  return out;
}

}  // namespace scan_detail

// Canonical pair representatives over Z/p: A affine-canonical, B minimal
// under the units fixing A, both nonempty, A + B != G.
inline std::vector<std::pair<u64, u64>> canonical_pairs(int p) {
  scan_detail::MaskCtx ctx(p);
  std::vector<std::pair<u64, u64>> out;
  std::vector<u64> canon_a;
  for (u64 a = 1; a <= ctx.full; a += 2)  // canonical sets contain residue 0
    if (ctx.is_canonical_set(a)) canon_a.push_back(a);
  for (u64 a : canon_a) {
    auto units = ctx.units_fixing(a);
    for (u64 b = 1; b <= ctx.full; b += 2) {
      if (!ctx.is_canonical_b(b, units)) continue;
      if (ctx.sum(a, b) == ctx.full) continue;
      out.push_back({a, b});
    }
  }
  return out;
}

// Orbit cardinality of (A, B) under (u, vA, vB): (p-1) p^2 / |Stab|.
inline i64 pair_orbit_size(int p, u64 a, u64 b) {
  scan_detail::MaskCtx ctx(p);
  i64 stab = 0;
  for (i64 u = 1; u < p; ++u) {
    i64 fa = 0, fb = 0;
    u64 au = ctx.mul(a, u), bu = ctx.mul(b, u);
    for (i64 v = 0; v < p; ++v) {
      if (ctx.rot(au, v) == a) ++fa;
      if (ctx.rot(bu, v) == b) ++fb;
    }
    stab += fa * fb;
  }
  return static_cast<i64>(p - 1) * p * p / stab;
}

namespace scan_detail {

struct WorkerOut {
  ScanCounters counters;
  std::vector<ScanRecord> records;
};

inline ScanRecord make_record(ScanMode mode, const MaskCtx& ctx, u64 a, u64 b, bool holds) {
  ScanRecord rec;
  rec.mode = scan_mode_name(mode);
  rec.key = canonical_key(ctx.p, a, b);
  rec.verdict = holds ? "holds" : "violation";
  CyclicSet A = CyclicSet::from_mask(ctx.p, a);
  CyclicSet B = CyclicSet::from_mask(ctx.p, b);
  if (holds) {
    auto cert = conjecture_conclusion(A, B);
    if (cert) {
      rec.cert = *cert;
    } else {
      // Shape modes can hold without a conjecture-form certificate; keep the
      // instance data with d = 0.
      rec.cert.p = ctx.p;
      rec.cert.A = A.elements();
      rec.cert.B = B.elements();
      rec.cert.C = dual_summand(A, B).elements();
      rec.cert.r = sumset(A, B).cardinality() - A.cardinality() - B.cardinality();
      rec.cert.d = 0;
      rec.cert.ok = true;
    }
  } else {
    rec.cert.p = ctx.p;
    rec.cert.A = A.elements();
    rec.cert.B = B.elements();
    rec.cert.C = dual_summand(A, B).elements();
    rec.cert.r = sumset(A, B).cardinality() - A.cardinality() - B.cardinality();
    rec.cert.d = 0;
    rec.cert.ok = false;
  }
  return rec;
}

inline void eval_into(ScanMode mode, const MaskCtx& ctx, u64 a, u64 b, bool emit_all,
                      WorkerOut& out) {
  out.counters.orbits += 1;
  PairEval ev = eval_pair(mode, ctx, a, b);
  if (!ev.applicable) return;
  out.counters.applicable += 1;
  if (ev.holds) {
    out.counters.holds += 1;
    if (emit_all) out.records.push_back(make_record(mode, ctx, a, b, true));
  } else {
    out.counters.violations += 1;
    out.records.push_back(make_record(mode, ctx, a, b, false));
  }
}

}  // namespace scan_detail

inline ScanReport run_scan(const ScanConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  ScanReport rep;
  rep.config = cfg;
  int jobs = cfg.jobs > 0 ? cfg.jobs : detail::env_jobs();
  if (rep.config.primes.empty() && rep.config.max_prime >= 2)
    for (int p = 2; p <= rep.config.max_prime; ++p)
      if (is_prime(p)) rep.config.primes.push_back(p);
  if (rep.config.primes.empty()) throw usage_error("run_scan: no moduli given");
  const std::vector<int>& primes = rep.config.primes;
  for (int p : primes) {
    if (!is_prime(p)) throw usage_error("run_scan: modulus " + std::to_string(p) + " is not prime");
    if (cfg.sample_count == 0 && p > 19)
      throw capacity_error("run_scan: exhaustive cap is p <= 19; use sampling above");
    if (p > 61) throw capacity_error("run_scan: modulus above mask cap 61");
  }
  std::vector<ScanRecord> all_records;
  for (int p : primes) {
    scan_detail::MaskCtx ctx(p);
    ScanCounters counters;
    if (cfg.mode == ScanMode::feasibility) {
      counters.feasible = scan_detail::feasible_counts(p);
    } else if (cfg.sample_count > 0) {
      // Seeded sampling for larger moduli: canonicalize random pairs.
      std::mt19937_64 rng(cfg.seed ^ static_cast<u64>(p) * 0x9e3779b97f4a7c15ull);
      scan_detail::WorkerOut wo;
      for (i64 i = 0; i < cfg.sample_count; ++i) {
        u64 a = rng() & ctx.full;
        u64 b = rng() & ctx.full;
        if (!a || !b) continue;
        if (ctx.sum(a, b) == ctx.full) continue;
        CyclicSet A = CyclicSet::from_mask(p, a), B = CyclicSet::from_mask(p, b);
        CanonicalPair cp = canonical_pair(A, B);
        scan_detail::eval_into(cfg.mode, ctx, cp.A.mask0(), cp.B.mask0(), cfg.emit_all, wo);
      }
      counters += wo.counters;
      for (auto& r : wo.records) all_records.push_back(std::move(r));
    } else {
      auto pairs = canonical_pairs(p);
      int nj = std::max(1, std::min<int>(jobs, static_cast<int>(pairs.size())));
      std::vector<scan_detail::WorkerOut> outs(static_cast<std::size_t>(nj));
      std::vector<std::thread> threads;
      std::size_t chunk = (pairs.size() + nj - 1) / nj;
      for (int j = 0; j < nj; ++j) {
        std::size_t lo = j * chunk;
        std::size_t hi = std::min(pairs.size(), lo + chunk);
        threads.emplace_back([&, j, lo, hi] {
          for (std::size_t i = lo; i < hi; ++i)
            scan_detail::eval_into(cfg.mode, ctx, pairs[i].first, pairs[i].second,
                                   cfg.emit_all, outs[static_cast<std::size_t>(j)]);
        });
      }
      for (auto& t : threads) t.join();
      for (auto& wo : outs) {
        counters += wo.counters;
        for (auto& r : wo.records) all_records.push_back(std::move(r));
      }
    }
    rep.per_prime[p] = counters;
    rep.total += counters;
  }
  // Deterministic stream order: (p, canonical key).
  std::stable_sort(all_records.begin(), all_records.end(),
                   [](const ScanRecord& x, const ScanRecord& y) {
                     if (x.cert.p != y.cert.p) return x.cert.p < y.cert.p;
                     return x.key < y.key;
                   });
  std::ostringstream stream;
  for (const auto& r : all_records) {
    stream << to_jsonl(r) << "\n";
    if (r.verdict == "violation") rep.violation_records.push_back(r);
  }
  rep.jsonl = stream.str();
  rep.content_hash = fnv1a64(rep.jsonl);
  if (!cfg.output_path.empty()) {
    std::ofstream out(cfg.output_path, std::ios::binary);
    if (!out) throw usage_error("run_scan: cannot open output " + cfg.output_path);
    out << rep.jsonl;
  }
  rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
  return rep;
}

struct VerifyFileResult {
  bool ok = true;
  i64 records = 0;
  std::vector<std::string> diagnostics;
};

// Re-checks a scan JSONL stream from scratch: canonical form, the trio
// completion, r, covers for holds records, and the mode conclusion for
// violation records.
inline VerifyFileResult verify_certificate_stream(std::istream& in) {
  VerifyFileResult out;
  std::string line;
  i64 lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto fail = [&](const std::string& why) {
      out.ok = false;
      out.diagnostics.push_back("line " + std::to_string(lineno) + ": " + why);
    };
    json j;
    try {
      j = json::parse(line);
    } catch (const std::exception&) {
      fail("parse error");
      continue;
    }
    ScanRecord rec;
    try {
      rec = record_from_json(j);
    } catch (const std::exception& e) {
      fail(std::string("missing or malformed field: ") + e.what());
      continue;
    }
    ++out.records;
    const int p = rec.cert.p;
    if (!is_prime(p)) {
      fail("modulus not prime");
      continue;
    }
    CyclicSet A(p), B(p);
    bool range_ok = true;
    for (int x : rec.cert.A) {
      if (x < 0 || x >= p) range_ok = false;
      else A.add(x);
    }
    for (int x : rec.cert.B) {
      if (x < 0 || x >= p) range_ok = false;
      else B.add(x);
    }
    if (!range_ok || A.empty() || B.empty()) {
      fail("set elements out of range or empty");
      continue;
    }
    CanonicalPair cp = canonical_pair(A, B);
    if (cp.A != A || cp.B != B) {
      fail("pair is not in canonical form");
      continue;
    }
    if (canonical_key(p, A.mask0(), B.mask0()) != rec.key) {
      fail("canonical_key mismatch");
      continue;
    }
    CyclicSet S = sumset(A, B);
    if (S.is_full()) {
      fail("A + B covers the group");
      continue;
    }
    CyclicSet C = S.complemented().negated();
    if (C.elements() != std::vector<int>(rec.cert.C.begin(), rec.cert.C.end())) {
      fail("C is not -(A+B)^c");
      continue;
    }
    i64 r = S.cardinality() - A.cardinality() - B.cardinality();
    if (r != rec.cert.r) {
      fail("r mismatch");
      continue;
    }
    ScanMode mode;
    try {
      mode = scan_mode_from_name(rec.mode);
    } catch (const std::exception&) {
      fail("unknown mode");
      continue;
    }
    if (mode == ScanMode::feasibility) {
      fail("feasibility mode emits no records");
      continue;
    }
    scan_detail::MaskCtx ctx(p);
    scan_detail::PairEval ev = scan_detail::eval_pair(mode, ctx, A.mask0(), B.mask0());
    if (!ev.applicable) {
      fail("recorded instance is not applicable under its mode");
      continue;
    }
    if (rec.verdict == "holds") {
      if (!rec.cert.ok) {
        fail("holds record with ok = false");
        continue;
      }
      if (!ev.holds) {
        fail("recomputation refutes the holds verdict");
        continue;
      }
      if (rec.cert.d != 0) {
        if (rec.cert.d < 1 || rec.cert.d >= p || rec.cert.covers.size() != 3) {
          fail("bad certificate difference or covers");
          continue;
        }
        const CyclicSet* sets[3] = {&A, &B, &C};
        bool cover_ok = true;
        for (int i = 0; i < 3; ++i) {
          ApCover cov = rec.cert.covers[static_cast<std::size_t>(i)];
          cov.n = p;
          if (cov.d != rec.cert.d || !cov.covers(*sets[i]) ||
              cov.len > sets[i]->cardinality() + r + 1)
            cover_ok = false;
        }
        if (!cover_ok) {
          fail("cover re-validation failed");
          continue;
        }
      }
    } else if (rec.verdict == "violation") {
      if (rec.cert.ok || rec.cert.d != 0 || !rec.cert.covers.empty()) {
        fail("violation record must have ok = false, d = 0, no covers");
        continue;
      }
      if (ev.holds) {
        fail("recomputation refutes the violation verdict");
        continue;
      }
    } else {
      fail("unknown verdict " + rec.verdict);
      continue;
    }
  }
  if (out.records == 0 && out.ok)
    out.diagnostics.push_back("warning: no records found");
  return out;
}

inline VerifyFileResult verify_certificate_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    VerifyFileResult out;
    out.ok = false;
    out.diagnostics.push_back("cannot open " + path);
    return out;
  }
  return verify_certificate_stream(in);
}

}  // namespace zsl
