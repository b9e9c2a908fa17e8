#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <thread>
#include <vector>

#include "zsl/cyclic_set.hpp"

namespace zsl {

using rational = boost::multiprecision::cpp_rational;

// S_A(x) = sum over a in A of e^(2*pi*i*a*x/p), Kahan-compensated.
inline std::complex<double> exp_sum(const CyclicSet& a, i64 x) {
  const int p = a.modulus();
  if (!is_prime(p)) throw usage_error("exp_sum: prime modulus required");
  const double tau = 6.283185307179586476925286766559;
  double sr = 0, cr = 0, si = 0, ci = 0;  // sums and compensations
  a.for_each([&](int e) {
    double ang = tau * static_cast<double>(mod_floor(static_cast<i64>(e) * x, p)) / p;
    double vr = std::cos(ang), vi = std::sin(ang);
    double yr = vr - cr, tr = sr + yr;
    cr = (tr - sr) - yr;
    sr = tr;
    double yi = vi - ci, ti = si + yi;
    ci = (ti - si) - yi;
    si = ti;
  });
  return {sr, si};
}

// Largest number of points of x*A falling in a window of (p+1)/2 consecutive
// residues, i.e. in a closed half-arc of the unit circle.
inline int max_half_arc(const CyclicSet& a, i64 x) {
  const int p = a.modulus();
  if (!is_prime(p)) throw usage_error("max_half_arc: prime modulus required");
  if (mod_floor(x, p) == 0) throw usage_error("max_half_arc: x must be nonzero mod p");
  std::vector<int> pts;
  a.for_each([&](int e) { pts.push_back(static_cast<int>(mod_floor(static_cast<i64>(e) * x, p))); });
  int best = 0;
  for (int r = 0; r < p; ++r) {
    int cnt = 0;
    for (int m : pts)
      if (mod_floor(m - r, p) <= (p - 1) / 2) ++cnt;
    best = std::max(best, cnt);
  }
  return best;
}

// |S_A(x)| <= 2*max_half_arc - |A|; the slack is the gap, never negative.
struct CircleBound {
  int half_arc = 0;
  i64 bound = 0;       // 2*half_arc - |A|
  double abs_sum = 0;  // |S_A(x)|
  double slack = 0;    // bound - abs_sum
  bool bound_negative = false;
};

inline CircleBound circle_bound_slack(const CyclicSet& a, i64 x) {
  CircleBound out;
  out.half_arc = max_half_arc(a, x);
  out.bound = 2 * static_cast<i64>(out.half_arc) - a.cardinality();
  out.abs_sum = std::abs(exp_sum(a, x));
  out.slack = static_cast<double>(out.bound) - out.abs_sum;
  out.bound_negative = out.bound < 0;
  return out;
}

namespace detail {

inline rational rat(i64 num, i64 den) { return rational(num) / den; }

inline void check_alpha(const rational& a) {
  if (!(a > 0 && a <= rat(212, 1000)))
    throw usage_error("alpha outside (0, 0.212]");
}

inline void check_beta(const rational& b) {
  if (!(b >= rat(731, 1000) && b <= 1))
    throw usage_error("beta outside [0.731, 1]");
}

}  // namespace detail

// c1(alpha) = (5 - 18a - 24a^2 - 8a^3) / (14 - 9a - 24a^2 - 8a^3) on (0, 0.212].
inline rational const_c1_exact(const rational& a) {
  detail::check_alpha(a);
  rational num = 5 - 18 * a - 24 * a * a - 8 * a * a * a;
  rational den = 14 - 9 * a - 24 * a * a - 8 * a * a * a;
  return num / den;
}

inline double const_c1(double alpha) {
  rational a = detail::rat(static_cast<i64>(std::llround(alpha * 1e9)), 1000000000);
  return static_cast<double>(const_c1_exact(a));
}

// Two-parameter refinement of c1 on (0, 0.212] x [0.731, 1].
inline rational const_cbeta_exact(const rational& a, const rational& b) {
  detail::check_alpha(a);
  detail::check_beta(b);
  rational a2 = a * a, a3 = a2 * a;
  rational b2 = b * b, b3 = b2 * b, b4 = b3 * b, b5 = b4 * b;
  rational one_a = 1 + a;
  rational num = -4 - (1 + 12 * a) * b + 3 * (5 + a - 4 * a2) * b2 +
                 (-1 + 3 * a - 4 * a3) * b3 - 4 * one_a * one_a * one_a * b4;
  rational den = -4 + 11 * b2 + 11 * b3 - 4 * b5 - 3 * a * b * (4 - 5 * b2 + 4 * b4) -
                 12 * a2 * (b2 + b5) - 4 * a3 * (b3 + b5);
  return num / den;
}

inline double const_cbeta(double alpha, double beta) {
  rational a = detail::rat(static_cast<i64>(std::llround(alpha * 1e9)), 1000000000);
  rational b = detail::rat(static_cast<i64>(std::llround(beta * 1e9)), 1000000000);
  return static_cast<double>(const_cbeta_exact(a, b));
}

// c(K, s) = (-27K + 9K^2 + s(9 + 9K - 9K^2 + 12K^3 - 4K^4)) / (4s(3-K)K^4),
// for 2 < K < 3 and s >= K^2.
inline rational const_levshkredov_exact(const rational& K, const rational& s) {
  if (!(K > 2 && K < 3)) throw usage_error("K outside (2, 3)");
  if (!(s >= K * K)) throw usage_error("s below K^2");
  rational K2 = K * K, K3 = K2 * K, K4 = K3 * K;
  rational num = -27 * K + 9 * K2 + s * (9 + 9 * K - 9 * K2 + 12 * K3 - 4 * K4);
  rational den = 4 * s * (3 - K) * K4;
  return num / den;
}

inline double const_levshkredov(double K, double s) {
  rational k = detail::rat(static_cast<i64>(std::llround(K * 1e9)), 1000000000);
  rational sv = detail::rat(static_cast<i64>(std::llround(s * 1e9)), 1000000000);
  return static_cast<double>(const_levshkredov_exact(k, sv));
}

// gamma_A = (2l + 6 - 3a)/3 and gamma_B = (2l + 6 - 3b)/3.
struct GammaThresholds {
  rational gamma_a;
  rational gamma_b;
};

inline GammaThresholds gamma_thresholds(i64 a, i64 b, i64 l) {
  return {detail::rat(2 * l + 6 - 3 * a, 3), detail::rat(2 * l + 6 - 3 * b, 3)};
}

// Outward-rounded interval, just enough for the polynomial bracket below.
struct Ival {
  double lo, hi;

  static Ival point(double x) { return {x, x}; }
  static Ival around(double x) {
    return {std::nextafter(x, -1e300), std::nextafter(x, 1e300)};
  }

  Ival operator+(const Ival& o) const {
    return {std::nextafter(lo + o.lo, -1e300), std::nextafter(hi + o.hi, 1e300)};
  }
  Ival operator-(const Ival& o) const {
    return {std::nextafter(lo - o.hi, -1e300), std::nextafter(hi - o.lo, 1e300)};
  }
  Ival operator*(const Ival& o) const {
    double a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    double mn = std::min(std::min(a, b), std::min(c, d));
    double mx = std::max(std::max(a, b), std::max(c, d));
    return {std::nextafter(mn, -1e300), std::nextafter(mx, 1e300)};
  }
};

struct NumericLemmaReport {
  bool lem16_ok = false;
  double lem16_margin_r16 = 0;
  bool rphyp_ok = false;
  double rphyp_margin_r6 = 0;
  bool stillness_exact_ok = false;
  bool stillness_grid_ok = false;
  bool stillness_interval_ok = false;
  std::vector<double> stillness_margins;  // n = 2..8
  bool xr_283_92_ok = false;
  bool xr_283_92_tight_r89 = false;
  bool xr_3143_ok = false;
  bool xr_31_ok = false;
  bool xr_30885_ok = false;
  bool all_ok = false;
};

namespace detail {

inline i64 binom(int n, int k) {
  i64 r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Upper end of the integer run proved by each sweep.
constexpr i64 sweep_top = 1000000;

template <class Pred>
bool sweep_and(i64 lo, i64 hi, int jobs, Pred&& pred) {
  if (jobs <= 1) {
    for (i64 r = lo; r <= hi; ++r)
      if (!pred(r)) return false;
    return true;
  }
  std::vector<char> oks(static_cast<std::size_t>(jobs), 1);
  std::vector<std::thread> ts;
  i64 span = (hi - lo + 1 + jobs - 1) / jobs;
  for (int j = 0; j < jobs; ++j) {
    i64 a = lo + j * span;
    i64 b = std::min(hi, a + span - 1);
    ts.emplace_back([&, j, a, b] {
      for (i64 r = a; r <= b; ++r)
        if (!pred(r)) {
          oks[static_cast<std::size_t>(j)] = 0;
          return;
        }
    });
  }
  for (auto& t : ts) t.join();
  for (char c : oks)
    if (!c) return false;
  return true;
}

}  // namespace detail

// Integer maximizer profile maxX(r) = 2r + 2 + floor((isqrt(8r+17) + 1) / 2)
// used by the X + r bound family.
inline i64 max_x_of_r(i64 r) {
  return 2 * r + 2 + static_cast<i64>((isqrt_u64(static_cast<u64>(8 * r + 17)) + 1) >> 1);
}

// Exact verification of the standalone numeric inequalities: the square-root
// domination lemmas, the binomial stillness bound and the X + r bound family.
// All integer sweeps run in 128-bit arithmetic; the stillness bound is proved
// three ways (exact rational bracket, dense double grid, outward-rounded
// interval pass over the factored bracket).
inline NumericLemmaReport numeric_lemma_suite(int jobs = 0) {
  if (jobs <= 0) jobs = detail::env_jobs();
  NumericLemmaReport rep;

  // 300000*sqrt(2r + 17/4) <= 1000000 + 50391 r on [-1, 10^6].
  rep.lem16_ok = detail::sweep_and(-1, detail::sweep_top, jobs, [](i64 r) {
    i128 v = static_cast<i128>(1000000) + static_cast<i128>(50391) * r;
    if (v < 0) return false;
    i128 lhs = static_cast<i128>(300000) * 300000 * (8 * r + 17);
    return lhs <= 4 * v * v;
  });
  rep.lem16_margin_r16 =
      (10.0 / 3 + 0.16797 * 16) - std::sqrt(2.0 * 16 + 17.0 / 4);

  // 9253000*sqrt(2r + 17/4) <= 2282900 r + 23602831 on [-1, 10^6].
  rep.rphyp_ok = detail::sweep_and(-1, detail::sweep_top, jobs, [](i64 r) {
    i128 w = static_cast<i128>(2282900) * r + 23602831;
    if (w < 0) return false;
    i128 lhs = static_cast<i128>(9253000) * 9253000 * (8 * r + 17);
    return lhs <= 4 * w * w;
  });
  {
    // reported in the unscaled form: linear side minus (9253/1963)*sqrt term
    double w6 = (2282900.0 * 6 + 23602831.0) / 1963000.0;
    rep.rphyp_margin_r6 = w6 - (9253.0 / 1963.0) * std::sqrt(2.0 * 6 + 17.0 / 4);
  }

  // (1+z)^n <= 1 + nz + 0.466 n^2 z^2 for z in [0, 0.0313], n in [2, 8].
  // Bracket: g_n(z) = 0.466 n^2 - C(n,2) - sum_{k>=3} C(n,k) z^(k-2) >= 0.
  {
    rep.stillness_exact_ok = true;
    rational z = detail::rat(313, 10000);
    for (int n = 2; n <= 8; ++n) {
      rational g = detail::rat(466, 1000) * n * n - detail::binom(n, 2);
      rational zp = 1;
      for (int k = 3; k <= n; ++k) {
        zp *= z;
        g -= detail::binom(n, k) * zp;
      }
      rep.stillness_margins.push_back(static_cast<double>(g));
      if (g < 0) rep.stillness_exact_ok = false;
    }

    rep.stillness_grid_ok = true;
    const int grid = 100000;
    for (int i = 0; i <= grid && rep.stillness_grid_ok; ++i) {
      double zz = 0.0313 * i / grid;
      for (int n = 2; n <= 8; ++n) {
        double lhs = std::pow(1.0 + zz, n);
        double rhs = 1.0 + n * zz + 0.466 * n * n * zz * zz;
        if (lhs > rhs + 1e-12) rep.stillness_grid_ok = false;
      }
    }

    rep.stillness_interval_ok = true;
    const int pieces = 4096;
    for (int n = 2; n <= 8; ++n) {
      for (int i = 0; i < pieces; ++i) {
        double a = 0.0313 * i / pieces;
        double b = 0.0313 * (i + 1) / pieces;
        Ival z_iv{std::nextafter(a, -1e300), std::nextafter(b, 1e300)};
        Ival g = Ival::around(0.466) * Ival::point(static_cast<double>(n) * n) -
                 Ival::point(static_cast<double>(detail::binom(n, 2)));
        Ival zp = Ival::point(1.0);
        for (int k = 3; k <= n; ++k) {
          zp = zp * z_iv;
          g = g - Ival::point(static_cast<double>(detail::binom(n, k))) * zp;
        }
        if (!(g.lo >= 0)) {
          rep.stillness_interval_ok = false;
          break;
        }
      }
      if (!rep.stillness_interval_ok) break;
    }
  }

  // Bound family for f(r) = maxX(r) + r on [2, 10^6].
  rep.xr_283_92_ok = true;
  rep.xr_3143_ok = true;
  rep.xr_31_ok = true;
  rep.xr_30885_ok = true;
  rep.xr_283_92_tight_r89 = false;
  {
    bool ok1 = true, ok2 = true, ok3 = true, ok4 = true, tight = false;
    for (i64 r = 2; r <= detail::sweep_top; ++r) {
      i64 f = max_x_of_r(r) + r;
      if (92 * f > 283 * (r + 3)) ok1 = false;
      if (92 * f == 283 * (r + 3) && r == 89) tight = true;
      if (1000 * f > 3143 * (r + 2)) ok2 = false;
      if (20 * f > 62 * r + 155) ok3 = false;
      if (20000 * f > 61770 * r + 166779) ok4 = false;
    }
    rep.xr_283_92_ok = ok1;
    rep.xr_3143_ok = ok2;
    rep.xr_31_ok = ok3;
    rep.xr_30885_ok = ok4;
    rep.xr_283_92_tight_r89 = tight;
  }

  rep.all_ok = rep.lem16_ok && rep.rphyp_ok && rep.stillness_exact_ok &&
               rep.stillness_grid_ok && rep.stillness_interval_ok && rep.xr_283_92_ok &&
               rep.xr_3143_ok && rep.xr_31_ok && rep.xr_30885_ok;
  return rep;
}

}  // namespace zsl
