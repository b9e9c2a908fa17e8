#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "zsl/isoperimetry.hpp"

using namespace zsl;

namespace {

std::vector<std::vector<int>> atom_lists(const AtomReport& r) {
  std::vector<std::vector<int>> out;
  for (const auto& a : r.atoms) out.push_back(a.elements());
  return out;
}

CyclicSet random_set(std::mt19937_64& rng, int n) {
  CyclicSet s(n);
  for (int i = 0; i < n; ++i)
    if (rng() & 1) s.add(i);
  if (s.empty()) s.add(static_cast<i64>(rng() % n));
  return s;
}

}  // namespace

TEST_CASE("atom reports match the worked values") {
  // matches tests/oracle/expected/iso.json
  auto r7 = kappa_atoms(CyclicSet(7, {0, 1}), 2);
  REQUIRE(r7.has_value());
  REQUIRE(r7->kappa == 1);
  REQUIRE(r7->alpha == 2);
  REQUIRE(r7->atom_count == 7);
  REQUIRE(r7->fragment_count == 21);

  auto r11 = kappa_atoms(CyclicSet(11, {0, 1, 2}), 2);
  REQUIRE(r11->kappa == 2);
  REQUIRE(r11->alpha == 2);
  REQUIRE(r11->atom_count == 11);
  REQUIRE(r11->fragment_count == 66);

  auto r6 = kappa_atoms(CyclicSet(6, {0, 3}), 1);
  REQUIRE(r6->kappa == 0);
  REQUIRE(r6->alpha == 2);
  REQUIRE(r6->fragment_count == 6);
  REQUIRE(atom_lists(*r6) ==
          std::vector<std::vector<int>>{{0, 3}, {1, 4}, {2, 5}});

  REQUIRE_FALSE(kappa_atoms(CyclicSet::full(5), 1).has_value());

  auto r13 = kappa_atoms(CyclicSet(13, {0, 1, 3}), 3);
  REQUIRE(r13->kappa == 3);
  REQUIRE(r13->alpha == 3);
  REQUIRE(r13->atom_count == 26);
  REQUIRE(r13->fragment_count == 130);
  REQUIRE(atom_lists(*r13).front() == std::vector<int>{0, 1, 2});
}

TEST_CASE("kappa is invariant under translation and dilation") {
  std::mt19937_64 rng(60601);
  int done = 0;
  while (done < 200) {
    int n = 4 + static_cast<int>(rng() % 9);
    CyclicSet b = random_set(rng, n);
    int k = 1 + static_cast<int>(rng() % 2);
    auto base = kappa_atoms(b, k);
    i64 t = static_cast<i64>(rng() % n);
    i64 u = 1 + static_cast<i64>(rng() % (n - 1));
    if (std::gcd(u, static_cast<i64>(n)) != 1) continue;
    ++done;
    auto moved = kappa_atoms(b.rotated(t).dilated(u), k);
    REQUIRE(base.has_value() == moved.has_value());
    if (!base) continue;
    REQUIRE(base->kappa == moved->kappa);
    REQUIRE(base->alpha == moved->alpha);
    REQUIRE(base->fragment_count == moved->fragment_count);
    REQUIRE(base->atom_count == moved->atom_count);
  }
}

TEST_CASE("boundary bound holds for random sets") {
  std::mt19937_64 rng(888);
  int done = 0;
  while (done < 200) {
    int n = 4 + static_cast<int>(rng() % 9);
    CyclicSet b = random_set(rng, n);
    int k = 1 + static_cast<int>(rng() % 2);
    auto rep = kappa_atoms(b, k);
    if (!rep) continue;
    ++done;
    CyclicSet y = random_set(rng, n);
    i64 grown = sumset(y, b).cardinality();
    REQUIRE(grown >= std::min<i64>(n - k + 1, y.cardinality() + rep->kappa));
  }
}

TEST_CASE("atom theorems hold across a small exhaustive family") {
  // every nonempty B, prime n <= 11 and composite n <= 10, k <= 2
  i64 failures = 0, applicable_seen = 0;
  for (int n : {4, 5, 6, 7, 8, 9, 10, 11}) {
    for (u64 mask = 1; mask + 1 <= (u64{1} << n); ++mask) {
      CyclicSet b = CyclicSet::from_mask(n, mask);
      for (int k = 1; k <= 2; ++k) {
        AtomTheoremsReport rep = check_atom_theorems(b, k);
        for (const auto& c : rep.checks) {
          if (c.applicable) ++applicable_seen;
          if (c.applicable && !c.holds) ++failures;
        }
      }
    }
  }
  REQUIRE(failures == 0);
  REQUIRE(applicable_seen > 0);
}

TEST_CASE("atom theorem report names are stable") {
  AtomTheoremsReport rep = check_atom_theorems(CyclicSet(11, {0, 1, 2}), 2);
  for (const char* name : {"fundamental", "stab_preserved", "iso_bound", "thm8", "thm9_1",
                           "thm9_2", "thm10", "cor11_1", "cor11_2", "cor11_3", "modatoms"}) {
    const TheoremCheck& c = rep.get(name);
    if (c.applicable) REQUIRE(c.holds);
  }
  REQUIRE(rep.base.has_value());
}

TEST_CASE("fundamental intersection law spot check") {
  // distinct atoms meet in at most k - 1 points
  auto rep = kappa_atoms(CyclicSet(13, {0, 1, 3}), 3);
  REQUIRE(rep.has_value());
  for (std::size_t i = 0; i < rep->atoms.size(); ++i)
    for (std::size_t j = i + 1; j < rep->atoms.size(); ++j)
      REQUIRE(rep->atoms[i].intersect(rep->atoms[j]).cardinality() <= 2);
}

TEST_CASE("petridis minimizers match the worked values") {
  PetridisResult p1 = petridis_minimizer(IntSet({0, 1}), IntSet({0, 1}));
  REQUIRE(p1.a_prime == std::vector<i64>{0, 1});
  REQUIRE(p1.num == 3);
  REQUIRE(p1.den == 2);

  // the winning ratio 4/2 is reported reduced
  PetridisResult p2 = petridis_minimizer(IntSet({0, 1, 10}), IntSet({0, 1, 2}));
  REQUIRE(p2.a_prime == std::vector<i64>{0, 1});
  REQUIRE(p2.num == 2);
  REQUIRE(p2.den == 1);

  // cyclic wrap changes the minimizer: a subgroup has ratio 1
  PetridisResult p3 = petridis_minimizer(CyclicSet(12, {0, 6}), CyclicSet(12, {0, 6}));
  REQUIRE(p3.a_prime == std::vector<i64>{0, 6});
  REQUIRE(p3.num == 1);
  REQUIRE(p3.den == 1);
}

TEST_CASE("petridis ratio dominates pushforward growth") {
  // |C + A' + B| * |A'| <= |A' + B| * |C + A'| for random C, and the n-fold
  // iterate |A' + nB| * |A'|^(n-1) <= |A'+B|^n ... checked cross-multiplied
  std::mt19937_64 rng(5089);
  for (int iter = 0; iter < 60; ++iter) {
    int n = 6 + static_cast<int>(rng() % 15);
    CyclicSet a = random_set(rng, n), b = random_set(rng, n);
    if (a.cardinality() > 12) continue;
    PetridisResult pr = petridis_minimizer(a, b);
    CyclicSet ap(n, pr.a_prime);
    CyclicSet apb = sumset(ap, b);
    REQUIRE(static_cast<i64>(apb.cardinality()) * pr.den ==
            pr.num * static_cast<i64>(ap.cardinality()));
    for (int t = 0; t < 60; ++t) {
      CyclicSet c = random_set(rng, n);
      CyclicSet ca = sumset(c, ap);
      REQUIRE(sumset(ca, b).cardinality() * pr.den <= pr.num * ca.cardinality());
    }
    // iterated sumsets: |A' + mB| <= alpha^m |A'|
    CyclicSet acc = ap;
    i128 num_pow = 1, den_pow = 1;
    for (int m = 1; m <= 4; ++m) {
      acc = sumset(acc, b);
      num_pow *= pr.num;
      den_pow *= pr.den;
      i128 lhs = static_cast<i128>(acc.cardinality()) * den_pow;
      i128 rhs = num_pow * static_cast<i128>(ap.cardinality());
      REQUIRE(lhs <= rhs);
    }
  }
}

TEST_CASE("petridis tie-breaking prefers smaller witnesses") {
  // every subset of {0,1} against {0,2} has ratio 2, so ties resolve to the
  // smaller subset and then the lexicographically smallest element list
  PetridisResult pr = petridis_minimizer(IntSet({0, 1}), IntSet({0, 2}));
  REQUIRE(pr.a_prime == std::vector<i64>{0});
  REQUIRE(pr.num == 2);
  REQUIRE(pr.den == 1);
}

TEST_CASE("isoperimetry capacity and usage limits") {
  REQUIRE_THROWS_AS(kappa_atoms(CyclicSet(30, {0, 1}), 2), capacity_error);
  REQUIRE_THROWS_AS(kappa_atoms(CyclicSet(8), 1), usage_error);
  REQUIRE_THROWS_AS(kappa_atoms(CyclicSet(8, {0}), 0), usage_error);
  REQUIRE_THROWS_AS(
      petridis_minimizer(CyclicSet::interval(30, 0, 21), CyclicSet(30, {0, 1})),
      capacity_error);
}
