#include <doctest.h>

#include "../support/oracles.hpp"
#include "shimura/error.hpp"
#include "shimura/torsion.hpp"

using namespace shimura;

namespace {

std::vector<int> orders_of(const BaseField& base) {
  std::vector<int> v;
  for (const auto& t : possible_torsion_orders(base))
    if (t.decided) v.push_back(t.m);
  return v;
}

QuaternionAlgebraData quad_algebra(i64 d, std::vector<i64> primes) {
  return algebra_over_quadratic(QuadField(d), primes);
}

QuarticField k725() {
  return QuarticField::create({1, -1, -3, 1, 1}, 5);
}

std::vector<i64> squarefree_upto(i64 n) {
  std::vector<i64> v;
  for (i64 d = 2; d <= n; ++d)
    if (is_squarefree(d)) v.push_back(d);
  return v;
}

}  // namespace

TEST_CASE("root orders for element orders") {
  CHECK(root_order_for(2) == 4);
  CHECK(root_order_for(3) == 3);
  CHECK(root_order_for(4) == 8);
  CHECK(root_order_for(5) == 5);
  CHECK(root_order_for(6) == 12);
  CHECK_THROWS_AS(root_order_for(7), InputError);
}

TEST_CASE("possible torsion orders") {
  CHECK(orders_of(RationalBase{}) == std::vector<int>{2, 3});
  CHECK(orders_of(QuadField(17)) == std::vector<int>{2, 3});
  CHECK(orders_of(QuadField(2)) == std::vector<int>{2, 3, 4});
  CHECK(orders_of(QuadField(5)) == std::vector<int>{2, 3, 5});
  CHECK(orders_of(QuadField(3)) == std::vector<int>{2, 3, 6});
  CHECK(orders_of(k725()) == std::vector<int>{2, 3, 5});
  // phi(n) <= 2 [k:Q] for every declared order.
  for (i64 d : squarefree_upto(50))
    for (const auto& t : possible_torsion_orders(QuadField(d))) CHECK(euler_phi(static_cast<u64>(t.n)) <= 4);
}

TEST_CASE("undecided orders for real cyclotomic quartic fields") {
  // Q(zeta_16)^+ : x^4 - 4x^2 + 2, discriminant 2048, contains Q(sqrt 2).
  const auto K = QuarticField::create({1, 0, -4, 0, 2}, 2);
  CHECK(K.field_disc() == 2048);
  const auto all = possible_torsion_orders(K);
  CHECK(std::any_of(all.begin(), all.end(), [](const TorsionOrder& t) { return t.m == 8 && !t.decided; }));
  const auto A = algebra_over_quartic(K, true);
  CHECK(full_group_torsion_verdict(A).torsion());
}

TEST_CASE("cyclotomic splitting: worked values") {
  const QuadField K33(33), K17(17), K2(2);
  const auto q11 = prime_of(K33, 11);
  CHECK(cyclotomic_splitting(K33, q11, 4) == Splitting::Inert);
  CHECK(cyclotomic_splitting(K33, q11, 3) == Splitting::Inert);
  CHECK(cyclotomic_splitting(K33, q11, 6) == Splitting::Inert);
  CHECK(cyclotomic_splitting(K17, prime_of(K17, 17), 4) == Splitting::Split);
  CHECK(cyclotomic_splitting(K17, prime_of(K17, 2, 0), 4) == Splitting::Ramified);
  CHECK(cyclotomic_splitting(K17, prime_of(K17, 2, 1), 4) == Splitting::Ramified);
  CHECK(cyclotomic_splitting(K2, prime_of(K2, 7), 3) == Splitting::Split);
  // Base Q: the field of xi_3 is Q(sqrt -3).
  CHECK(cyclotomic_splitting(RationalBase{}, prime_of(RationalBase{}, 11), 3) == Splitting::Inert);
  CHECK(cyclotomic_splitting(RationalBase{}, prime_of(RationalBase{}, 5), 4) == Splitting::Split);
  CHECK(cyclotomic_splitting(RationalBase{}, prime_of(RationalBase{}, 2), 4) == Splitting::Ramified);
}

TEST_CASE("cyclotomic splitting: argument checks") {
  const QuadField K17(17);
  const auto q = prime_of(K17, 13);
  CHECK_THROWS_AS(cyclotomic_splitting(K17, q, 5), InputError);
  CHECK_THROWS_AS(cyclotomic_splitting(K17, q, 7), InputError);
  CHECK_THROWS_AS(cyclotomic_splitting(RationalBase{}, prime_of(RationalBase{}, 7), 8), InputError);
  // A prime that does not belong to the field.
  CHECK_THROWS_AS(cyclotomic_splitting(K17, BasePrime{13, 2, 1, 0}, 4), InputError);
  // Quartic base at residue characteristic 2 is outside the supported cases.
  const auto K = k725();
  CHECK_THROWS_AS(cyclotomic_splitting(K, prime_of(K, 2), 4), Unsupported);
}

TEST_CASE("Euler criterion agrees with residue-field squares for Nq <= 10^4") {
  for (i64 d : {2, 3, 5, 6, 7, 10, 13, 17, 21, 33, 41, 57, 85}) {
    const QuadField K(d);
    for (i64 p : oracle::primes_below(10001)) {
      if (p == 2) continue;
      for (const auto& q : primes_of(K, p)) {
        if (q.norm() > 10000) continue;
        for (int n : {3, 4}) {
          const i64 m = n == 3 ? -3 : -1;
          if (m % p == 0) continue;
          bool square;
          if (q.f == 1) square = oracle::is_square_mod(m, p);
          else square = oracle::is_square_in_fp2(m, d, p);
          const auto got = cyclotomic_splitting(K, q, n);
          CHECK_MESSAGE(got == (square ? Splitting::Split : Splitting::Inert), "d=" << d << " p=" << p << " n=" << n);
        }
      }
    }
  }
}

TEST_CASE("splitting matches the Frobenius rule Nq = 1 mod n away from n") {
  const std::pair<i64, std::vector<int>> cases[] = {
      {2, {3, 4, 8}}, {3, {3, 4, 12}}, {5, {3, 4, 5}}, {13, {3, 4}}, {33, {3, 4}}};
  for (const auto& [d, ns] : cases) {
    const QuadField K(d);
    for (i64 p : oracle::primes_below(2000)) {
      for (const auto& q : primes_of(K, p)) {
        for (int n : ns) {
          if (n % p == 0 || (n == 3 && p == 2) || (n == 4 && p == 2)) continue;
          const bool split = q.norm() % n == 1;
          CHECK(cyclotomic_splitting(K, q, n) == (split ? Splitting::Split : Splitting::Inert));
        }
      }
    }
  }
}

TEST_CASE("biquadratic law agrees with Euler's criterion at odd primes") {
  for (i64 d : squarefree_upto(60)) {
    const QuadField K(d);
    for (i64 p : oracle::primes_below(300)) {
      if (p == 2) continue;
      const auto q = prime_of(K, p);
      for (i64 m : {-1, -3}) {
        if (m % p == 0) continue;
        CHECK(biquadratic_splitting(d, m, p) == cyclotomic_splitting(K, q, m == -1 ? 4 : 3));
      }
    }
  }
}

TEST_CASE("equal fields give equal verdicts, including at 2 and 3") {
  // Q(sqrt 2)(xi_8) = Q(sqrt 2, i) and Q(sqrt 3)(xi_12) = Q(sqrt 3, i).
  for (i64 d : {2, 3}) {
    const QuadField K(d);
    const int n = d == 2 ? 8 : 12;
    for (i64 p : oracle::primes_below(500))
      for (const auto& q : primes_of(K, p)) CHECK(cyclotomic_splitting(K, q, n) == cyclotomic_splitting(K, q, 4));
  }
  // Over Q(sqrt 5), 5 ramifies in Q(zeta_5) with index 4 = 2 * 2.
  const QuadField K5(5);
  CHECK(cyclotomic_splitting(K5, prime_of(K5, 5), 5) == Splitting::Ramified);
  CHECK(cyclotomic_splitting(K5, prime_of(K5, 11), 5) == Splitting::Split);
  CHECK(cyclotomic_splitting(K5, prime_of(K5, 2), 5) == Splitting::Inert);
}

TEST_CASE("torsion orders of Gamma(1)") {
  const auto A2 = quad_algebra(2, {7});
  const auto o2 = gamma1_torsion_orders(A2);
  CHECK(std::find(o2.begin(), o2.end(), 4) != o2.end());
  CHECK(std::find(o2.begin(), o2.end(), 3) == o2.end());
  CHECK(gamma1_torsion_orders(quad_algebra(17, {2})) == std::vector<int>{2, 3});
  const std::vector<i64> ram{2, 5};
  CHECK(gamma1_torsion_orders(algebra_over_rationals(ram)) == std::vector<int>{3});
}

TEST_CASE("Gamma(1) orders are a subset of the possible orders") {
  for (i64 d : squarefree_upto(40)) {
    const QuadField K(d);
    const auto possible = orders_of(K);
    for (i64 p : oracle::primes_below(40)) {
      if (splitting_type(K, p).splitting != Splitting::Split) continue;
      for (int m : gamma1_torsion_orders(quad_algebra(d, {p})))
        CHECK(std::find(possible.begin(), possible.end(), m) != possible.end());
    }
  }
}

TEST_CASE("Borel verdicts") {
  const auto A33 = quad_algebra(33, {2});
  const auto v33 = borel_torsion_verdict(A33, prime_of(A33.base, 11));
  CHECK(v33.free());
  const auto A17 = quad_algebra(17, {2});
  const auto v17 = borel_torsion_verdict(A17, prime_of(A17.base, 17));
  CHECK(v17.torsion());
  CHECK(v17.order == 2);
  const std::vector<i64> ram{2, 5};
  const auto AQ = algebra_over_rationals(ram);
  CHECK(borel_torsion_verdict(AQ, prime_of(AQ.base, 11)).free());
  // Level inside Ram(A).
  CHECK_THROWS_AS(borel_torsion_verdict(A33, prime_of(A33.base, 2, 1)), InputError);
}

TEST_CASE("Borel verdict is decided whenever the level is prime to 6") {
  for (i64 d : squarefree_upto(60)) {
    const QuadField K(d);
    i64 ram = 0;
    for (i64 p : oracle::primes_below(60))
      if (splitting_type(K, p).splitting == Splitting::Split) {
        ram = p;
        break;
      }
    if (!ram) continue;
    const auto A = quad_algebra(d, {ram});
    for (i64 p : oracle::primes_below(80)) {
      if (p <= 3 || p == ram || (d == 5 && p == 5)) continue;
      for (const auto& q : primes_of(K, p))
        CHECK(borel_torsion_verdict(A, q).kind != TorsionVerdict::Kind::Unknown);
    }
  }
}

TEST_CASE("principal and unipotent verdicts") {
  const auto K = k725();
  const auto A = algebra_over_quartic(K, true);
  const auto q29 = prime_of(K, 29, 0);
  CHECK(q29.f == 1);
  CHECK(q29.e == 2);
  CHECK(borel_torsion_verdict(A, q29).torsion());
  CHECK(principal_torsion_verdict(A, q29).free());
  CHECK(unipotent_torsion_verdict(A, q29).free());

  const auto A7 = quad_algebra(7, {3});
  const auto q2 = prime_of(A7.base, 2);
  const auto pv = principal_torsion_verdict(A7, q2);
  CHECK(pv.torsion());
  CHECK(pv.order == 2);
  CHECK(std::find(pv.surviving_orders.begin(), pv.surviving_orders.end(), 3) == pv.surviving_orders.end());

  // Q(sqrt 3): 2 is unramified in Q(sqrt 3, i)/Q(sqrt 3) and inert there, so
  // even at a level over 2 the Borel group is free and so is everything below.
  const auto A3 = quad_algebra(3, {11});
  const auto o3 = gamma1_torsion_orders(A3);
  CHECK(std::find(o3.begin(), o3.end(), 2) != o3.end());
  const auto q2_3 = prime_of(A3.base, 2);
  CHECK(cyclotomic_splitting(A3.base, q2_3, 4) == Splitting::Inert);
  CHECK(borel_torsion_verdict(A3, q2_3).free());
  CHECK(unipotent_torsion_verdict(A3, q2_3).free());

  // Residue characteristic 11 cannot be an element order over a quadratic field.
  const auto A2 = quad_algebra(2, {7});
  const auto q11 = prime_of(A2.base, 11);
  CHECK(q11.norm() == 121);
  CHECK(unipotent_torsion_verdict(A2, q11).free());
  CHECK(principal_torsion_verdict(A2, q11).free());
}

TEST_CASE("torsion verdicts are monotone along Gamma(q) < Gamma^U(q) < Gamma^B(q)") {
  for (i64 d : squarefree_upto(40)) {
    const QuadField K(d);
    for (i64 ram : oracle::primes_below(20)) {
      if (splitting_type(K, ram).splitting != Splitting::Split) continue;
      const auto A = quad_algebra(d, {ram});
      for (i64 p : oracle::primes_below(40)) {
        for (const auto& q : primes_of(K, p)) {
          if (is_ramified_at(A, q)) continue;
          const auto b = borel_torsion_verdict(A, q);
          const auto u = unipotent_torsion_verdict(A, q);
          const auto pr = principal_torsion_verdict(A, q);
          if (b.free()) {
            CHECK_FALSE(u.torsion());
            CHECK_FALSE(pr.torsion());
          }
          if (u.free()) CHECK_FALSE(pr.torsion());
          if (pr.torsion()) CHECK(u.torsion());
        }
      }
    }
  }
}
