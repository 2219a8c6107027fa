#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "rmtorus/errors.hpp"
#include "rmtorus/intmat.hpp"
#include "rmtorus/units.hpp"

using namespace rmt;

namespace {

QuadraticIrrational qi(long P, long D, long Q) { return QuadraticIrrational::make(P, D, Q); }

const QuadraticIrrational kSqrt2m1 = qi(-1, 2, 1);  // sqrt 2 - 1
const QuadraticIrrational kGolden = qi(-1, 5, 2);   // (sqrt 5 - 1)/2
const QuadraticIrrational kSqrt3m1 = qi(-1, 3, 1);  // sqrt 3 - 1

OrderElt elt(long x, long y, const QuadraticIrrational& t) { return {x, y, t}; }

// (x + y theta)(u + v theta) with theta^2 rewritten by its minimal polynomial,
// expanded symbolically over the rationals.
std::pair<Rational, Rational> symbolic_product(const OrderElt& a, const OrderElt& b) {
  const QuadraticPoly mp = a.theta.min_poly();
  const Rational tr(-mp.b, mp.a), nm(mp.c, mp.a);  // theta^2 = tr theta - nm
  const Rational c0 = Rational(a.x * b.x), c1 = Rational(a.x * b.y + a.y * b.x), c2 = Rational(a.y * b.y);
  return {c0 - c2 * nm, c1 + c2 * tr};
}

}  // namespace

TEST_CASE("elt_mul worked examples") {
  const auto t2 = qi(0, 2, 1);
  CHECK(elt_mul(elt(1, 1, t2), elt(1, 0, t2)) == elt(1, 1, t2));
  CHECK(elt_mul(elt(1, 1, t2), elt(1, 1, t2)) == elt(3, 2, t2));
  // golden: theta^2 = -theta + 1, (1 + theta)^2 = 2 + theta
  CHECK(elt_mul(elt(1, 1, kGolden), elt(1, 1, kGolden)) == elt(2, 1, kGolden));
}

TEST_CASE("elt_mul agrees with symbolic expansion") {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> c(-40, 40);
  for (const auto& t : {kSqrt2m1, kGolden, kSqrt3m1, qi(3, 13, 2), qi(0, 7, 1)}) {
    for (int i = 0; i < 50; ++i) {
      const OrderElt a = elt(c(rng), c(rng), t), b = elt(c(rng), c(rng), t);
      const auto [x, y] = symbolic_product(a, b);
      const OrderElt p = elt_mul(a, b);
      CHECK(Rational(p.x) == x);
      CHECK(Rational(p.y) == y);
      CHECK(elt_norm(p) == elt_norm(a) * elt_norm(b));
    }
  }
}

TEST_CASE("elt_mul rejects mismatched theta and products leaving the lattice") {
  CHECK_THROWS_AS(elt_mul(elt(1, 1, kGolden), elt(1, 1, kSqrt2m1)), ValidationError);
  const auto t = qi(1, 3, 3);  // 9 t^2 - 6 t - 2 = 0, so t^2 has denominator 9
  CHECK_THROWS_AS(elt_mul(elt(0, 1, t), elt(0, 1, t)), ValidationError);
}

TEST_CASE("fundamental_unit worked examples") {
  CHECK(fundamental_unit({kSqrt2m1, 1}) == elt(2, 1, kSqrt2m1));     // 1 + sqrt 2
  CHECK(fundamental_unit({kGolden, 1}) == elt(1, 1, kGolden));       // golden ratio
  CHECK(fundamental_unit({kSqrt2m1, 3}) == elt(29, 12, kSqrt2m1));   // 17 + 12 sqrt 2
  CHECK(fundamental_unit({kSqrt3m1, 1}) == elt(3, 1, kSqrt3m1));     // 2 + sqrt 3
}

TEST_CASE("fundamental_unit matches the Pell sweep") {
  for (const auto& t : {kSqrt2m1, kGolden, kSqrt3m1, qi(0, 7, 1), qi(1, 13, 2), qi(-2, 19, 3), qi(3, 21, 6)}) {
    for (long f = 1; f <= 5; ++f) {
      CAPTURE(t);
      CAPTURE(f);
      const auto expect = oracle::pell_sweep(t.P(), t.D(), t.Q(), f);
      REQUIRE(expect.has_value());
      const OrderElt eps = fundamental_unit({t, f});
      CHECK(eps.x == expect->x);
      CHECK(eps.y == expect->y);
      CHECK(elt_norm(eps) == expect->norm);
      CHECK(elt_greater_than_one(eps));
    }
  }
}

TEST_CASE("Pell sweep reproduces the classical units") {
  // x^2 - 2 y^2 = -1 at (1, 1); x^2 - 2 y^2 = +1 first at (3, 2); conductor 3 needs 3 | y: (17, 12)
  auto u = oracle::pell_sweep(0, 2, 1, 1);
  CHECK(u->x == 1);
  CHECK(u->y == 1);
  u = oracle::pell_sweep(0, 2, 1, 3);
  CHECK(u->x == 17);
  CHECK(u->y == 12);
}

TEST_CASE("pi_index worked examples") {
  CHECK(pi_index(kSqrt2m1, 2) == 2);
  CHECK(pi_index(kSqrt2m1, 3) == 4);
  CHECK(pi_index(kGolden, 2) == 3);
  CHECK(elt_pow(fundamental_unit({kSqrt2m1, 1}), 2) == elt(5, 2, kSqrt2m1));  // 3 + 2 sqrt 2
}

TEST_CASE("pi_index for the golden ratio follows the Fibonacci numbers") {
  // phi^k = F(k-1) + F(k) phi; the theta-coefficient is F(k)
  std::vector<long> fib{0, 1};
  while (fib.size() < 80) fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
  for (long p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29}) {
    long expect = 1;
    while (fib[static_cast<std::size_t>(expect)] % p != 0) ++expect;
    CHECK(pi_index(kGolden, p) == expect);
  }
}

TEST_CASE("pi_index argument checks") {
  CHECK_THROWS_AS(pi_index(kSqrt2m1, 1), ValidationError);
  CHECK_THROWS_AS(pi_index(kSqrt2m1, 3, 3), SearchCapExceeded);
  CHECK(pi_index(kSqrt2m1, 3, 4) == 4);
  CHECK(pi_index(kSqrt2m1, 9) > 0);  // composite conductors are accepted
}

TEST_CASE("fundamental unit of the conductor-p order is eps^pi(p)") {
  for (const auto& t : {kSqrt2m1, kGolden, kSqrt3m1}) {
    const OrderElt eps = fundamental_unit({t, 1});
    for (long p : {2, 3, 5, 7, 11, 13}) {
      const auto pi = pi_index(t, p);
      CHECK(fundamental_unit({t, p}) == elt_pow(eps, pi));
    }
  }
}

TEST_CASE("matrix_of worked examples") {
  IMat2 m = matrix_of(elt(2, 1, kSqrt2m1));
  CHECK(mat_trace(m) == 2);
  CHECK(mat_det(m) == -1);

  m = matrix_of(elt(1, 1, kGolden));
  CHECK(mat_trace(m) == 1);
  CHECK(mat_det(m) == -1);

  m = matrix_of(elt(29, 12, kSqrt2m1));
  CHECK(mat_trace(m) == 34);
  CHECK(mat_det(m) == 1);

  CHECK_THROWS_AS(matrix_of(elt(2, 0, kSqrt2m1)), ValidationError);
}

TEST_CASE("matrix_of is multiplicative") {
  const OrderElt eps = fundamental_unit({kSqrt3m1, 1});
  CHECK(matrix_of(elt_pow(eps, 5)) == mat_pow(matrix_of(eps), 5));
}

TEST_CASE("unit group law, trace link, coefficient growth") {
  for (const auto& t : {kSqrt2m1, kGolden, kSqrt3m1}) {
    const OrderElt eps = fundamental_unit({t, 1});
    const IMat2 A = matrix_A(cf_expand(t).period);
    const Rational n = elt_norm(eps);
    Rational nk = 1;
    Int last_y = 0;
    for (int k = 1; k <= 20; ++k) {
      nk *= n;
      const OrderElt ek = elt_pow(eps, k);
      CHECK(elt_norm(ek) == nk);
      // phi and phi^2 share the coefficient F(1) = F(2) = 1
      if (k >= 3) CHECK(ek.y > last_y);
      else CHECK(ek.y >= last_y);
      last_y = ek.y;
      if (k <= 10) {
        CHECK(mat_trace(matrix_of(ek)) == mat_trace(mat_pow(A, k)));
        CHECK(elt_trace(ek) == Rational(mat_trace(mat_pow(A, k))));
      }
    }
  }
}

TEST_CASE("units of non-integral theta stay in the lattice") {
  const auto t = qi(1, 3, 3);
  const OrderElt eps = fundamental_unit({t, 1});
  CHECK(abs(elt_norm(eps)) == 1);
  CHECK(elt_greater_than_one(eps));
  const auto expect = oracle::pell_sweep(t.P(), t.D(), t.Q(), 1);
  CHECK(eps.x == expect->x);
  CHECK(eps.y == expect->y);
  const IMat2 m = matrix_of(eps);
  CHECK(mat_trace(m) == mat_trace(matrix_A(cf_expand(t).period)));
}

TEST_CASE("elt_greater_than_one") {
  CHECK(elt_greater_than_one(elt(2, 1, kSqrt2m1)));
  CHECK_FALSE(elt_greater_than_one(elt(0, 1, kSqrt2m1)));
  CHECK_FALSE(elt_greater_than_one(elt(1, 0, kSqrt2m1)));
  CHECK(elt_greater_than_one(elt(1, 1, kSqrt2m1)));
  CHECK_FALSE(elt_greater_than_one(elt(-1, -1, kSqrt2m1)));
}
