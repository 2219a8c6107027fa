#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rmtorus/ecpoints.hpp"
#include "rmtorus/errors.hpp"

using namespace rmt;

namespace {

QuadraticIrrational qi(long P, long D, long Q) { return QuadraticIrrational::make(P, D, Q); }

const QuadraticIrrational kSqrt2m1 = qi(-1, 2, 1);
const QuadraticIrrational kGolden = qi(-1, 5, 2);

const Curve kCurves[] = {{0, 1}, {-1, 0}, {1, 1}, {0, -4}, {2, 3}};

}  // namespace

TEST_CASE("curves") {
  CHECK(make_curve(0, 1).discriminant() == -432);
  CHECK_THROWS_AS(make_curve(0, 0), ValidationError);
  CHECK_THROWS_AS(make_curve(-3, 2), ValidationError);  // 4(-27) + 27*4 = 0
}

TEST_CASE("is_prime") {
  std::vector<std::int64_t> found;
  for (std::int64_t n = -3; n < 30; ++n) {
    if (is_prime(n)) found.push_back(n);
  }
  CHECK(found == std::vector<std::int64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  CHECK(is_prime(1000003));
}

TEST_CASE("is_good_prime") {
  CHECK(is_good_prime({0, 1}, 5));
  CHECK_FALSE(is_good_prime({0, 1}, 3));
  CHECK_FALSE(is_good_prime({-1, 0}, 2));
  CHECK_FALSE(is_good_prime({2, 3}, 5));  // disc = -16 * 275, 5 | 275
  CHECK_THROWS_AS(is_good_prime({0, 1}, 9), ValidationError);
}

TEST_CASE("count_points_naive worked examples") {
  CHECK(count_points_naive({0, 1}, 5) == 6);
  CHECK(count_points_naive({-1, 0}, 5) == 8);
  CHECK(count_points_naive({1, 1}, 5) == 9);
  CHECK_THROWS_AS(count_points_naive({0, 1}, 3), ValidationError);
}

TEST_CASE("count_points worked examples") {
  PointCount pc = count_points({0, 1}, 5);
  CHECK(pc.count == 6);
  CHECK(pc.a_p == 0);
  pc = count_points({-1, 0}, 5);
  CHECK(pc.count == 8);
  CHECK(pc.a_p == -2);
  pc = count_points({1, 1}, 5);
  CHECK(pc.count == 9);
  CHECK(pc.a_p == -3);
  CHECK_THROWS_AS(count_points({0, 1}, 2), ValidationError);
}

TEST_CASE("character sum matches enumeration and the Hasse bound") {
  for (const Curve& E : kCurves) {
    for (std::int64_t p = 5; p <= 200; ++p) {
      if (!is_prime(p) || !is_good_prime(E, p)) continue;
      const PointCount pc = count_points(E, p);
      CHECK(pc.count == count_points_naive(E, p));
      CHECK(std::abs(pc.a_p) <= static_cast<std::int64_t>(std::floor(2 * std::sqrt(static_cast<double>(p)))));
    }
  }
}

TEST_CASE("coefficients are reduced mod p") {
  CHECK(count_points({-1, 0}, 7).count == count_points({6, 7}, 7).count);
  CHECK(count_points({1000001, -999999}, 101).count == count_points({1000001 % 101, 101 - 999999 % 101}, 101).count);
}

TEST_CASE("fingerprint worked examples") {
  const auto rows = fingerprint(kSqrt2m1, {2, 3});
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].pi == 2);
  CHECK(rows[0].T == 6);
  CHECK(rows[0].Lp == IMat2{4, 2, 3, 2});
  CHECK(rows[0].detImL == -3);
  CHECK(rows[0].group == AbelianGroup{1, 3});
  CHECK(rows[1].pi == 4);
  CHECK(rows[1].T == 34);
  CHECK(rows[1].detImL == -30);
  CHECK(rows[1].group == AbelianGroup{1, 30});

  const FingerprintRow g = fingerprint_row(kGolden, 2);
  CHECK(g.pi == 3);
  CHECK(g.T == 4);
  CHECK(g.detImL == -1);
  CHECK(g.group == AbelianGroup{1, 1});
  CHECK(g.group.order() == 1);

  CHECK_THROWS_AS(fingerprint_row(kSqrt2m1, 3, 2), SearchCapExceeded);
}

TEST_CASE("fingerprint identities") {
  for (const auto& theta : {kSqrt2m1, kGolden, qi(-1, 3, 1), qi(-2, 7, 1)}) {
    for (const auto& row : fingerprint(theta, {2, 3, 5, 7, 11, 13, 17, 19, 23})) {
      CHECK(row.detImL == 1 + row.p - row.T);
      CHECK(mat_trace(row.Lp) == row.T);
      CHECK(mat_det(row.Lp) == row.p);
      if (row.detImL != 0) CHECK(row.group.order() == abs(row.detImL));
    }
  }
}

TEST_CASE("match_curve") {
  CHECK(match_curve(kSqrt2m1, {0, 1}, {}).rows.empty());

  MatchReport r = match_curve(kSqrt2m1, {0, 1}, {5});
  REQUIRE(r.rows.size() == 1);
  const MatchRow& row = r.rows[0];
  CHECK(row.good_prime);
  CHECK(row.fp.detImL == 1 + 5 - row.fp.T);
  CHECK(row.fp.pi == 3);
  CHECK(row.fp.T == 14);
  CHECK(row.ec_count == 6);
  // the outcome is a report, the comparison itself is just |det| == count
  CHECK(*row.match == (abs(row.fp.detImL) == 6));

  r = match_curve(kGolden, {1, 1}, {2});
  REQUIRE(r.rows.size() == 1);
  CHECK_FALSE(r.rows[0].good_prime);
  CHECK(abs(r.rows[0].fp.detImL) == 1);
  CHECK_FALSE(r.rows[0].ec_count.has_value());
  CHECK_FALSE(r.rows[0].match.has_value());
  CHECK(r.skipped == std::vector<std::int64_t>{2});

  CHECK_THROWS_AS(match_curve(kGolden, {1, 1}, {5, 9}), ValidationError);
}

TEST_CASE("match_curve keeps prime order and is deterministic") {
  const std::vector<std::int64_t> primes{47, 2, 43, 5, 41, 7, 37, 11, 31, 13, 29, 17, 23, 19, 3};
  const MatchReport a = match_curve(kSqrt2m1, {-1, 0}, primes);
  const MatchReport b = match_curve(kSqrt2m1, {-1, 0}, primes);
  REQUIRE(a.rows.size() == primes.size());
  for (std::size_t i = 0; i < primes.size(); ++i) {
    CHECK(a.rows[i].fp.p == primes[i]);
    CHECK(a.rows[i].fp.T == b.rows[i].fp.T);
    CHECK(a.rows[i].ec_count == b.rows[i].ec_count);
    CHECK(a.rows[i].fp.T == fingerprint_row(kSqrt2m1, primes[i]).T);
  }
  CHECK(a.matching.size() + a.mismatching.size() + a.skipped.size() == primes.size());
}
