#pragma once

/**
 * Elliptic curves y^2 = x^3 + a x + b over prime fields, and the per-prime
 * fingerprint of a real-multiplication torus: pi(p), T_p = tr(A^pi(p)), the
 * matrix L_p, det(I - L_p) and the cokernel group Z^2 / (I - L_p) Z^2.
 *
 * match_curve lines the two up prime by prime. It only reports whether the
 * group orders agree; nothing here assumes that they do.
 */

#include <cstdint>
#include <optional>
#include <vector>

#include "rmtorus/intmat.hpp"
#include "rmtorus/quadratic.hpp"
#include "rmtorus/units.hpp"

namespace rmt {

struct Curve {
  Int a, b;

  /// -16 (4 a^3 + 27 b^2).
  Int discriminant() const { return -16 * (4 * a * a * a + 27 * b * b); }

  friend bool operator==(const Curve&, const Curve&) = default;
};

/// Throws ValidationError for a singular curve.
Curve make_curve(const Int& a, const Int& b);

bool is_prime(std::int64_t n);

/// p > 3 and p does not divide the discriminant. Throws for composite p.
bool is_good_prime(const Curve& E, std::int64_t p);

/// 1 + #{(x, y) in F_p^2 : y^2 = x^3 + a x + b} by full enumeration.
std::int64_t count_points_naive(const Curve& E, std::int64_t p);

struct PointCount {
  std::int64_t count;
  std::int64_t a_p;  // p + 1 - count
};

/// p + 1 + sum_x chi(x^3 + a x + b) with chi the quadratic character.
PointCount count_points(const Curve& E, std::int64_t p);

struct FingerprintRow {
  std::int64_t p = 0;
  std::int64_t pi = 0;
  Int T;
  IMat2 Lp;
  Int detImL;
  AbelianGroup group;
};

FingerprintRow fingerprint_row(const QuadraticIrrational& theta, std::int64_t p,
                               std::int64_t cap = kDefaultPiSearchCap);

std::vector<FingerprintRow> fingerprint(const QuadraticIrrational& theta, const std::vector<std::int64_t>& primes,
                                        std::int64_t cap = kDefaultPiSearchCap);

struct MatchRow {
  FingerprintRow fp;
  bool good_prime = false;
  std::optional<std::int64_t> ec_count;  // absent at bad primes
  std::optional<bool> match;             // |det(I - L_p)| == #E(F_p)
};

struct MatchReport {
  Curve curve;
  std::vector<MatchRow> rows;
  std::vector<std::int64_t> matching, mismatching, skipped;
};

/// Rows follow the order of `primes`; per-prime work runs concurrently.
MatchReport match_curve(const QuadraticIrrational& theta, const Curve& E, const std::vector<std::int64_t>& primes,
                        std::int64_t cap = kDefaultPiSearchCap);

}  // namespace rmt
