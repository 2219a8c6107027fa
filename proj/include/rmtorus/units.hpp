#pragma once

/**
 * Elements x + y*theta of the pseudo-lattice Z + Z*theta, fundamental units
 * of its ring of multipliers and of the sub-lattices Z + (f*theta)Z, and the
 * index pi(p) of the first power of the unit landing in the conductor-p
 * sub-lattice.
 *
 * Products are expanded with theta^2 = trace(theta)*theta - norm(theta).
 * When theta is not an algebraic integer that expansion has rational
 * coefficients, so elt_mul only succeeds for factors whose product stays in
 * the lattice (in particular for elements of the ring of multipliers).
 */

#include <cstdint>

#include "rmtorus/intmat.hpp"
#include "rmtorus/quadratic.hpp"

namespace rmt {

struct OrderElt {
  Int x, y;
  QuadraticIrrational theta;

  static OrderElt one(const QuadraticIrrational& theta) { return {1, 0, theta}; }

  friend bool operator==(const OrderElt&, const OrderElt&) = default;
};

struct SubOrder {
  QuadraticIrrational theta;
  Int conductor = 1;
};

inline constexpr std::int64_t kDefaultPiSearchCap = 1'000'000;

OrderElt elt_mul(const OrderElt& a, const OrderElt& b);
OrderElt elt_pow(const OrderElt& e, std::int64_t k);
/// (x + y theta)(x + y conj(theta)).
Rational elt_norm(const OrderElt& e);
Rational elt_trace(const OrderElt& e);
/// Exact test of x + y*theta > 1 in the embedding with +sqrt(D).
bool elt_greater_than_one(const OrderElt& e);

/// Least unit > 1 of the ring of multipliers of Z + (f theta)Z, written in
/// the basis {1, theta}. Computed from one period of the continued fraction
/// of f*theta: if the period matrix is [[p, p'], [q, q']] and y is the
/// purely periodic tail, the unit is q*y + q'.
OrderElt fundamental_unit(const SubOrder& order);

/// Least k >= 1 with the theta-coefficient of eps^k divisible by p, where
/// eps is the fundamental unit of Z + Z theta.
std::int64_t pi_index(const QuadraticIrrational& theta, const Int& p, std::int64_t cap = kDefaultPiSearchCap);

/// Matrix of multiplication by a unit on the basis {1, theta}; its trace and
/// determinant are the algebraic trace and norm of e.
IMat2 matrix_of(const OrderElt& e);

}  // namespace rmt
