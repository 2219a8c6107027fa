#include "rmtorus/units.hpp"

#include "rmtorus/errors.hpp"

namespace rmt {

namespace {

void require_same_theta(const OrderElt& a, const OrderElt& b) {
  if (!(a.theta == b.theta)) throw ValidationError("order elements over different theta");
}

Int exact_div(const Int& num, const Int& den, const char* what) {
  if (num % den != 0) throw ValidationError(std::string(what) + ": result leaves the lattice Z + Z theta");
  return num / den;
}

// Sign of u + v sqrt(D) for D > 0 non-square.
int surd_sign(const Rational& u, const Rational& v, const Int& D) {
  if (u >= 0 && v >= 0) return (u == 0 && v == 0) ? 0 : 1;
  if (u <= 0 && v <= 0) return -1;
  const Rational lhs = u * u;
  const Rational rhs = v * v * Rational(D);
  // signs differ; the larger magnitude wins
  if (u > 0) return lhs > rhs ? 1 : -1;
  return rhs > lhs ? 1 : -1;
}

}  // namespace

OrderElt elt_mul(const OrderElt& a, const OrderElt& b) {
  require_same_theta(a, b);
  const QuadraticPoly mp = a.theta.min_poly();  // theta^2 = (-b theta - c) / a
  const Int yy = a.y * b.y;
  const Int x = a.x * b.x - exact_div(yy * mp.c, mp.a, "elt_mul");
  const Int y = a.x * b.y + b.x * a.y - exact_div(yy * mp.b, mp.a, "elt_mul");
  return {x, y, a.theta};
}

OrderElt elt_pow(const OrderElt& e, std::int64_t k) {
  if (k < 0) throw ValidationError("elt_pow: negative exponent");
  OrderElt result = OrderElt::one(e.theta);
  OrderElt base = e;
  while (k > 0) {
    if (k & 1) result = elt_mul(result, base);
    k >>= 1;
    if (k > 0) base = elt_mul(base, base);
  }
  return result;
}

Rational elt_norm(const OrderElt& e) {
  const ConjTraceNorm ctn = conj_trace_norm(e.theta);
  return Rational(e.x * e.x) + Rational(e.x * e.y) * ctn.trace + Rational(e.y * e.y) * ctn.norm;
}

Rational elt_trace(const OrderElt& e) {
  const ConjTraceNorm ctn = conj_trace_norm(e.theta);
  return Rational(2 * e.x) + Rational(e.y) * ctn.trace;
}

bool elt_greater_than_one(const OrderElt& e) {
  // x + y (P + sqrt D)/Q - 1 = (x - 1) + yP/Q + (y/Q) sqrt D
  const QuadraticIrrational& t = e.theta;
  const Rational u = Rational(e.x - 1) + Rational(e.y * t.P(), t.Q());
  const Rational v(e.y, t.Q());
  return surd_sign(u, v, t.D()) > 0;
}

OrderElt fundamental_unit(const SubOrder& order) {
  if (order.conductor < 1) throw ValidationError("fundamental_unit: conductor must be >= 1");
  const QuadraticIrrational& theta = order.theta;
  const Int& f = order.conductor;
  const QuadraticIrrational scaled = QuadraticIrrational::make(f * theta.P(), f * f * theta.D(), theta.Q());

  const ContinuedFraction cf = cf_expand(scaled);
  const QuadraticIrrational tail = periodic_tail(cf.period);
  const IMat2 M = matrix_A(cf.period);

  // unit = q*tail + q' = (q P_t + q' Q_t)/Q_t + (q/Q_t) sqrt(D_t)
  const Rational u(M.c * tail.P() + M.d * tail.Q(), tail.Q());
  Rational v(M.c, tail.Q());

  // sqrt(D_t) = r sqrt(D) with r = sqrt(D_t D) / D rational
  const Int dd = tail.D() * theta.D();
  const Int root = isqrt(dd);
  if (root * root != dd) throw std::logic_error("fundamental_unit: tail lies outside Q(sqrt D)");
  v *= Rational(root, theta.D());

  // sqrt(D) = Q theta - P
  const Rational x = u - v * Rational(theta.P());
  const Rational y = v * Rational(theta.Q());
  if (boost::multiprecision::denominator(x) != 1 || boost::multiprecision::denominator(y) != 1) {
    throw std::logic_error("fundamental_unit: unit is not in Z + Z theta");
  }
  return {boost::multiprecision::numerator(x), boost::multiprecision::numerator(y), theta};
}

std::int64_t pi_index(const QuadraticIrrational& theta, const Int& p, std::int64_t cap) {
  if (p < 2) throw ValidationError("pi_index: p must be >= 2");
  const OrderElt eps = fundamental_unit({theta, 1});
  OrderElt power = eps;
  for (std::int64_t k = 1; k <= cap; ++k) {
    if (power.y % p == 0) return k;
    power = elt_mul(power, eps);
  }
  throw SearchCapExceeded("pi_index: no power of the fundamental unit up to " + std::to_string(cap) +
                          " lies in Z + (" + p.str() + " theta)Z");
}

IMat2 matrix_of(const OrderElt& e) {
  const Rational n = elt_norm(e);
  if (n != 1 && n != -1) throw ValidationError("matrix_of: element is not a unit (norm " + to_string(n) + ")");
  // e*1 = x + y theta,  e*theta = -y c/a + (x - y b/a) theta
  const QuadraticPoly mp = e.theta.min_poly();
  const Int c01 = -exact_div(e.y * mp.c, mp.a, "matrix_of");
  const Int c11 = e.x - exact_div(e.y * mp.b, mp.a, "matrix_of");
  return {e.x, c01, e.y, c11};
}

}  // namespace rmt
