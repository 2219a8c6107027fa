#include "rmtorus/quadratic.hpp"

#include <map>
#include <utility>

#include "rmtorus/errors.hpp"

namespace rmt {

namespace {

// Canonical triple for the root (-b + sqrt(disc)) / (2a) of a primitive
// polynomial; the sign of a selects which root of the polynomial is meant.
std::tuple<Int, Int, Int> triple_from_primitive(const Int& a, const Int& b, const Int& c) {
  const Int disc = b * b - 4 * a * c;
  if (b % 2 == 0) return {Int(-b / 2), Int(disc / 4), a};
  return {Int(-b), disc, Int(2 * a)};
}

}  // namespace

QuadraticIrrational QuadraticIrrational::make(const Int& P, const Int& D, const Int& Q) {
  if (Q == 0) throw ValidationError("quadratic irrational: Q must be nonzero");
  if (D <= 0) throw ValidationError("quadratic irrational: D must be positive");
  if (is_perfect_square(D)) throw ValidationError("quadratic irrational: D = " + D.str() + " is a perfect square");

  Int p = P, d = D, q = Q;
  if ((d - p * p) % q != 0) {
    const Int s = abs(q);
    p *= s;
    d *= s * s;
    q *= s;
  }
  // value solves q x^2 - 2p x + (p^2 - d)/q = 0; the +sqrt root carries sign(q).
  Int a = q, b = -2 * p, c = (p * p - d) / q;
  const Int g = gcd(gcd(a, b), c);
  a /= g;
  b /= g;
  c /= g;
  auto [cp, cd, cq] = triple_from_primitive(a, b, c);
  return QuadraticIrrational(std::move(cp), std::move(cd), std::move(cq));
}

QuadraticIrrational canonicalize(const Int& P, const Int& D, const Int& Q) {
  return QuadraticIrrational::make(P, D, Q);
}

Int QuadraticIrrational::floor() const {
  const Int s = isqrt(d_);  // s < sqrt(D) < s + 1
  if (q_ > 0) return floor_div(p_ + s, q_);
  return floor_div(-p_ - s - 1, -q_);
}

QuadraticIrrational QuadraticIrrational::plus(const Int& n) const { return make(p_ + n * q_, d_, q_); }

QuadraticIrrational QuadraticIrrational::reciprocal() const {
  // Q / (P + sqrt D) = (-Q P + sign(Q) sqrt(Q^2 D)) / (D - P^2)
  const int s = sign(q_);
  return make(-q_ * p_ * s, q_ * q_ * d_, (d_ - p_ * p_) * s);
}

QuadraticPoly QuadraticIrrational::min_poly() const {
  Int a = q_, b = -2 * p_, c = (p_ * p_ - d_) / q_;
  const Int g = gcd(gcd(a, b), c);
  a /= g;
  b /= g;
  c /= g;
  if (a < 0) {
    a = -a;
    b = -b;
    c = -c;
  }
  return {a, b, c};
}

std::ostream& operator<<(std::ostream& os, const QuadraticIrrational& x) {
  return os << "(" << x.P() << "+sqrt(" << x.D() << "))/" << x.Q();
}

void validate(const ContinuedFraction& cf) {
  if (cf.period.empty()) throw ValidationError("continued fraction: empty period");
  for (std::size_t i = 1; i < cf.preperiod.size(); ++i) {
    if (cf.preperiod[i] < 1) throw ValidationError("continued fraction: partial quotients after the first must be >= 1");
  }
  for (const Int& a : cf.period) {
    if (a < 1) throw ValidationError("continued fraction: period entries must be >= 1");
  }
  if (cf.preperiod.empty() && cf.period.front() < 1) {
    throw ValidationError("continued fraction: period entries must be >= 1");
  }
}

bool is_primitive(const std::vector<Int>& word) {
  const std::size_t n = word.size();
  for (std::size_t len = 1; len < n; ++len) {
    if (n % len != 0) continue;
    bool repeats = true;
    for (std::size_t i = len; i < n && repeats; ++i) repeats = word[i] == word[i - len];
    if (repeats) return false;
  }
  return true;
}

ContinuedFraction cf_expand(const QuadraticIrrational& theta) {
  const Int& D = theta.D();
  const Int s = isqrt(D);
  Int P = theta.P(), Q = theta.Q();

  std::map<std::pair<Int, Int>, std::size_t> seen;
  std::vector<Int> quotients;
  for (;;) {
    auto [it, fresh] = seen.try_emplace({P, Q}, quotients.size());
    if (!fresh) {
      const auto start = static_cast<std::ptrdiff_t>(it->second);
      ContinuedFraction cf;
      cf.preperiod.assign(quotients.begin(), quotients.begin() + start);
      cf.period.assign(quotients.begin() + start, quotients.end());
      return cf;
    }
    const Int a = Q > 0 ? floor_div(P + s, Q) : floor_div(-P - s - 1, -Q);
    quotients.push_back(a);
    P = a * Q - P;
    Q = (D - P * P) / Q;  // exact: Q | D - P^2 is preserved by the step
  }
}

QuadraticIrrational periodic_tail(const std::vector<Int>& period) {
  if (period.empty()) throw ValidationError("continued fraction: empty period");
  // [[p, p'], [q, q']] = prod [[a, 1], [1, 0]];  y = (p y + p') / (q y + q')
  Int p = 1, pp = 0, q = 0, qp = 1;
  for (const Int& a : period) {
    Int np = p * a + pp;
    Int nq = q * a + qp;
    pp = std::move(p);
    qp = std::move(q);
    p = std::move(np);
    q = std::move(nq);
  }
  // q y^2 + (q' - p) y - p' = 0, positive root
  const Int b = qp - p;
  return QuadraticIrrational::make(-b, b * b + 4 * q * pp, 2 * q);
}

QuadraticIrrational cf_value(const ContinuedFraction& cf) {
  validate(cf);
  QuadraticIrrational x = periodic_tail(cf.period);
  for (auto it = cf.preperiod.rbegin(); it != cf.preperiod.rend(); ++it) {
    x = x.reciprocal().plus(*it);
  }
  return x;
}

ConjTraceNorm conj_trace_norm(const QuadraticIrrational& theta) {
  const Int& P = theta.P();
  const Int& D = theta.D();
  const Int& Q = theta.Q();
  return {QuadraticIrrational::make(-P, D, -Q), Rational(2 * P, Q), Rational(P * P - D, Q * Q)};
}

}  // namespace rmt
