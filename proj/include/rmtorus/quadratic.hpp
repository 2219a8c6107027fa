#pragma once

/**
 * Real quadratic irrationals (P + sqrt(D)) / Q and their eventually periodic
 * continued fractions.
 *
 * Every value is held in a single canonical triple: Q divides D - P^2, the
 * square root is taken with a plus sign (Q carries the sign of the
 * denominator), and the triple is the smallest one with those properties.
 * All arithmetic here is exact; nothing is ever rounded.
 */

#include <compare>
#include <ostream>
#include <vector>

#include "rmtorus/bigint.hpp"

namespace rmt {

/// Primitive integer polynomial a x^2 + b x + c with a > 0.
struct QuadraticPoly {
  Int a, b, c;
  Int discriminant() const { return b * b - 4 * a * c; }
};

class QuadraticIrrational {
 public:
  /// Canonicalizing factory. Throws ValidationError when D <= 0, D is a
  /// perfect square, or Q == 0.
  static QuadraticIrrational make(const Int& P, const Int& D, const Int& Q);

  const Int& P() const { return p_; }
  const Int& D() const { return d_; }
  const Int& Q() const { return q_; }

  /// Exact floor of the real value.
  Int floor() const;

  /// True iff 0 < value < 1.
  bool in_unit_interval() const { return floor() == 0; }

  QuadraticIrrational plus(const Int& n) const;
  QuadraticIrrational reciprocal() const;

  /// Primitive polynomial with positive leading coefficient vanishing here.
  QuadraticPoly min_poly() const;

  friend bool operator==(const QuadraticIrrational&, const QuadraticIrrational&) = default;

 private:
  QuadraticIrrational(Int p, Int d, Int q) : p_(std::move(p)), d_(std::move(d)), q_(std::move(q)) {}

  Int p_, d_, q_;
};

std::ostream& operator<<(std::ostream& os, const QuadraticIrrational& x);

/// Same as QuadraticIrrational::make; kept as a free function for symmetry
/// with the rest of the pipeline.
QuadraticIrrational canonicalize(const Int& P, const Int& D, const Int& Q);

struct ContinuedFraction {
  std::vector<Int> preperiod;
  std::vector<Int> period;

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;
};

/// Throws ValidationError if the period is empty or any entry other than
/// the very first partial quotient is < 1.
void validate(const ContinuedFraction& cf);

/// True if the word is not a repetition of a strictly shorter word.
bool is_primitive(const std::vector<Int>& word);

/// Exact expansion. The period starts at the first repeated (P, Q) state.
ContinuedFraction cf_expand(const QuadraticIrrational& theta);

/// Exact inverse of cf_expand.
QuadraticIrrational cf_value(const ContinuedFraction& cf);

struct ConjTraceNorm {
  QuadraticIrrational conjugate;
  Rational trace;
  Rational norm;
};

ConjTraceNorm conj_trace_norm(const QuadraticIrrational& theta);

}  // namespace rmt

namespace rmt {

/// The value y > 1 of the purely periodic expansion [a1; a2, ..., an, a1, ...].
QuadraticIrrational periodic_tail(const std::vector<Int>& period);

}  // namespace rmt
