#pragma once

// Exact 2x2 integer matrices: the period matrix A, the matrices L_p, Smith
// normal form and the cokernel groups Z^2 / (I - L) Z^2.

#include <array>
#include <ostream>
#include <vector>

#include "rmtorus/bigint.hpp"

namespace rmt {

/// Row-major [[a, b], [c, d]].
struct IMat2 {
  Int a = 0, b = 0, c = 0, d = 0;

  static IMat2 identity() { return {1, 0, 0, 1}; }

  friend bool operator==(const IMat2&, const IMat2&) = default;
};

std::ostream& operator<<(std::ostream& os, const IMat2& m);

IMat2 mat_mul(const IMat2& x, const IMat2& y);
IMat2 mat_sub(const IMat2& x, const IMat2& y);
/// Binary exponentiation; negative exponents are rejected.
IMat2 mat_pow(const IMat2& m, long long exponent);
Int mat_trace(const IMat2& m);
Int mat_det(const IMat2& m);

/// Left-to-right product of [[a_i, 1], [1, 0]] over the period.
IMat2 matrix_A(const std::vector<Int>& period);

/// [[T - p, p], [T - p - 1, p]] where T is the trace of A^pi(p).
IMat2 build_Lp(const Int& T, const Int& p);

struct SmithForm {
  IMat2 U, D, V;  // U * M * V == D
};

/// D = diag(d1, d2) with d1, d2 >= 0 and d1 | d2 (0 | 0 allowed).
SmithForm smith_normal_form(const IMat2& m);

/// Finitely generated abelian group Z/d1 + Z/d2 with d1 | d2; a factor of 0
/// is an infinite cyclic summand and a factor of 1 is trivial.
struct AbelianGroup {
  Int d1 = 1, d2 = 1;

  bool is_finite() const { return d1 != 0 && d2 != 0; }
  /// Product d1 * d2 when finite, 0 otherwise.
  Int order() const { return is_finite() ? Int(d1 * d2) : Int(0); }

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// Z^2 / (I - L) Z^2.
AbelianGroup cokernel_group(const IMat2& L);

}  // namespace rmt
