#include "rmtorus/intmat.hpp"

#include <utility>

#include "rmtorus/errors.hpp"

namespace rmt {

std::ostream& operator<<(std::ostream& os, const IMat2& m) {
  return os << "[[" << m.a << "," << m.b << "],[" << m.c << "," << m.d << "]]";
}

IMat2 mat_mul(const IMat2& x, const IMat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

IMat2 mat_sub(const IMat2& x, const IMat2& y) { return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d}; }

IMat2 mat_pow(const IMat2& m, long long exponent) {
  if (exponent < 0) throw ValidationError("mat_pow: negative exponent");
  IMat2 result = IMat2::identity();
  IMat2 base = m;
  while (exponent > 0) {
    if (exponent & 1) result = mat_mul(result, base);
    exponent >>= 1;
    if (exponent > 0) base = mat_mul(base, base);
  }
  return result;
}

Int mat_trace(const IMat2& m) { return m.a + m.d; }

Int mat_det(const IMat2& m) { return m.a * m.d - m.b * m.c; }

IMat2 matrix_A(const std::vector<Int>& period) {
  if (period.empty()) throw ValidationError("matrix_A: empty period");
  IMat2 A = IMat2::identity();
  for (const Int& a : period) {
    if (a < 1) throw ValidationError("matrix_A: period entries must be >= 1");
    A = mat_mul(A, IMat2{a, 1, 1, 0});
  }
  return A;
}

IMat2 build_Lp(const Int& T, const Int& p) {
  IMat2 L{T - p, p, T - p - 1, p};
  // det(I - L) = (1 - T + p)(1 - p) + p(T - p - 1) = 1 + p - T
  if (mat_det(mat_sub(IMat2::identity(), L)) != 1 + p - T) {
    throw std::logic_error("build_Lp: determinant identity violated");
  }
  return L;
}

namespace {

// Elementary operations on the working matrix S with the transforms kept in
// step: row ops act on S and U from the left, column ops on S and V from the
// right, so U * M * V == S throughout.
struct Reducer {
  IMat2 U = IMat2::identity();
  IMat2 S;
  IMat2 V = IMat2::identity();

  // row_r += k * row_s
  void add_row(int r, const Int& k) {
    if (r == 0) {
      S.a += k * S.c; S.b += k * S.d;
      U.a += k * U.c; U.b += k * U.d;
    } else {
      S.c += k * S.a; S.d += k * S.b;
      U.c += k * U.a; U.d += k * U.b;
    }
  }
  // col_r += k * col_s
  void add_col(int r, const Int& k) {
    if (r == 0) {
      S.a += k * S.b; S.c += k * S.d;
      V.a += k * V.b; V.c += k * V.d;
    } else {
      S.b += k * S.a; S.d += k * S.c;
      V.b += k * V.a; V.d += k * V.c;
    }
  }
  void swap_rows() {
    std::swap(S.a, S.c); std::swap(S.b, S.d);
    std::swap(U.a, U.c); std::swap(U.b, U.d);
  }
  void swap_cols() {
    std::swap(S.a, S.b); std::swap(S.c, S.d);
    std::swap(V.a, V.b); std::swap(V.c, V.d);
  }
  void negate_row(int r) {
    if (r == 0) {
      S.a = -S.a; S.b = -S.b; U.a = -U.a; U.b = -U.b;
    } else {
      S.c = -S.c; S.d = -S.d; U.c = -U.c; U.d = -U.d;
    }
  }
};

}  // namespace

SmithForm smith_normal_form(const IMat2& m) {
  Reducer r;
  r.S = m;

  for (;;) {
    // Move an entry of least nonzero magnitude to the (0,0) slot.
    const Int* entries[4] = {&r.S.a, &r.S.b, &r.S.c, &r.S.d};
    int best = -1;
    for (int i = 0; i < 4; ++i) {
      if (*entries[i] != 0 && (best < 0 || abs(*entries[i]) < abs(*entries[best]))) best = i;
    }
    if (best < 0) break;  // zero matrix
    if (best == 1 || best == 3) r.swap_cols();
    if (best == 2 || best == 3) r.swap_rows();

    // Clear the first column and row by Euclidean steps.
    const Int pivot = r.S.a;
    if (r.S.c % pivot != 0 || r.S.b % pivot != 0) {
      if (r.S.c != 0) r.add_row(1, -(r.S.c / pivot));
      if (r.S.b != 0) r.add_col(1, -(r.S.b / pivot));
      continue;  // a smaller remainder is now present
    }
    r.add_row(1, -(r.S.c / pivot));
    r.add_col(1, -(r.S.b / pivot));

    // Divisibility: if a does not divide d, fold row 1 into row 0 and repeat.
    if (r.S.d % r.S.a != 0) {
      r.add_row(0, 1);
      continue;
    }
    break;
  }

  if (r.S.a < 0) r.negate_row(0);
  if (r.S.d < 0) r.negate_row(1);
  return {r.U, r.S, r.V};
}

AbelianGroup cokernel_group(const IMat2& L) {
  const SmithForm snf = smith_normal_form(mat_sub(IMat2::identity(), L));
  return {snf.D.a, snf.D.d};
}

}  // namespace rmt
