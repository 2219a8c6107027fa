#pragma once

/**
 * Skew Laurent polynomials R[t, t^-1; alpha] over R = Q(i)[u], with alpha an
 * affine substitution u -> p u + q.
 *
 * Normal form is sum_k b_k t^k with t^m b = alpha^m(b) t^m. The same data
 * read as a finitely supported function k -> b_k is an element of the
 * convolution algebra C_c(Z, R); conv_mul / conv_star compute in that
 * picture and must agree with skew_mul / skew_star.
 */

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "rmtorus/bigint.hpp"

namespace rmt {

/// Element re + im*i of Q(i).
struct GaussRat {
  Rational re = 0, im = 0;

  GaussRat() = default;
  GaussRat(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}
  GaussRat(long long r) : re(r) {}

  static GaussRat i() { return {0, 1}; }

  bool is_zero() const { return re == 0 && im == 0; }
  GaussRat conj() const { return {re, -im}; }

  friend GaussRat operator+(const GaussRat& a, const GaussRat& b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussRat operator-(const GaussRat& a, const GaussRat& b) { return {a.re - b.re, a.im - b.im}; }
  friend GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussRat operator/(const GaussRat& a, const GaussRat& b);
  friend bool operator==(const GaussRat&, const GaussRat&) = default;
};

std::string to_string(const GaussRat& z);

/// Polynomial in u over Q(i); coefficient of u^k at index k, no trailing zeros.
class Coeff {
 public:
  Coeff() = default;
  Coeff(const GaussRat& c);
  Coeff(long long c) : Coeff(GaussRat(c)) {}
  explicit Coeff(std::vector<GaussRat> coefficients);

  static Coeff u() { return Coeff(std::vector<GaussRat>{0, 1}); }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<GaussRat>& coefficients() const { return c_; }
  GaussRat operator[](std::size_t k) const { return k < c_.size() ? c_[k] : GaussRat{}; }

  Coeff conj() const;

  friend Coeff operator+(const Coeff& a, const Coeff& b);
  friend Coeff operator-(const Coeff& a, const Coeff& b);
  friend Coeff operator-(const Coeff& a);
  friend Coeff operator*(const Coeff& a, const Coeff& b);
  friend bool operator==(const Coeff&, const Coeff&) = default;

 private:
  void trim();
  std::vector<GaussRat> c_;
};

std::string to_string(const Coeff& c);

/// u -> p u + q, p != 0.
class AffineAut {
 public:
  AffineAut(GaussRat p, GaussRat q);

  static AffineAut identity() { return {1, 0}; }

  const GaussRat& p() const { return p_; }
  const GaussRat& q() const { return q_; }

  /// b -> b(p u + q).
  Coeff apply(const Coeff& b) const;
  /// (this after other)(u) = this(other(u)).
  AffineAut after(const AffineAut& other) const;
  AffineAut inverse() const;
  /// alpha^m for any integer m.
  AffineAut power(long long m) const;

  friend bool operator==(const AffineAut&, const AffineAut&) = default;

 private:
  GaussRat p_, q_;
};

class SkewPoly {
 public:
  explicit SkewPoly(AffineAut alpha) : alpha_(std::move(alpha)) {}
  SkewPoly(AffineAut alpha, std::map<long long, Coeff> terms);

  /// b t^k.
  static SkewPoly monomial(const AffineAut& alpha, const Coeff& b, long long k);

  const AffineAut& alpha() const { return alpha_; }
  const std::map<long long, Coeff>& terms() const { return terms_; }
  /// b_k, zero when k is outside the support.
  Coeff at(long long k) const;
  bool is_zero() const { return terms_.empty(); }

  friend SkewPoly operator+(const SkewPoly& f, const SkewPoly& g);
  friend SkewPoly operator-(const SkewPoly& f, const SkewPoly& g);
  friend SkewPoly operator*(const SkewPoly& f, const SkewPoly& g);
  friend bool operator==(const SkewPoly&, const SkewPoly&) = default;

 private:
  void add_term(long long k, const Coeff& b);

  AffineAut alpha_;
  std::map<long long, Coeff> terms_;
};

std::string to_string(const SkewPoly& f);
std::ostream& operator<<(std::ostream& os, const SkewPoly& f);

/// (a t^m)(b t^n) = a alpha^m(b) t^(m+n), extended bilinearly.
SkewPoly skew_mul(const SkewPoly& f, const SkewPoly& g);

/// t* = t^-1, b* = conj(b), so (b t^k)* = alpha^-k(conj b) t^-k. Requires a
/// *-coherent alpha.
SkewPoly skew_star(const SkewPoly& f);

/// (fg)(k) = sum_l f(l) alpha^l(g(k - l)).
SkewPoly conv_mul(const SkewPoly& f, const SkewPoly& g);

/// f*(k) = alpha^k(conj f(-k)).
SkewPoly conv_star(const SkewPoly& f);

/// Conjugation commutes with alpha on the generator u.
bool check_star_coherent(const AffineAut& alpha);

/// X1 = t, X2 = b t: whether X1 X2 - X2 X1 - X1^2 vanishes. With alpha(u) =
/// u + 1 and b = u this is the U_infinity relation.
bool verify_example2(const AffineAut& alpha = AffineAut(1, 1), const Coeff& b = Coeff::u());

}  // namespace rmt
