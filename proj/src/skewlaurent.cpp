#include "rmtorus/skewlaurent.hpp"

#include <algorithm>
#include <sstream>

#include "rmtorus/errors.hpp"

namespace rmt {

GaussRat operator/(const GaussRat& a, const GaussRat& b) {
  if (b.is_zero()) throw ValidationError("division by zero in Q(i)");
  const Rational n = b.re * b.re + b.im * b.im;
  const GaussRat num = a * b.conj();
  return {num.re / n, num.im / n};
}

std::string to_string(const GaussRat& z) {
  if (z.im == 0) return to_string(z.re);
  std::string im;
  if (z.im == 1) {
    im = "i";
  } else if (z.im == -1) {
    im = "-i";
  } else {
    im = to_string(z.im) + "i";
  }
  if (z.re == 0) return im;
  return "(" + to_string(z.re) + (z.im > 0 ? "+" : "") + im + ")";
}

// ---------------------------------------------------------------------------

Coeff::Coeff(const GaussRat& c) {
  if (!c.is_zero()) c_.push_back(c);
}

Coeff::Coeff(std::vector<GaussRat> coefficients) : c_(std::move(coefficients)) { trim(); }

void Coeff::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Coeff Coeff::conj() const {
  std::vector<GaussRat> out;
  out.reserve(c_.size());
  for (const GaussRat& z : c_) out.push_back(z.conj());
  return Coeff(std::move(out));
}

Coeff operator+(const Coeff& a, const Coeff& b) {
  std::vector<GaussRat> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a[k] + b[k];
  return Coeff(std::move(out));
}

Coeff operator-(const Coeff& a) {
  std::vector<GaussRat> out;
  out.reserve(a.c_.size());
  for (const GaussRat& z : a.c_) out.push_back(-z);
  return Coeff(std::move(out));
}

Coeff operator-(const Coeff& a, const Coeff& b) { return a + (-b); }

Coeff operator*(const Coeff& a, const Coeff& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussRat> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
  }
  return Coeff(std::move(out));
}

std::string to_string(const Coeff& c) {
  if (c.is_zero()) return "0";
  std::string out;
  for (int k = c.degree(); k >= 0; --k) {
    const GaussRat z = c[static_cast<std::size_t>(k)];
    if (z.is_zero()) continue;
    std::string coef = to_string(z);
    bool negative = z.im == 0 && z.re < 0;
    if (negative) coef = to_string(GaussRat(-z.re));
    if (!out.empty()) out += negative ? " - " : " + ";
    else if (negative) out += "-";
    std::string mono = k == 0 ? "" : (k == 1 ? "u" : "u^" + std::to_string(k));
    if (mono.empty()) {
      out += coef;
    } else if (coef == "1") {
      out += mono;
    } else {
      out += coef + "*" + mono;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

AffineAut::AffineAut(GaussRat p, GaussRat q) : p_(std::move(p)), q_(std::move(q)) {
  if (p_.is_zero()) throw ValidationError("affine automorphism needs p != 0");
}

Coeff AffineAut::apply(const Coeff& b) const {
  const Coeff image(std::vector<GaussRat>{q_, p_});
  Coeff result;
  for (int k = b.degree(); k >= 0; --k) result = result * image + Coeff(b[static_cast<std::size_t>(k)]);
  return result;
}

AffineAut AffineAut::after(const AffineAut& other) const {
  // p (p' u + q') + q
  return {p_ * other.p_, p_ * other.q_ + q_};
}

AffineAut AffineAut::inverse() const { return {GaussRat(1) / p_, -q_ / p_}; }

AffineAut AffineAut::power(long long m) const {
  const AffineAut step = m >= 0 ? *this : inverse();
  AffineAut result = identity();
  for (long long n = m >= 0 ? m : -m; n > 0; --n) result = step.after(result);
  return result;
}

// ---------------------------------------------------------------------------

SkewPoly::SkewPoly(AffineAut alpha, std::map<long long, Coeff> terms) : alpha_(std::move(alpha)) {
  for (auto& [k, b] : terms) add_term(k, b);
}

SkewPoly SkewPoly::monomial(const AffineAut& alpha, const Coeff& b, long long k) {
  SkewPoly f(alpha);
  f.add_term(k, b);
  return f;
}

Coeff SkewPoly::at(long long k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Coeff{} : it->second;
}

void SkewPoly::add_term(long long k, const Coeff& b) {
  if (b.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(k, b);
  if (!fresh) {
    it->second = it->second + b;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

namespace {

void require_same_alpha(const SkewPoly& f, const SkewPoly& g) {
  if (!(f.alpha() == g.alpha())) throw ValidationError("skew polynomials over different automorphisms");
}

void require_coherent(const AffineAut& alpha) {
  if (!check_star_coherent(alpha)) {
    throw ValidationError("involution undefined: automorphism does not commute with conjugation");
  }
}

}  // namespace

SkewPoly operator+(const SkewPoly& f, const SkewPoly& g) {
  require_same_alpha(f, g);
  SkewPoly out = f;
  for (const auto& [k, b] : g.terms_) out.add_term(k, b);
  return out;
}

SkewPoly operator-(const SkewPoly& f, const SkewPoly& g) {
  require_same_alpha(f, g);
  SkewPoly out = f;
  for (const auto& [k, b] : g.terms_) out.add_term(k, -b);
  return out;
}

SkewPoly operator*(const SkewPoly& f, const SkewPoly& g) {
  require_same_alpha(f, g);
  SkewPoly out(f.alpha_);
  for (const auto& [m, a] : f.terms_) {
    const AffineAut twist = f.alpha_.power(m);
    for (const auto& [n, b] : g.terms_) out.add_term(m + n, a * twist.apply(b));
  }
  return out;
}

std::string to_string(const SkewPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [k, b] = *it;
    std::string coef = to_string(b);
    const bool compound = coef.find(' ') != std::string::npos;
    if (!out.empty()) out += " + ";
    const std::string power = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
    if (power.empty()) {
      out += coef;
    } else if (coef == "1") {
      out += power;
    } else {
      out += (compound ? "(" + coef + ")" : coef) + "*" + power;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const SkewPoly& f) { return os << to_string(f); }

SkewPoly skew_mul(const SkewPoly& f, const SkewPoly& g) { return f * g; }

SkewPoly skew_star(const SkewPoly& f) {
  require_coherent(f.alpha());
  // (b t^k)* = t^-k b* = alpha^-k(b*) t^-k
  SkewPoly out(f.alpha());
  for (const auto& [k, b] : f.terms()) {
    out = out + SkewPoly::monomial(f.alpha(), f.alpha().power(-k).apply(b.conj()), -k);
  }
  return out;
}

SkewPoly conv_mul(const SkewPoly& f, const SkewPoly& g) {
  require_same_alpha(f, g);
  if (f.is_zero() || g.is_zero()) return SkewPoly(f.alpha());
  const long long lo = f.terms().begin()->first + g.terms().begin()->first;
  const long long hi = f.terms().rbegin()->first + g.terms().rbegin()->first;

  std::map<long long, Coeff> values;
  for (long long k = lo; k <= hi; ++k) {
    Coeff sum;
    for (const auto& [l, fl] : f.terms()) {
      const Coeff gk = g.at(k - l);
      if (gk.is_zero()) continue;
      // t^l g(k-l) t^-l = alpha^l(g(k-l))
      sum = sum + fl * f.alpha().power(l).apply(gk);
    }
    if (!sum.is_zero()) values.emplace(k, std::move(sum));
  }
  return SkewPoly(f.alpha(), std::move(values));
}

SkewPoly conv_star(const SkewPoly& f) {
  require_coherent(f.alpha());
  std::map<long long, Coeff> values;
  for (const auto& [l, b] : f.terms()) {
    const long long k = -l;
    values.emplace(k, f.alpha().power(k).apply(f.at(-k).conj()));
  }
  return SkewPoly(f.alpha(), std::move(values));
}

bool check_star_coherent(const AffineAut& alpha) {
  const Coeff u = Coeff::u();
  // (u*)^alpha against (u^alpha)*
  return alpha.apply(u.conj()) == alpha.apply(u).conj();
}

bool verify_example2(const AffineAut& alpha, const Coeff& b) {
  const SkewPoly x1 = SkewPoly::monomial(alpha, 1, 1);
  const SkewPoly x2 = SkewPoly::monomial(alpha, b, 1);
  return (x1 * x2 - x2 * x1 - x1 * x1).is_zero();
}

}  // namespace rmt
