#include "rmtorus/bigint.hpp"

#include <cctype>
#include <stdexcept>

namespace rmt {

Int isqrt(const Int& n) {
  if (n < 0) throw std::domain_error("isqrt of negative integer");
  return boost::multiprecision::sqrt(n);
}

bool is_perfect_square(const Int& n) {
  if (n < 0) return false;
  Int r = isqrt(n);
  return r * r == n;
}

Int floor_div(const Int& a, const Int& b) {
  if (b == 0) throw std::domain_error("division by zero");
  Int q = a / b;  // truncates toward zero
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int mod_floor(const Int& a, const Int& b) {
  Int r = a % b;
  if (r < 0) r += abs(b);
  return r;
}

Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

std::string to_string(const Int& a) { return a.str(); }

std::string to_string(const Rational& r) {
  const Int num = boost::multiprecision::numerator(r);
  const Int den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Int parse_int(std::string_view text) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) throw std::invalid_argument("expected an integer, got '" + std::string(text) + "'");
  for (std::size_t k = i; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
      throw std::invalid_argument("expected an integer, got '" + std::string(text) + "'");
    }
  }
  Int value(std::string(text.substr(i)));
  return text[0] == '-' ? Int(-value) : value;
}

}  // namespace rmt
