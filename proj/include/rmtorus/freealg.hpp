#pragma once

/**
 * Free associative algebra Q<x1, x2> with rewriting modulo a set of rules.
 *
 * Words are ordered degree-lexicographically with x2 > x1. The U_infinity
 * system consists of the single rule x2 x1 -> x1 x2 - x1^2, whose normal
 * forms are the monomials x1^i x2^j.
 */

#include <map>
#include <string>
#include <vector>

#include "rmtorus/bigint.hpp"

namespace rmt {

/// Letters are 1 (x1) and 2 (x2).
using Word = std::vector<unsigned char>;

/// Degree first, then lexicographic with x2 > x1.
struct DegLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

class NCPoly {
 public:
  NCPoly() = default;
  /// c * w.
  NCPoly(const Word& w, const Rational& c = 1);
  static NCPoly constant(const Rational& c) { return NCPoly(Word{}, c); }
  static NCPoly x1() { return NCPoly(Word{1}); }
  static NCPoly x2() { return NCPoly(Word{2}); }

  const std::map<Word, Rational, DegLex>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Word& w) const;
  /// Largest word in the support; the polynomial must be nonzero.
  const Word& leading_word() const { return terms_.rbegin()->first; }

  void add(const Word& w, const Rational& c);

  friend NCPoly operator+(const NCPoly& f, const NCPoly& g);
  friend NCPoly operator-(const NCPoly& f, const NCPoly& g);
  friend NCPoly operator*(const Rational& c, const NCPoly& f);
  friend NCPoly operator*(const NCPoly& f, const NCPoly& g);
  friend bool operator==(const NCPoly&, const NCPoly&) = default;

 private:
  std::map<Word, Rational, DegLex> terms_;
};

/// Terms in increasing order, e.g. "x1^2 - x2^2" or "2*x1*x2^3 + 1".
std::string to_string(const NCPoly& f);

NCPoly nc_mul(const NCPoly& f, const NCPoly& g);

struct RewriteRule {
  Word lhs;
  NCPoly rhs;
};

enum class RewriteStrategy {
  LeftmostFirst,   // rewrite the leftmost occurrence in the largest reducible word
  RightmostFirst,  // rewrite the rightmost occurrence in the smallest reducible word
};

class RewriteSystem {
 public:
  /// Throws ValidationError unless every rule strictly decreases its
  /// left-hand word.
  explicit RewriteSystem(std::vector<RewriteRule> rules);

  /// x2 x1 -> x1 x2 - x1^2.
  static RewriteSystem u_infinity();

  const std::vector<RewriteRule>& rules() const { return rules_; }

  /// Pairs (i, j, k): a proper suffix of length k of rule i equals a prefix
  /// of rule j. Empty means there is nothing to resolve for confluence.
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> overlaps() const;

 private:
  std::vector<RewriteRule> rules_;
};

/// The U_infinity defining relation x1 x2 - x2 x1 - x1^2.
NCPoly u_infinity_relation();

NCPoly reduce(const NCPoly& f, const RewriteSystem& rs, RewriteStrategy strategy = RewriteStrategy::LeftmostFirst);

/// Anti-automorphism reversing words and swapping x1 and x2.
NCPoly star_image(const NCPoly& f);

struct PreservationResult {
  bool preserved;
  NCPoly residual;  // normal form of star_image(rel)
};

/// Whether star_image(rel) lies in the ideal. rel must reduce to zero.
PreservationResult relation_preserved(const NCPoly& rel, const RewriteSystem& rs);

}  // namespace rmt
