#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rmtorus/errors.hpp"
#include "rmtorus/freealg.hpp"
#include "rmtorus/skewlaurent.hpp"

using namespace rmt;

namespace {

NCPoly w(std::initializer_list<unsigned char> letters, const Rational& c = 1) { return NCPoly(Word(letters), c); }

NCPoly random_poly(std::mt19937_64& rng, int max_len = 5, int terms = 5) {
  std::uniform_int_distribution<int> len(0, max_len), letter(1, 2), coef(-5, 5), nterms(0, terms);
  NCPoly f;
  for (int i = nterms(rng); i > 0; --i) {
    Word word(static_cast<std::size_t>(len(rng)));
    for (auto& l : word) l = static_cast<unsigned char>(letter(rng));
    f.add(word, coef(rng));
  }
  return f;
}

bool has_descent(const Word& word) {
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    if (word[i] == 2 && word[i + 1] == 1) return true;
  }
  return false;
}

// x1 -> t, x2 -> u t in R[t, t^-1; u -> u + 1]
SkewPoly to_skew(const NCPoly& f) {
  const AffineAut shift(1, 1);
  const SkewPoly images[] = {SkewPoly::monomial(shift, 1, 1), SkewPoly::monomial(shift, Coeff::u(), 1)};
  SkewPoly out(shift);
  for (const auto& [word, c] : f.terms()) {
    SkewPoly term = SkewPoly::monomial(shift, GaussRat(c), 0);
    for (unsigned char l : word) term = term * images[l - 1];
    out = out + term;
  }
  return out;
}

}  // namespace

TEST_CASE("nc_mul") {
  CHECK(nc_mul(NCPoly::x1(), NCPoly::x2()) == w({1, 2}));
  CHECK(nc_mul(NCPoly::x1() + NCPoly::x2(), NCPoly::x1()) == w({1, 1}) + w({2, 1}));
  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) {
    const NCPoly f = random_poly(rng);
    CHECK(nc_mul(NCPoly::constant(1), f) == f);
    CHECK(nc_mul(f, NCPoly::constant(1)) == f);
  }
}

TEST_CASE("deglex order puts x2 above x1") {
  DegLex less;
  CHECK(less(Word{1}, Word{2}));
  CHECK(less(Word{1, 2}, Word{2, 1}));
  CHECK(less(Word{2, 2}, Word{1, 1, 1}));
  CHECK(u_infinity_relation().leading_word() == Word{2, 1});
}

TEST_CASE("rewrite system validation") {
  CHECK(RewriteSystem::u_infinity().overlaps().empty());
  // x2 x2 -> x1 is fine, x1 -> x2 increases the order
  CHECK_NOTHROW(RewriteSystem({RewriteRule{Word{2, 2}, w({1})}}));
  CHECK_THROWS_AS(RewriteSystem({RewriteRule{Word{1}, w({2})}}), ValidationError);
  // x1 x1 overlaps itself
  const RewriteSystem sq({RewriteRule{Word{1, 1}, NCPoly()}});
  CHECK_FALSE(sq.overlaps().empty());
}

TEST_CASE("reduce worked examples") {
  const RewriteSystem rs = RewriteSystem::u_infinity();
  CHECK(reduce(w({2, 1}), rs) == w({1, 2}) - w({1, 1}));
  CHECK(reduce(w({1, 2}), rs) == w({1, 2}));
  CHECK(reduce(u_infinity_relation(), rs).is_zero());
  // x2 x1 x1 -> (x1 x2 - x1^2) x1 -> x1 (x1 x2 - x1^2) - x1^3
  CHECK(reduce(w({2, 1, 1}), rs) == w({1, 1, 2}) - 2 * w({1, 1, 1}));
}

TEST_CASE("normal forms are x1^i x2^j and do not depend on strategy") {
  const RewriteSystem rs = RewriteSystem::u_infinity();
  std::mt19937_64 rng(2);
  for (int i = 0; i < 100; ++i) {
    const NCPoly f = random_poly(rng, 6, 6);
    const NCPoly left = reduce(f, rs, RewriteStrategy::LeftmostFirst);
    const NCPoly right = reduce(f, rs, RewriteStrategy::RightmostFirst);
    CHECK(left == right);
    for (const auto& [word, c] : left.terms()) CHECK_FALSE(has_descent(word));
    // reducing a multiple of the relation gives zero
    const NCPoly g = random_poly(rng, 3, 3), h = random_poly(rng, 3, 3);
    CHECK(reduce(g * u_infinity_relation() * h, rs).is_zero());
  }
}

TEST_CASE("star_image") {
  CHECK(star_image(w({1, 2})) == w({1, 2}));
  CHECK(star_image(NCPoly::x1()) == NCPoly::x2());
  CHECK(star_image(NCPoly::x2()) == NCPoly::x1());
  CHECK(star_image(w({1, 1, 2})) == w({1, 2, 2}));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const NCPoly f = random_poly(rng), g = random_poly(rng);
    CHECK(star_image(star_image(f)) == f);
    CHECK(star_image(f * g) == star_image(g) * star_image(f));
  }
}

TEST_CASE("relation_preserved") {
  const RewriteSystem rs = RewriteSystem::u_infinity();
  const PreservationResult r = relation_preserved(u_infinity_relation(), rs);
  CHECK_FALSE(r.preserved);
  CHECK(r.residual == w({1, 1}) - w({2, 2}));
  CHECK(to_string(r.residual) == "x1^2 - x2^2");

  CHECK(relation_preserved(NCPoly(), rs).preserved);

  const NCPoly commutator = w({1, 2}) - w({2, 1});
  const RewriteSystem commutative({RewriteRule{Word{2, 1}, w({1, 2})}});
  CHECK(star_image(commutator) == commutator);
  CHECK(relation_preserved(commutator, commutative).preserved);

  CHECK_THROWS_AS(relation_preserved(w({1}), rs), ValidationError);
}

TEST_CASE("the skew ring realizes U_infinity") {
  const RewriteSystem rs = RewriteSystem::u_infinity();
  CHECK(to_skew(u_infinity_relation()).is_zero());
  std::mt19937_64 rng(4);
  for (int i = 0; i < 60; ++i) {
    const NCPoly f = random_poly(rng, 2, 3), g = random_poly(rng, 2, 3);
    CHECK(to_skew(reduce(f, rs)) == to_skew(f));
    CHECK(to_skew(f * g) == to_skew(f) * to_skew(g));
    CHECK(to_skew(reduce(f * g, rs)) == to_skew(reduce(f, rs)) * to_skew(reduce(g, rs)));
  }
}

TEST_CASE("printing") {
  CHECK(to_string(NCPoly()) == "0");
  CHECK(to_string(2 * w({1, 2, 2}) + NCPoly::constant(Rational(-1, 3))) == "-1/3 + 2*x1*x2^2");
}
