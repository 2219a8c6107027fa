#include "rmtorus/freealg.hpp"

#include <algorithm>
#include <optional>
#include <tuple>

#include "rmtorus/errors.hpp"

namespace rmt {

NCPoly::NCPoly(const Word& w, const Rational& c) { add(w, c); }

Rational NCPoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void NCPoly::add(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

NCPoly operator+(const NCPoly& f, const NCPoly& g) {
  NCPoly out = f;
  for (const auto& [w, c] : g.terms_) out.add(w, c);
  return out;
}

NCPoly operator-(const NCPoly& f, const NCPoly& g) {
  NCPoly out = f;
  for (const auto& [w, c] : g.terms_) out.add(w, -c);
  return out;
}

NCPoly operator*(const Rational& c, const NCPoly& f) {
  NCPoly out;
  for (const auto& [w, a] : f.terms_) out.add(w, c * a);
  return out;
}

NCPoly operator*(const NCPoly& f, const NCPoly& g) {
  NCPoly out;
  for (const auto& [u, a] : f.terms_) {
    for (const auto& [v, b] : g.terms_) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      out.add(w, a * b);
    }
  }
  return out;
}

NCPoly nc_mul(const NCPoly& f, const NCPoly& g) { return f * g; }

std::string to_string(const NCPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : f.terms()) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono;
    for (std::size_t i = 0; i < w.size();) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) ++j;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(w[i]);
      if (j - i > 1) mono += "^" + std::to_string(j - i);
      i = j;
    }
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + "*" + mono;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

RewriteSystem::RewriteSystem(std::vector<RewriteRule> rules) : rules_(std::move(rules)) {
  for (const RewriteRule& r : rules_) {
    if (r.lhs.empty()) throw ValidationError("rewrite rule with empty left-hand side");
    if (!r.rhs.is_zero() && !DegLex{}(r.rhs.leading_word(), r.lhs)) {
      throw ValidationError("rewrite rule does not decrease the monomial order");
    }
  }
}

RewriteSystem RewriteSystem::u_infinity() {
  RewriteSystem rs({RewriteRule{Word{2, 1}, NCPoly(Word{1, 2}) - NCPoly(Word{1, 1})}});
  if (!rs.overlaps().empty()) throw std::logic_error("U_infinity rule has self-overlaps");
  return rs;
}

std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> RewriteSystem::overlaps() const {
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    for (std::size_t j = 0; j < rules_.size(); ++j) {
      const Word& a = rules_[i].lhs;
      const Word& b = rules_[j].lhs;
      for (std::size_t k = 1; k < a.size() && k <= b.size(); ++k) {
        if (std::equal(a.end() - static_cast<std::ptrdiff_t>(k), a.end(), b.begin())) out.emplace_back(i, j, k);
      }
    }
  }
  return out;
}

NCPoly u_infinity_relation() { return NCPoly(Word{1, 2}) - NCPoly(Word{2, 1}) - NCPoly(Word{1, 1}); }

namespace {

struct Match {
  std::size_t rule;
  std::size_t pos;
};

std::optional<Match> find_match(const Word& w, const RewriteSystem& rs, bool leftmost) {
  std::optional<Match> best;
  for (std::size_t r = 0; r < rs.rules().size(); ++r) {
    const Word& lhs = rs.rules()[r].lhs;
    auto it = w.begin();
    while ((it = std::search(it, w.end(), lhs.begin(), lhs.end())) != w.end()) {
      const auto pos = static_cast<std::size_t>(it - w.begin());
      if (!best || (leftmost ? pos < best->pos : pos > best->pos)) best = Match{r, pos};
      ++it;
    }
  }
  return best;
}

}  // namespace

NCPoly reduce(const NCPoly& f, const RewriteSystem& rs, RewriteStrategy strategy) {
  const bool leftmost = strategy == RewriteStrategy::LeftmostFirst;
  NCPoly cur = f;
  for (;;) {
    // pick a reducible word: the largest for LeftmostFirst, the smallest otherwise
    std::optional<std::pair<Word, Match>> target;
    if (leftmost) {
      for (auto it = cur.terms().rbegin(); it != cur.terms().rend() && !target; ++it) {
        if (auto m = find_match(it->first, rs, true)) target.emplace(it->first, *m);
      }
    } else {
      for (auto it = cur.terms().begin(); it != cur.terms().end() && !target; ++it) {
        if (auto m = find_match(it->first, rs, false)) target.emplace(it->first, *m);
      }
    }
    if (!target) return cur;

    const auto& [w, m] = *target;
    const Rational c = cur.coefficient(w);
    const RewriteRule& rule = rs.rules()[m.rule];
    const auto pos = static_cast<std::ptrdiff_t>(m.pos);
    const NCPoly prefix(Word(w.begin(), w.begin() + pos));
    const NCPoly suffix(Word(w.begin() + pos + static_cast<std::ptrdiff_t>(rule.lhs.size()), w.end()));
    cur.add(w, -c);
    cur = cur + c * (prefix * rule.rhs * suffix);
  }
}

NCPoly star_image(const NCPoly& f) {
  NCPoly out;
  for (const auto& [w, c] : f.terms()) {
    Word img(w.rbegin(), w.rend());
    for (auto& letter : img) letter = letter == 1 ? 2 : 1;
    out.add(img, c);
  }
  return out;
}

PreservationResult relation_preserved(const NCPoly& rel, const RewriteSystem& rs) {
  if (!reduce(rel, rs).is_zero()) throw ValidationError("relation_preserved: relation is not in the ideal");
  NCPoly residual = reduce(star_image(rel), rs);
  const bool preserved = residual.is_zero();
  return {preserved, std::move(residual)};
}

}  // namespace rmt
