#include <array>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>

#include "filtcx/contact.hpp"
#include "internal.hpp"

// Normal ordering terminates: moving a letter v into X^a Y^b T^c only ever
// produces words of total order <= a+b+c+1, and each recursive call either
// shortens the word it is pushed through or pushes a letter that sits
// earlier in the order X < Y < T. Derivatives of coefficients recurse on the
// same bounded words, so every chain of calls is finite.

namespace filtcx::contact {

bool WordOrder::operator()(const Word& l, const Word& r) const {
  if (l.order() != r.order()) return l.order() > r.order();
  if (l.a != r.a) return l.a > r.a;
  if (l.b != r.b) return l.b > r.b;
  return l.c > r.c;
}

NCOperator::NCOperator(const CoefPoly& coefficient) {
  if (!coefficient.is_zero()) terms_[Word{}] = coefficient;
}

NCOperator NCOperator::word(const Word& w, const CoefPoly& coefficient) {
  NCOperator out;
  out.add(w, coefficient);
  return out;
}

NCOperator NCOperator::letter(Letter l) {
  switch (l) {
    case Letter::X: return word(Word{1, 0, 0});
    case Letter::Y: return word(Word{0, 1, 0});
    case Letter::T: return word(Word{0, 0, 1});
  }
  return {};
}

CoefPoly NCOperator::order_zero_part() const {
  auto it = terms_.find(Word{});
  return it == terms_.end() ? CoefPoly() : it->second;
}

int NCOperator::order() const { return terms_.empty() ? 0 : terms_.begin()->first.order(); }

void NCOperator::add(const Word& w, const CoefPoly& coef) {
  if (coef.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NCOperator& NCOperator::operator+=(const NCOperator& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

NCOperator& NCOperator::operator-=(const NCOperator& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

NCOperator operator-(const NCOperator& a) {
  NCOperator out;
  for (const auto& [w, c] : a.terms_) out.terms_[w] = -c;
  return out;
}

NCOperator operator*(const CoefPoly& f, const NCOperator& a) {
  NCOperator out;
  for (const auto& [w, c] : a.terms_) out.add(w, f * c);
  return out;
}

const std::vector<BracketRow>& frame_brackets() {
  static const std::vector<BracketRow> rows = {
      {0, 1, {CoefPoly::c(1), CoefPoly::c(2), CoefPoly::c(0)}},
      {0, 2, {CoefPoly::c(3), CoefPoly::c(4), CoefPoly()}},
      {1, 2, {CoefPoly::c(5), CoefPoly::c(6), CoefPoly()}},
  };
  return rows;
}

namespace {

constexpr std::array<Letter, 3> kLetters{Letter::X, Letter::Y, Letter::T};

// Lookups happen under the lock; values are computed outside it, so
// recursive fills never deadlock. Two threads may compute the same entry;
// the first insertion wins and both values are equal.
template <class K, class V>
class Cache {
 public:
  std::optional<V> find(const K& k) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = map_.find(k);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }
  void insert(const K& k, const V& v) {
    std::lock_guard<std::mutex> lock(mutex_);
    map_.emplace(k, v);
  }

 private:
  std::mutex mutex_;
  std::map<K, V> map_;
};

std::size_t slot(Relations mode) { return mode == Relations::free ? 0 : 1; }

Cache<std::pair<int, Word>, NCOperator>& word_cache(Relations mode) {
  static std::array<Cache<std::pair<int, Word>, NCOperator>, 2> caches;
  return caches[slot(mode)];
}

Cache<std::pair<int, Symbol>, CoefPoly>& derivative_cache(Relations mode) {
  static std::array<Cache<std::pair<int, Symbol>, CoefPoly>, 2> caches;
  return caches[slot(mode)];
}

Cache<Symbol, CoefPoly>& reduce_cache(Relations mode) {
  static std::array<Cache<Symbol, CoefPoly>, 2> caches;
  return caches[slot(mode)];
}

NCOperator letter_times(Letter v, const NCOperator& q, Relations mode);

// Sum over l of coefficient_l * (l . R).
NCOperator bracket_times(const BracketRow& row, const Word& r, Relations mode);

NCOperator letter_times_word(Letter v, const Word& w, Relations mode) {
  const std::pair<int, Word> key{static_cast<int>(v), w};
  if (auto hit = word_cache(mode).find(key)) return *hit;
  NCOperator out;
  const auto& rows = frame_brackets();
  if (v == Letter::X) {
    out = NCOperator::word(Word{w.a + 1, w.b, w.c});
  } else if (v == Letter::Y) {
    if (w.a == 0) {
      out = NCOperator::word(Word{0, w.b + 1, w.c});
    } else {
      // Y X = X Y - [X,Y]
      const Word r{w.a - 1, w.b, w.c};
      out = letter_times(Letter::X, letter_times_word(Letter::Y, r, mode), mode) - bracket_times(rows[0], r, mode);
    }
  } else {
    if (w.a > 0) {
      // T X = X T - [X,T]
      const Word r{w.a - 1, w.b, w.c};
      out = letter_times(Letter::X, letter_times_word(Letter::T, r, mode), mode) - bracket_times(rows[1], r, mode);
    } else if (w.b > 0) {
      // T Y = Y T - [Y,T]
      const Word r{0, w.b - 1, w.c};
      out = letter_times(Letter::Y, letter_times_word(Letter::T, r, mode), mode) - bracket_times(rows[2], r, mode);
    } else {
      out = NCOperator::word(Word{0, 0, w.c + 1});
    }
  }
  word_cache(mode).insert(key, out);
  return out;
}

NCOperator bracket_times(const BracketRow& row, const Word& r, Relations mode) {
  NCOperator out;
  for (std::size_t l = 0; l < 3; ++l)
    if (!row.on[l].is_zero()) out += row.on[l] * letter_times_word(kLetters[l], r, mode);
  return out;
}

// v o q with q normal ordered: v f W = f (v W) + v(f) W.
NCOperator letter_times(Letter v, const NCOperator& q, Relations mode) {
  NCOperator out;
  for (const auto& [w, f] : q.terms()) {
    out += f * letter_times_word(v, w, mode);
    out.add(w, derivative(v, f, mode));
  }
  return out;
}

CoefPoly reduce_symbol(const Symbol& s, Relations mode) {
  if (mode == Relations::free || s.base > 2 || s.word.c == 0) return CoefPoly::symbol(s);
  if (auto hit = reduce_cache(mode).find(s)) return *hit;
  // W T (c_i) = W(rule_i) with W = X^a Y^b T^(c-1).
  const CoefPoly out = apply_word(Word{s.word.a, s.word.b, s.word.c - 1}, jacobi_rules()[static_cast<std::size_t>(s.base)], mode);
  reduce_cache(mode).insert(s, out);
  return out;
}

CoefPoly derivative_symbol(Letter v, const Symbol& s, Relations mode) {
  const std::pair<int, Symbol> key{static_cast<int>(v), s};
  if (auto hit = derivative_cache(mode).find(key)) return *hit;
  CoefPoly out;
  const NCOperator moved = letter_times_word(v, s.word, mode);
  for (const auto& [w, f] : moved.terms()) out += f * reduce_symbol(Symbol{s.base, w}, mode);
  derivative_cache(mode).insert(key, out);
  return out;
}

}  // namespace

CoefPoly derivative(Letter v, const CoefPoly& f, Relations mode) {
  CoefPoly out;
  for (const auto& [m, coef] : f.terms())
    for (const auto& [s, e] : m) {
      Monomial rest = m;
      if (e == 1) {
        rest.erase(s);
      } else {
        rest[s] = e - 1;
      }
      CoefPoly factor;
      factor.add_term(rest, coef * e);
      out += factor * derivative_symbol(v, s, mode);
    }
  return out;
}

CoefPoly apply_word(const Word& w, const CoefPoly& f, Relations mode) {
  CoefPoly r = f;
  for (int i = 0; i < w.c; ++i) r = derivative(Letter::T, r, mode);
  for (int i = 0; i < w.b; ++i) r = derivative(Letter::Y, r, mode);
  for (int i = 0; i < w.a; ++i) r = derivative(Letter::X, r, mode);
  return r;
}

CoefPoly reduce(const CoefPoly& f, Relations mode) {
  if (mode == Relations::free) return f;
  CoefPoly out;
  for (const auto& [m, coef] : f.terms()) {
    CoefPoly term(coef);
    for (const auto& [s, e] : m) {
      const CoefPoly r = reduce_symbol(s, mode);
      if (e < 0) {
        term = term * CoefPoly::symbol(s, e);
      } else {
        for (int i = 0; i < e; ++i) term = term * r;
      }
    }
    out += term;
  }
  return out;
}

NCOperator reduce(const NCOperator& p, Relations mode) {
  NCOperator out;
  for (const auto& [w, f] : p.terms()) out.add(w, reduce(f, mode));
  return out;
}

NCOperator nc_multiply(const NCOperator& p, const NCOperator& q, Relations mode) {
  NCOperator out;
  for (const auto& [w, f] : p.terms()) {
    NCOperator r = q;
    for (int i = 0; i < w.c; ++i) r = letter_times(Letter::T, r, mode);
    for (int i = 0; i < w.b; ++i) r = letter_times(Letter::Y, r, mode);
    for (int i = 0; i < w.a; ++i) r = letter_times(Letter::X, r, mode);
    out += f * r;
  }
  return out;
}

const std::vector<CoefPoly>& jacobi_rules() {
  static const std::vector<CoefPoly> rules = [] {
    // d^2 = 0 on 1-forms; the order-zero parts of d(2) d(1) are the three
    // scalar Jacobi identities of the frame.
    const SymbolicMatrix dd = multiply(d_matrix(2), d_matrix(1), Relations::free);
    std::vector<CoefPoly> out(3);
    std::vector<bool> found(3, false);
    for (int col = 0; col < 3; ++col) {
      const CoefPoly rel = dd(0, col).order_zero_part();
      int target = -1;
      Rational lambda;
      for (int i = 0; i < 3; ++i) {
        const Symbol t{i, Word{0, 0, 1}};
        for (const auto& [m, c] : rel.terms()) {
          if (!m.contains(t)) continue;
          if (m.size() != 1 || m.at(t) != 1 || target != -1)
            throw std::logic_error("jacobi_rules: relation is not linear in a single T-derivative");
          target = i;
          lambda = c;
        }
      }
      if (target < 0 || found[static_cast<std::size_t>(target)])
        throw std::logic_error("jacobi_rules: relations do not determine T(c0), T(c1), T(c2)");
      found[static_cast<std::size_t>(target)] = true;
      CoefPoly rest = rel;
      rest.add_term(Monomial{{Symbol{target, Word{0, 0, 1}}, 1}}, -lambda);
      out[static_cast<std::size_t>(target)] = Rational(-1) / lambda * rest;
    }
    for (const auto& r : out)
      for (const auto& [m, c] : r.terms())
        for (const auto& [s, e] : m)
          if (s.base <= 2 && s.word.c > 0) throw std::logic_error("jacobi_rules: a rule refers to another rewritten symbol");
    return out;
  }();
  return rules;
}

std::string to_string(const NCOperator& p) {
  std::vector<std::pair<Rational, std::string>> terms;
  for (const auto& [w, f] : p.terms()) {
    std::string word_text;
    const auto append = [&](char letter, int power) {
      if (power == 0) return;
      if (!word_text.empty()) word_text += "*";
      word_text += letter;
      if (power != 1) word_text += "^" + std::to_string(power);
    };
    append('X', w.a);
    append('Y', w.b);
    append('T', w.c);
    for (const auto& [m, c] : f.terms()) {
      std::string factors = monomial_to_string(m);
      if (!word_text.empty()) factors += (factors.empty() ? "" : "*") + word_text;
      terms.emplace_back(c, factors);
    }
  }
  return join_terms(terms);
}

}  // namespace filtcx::contact
