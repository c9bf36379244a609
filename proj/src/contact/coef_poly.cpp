#include <stdexcept>

#include "filtcx/contact.hpp"
#include "internal.hpp"

namespace filtcx::contact {

std::strong_ordering Symbol::operator<=>(const Symbol& o) const {
  // Bare structure functions first, then derivatives by word length.
  if (auto c = word.order() <=> o.word.order(); c != 0) return c;
  if (auto c = base <=> o.base; c != 0) return c;
  if (auto c = o.word.a <=> word.a; c != 0) return c;
  if (auto c = o.word.b <=> word.b; c != 0) return c;
  return o.word.c <=> word.c;
}

CoefPoly::CoefPoly(const Rational& constant) {
  if (constant != 0) terms_[Monomial{}] = constant;
}

CoefPoly CoefPoly::symbol(const Symbol& s, int exponent) {
  if (exponent < 0 && !(s.base == 0 && s.word.order() == 0))
    throw std::invalid_argument("only c0 may carry a negative exponent");
  CoefPoly out;
  if (exponent == 0) {
    out.terms_[Monomial{}] = Rational(1);
  } else {
    out.terms_[Monomial{{s, exponent}}] = Rational(1);
  }
  return out;
}

void CoefPoly::add_term(const Monomial& m, const Rational& coef) {
  if (coef == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

CoefPoly& CoefPoly::operator+=(const CoefPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

CoefPoly& CoefPoly::operator-=(const CoefPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

CoefPoly operator-(const CoefPoly& a) {
  CoefPoly out;
  for (const auto& [m, c] : a.terms_) out.terms_[m] = -c;
  return out;
}

CoefPoly operator*(const CoefPoly& a, const CoefPoly& b) {
  CoefPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m = ma;
      for (const auto& [s, e] : mb) {
        const int total = (m[s] += e);
        if (total == 0) m.erase(s);
      }
      out.add_term(m, ca * cb);
    }
  return out;
}

CoefPoly operator*(const Rational& s, const CoefPoly& a) {
  CoefPoly out;
  if (s == 0) return out;
  for (const auto& [m, c] : a.terms_) out.terms_[m] = s * c;
  return out;
}

std::string to_string(const Symbol& s) {
  const std::string base = "c" + std::to_string(s.base);
  if (s.word.order() == 0) return base;
  return std::string(static_cast<std::size_t>(s.word.a), 'X') + std::string(static_cast<std::size_t>(s.word.b), 'Y') +
         std::string(static_cast<std::size_t>(s.word.c), 'T') + "(" + base + ")";
}

namespace {

std::string monomial_text(const Monomial& m) {
  std::string out;
  for (const auto& [s, e] : m) {
    if (!out.empty()) out += "*";
    out += to_string(s);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace

// Shared with the operator printer: joins signed terms whose factor text may
// be empty (a bare number).
std::string join_terms(const std::vector<std::pair<Rational, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [coef, factors] : terms) {
    const bool negative = coef < 0;
    const Rational mag = negative ? Rational(-coef) : coef;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (factors.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += factors;
    } else {
      out += to_string(mag) + "*" + factors;
    }
  }
  return out;
}

std::string to_string(const CoefPoly& p) {
  std::vector<std::pair<Rational, std::string>> terms;
  for (const auto& [m, c] : p.terms()) terms.emplace_back(c, monomial_text(m));
  return join_terms(terms);
}

std::string monomial_to_string(const Monomial& m) { return monomial_text(m); }

}  // namespace filtcx::contact
