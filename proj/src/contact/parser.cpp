#include <cctype>
#include <stdexcept>

#include "filtcx/contact.hpp"

// Grammar (whitespace is ignored):
//   expr    := [+|-] term {(+|-) term}
//   term    := factor {* factor}
//   factor  := primary [^ [-] digits]
//   primary := digits [/ digits] | c digit | letters ( expr ) | letters | ( expr )
//   letters := one or more of X Y T
// "XY(f)" applies the vector fields to the coefficient f, i.e. X(Y(f)); bare
// letters compose as operators. Only c0 takes a negative power.

namespace filtcx::contact {

namespace {

class Parser {
 public:
  Parser(std::string_view text, Relations mode) : text_(text), mode_(mode) {}

  NCOperator parse() {
    NCOperator out = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

 private:
  std::string_view text_;
  Relations mode_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse_operator: " + what + " at position " + std::to_string(pos_) + " in \"" +
                                std::string(text_) + "\"");
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  NCOperator expr() {
    NCOperator out;
    bool negative = false;
    if (eat('-')) {
      negative = true;
    } else {
      eat('+');
    }
    NCOperator t = term();
    out = negative ? -t : t;
    while (true) {
      if (eat('+')) {
        out += term();
      } else if (eat('-')) {
        out -= term();
      } else {
        break;
      }
    }
    return out;
  }

  NCOperator term() {
    NCOperator out = factor();
    while (eat('*')) out = nc_multiply(out, factor(), mode_);
    return out;
  }

  NCOperator factor() {
    bool bare_c0 = false;
    NCOperator base = primary(bare_c0);
    if (!eat('^')) return base;
    skip();
    const bool negative = pos_ < text_.size() && text_[pos_] == '-';
    if (negative) ++pos_;
    const int power = std::stoi(digits());
    if (negative) {
      if (!bare_c0) fail("negative power of something other than c0");
      return NCOperator(CoefPoly::c(0, -power));
    }
    NCOperator out(Rational(1));
    for (int i = 0; i < power; ++i) out = nc_multiply(out, base, mode_);
    return out;
  }

  NCOperator primary(bool& bare_c0) {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char ch = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::string num = digits();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        num += "/" + digits();
      }
      return NCOperator(parse_rational(num));
    }
    if (ch == 'c') {
      ++pos_;
      if (pos_ >= text_.size() || text_[pos_] < '0' || text_[pos_] > '6') fail("expected c0..c6");
      const int base = text_[pos_++] - '0';
      bare_c0 = base == 0;
      return NCOperator(CoefPoly::c(base));
    }
    if (ch == 'X' || ch == 'Y' || ch == 'T') {
      std::vector<Letter> letters;
      while (pos_ < text_.size() && (text_[pos_] == 'X' || text_[pos_] == 'Y' || text_[pos_] == 'T')) {
        letters.push_back(text_[pos_] == 'X' ? Letter::X : text_[pos_] == 'Y' ? Letter::Y : Letter::T);
        ++pos_;
      }
      if (pos_ < text_.size() && text_[pos_] == '(') {
        ++pos_;
        const NCOperator inner = expr();
        if (!eat(')')) fail("expected ')'");
        if (inner.order() > 0) fail("vector fields can only be applied to coefficients");
        CoefPoly f = inner.order_zero_part();
        for (auto it = letters.rbegin(); it != letters.rend(); ++it) f = derivative(*it, f, mode_);
        return NCOperator(f);
      }
      NCOperator out(Rational(1));
      for (Letter l : letters) out = nc_multiply(out, NCOperator::letter(l), mode_);
      return out;
    }
    if (eat('(')) {
      NCOperator inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }
};

}  // namespace

NCOperator parse_operator(std::string_view text, Relations mode) { return Parser(text, mode).parse(); }

}  // namespace filtcx::contact
