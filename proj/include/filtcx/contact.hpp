#pragma once

// Symbolic calculus on a three-dimensional contact frame X, Y, T with
//   [X,Y] = c0 T + c1 X + c2 Y,  [X,T] = c3 X + c4 Y,  [Y,T] = c5 X + c6 Y,
// c0 nowhere vanishing. Operators are normal ordered as X^a Y^b T^c with
// coefficients in the commutative ring generated by the structure functions,
// their derivatives and c0^-1.

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "filtcx/rational.hpp"

namespace filtcx::contact {

using filtcx::to_string;

enum class Letter { X, Y, T };

// Which identities the ring knows about. In free mode the structure
// functions are unconstrained; in jacobi mode the derivatives T(c0), T(c1),
// T(c2) (and everything derived from them) are rewritten using the relations
// that d^2 = 0 forces on a genuine frame.
enum class Relations { free, jacobi };

// Normal-ordered word X^a Y^b T^c.
struct Word {
  int a = 0, b = 0, c = 0;
  int order() const { return a + b + c; }
  auto operator<=>(const Word&) const = default;
};

// Display order for words: higher order first, then a, b, c descending.
struct WordOrder {
  bool operator()(const Word& l, const Word& r) const;
};

// W(c_i): the word applied to structure function c_i. The empty word is c_i.
struct Symbol {
  int base = 0;
  Word word;
  std::strong_ordering operator<=>(const Symbol& o) const;
  bool operator==(const Symbol&) const = default;
};

// Commuting monomial: symbol to nonzero exponent. Only bare c0 may carry a
// negative exponent.
using Monomial = std::map<Symbol, int>;

class CoefPoly {
 public:
  CoefPoly() = default;
  explicit CoefPoly(const Rational& constant);
  static CoefPoly symbol(const Symbol& s, int exponent = 1);
  static CoefPoly c(int base, int exponent = 1) { return symbol(Symbol{base, {}}, exponent); }

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Monomial& m, const Rational& coef);

  CoefPoly& operator+=(const CoefPoly& o);
  CoefPoly& operator-=(const CoefPoly& o);
  friend CoefPoly operator+(CoefPoly a, const CoefPoly& b) { return a += b; }
  friend CoefPoly operator-(CoefPoly a, const CoefPoly& b) { return a -= b; }
  friend CoefPoly operator-(const CoefPoly& a);
  friend CoefPoly operator*(const CoefPoly& a, const CoefPoly& b);
  friend CoefPoly operator*(const Rational& s, const CoefPoly& a);
  bool operator==(const CoefPoly&) const = default;

 private:
  std::map<Monomial, Rational> terms_;
};

// Finite sum of f * X^a Y^b T^c.
class NCOperator {
 public:
  NCOperator() = default;
  explicit NCOperator(const CoefPoly& coefficient);
  explicit NCOperator(const Rational& constant) : NCOperator(CoefPoly(constant)) {}
  static NCOperator word(const Word& w, const CoefPoly& coefficient = CoefPoly(Rational(1)));
  static NCOperator letter(Letter l);

  const std::map<Word, CoefPoly, WordOrder>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Coefficient of the empty word.
  CoefPoly order_zero_part() const;
  int order() const;
  void add(const Word& w, const CoefPoly& coef);

  NCOperator& operator+=(const NCOperator& o);
  NCOperator& operator-=(const NCOperator& o);
  friend NCOperator operator+(NCOperator a, const NCOperator& b) { return a += b; }
  friend NCOperator operator-(NCOperator a, const NCOperator& b) { return a -= b; }
  friend NCOperator operator-(const NCOperator& a);
  // Left multiplication by a coefficient (no derivatives involved).
  friend NCOperator operator*(const CoefPoly& f, const NCOperator& a);
  bool operator==(const NCOperator&) const = default;

 private:
  std::map<Word, CoefPoly, WordOrder> terms_;
};

// Composition p o q, renormalized.
NCOperator nc_multiply(const NCOperator& p, const NCOperator& q, Relations mode = Relations::jacobi);

// V(f) for a coefficient f (Leibniz, chain rule on c0^-1).
CoefPoly derivative(Letter v, const CoefPoly& f, Relations mode = Relations::jacobi);
// W(f) for a normal-ordered word W.
CoefPoly apply_word(const Word& w, const CoefPoly& f, Relations mode = Relations::jacobi);
// Rewrites a coefficient into jacobi normal form (identity in free mode).
CoefPoly reduce(const CoefPoly& f, Relations mode = Relations::jacobi);
NCOperator reduce(const NCOperator& p, Relations mode = Relations::jacobi);

// The rewrite rules T(c0), T(c1), T(c2) -> ..., extracted from d^2 = 0 in free mode.
const std::vector<CoefPoly>& jacobi_rules();

std::string to_string(const Symbol& s);
std::string to_string(const CoefPoly& p);
std::string to_string(const NCOperator& p);

// Parses the canonical grammar plus products, parentheses and integer
// powers. Throws std::invalid_argument with a position on malformed input.
NCOperator parse_operator(std::string_view text, Relations mode = Relations::jacobi);

// Rectangular array of operators, row-major.
class SymbolicMatrix {
 public:
  SymbolicMatrix() = default;
  SymbolicMatrix(int rows, int cols);
  static SymbolicMatrix identity(int n);
  static SymbolicMatrix diagonal(const std::vector<NCOperator>& entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  NCOperator& operator()(int r, int c) { return entries_.at(static_cast<std::size_t>(r * cols_ + c)); }
  const NCOperator& operator()(int r, int c) const { return entries_.at(static_cast<std::size_t>(r * cols_ + c)); }
  bool is_zero() const;
  bool is_diagonal() const;

  SymbolicMatrix& operator+=(const SymbolicMatrix& o);
  SymbolicMatrix& operator-=(const SymbolicMatrix& o);
  friend SymbolicMatrix operator+(SymbolicMatrix a, const SymbolicMatrix& b) { return a += b; }
  friend SymbolicMatrix operator-(SymbolicMatrix a, const SymbolicMatrix& b) { return a -= b; }
  friend SymbolicMatrix operator-(SymbolicMatrix a);
  friend SymbolicMatrix operator*(const CoefPoly& f, SymbolicMatrix a);
  bool operator==(const SymbolicMatrix&) const = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<NCOperator> entries_;
};

SymbolicMatrix multiply(const SymbolicMatrix& a, const SymbolicMatrix& b, Relations mode = Relations::jacobi);
// Plain transpose of entries; only meaningful for order-zero matrices.
SymbolicMatrix transpose(const SymbolicMatrix& a);
SymbolicMatrix from_rational(const MatrixQ& m);

// "[(a, b); (c, d)]" or "diag(a, b)" for diagonal square matrices.
std::string to_string(const SymbolicMatrix& m);

// Weights of the basis of degree k forms in the frame order
// (1: X*, Y*, T*; 2: X*^Y*, X*^T*, Y*^T*).
std::vector<int> form_weights(int degree);

// Weight-preserving, order-zero part of a degree-shifting matrix.
SymbolicMatrix gr_of_symbolic(const SymbolicMatrix& m, int source_degree, int shift);

// Evaluates at the Heisenberg frame: c0 = 1, c1..c6 = 0, derivative symbols 0.
// With drop_fields the vector-field words are dropped as well.
SymbolicMatrix specialize_heisenberg(const SymbolicMatrix& m, bool drop_fields);
// Sets every derivative of c0 to zero, keeping everything else.
SymbolicMatrix drop_c0_derivatives(const SymbolicMatrix& m);

struct TableEntry {
  std::string name;  // e.g. "D"
  int degree;        // source degree
  SymbolicMatrix matrix;
  std::string label() const { return name + "(" + std::to_string(degree) + ")"; }
};

using Tables = std::vector<TableEntry>;

// Runs the whole symbolic pipeline, in this order: dtilde, d, dgM, d0, d0t,
// Box0, Pi0, Box, P, L, Linv, D and the tilde chain Boxtilde, Ptilde,
// Ltilde, Ltildeinv, Dtilde.
Tables contact_tables();

const TableEntry* find_table(const Tables& tables, std::string_view name, int degree);

// Expected tables, transcribed entry by entry.
struct ExpectedTable {
  std::string name;
  int degree;
  int rows, cols;
  // Entries with scalar factors placed where the defining product puts them.
  std::vector<std::string> entries;
  // Printed reading with scalar factors pulled to the left of the matrix;
  // agrees with `entries` once derivatives of c0 are dropped. Empty when
  // identical to `entries`.
  std::vector<std::string> printed;
};

std::vector<ExpectedTable> expected_tables();

struct Mismatch {
  std::string table;
  int row, col;
  std::string computed, expected;
  std::string note;
};

struct VerificationResult {
  std::vector<std::string> passed;  // names of checks that passed
  std::vector<Mismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

// Compares tables against the expected transcription and runs the symbolic
// identity checks and the weight-drop counterexample.
VerificationResult verify_tables(const Tables& tables, const std::vector<ExpectedTable>& expected);

}  // namespace filtcx::contact
