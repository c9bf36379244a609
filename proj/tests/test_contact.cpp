#include <catch_amalgamated.hpp>

#include <random>
#include <thread>

#include "filtcx/contact.hpp"

using namespace filtcx;
using namespace filtcx::contact;

namespace {

CoefPoly c(int i, int e = 1) { return CoefPoly::c(i, e); }
CoefPoly deriv(int base, Word w) { return CoefPoly::symbol(Symbol{base, w}); }
NCOperator w(int a, int b, int cc, const CoefPoly& f = CoefPoly(Rational(1))) { return NCOperator::word(Word{a, b, cc}, f); }
NCOperator k(const CoefPoly& f) { return NCOperator(f); }
const Word kX{1, 0, 0}, kY{0, 1, 0}, kT{0, 0, 1};

NCOperator random_operator(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 8), small(0, 1), sym(0, 6), coef(-2, 2);
  NCOperator out;
  const int terms = 1 + small(rng);
  for (int t = 0; t < terms; ++t) {
    const Word word{small(rng), small(rng), small(rng)};
    const int scale = coef(rng);
    CoefPoly f(Rational(scale == 0 ? 1 : scale));
    if (pick(rng) > 3) f = f * c(sym(rng));
    if (pick(rng) > 6) f = f * c(0, -1);
    out += NCOperator::word(word, f);
  }
  return out;
}

}  // namespace

TEST_CASE("normal ordering examples") {
  const NCOperator x = NCOperator::letter(Letter::X), y = NCOperator::letter(Letter::Y);
  // Y X = X Y - [X,Y]
  CHECK(nc_multiply(y, x) == w(1, 1, 0) - w(0, 0, 1, c(0)) - w(1, 0, 0, c(1)) - w(0, 1, 0, c(2)));
  // Leibniz: X c1 = c1 X + X(c1)
  CHECK(nc_multiply(x, k(c(1))) == w(1, 0, 0, c(1)) + k(deriv(1, kX)));
  // X c0^-1 Y = c0^-1 X Y - c0^-2 X(c0) Y
  CHECK(nc_multiply(x, w(0, 1, 0, c(0, -1))) == w(1, 1, 0, c(0, -1)) - w(0, 1, 0, c(0, -2) * deriv(0, kX)));
  // T X = X T - c3 X - c4 Y and T Y = Y T - c5 X - c6 Y
  const NCOperator t = NCOperator::letter(Letter::T);
  CHECK(nc_multiply(t, x) == w(1, 0, 1) - w(1, 0, 0, c(3)) - w(0, 1, 0, c(4)));
  CHECK(nc_multiply(t, y) == w(0, 1, 1) - w(1, 0, 0, c(5)) - w(0, 1, 0, c(6)));
  CHECK(to_string(nc_multiply(y, x)) == "X*Y - c1*X - c2*Y - c0*T");
}

TEST_CASE("c0 times its inverse collapses") {
  CHECK(c(0) * c(0, -1) == CoefPoly(Rational(1)));
  CHECK(c(0, 2) * c(0, -3) == c(0, -1));
  CHECK_THROWS_AS(CoefPoly::c(1, -1), std::invalid_argument);
}

TEST_CASE("jacobi rules match the cyclic Jacobi identity of the frame") {
  // Expanding [[X,Y],T] + [[Y,T],X] + [[T,X],Y] = 0 by hand, the T, X and Y
  // components give these expressions for T(c0), T(c1), T(c2).
  const auto& rules = jacobi_rules();
  REQUIRE(rules.size() == 3);
  CHECK(rules[0] == -(c(0) * c(3)) - c(0) * c(6));
  CHECK(rules[1] == c(2) * c(5) - deriv(5, kX) - c(1) * c(6) + deriv(3, kY));
  CHECK(rules[2] == c(1) * c(4) - deriv(6, kX) + deriv(4, kY) - c(2) * c(3));
  CHECK(derivative(Letter::T, c(0)) == rules[0]);
  CHECK(derivative(Letter::T, c(0), Relations::free) == deriv(0, kT));
}

TEST_CASE("multiplication is associative once the Jacobi relations hold") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const NCOperator a = random_operator(rng), b = random_operator(rng), cc = random_operator(rng);
    INFO(to_string(a) << " | " << to_string(b) << " | " << to_string(cc));
    CHECK(nc_multiply(nc_multiply(a, b), cc) == nc_multiply(a, nc_multiply(b, cc)));
  }
}

TEST_CASE("with free structure functions the overlap T Y X is ambiguous") {
  // The associator is the Jacobi defect of the frame, a vector field.
  const NCOperator x = NCOperator::letter(Letter::X), y = NCOperator::letter(Letter::Y), t = NCOperator::letter(Letter::T);
  const auto mode = Relations::free;
  const NCOperator associator =
      nc_multiply(nc_multiply(t, y, mode), x, mode) - nc_multiply(t, nc_multiply(y, x, mode), mode);
  CHECK_FALSE(associator.is_zero());
  CHECK(associator.order() == 1);
  CHECK(reduce(associator).is_zero());
}

TEST_CASE("commutator of vector fields reproduces the frame brackets") {
  const NCOperator x = NCOperator::letter(Letter::X), y = NCOperator::letter(Letter::Y), t = NCOperator::letter(Letter::T);
  CHECK(nc_multiply(x, y) - nc_multiply(y, x) == w(0, 0, 1, c(0)) + w(1, 0, 0, c(1)) + w(0, 1, 0, c(2)));
  CHECK(nc_multiply(x, t) - nc_multiply(t, x) == w(1, 0, 0, c(3)) + w(0, 1, 0, c(4)));
  CHECK(nc_multiply(y, t) - nc_multiply(t, y) == w(1, 0, 0, c(5)) + w(0, 1, 0, c(6)));
}

TEST_CASE("parser and printer") {
  CHECK(parse_operator("X*Y - c0*T") == w(1, 1, 0) - w(0, 0, 1, c(0)));
  CHECK(parse_operator("X(c1)") == k(deriv(1, kX)));
  CHECK(parse_operator("YX(c1)") == k(derivative(Letter::Y, deriv(1, kX))));
  CHECK(parse_operator("c0^-2*c0^2") == k(CoefPoly(Rational(1))));
  CHECK(parse_operator("1/2*c3 - 3") == k(Rational(1, 2) * c(3) - CoefPoly(Rational(3))));
  CHECK(parse_operator("(X + c1)^2") == nc_multiply(w(1, 0, 0) + k(c(1)), w(1, 0, 0) + k(c(1))));
  CHECK(to_string(NCOperator()) == "0");
  CHECK(to_string(k(Rational(-3, 2) * c(0, -1) * c(4))) == "-3/2*c0^-1*c4");
  CHECK_THROWS_AS(parse_operator("c7"), std::invalid_argument);
  CHECK_THROWS_AS(parse_operator("X^-1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_operator("(X + c1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_operator("X(Y)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_operator("c1 $"), std::invalid_argument);
}

TEST_CASE("every computed entry round-trips through the printer") {
  for (const auto& t : contact_tables())
    for (int r = 0; r < t.matrix.rows(); ++r)
      for (int col = 0; col < t.matrix.cols(); ++col) {
        INFO(t.label() << " " << r << "," << col);
        CHECK(parse_operator(to_string(t.matrix(r, col))) == t.matrix(r, col));
      }
}

TEST_CASE("selected tables") {
  const Tables tables = contact_tables();
  const auto text = [&](const char* name, int degree) {
    const TableEntry* t = find_table(tables, name, degree);
    REQUIRE(t != nullptr);
    return to_string(t->matrix);
  };
  CHECK(text("Box0", 1) == "diag(0, 0, c0^2)");
  CHECK(text("Pi0", 1) == "diag(1, 1, 0)");
  CHECK(text("Pi0", 2) == "diag(0, 1, 1)");
  CHECK(text("D", 2) == "[(0, -Y - c1, X - c2)]");
  CHECK(text("D", 0) == "[(X); (Y); (0)]");
  CHECK(text("Dtilde", 1) == "[(0, 0, 0); (-c3, -c4, 0); (-c5, -c6, 0)]");
  CHECK(text("dgM", 1) == "[(0, 0, -c0); (0, 0, 0); (0, 0, 0)]");
  const TableEntry* d1 = find_table(tables, "d", 1);
  REQUIRE(d1 != nullptr);
  const SymbolicMatrix gr = gr_of_symbolic(d1->matrix, 1, 1);
  CHECK(to_string(gr) == "[(0, 0, -c0); (0, 0, 0); (0, 0, 0)]");
  CHECK(find_table(tables, "D", 3) == nullptr);
}

TEST_CASE("full verification passes") {
  const auto result = verify_tables(contact_tables(), expected_tables());
  for (const auto& m : result.mismatches) INFO(m.table << " " << m.row << "," << m.col << ": " << m.computed << " vs " << m.expected);
  CHECK(result.ok());
  CHECK(result.passed.size() > expected_tables().size());
}

TEST_CASE("a single flipped sign is reported at its entry") {
  auto expected = expected_tables();
  for (auto& e : expected)
    if (e.name == "D" && e.degree == 2) e.entries[1] = "Y - c1";
  const auto result = verify_tables(contact_tables(), expected);
  REQUIRE(result.mismatches.size() == 1);
  const auto& m = result.mismatches.front();
  CHECK(m.table == "D(2)");
  CHECK(m.row == 0);
  CHECK(m.col == 1);
  CHECK(m.computed == "-Y - c1");
  CHECK(m.expected == "Y - c1");
}

TEST_CASE("printed readings differ only by derivatives of c0") {
  const Tables tables = contact_tables();
  const TableEntry* p2 = find_table(tables, "P", 2);
  REQUIRE(p2 != nullptr);
  CHECK(p2->matrix(1, 0) != parse_operator("c0^-1*X"));
  CHECK(drop_c0_derivatives(p2->matrix)(1, 0) == parse_operator("c0^-1*X"));
}

TEST_CASE("free structure functions break d^2 = 0") {
  const Tables tables = contact_tables();
  const auto& d1 = find_table(tables, "d", 1)->matrix;
  const auto& d2 = find_table(tables, "d", 2)->matrix;
  CHECK(multiply(d2, d1).is_zero());
  CHECK_FALSE(multiply(d2, d1, Relations::free).is_zero());
}

TEST_CASE("concurrent table construction agrees with a serial run") {
  const Tables serial = contact_tables();
  std::vector<Tables> results(4);
  std::vector<std::thread> threads;
  for (auto& r : results) threads.emplace_back([&r] { r = contact_tables(); });
  for (auto& t : threads) t.join();
  for (const auto& r : results) {
    REQUIRE(r.size() == serial.size());
    for (std::size_t i = 0; i < r.size(); ++i) CHECK(r[i].matrix == serial[i].matrix);
  }
}
