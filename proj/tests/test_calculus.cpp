#include <catch_amalgamated.hpp>

#include "filtcx/calculus.hpp"
#include "oracles.hpp"

using namespace filtcx;

namespace {

std::vector<LieAlgebraSpec> sample_algebras() {
  std::vector<LieAlgebraSpec> out;
  for (const auto& name : builtin_names()) out.push_back(builtin(name));
  std::mt19937_64 rng(31);
  for (int i = 0; i < 12; ++i) out.push_back(random_step2(rng, 3 + i % 4, 9, i % 2 == 1));
  return out;
}

}  // namespace

TEST_CASE("CE differential agrees with the Cartan formula") {
  for (const auto& spec : sample_algebras()) {
    const Family d = ce_differential(spec);
    for (int k = 0; k < spec.n; ++k) CHECK(equal(d[k], oracle::cartan_differential(spec, k)));
    CHECK(d[spec.n].rows() == 0);
  }
}

TEST_CASE("CE differential examples") {
  const Family dh = ce_differential(builtin("heisenberg3"));
  CHECK(is_zero(dh[0]));
  REQUIRE(dh[1].rows() == 3);
  MatrixQ expect = MatrixQ::Zero(3, 3);
  expect(0, 2) = -1;  // row (1,2), column 3
  CHECK(equal(dh[1], expect));

  const Family de = ce_differential(builtin("engel4"));
  const auto& basis = de.basis();
  const Index row13 = *basis.position(MultiIndex{{1, 3}});
  for (Index r = 0; r < de[1].rows(); ++r) CHECK(de[1](r, 3) == (r == row13 ? Rational(-1) : Rational(0)));
}

TEST_CASE("d squares to zero and respects the filtration") {
  for (const auto& spec : sample_algebras()) {
    const Family d = ce_differential(spec);
    CHECK((d * d).is_zero());
    CHECK(respects_filtration(d).holds);
    const Family d0 = ce_differential(associated_graded(spec));
    CHECK(gr_part(d) == d0);
    CHECK(increases_weight(d - d0).holds);
  }
}

TEST_CASE("Gram family examples") {
  const auto basis = enumerate_basis(3, {1, 1, 2});
  MatrixQ g1 = MatrixQ::Identity(3, 3);
  const auto id = gram_family(g1, *basis);
  CHECK(id.is_identity());
  g1(2, 2) = 4;
  const auto g = gram_family(g1, *basis);
  MatrixQ g2 = MatrixQ::Zero(3, 3);
  g2(0, 0) = 1;
  g2(1, 1) = 4;
  g2(2, 2) = 4;
  CHECK(equal(g[2], g2));
  CHECK(g[3](0, 0) == 4);
  CHECK(g[0](0, 0) == 1);

  const auto b2 = enumerate_basis(2, {1, 1});
  MatrixQ h(2, 2);
  h << Rational(2), Rational(1), Rational(1), Rational(2);
  CHECK(gram_family(h, *b2)[2](0, 0) == 3);
  h(0, 0) = 0;
  CHECK_THROWS_AS(gram_family(h, *b2), std::invalid_argument);
}

TEST_CASE("Gram family minors agree with the Leibniz determinant") {
  const auto basis = enumerate_basis(4, {1, 1, 2, 2});
  MatrixQ g1(4, 4);
  g1 << Rational(3), Rational(1), Rational(0), Rational(0), Rational(1), Rational(2), Rational(0), Rational(0),
      Rational(0), Rational(0), Rational(2), Rational(-1), Rational(0), Rational(0), Rational(-1), Rational(5, 2);
  const auto g = gram_family(g1, *basis);
  for (int k = 0; k <= 4; ++k) {
    const auto& elems = basis->degree(k);
    for (std::size_t r = 0; r < elems.size(); ++r)
      for (std::size_t c = 0; c < elems.size(); ++c) {
        MatrixQ minor(k, k);
        for (int a = 0; a < k; ++a)
          for (int b = 0; b < k; ++b)
            minor(a, b) = g1(elems[r].index.indices[static_cast<std::size_t>(a)] - 1, elems[c].index.indices[static_cast<std::size_t>(b)] - 1);
        CHECK(g[k](static_cast<Index>(r), static_cast<Index>(c)) == (k == 0 ? Rational(1) : oracle::leibniz_det(minor)));
      }
    CHECK(is_positive_definite(g[k]));
  }
}

TEST_CASE("adjoint examples") {
  const auto spec = builtin("heisenberg3");
  const Family d0 = ce_differential(spec);
  const auto& basis = *d0.basis_ptr();
  const auto id = gram_family(MatrixQ::Identity(3, 3), basis);
  const Family t = adjoint(d0, id);
  MatrixQ expect = MatrixQ::Zero(3, 3);
  expect(2, 0) = -1;  // row 3, column (1,2)
  CHECK(equal(t[2], expect));
  CHECK(adjoint(t, id) == d0);

  MatrixQ g1 = MatrixQ::Identity(3, 3);
  g1(2, 2) = 4;
  const auto g = gram_family(g1, basis);
  const Family tg = adjoint(d0, g);
  // G_1^-1 M^T G_2 with covector Gram diag(1,1,4): (1/4)(-1)(1).
  CHECK(tg[2](2, 0) == Rational(-1, 4));
  CHECK(adjoint(tg, g) == d0);
  // Defining property <T a, b>_G = <a, T* b>_G on random vectors.
  VectorQ a(3), b(3);
  a << Rational(1), Rational(2), Rational(-3);
  b << Rational(5), Rational(-1, 2), Rational(7);
  const Rational lhs = (d0[1] * a).transpose() * g[2] * b;
  const Rational rhs = a.transpose() * g[1] * (tg[2] * b);
  CHECK(lhs == rhs);
}

TEST_CASE("gr and filtration predicates on engel4") {
  const auto spec = builtin("engel4");
  const Family d = ce_differential(spec);
  CHECK(gr_part(d) == ce_differential(associated_graded(spec)));
  CHECK(respects_filtration(d).holds);
  const auto id = gram_family(MatrixQ::Identity(4, 4), d.basis());
  const auto check = respects_filtration(adjoint(d, id));
  REQUIRE_FALSE(check.holds);
  const auto& w = *check.witness;
  CHECK(w.degree == 2);
  CHECK(w.source == MultiIndex{{1, 3}});
  CHECK(w.source_weight == 3);
  CHECK(w.target == MultiIndex{{4}});
  CHECK(w.target_weight == 2);
  CHECK(w.entry == -1);

  const Family dh = ce_differential(builtin("heisenberg3"));
  CHECK(increases_weight(dh - dh).holds);
  CHECK_FALSE(increases_weight(dh).holds);
}

TEST_CASE("nilpotency bound examples and weight-increasing powers vanish") {
  CHECK(nilpotency_bound(3, {1, 1, 2})[1] == 2);
  CHECK(nilpotency_bound(4, {1, 1, 2, 2})[2] == 3);
  CHECK(nilpotency_bound(5, {1, 1, 1, 1, 2})[0] == 1);
  for (const auto& spec : sample_algebras()) {
    const auto basis = enumerate_basis(spec.n, spec.weights);
    const auto n0 = nilpotency_bound(*basis);
    // Strictly weight-increasing operator with all admissible entries set to 1.
    Family t(basis, 0);
    for (int k = 0; k <= spec.n; ++k) {
      const auto& e = basis->degree(k);
      for (std::size_t r = 0; r < e.size(); ++r)
        for (std::size_t c = 0; c < e.size(); ++c)
          if (e[r].weight > e[c].weight) t[k](static_cast<Index>(r), static_cast<Index>(c)) = 1;
    }
    REQUIRE(increases_weight(t).holds);
    for (int k = 0; k <= spec.n; ++k) {
      MatrixQ p = MatrixQ::Identity(t[k].rows(), t[k].cols());
      for (int j = 0; j < n0[static_cast<std::size_t>(k)]; ++j) p = p * t[k];
      CHECK(is_zero(p));
    }
  }
}

TEST_CASE("families compose with shifted shapes") {
  const auto spec = builtin("engel4");
  const Family d = ce_differential(spec);
  const auto id = gram_family(MatrixQ::Identity(4, 4), d.basis());
  const Family t = adjoint(d, id);
  const Family box = d * t + t * d;
  CHECK(box.shift() == 0);
  for (int k = 0; k <= 4; ++k) CHECK(box[k].rows() == static_cast<Index>(binomial(4, k)));
  CHECK(d[4].rows() == 0);
  CHECK(t[0].rows() == 0);
}
