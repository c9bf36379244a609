#include <catch_amalgamated.hpp>

#include "filtcx/exterior.hpp"
#include "filtcx/linalg.hpp"
#include "oracles.hpp"

using namespace filtcx;

TEST_CASE("enumerate_basis lists lexicographic multi-indices with weights") {
  const auto basis = enumerate_basis(3, {1, 1, 2});
  const auto& deg2 = basis->degree(2);
  REQUIRE(deg2.size() == 3);
  CHECK(deg2[0].index == MultiIndex{{1, 2}});
  CHECK(deg2[0].weight == 2);
  CHECK(deg2[1].index == MultiIndex{{1, 3}});
  CHECK(deg2[1].weight == 3);
  CHECK(deg2[2].index == MultiIndex{{2, 3}});
  CHECK(deg2[2].weight == 3);
  const auto& deg0 = basis->degree(0);
  REQUIRE(deg0.size() == 1);
  CHECK(deg0[0].index.indices.empty());
  CHECK(deg0[0].weight == 0);
}

TEST_CASE("Engel weights: theta1 ^ theta3 has weight 3") {
  const auto basis = enumerate_basis(4, {1, 1, 2, 2});
  const auto pos = basis->position(MultiIndex{{1, 3}});
  REQUIRE(pos);
  CHECK(basis->degree(2)[static_cast<std::size_t>(*pos)].weight == 3);
}

TEST_CASE("basis sizes, ordering and weights match brute-force subsets") {
  for (int n = 1; n <= 7; ++n) {
    Weighting w;
    for (int i = 1; i <= n; ++i) w.push_back(1 + (i - 1) / 2);
    const auto basis = enumerate_basis(n, w);
    for (int k = 0; k <= n; ++k) {
      const auto subsets = oracle::subsets(n, k);
      const auto& elems = basis->degree(k);
      REQUIRE(elems.size() == subsets.size());
      CHECK(static_cast<long long>(elems.size()) == binomial(n, k));
      for (std::size_t i = 0; i < elems.size(); ++i) {
        CHECK(elems[i].index.indices == subsets[i]);
        int weight = 0;
        for (int j : subsets[i]) weight += w[static_cast<std::size_t>(j - 1)];
        CHECK(elems[i].weight == weight);
      }
    }
    const auto& top = basis->degree(n);
    CHECK(top.front().weight == basis->total_weight());
  }
}

TEST_CASE("weightings are validated") {
  CHECK_THROWS_AS(enumerate_basis(3, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_basis(2, {2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_basis(2, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_basis(0, {}), std::invalid_argument);
}

TEST_CASE("complement_sign examples") {
  auto a = complement_sign(MultiIndex{{1}}, 3);
  CHECK(a.sign == 1);
  CHECK(a.index == MultiIndex{{2, 3}});
  auto b = complement_sign(MultiIndex{{2}}, 3);
  CHECK(b.sign == -1);
  CHECK(b.index == MultiIndex{{1, 3}});
  auto c = complement_sign(MultiIndex{{1, 3}}, 3);
  CHECK(c.sign == -1);
  CHECK(c.index == MultiIndex{{2}});
}

TEST_CASE("complement signs match the cycle-count permutation sign") {
  for (int n = 1; n <= 7; ++n)
    for (int k = 0; k <= n; ++k)
      for (const auto& s : oracle::subsets(n, k)) {
        const auto comp = complement_sign(MultiIndex{s}, n);
        std::vector<int> seq = s;
        seq.insert(seq.end(), comp.index.indices.begin(), comp.index.indices.end());
        CHECK(comp.sign == oracle::permutation_sign(seq));
        const auto back = complement_sign(comp.index, n);
        CHECK(back.index == MultiIndex{s});
        CHECK(comp.sign * back.sign == ((k * (n - k)) % 2 == 0 ? 1 : -1));
        int w_total = 0, w_s = 0, w_c = 0;
        for (int i = 1; i <= n; ++i) w_total += i;
        for (int i : s) w_s += i;
        for (int i : comp.index.indices) w_c += i;
        CHECK(w_s + w_c == w_total);
      }
}

TEST_CASE("Hodge star examples in three dimensions") {
  const auto basis = enumerate_basis(3, {1, 1, 2});
  const MatrixQ star2 = hodge_star_matrix(2, *basis);
  // star(theta1 ^ theta2) = theta3
  CHECK(star2(2, 0) == 1);
  CHECK(star2(0, 0) == 0);
  CHECK(star2(1, 0) == 0);
  const MatrixQ star0 = hodge_star_matrix(0, *basis);
  REQUIRE(star0.rows() == 1);
  CHECK(star0(0, 0) == 1);
  const MatrixQ ss = hodge_star_matrix(2, *basis) * hodge_star_matrix(1, *basis);
  CHECK(equal(ss, MatrixQ::Identity(3, 3)));
}

TEST_CASE("star star = (-1)^{k(n-k)} for n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    const auto basis = enumerate_basis(n, Weighting(static_cast<std::size_t>(n), 1));
    for (int k = 0; k <= n; ++k) {
      const MatrixQ ss = hodge_star_matrix(n - k, *basis) * hodge_star_matrix(k, *basis);
      const Rational sign((k * (n - k)) % 2 == 0 ? 1 : -1);
      const Index size = basis->size(k);
      CHECK(equal(ss, MatrixQ(sign * MatrixQ::Identity(size, size))));
    }
  }
}

TEST_CASE("Hodge star refuses a non-orthonormal Gram") {
  const auto basis = enumerate_basis(3, {1, 1, 2});
  MatrixQ g = MatrixQ::Identity(3, 3);
  CHECK_NOTHROW(hodge_star_matrix(1, *basis, g));
  g(2, 2) = 4;
  CHECK_THROWS_AS(hodge_star_matrix(1, *basis, g), std::invalid_argument);
}

TEST_CASE("wedge signs and repeats") {
  auto w = wedge(MultiIndex{{2}}, MultiIndex{{1}});
  REQUIRE(w);
  CHECK(w->sign == -1);
  CHECK(w->index == MultiIndex{{1, 2}});
  CHECK_FALSE(wedge(MultiIndex{{1, 2}}, MultiIndex{{2}}));
}
