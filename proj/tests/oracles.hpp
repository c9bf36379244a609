#pragma once

// Independent reference computations used by the tests. None of these call
// into the library routines they are checked against.

#include <algorithm>
#include <numeric>
#include <vector>

#include "filtcx/lie.hpp"
#include "filtcx/rational.hpp"

namespace oracle {

using filtcx::Index;
using filtcx::MatrixQ;
using filtcx::Rational;
using filtcx::VectorQ;

// Sign of a permutation of distinct integers via cycle decomposition.
inline int permutation_sign(const std::vector<int>& seq) {
  std::vector<int> sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> perm(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i)
    perm[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), seq[i]) - sorted.begin());
  std::vector<bool> seen(seq.size(), false);
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

// Leibniz expansion over all permutations.
inline Rational leibniz_det(const MatrixQ& m) {
  const int n = static_cast<int>(m.rows());
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  Rational total(0);
  do {
    Rational term(permutation_sign(p));
    for (int i = 0; i < n; ++i) term *= m(i, p[static_cast<std::size_t>(i)]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

inline std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<bool> mask(static_cast<std::size_t>(n), false);
  std::fill(mask.begin(), mask.begin() + k, true);
  do {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask[static_cast<std::size_t>(i)]) s.push_back(i + 1);
    out.push_back(s);
  } while (std::prev_permutation(mask.begin(), mask.end()));
  std::sort(out.begin(), out.end());
  return out;
}

// theta^I evaluated on vectors v_1..v_k: det[theta^{i_a}(v_b)].
inline Rational evaluate_form(const std::vector<int>& index, const std::vector<VectorQ>& vectors) {
  const Index k = static_cast<Index>(index.size());
  MatrixQ m(k, k);
  for (Index a = 0; a < k; ++a)
    for (Index b = 0; b < k; ++b) m(a, b) = vectors[static_cast<std::size_t>(b)](index[static_cast<std::size_t>(a)] - 1);
  return k == 0 ? Rational(1) : leibniz_det(m);
}

// Matrix of the Chevalley-Eilenberg differential on degree k via the
// invariant Cartan formula
//   d w(X_0..X_k) = sum_{i<j} (-1)^{i+j} w([X_i,X_j], X_0, .., ^i, .., ^j, .., X_k).
inline MatrixQ cartan_differential(const filtcx::LieAlgebraSpec& spec, int k) {
  const int n = spec.n;
  const auto src = subsets(n, k);
  const auto dst = subsets(n, k + 1);
  MatrixQ out = MatrixQ::Zero(static_cast<Index>(dst.size()), static_cast<Index>(src.size()));
  for (std::size_t c = 0; c < src.size(); ++c)
    for (std::size_t r = 0; r < dst.size(); ++r) {
      std::vector<VectorQ> x;
      for (int j : dst[r]) {
        VectorQ e = VectorQ::Zero(n);
        e(j - 1) = 1;
        x.push_back(e);
      }
      Rational value(0);
      for (int i = 0; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) {
          std::vector<VectorQ> args{spec.bracket(x[static_cast<std::size_t>(i)], x[static_cast<std::size_t>(j)])};
          for (int t = 0; t <= k; ++t)
            if (t != i && t != j) args.push_back(x[static_cast<std::size_t>(t)]);
          const Rational sign((i + j) % 2 == 0 ? 1 : -1);
          value += sign * evaluate_form(src[c], args);
        }
      out(static_cast<Index>(r), static_cast<Index>(c)) = value;
    }
  return out;
}

// Rank by counting nonzero rows after fraction-free elimination on a copy.
inline Index rank_of(MatrixQ m) {
  Index r = 0;
  for (Index c = 0; c < m.cols() && r < m.rows(); ++c) {
    Index p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.row(p).swap(m.row(r));
    for (Index i = r + 1; i < m.rows(); ++i) {
      const Rational a = m(r, c), b = m(i, c);
      m.row(i) = a * m.row(i) - b * m.row(r);
    }
    ++r;
  }
  return r;
}

inline std::vector<int> betti_by_cartan(const filtcx::LieAlgebraSpec& spec) {
  std::vector<Index> ranks;
  for (int k = 0; k < spec.n; ++k) ranks.push_back(rank_of(cartan_differential(spec, k)));
  std::vector<int> out;
  for (int k = 0; k <= spec.n; ++k) {
    Index dim = static_cast<Index>(subsets(spec.n, k).size());
    if (k < spec.n) dim -= ranks[static_cast<std::size_t>(k)];
    if (k > 0) dim -= ranks[static_cast<std::size_t>(k - 1)];
    out.push_back(static_cast<int>(dim));
  }
  return out;
}

// Minimal squared norm |x|_K^2 over all x with M x = w, by solving the KKT
// system [[K, M^T], [M, 0]] [x; lambda] = [0; w] with plain elimination.
inline Rational min_norm_preimage(const MatrixQ& m, const MatrixQ& k, const VectorQ& w) {
  const Index nx = m.cols(), nl = m.rows();
  MatrixQ kkt = MatrixQ::Zero(nx + nl, nx + nl + 1);
  kkt.block(0, 0, nx, nx) = k;
  kkt.block(0, nx, nx, nl) = m.transpose();
  kkt.block(nx, 0, nl, nx) = m;
  kkt.block(nx, nx + nl, nl, 1) = w;
  const Index size = nx + nl;
  for (Index c = 0; c < size; ++c) {
    Index p = c;
    while (kkt(p, c) == 0) ++p;
    kkt.row(p).swap(kkt.row(c));
    const Rational pivot = kkt(c, c);
    kkt.row(c) /= pivot;
    for (Index i = 0; i < size; ++i) {
      const Rational f = kkt(i, c);
      if (i != c && f != 0) kkt.row(i) -= f * kkt.row(c);
    }
  }
  const VectorQ x = kkt.block(0, size, nx, 1);
  return (x.transpose() * k * x)(0, 0);
}

}  // namespace oracle
