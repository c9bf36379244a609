#include "filtcx/calculus.hpp"

#include <algorithm>

namespace filtcx {

bool GramFamily::is_identity() const {
  for (const auto& b : blocks_)
    if (!equal(b, MatrixQ::Identity(b.rows(), b.cols()))) return false;
  return true;
}

Family ce_differential(const LieAlgebraSpec& spec) { return ce_differential(spec, enumerate_basis(spec.n, spec.weights)); }

Family ce_differential(const LieAlgebraSpec& spec, BasisPtr basis) {
  require_valid(spec);
  if (basis->dimension() != spec.n || basis->weights() != spec.weights)
    throw std::invalid_argument("ce_differential: basis does not match the algebra");
  Family d(basis, 1);
  const int n = spec.n;
  for (int k = 1; k < n; ++k) {
    const auto& elems = basis->degree(k);
    for (std::size_t col = 0; col < elems.size(); ++col) {
      const auto& idx = elems[col].index.indices;
      // d(theta^{i_1} ^ ... ^ theta^{i_k}) = sum_a (-1)^a theta^{i_1} ^ .. d theta^{i_a} .. ^ theta^{i_k}
      for (std::size_t a = 0; a < idx.size(); ++a) {
        const int m = idx[a];
        const Rational sign_a((a % 2 == 0) ? 1 : -1);
        for (const auto& [ij, coeffs] : spec.brackets) {
          auto c = coeffs.find(m);
          if (c == coeffs.end() || c->second == 0) continue;
          std::vector<int> seq;
          seq.insert(seq.end(), idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(a));
          seq.push_back(ij.first);
          seq.push_back(ij.second);
          seq.insert(seq.end(), idx.begin() + static_cast<std::ptrdiff_t>(a) + 1, idx.end());
          auto sorted = sort_indices(std::move(seq));
          if (!sorted) continue;
          const Index row = *basis->position(sorted->index);
          d[k](row, static_cast<Index>(col)) -= sign_a * Rational(sorted->sign) * c->second;
        }
      }
    }
  }
  if (!(d * d).is_zero()) throw std::logic_error("ce_differential: d^2 != 0 for " + spec.name);
  return d;
}

GramFamily gram_family(const MatrixQ& g1, const BasisTable& basis) {
  const int n = basis.dimension();
  if (g1.rows() != n || g1.cols() != n) throw std::invalid_argument("gram_family: Gram has the wrong size");
  if (!is_positive_definite(g1)) throw std::invalid_argument("gram_family: Gram is not symmetric positive definite");
  std::vector<MatrixQ> blocks;
  for (int k = 0; k <= n; ++k) {
    const auto& elems = basis.degree(k);
    const Index size = static_cast<Index>(elems.size());
    MatrixQ g(size, size);
    for (Index r = 0; r < size; ++r)
      for (Index c = 0; c < size; ++c) {
        MatrixQ minor(k, k);
        for (int a = 0; a < k; ++a)
          for (int b = 0; b < k; ++b)
            minor(a, b) = g1(elems[static_cast<std::size_t>(r)].index.indices[static_cast<std::size_t>(a)] - 1,
                             elems[static_cast<std::size_t>(c)].index.indices[static_cast<std::size_t>(b)] - 1);
        g(r, c) = k == 0 ? Rational(1) : determinant(minor);
      }
    blocks.push_back(std::move(g));
  }
  return GramFamily(std::move(blocks));
}

Family adjoint(const Family& t, const GramFamily& g) {
  const int n = t.max_degree();
  if (g.max_degree() != n) throw std::invalid_argument("adjoint: Gram family has the wrong size");
  const int s = t.shift();
  Family out(t.basis_ptr(), -s);
  for (int j = 0; j <= n; ++j) {
    const int k = j - s;  // source degree of the original block
    if (k < 0 || k > n) continue;
    out[j] = inverse(g[k]) * t[k].transpose() * g[j];
  }
  return out;
}

std::string to_string(const FiltrationWitness& w) {
  return "degree " + std::to_string(w.degree) + ", source " + to_string(w.source) + " weight " +
         std::to_string(w.source_weight) + ", target " + to_string(w.target) + " weight " +
         std::to_string(w.target_weight) + ", entry " + to_string(w.entry);
}

namespace {

template <class Keep>
Family filter_entries(const Family& t, Keep keep) {
  Family out(t.basis_ptr(), t.shift());
  const auto& basis = t.basis();
  for (int k = 0; k <= t.max_degree(); ++k) {
    const int target = k + t.shift();
    if (target < 0 || target > t.max_degree()) continue;
    const auto& src = basis.degree(k);
    const auto& dst = basis.degree(target);
    for (Index c = 0; c < t[k].cols(); ++c)
      for (Index r = 0; r < t[k].rows(); ++r)
        if (keep(dst[static_cast<std::size_t>(r)].weight, src[static_cast<std::size_t>(c)].weight)) out[k](r, c) = t[k](r, c);
  }
  return out;
}

template <class Bad>
FiltrationCheck scan(const Family& t, Bad bad) {
  const auto& basis = t.basis();
  for (int k = 0; k <= t.max_degree(); ++k) {
    const int target = k + t.shift();
    if (target < 0 || target > t.max_degree()) continue;
    const auto& src = basis.degree(k);
    const auto& dst = basis.degree(target);
    for (Index c = 0; c < t[k].cols(); ++c)
      for (Index r = 0; r < t[k].rows(); ++r) {
        const auto& s = src[static_cast<std::size_t>(c)];
        const auto& d = dst[static_cast<std::size_t>(r)];
        if (t[k](r, c) != 0 && bad(d.weight, s.weight))
          return {false, FiltrationWitness{k, s.index, s.weight, d.index, d.weight, t[k](r, c)}};
      }
  }
  return {true, std::nullopt};
}

}  // namespace

Family gr_part(const Family& t) {
  return filter_entries(t, [](int target_w, int source_w) { return target_w == source_w; });
}

FiltrationCheck respects_filtration(const Family& t) {
  return scan(t, [](int target_w, int source_w) { return target_w < source_w; });
}

FiltrationCheck increases_weight(const Family& t) {
  return scan(t, [](int target_w, int source_w) { return target_w <= source_w; });
}

std::vector<int> nilpotency_bound(const BasisTable& basis) {
  std::vector<int> out;
  for (int k = 0; k <= basis.dimension(); ++k) {
    const auto& elems = basis.degree(k);
    const auto [lo, hi] = std::minmax_element(elems.begin(), elems.end(),
                                              [](const auto& a, const auto& b) { return a.weight < b.weight; });
    out.push_back(hi->weight - lo->weight + 1);
  }
  return out;
}

std::vector<int> nilpotency_bound(int n, const Weighting& weights) { return nilpotency_bound(BasisTable(n, weights)); }

}  // namespace filtcx
