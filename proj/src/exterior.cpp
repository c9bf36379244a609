#include "filtcx/exterior.hpp"

#include <numeric>
#include <stdexcept>

#include "filtcx/linalg.hpp"

namespace filtcx {

void check_weighting(const Weighting& weights, int n) {
  if (n < 1) throw std::invalid_argument("dimension must be at least 1");
  if (static_cast<int>(weights.size()) != n)
    throw std::invalid_argument("weights: expected " + std::to_string(n) + " entries, got " +
                                std::to_string(weights.size()));
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] < 1) throw std::invalid_argument("weights[" + std::to_string(i) + "]: must be positive");
    if (i > 0 && weights[i] < weights[i - 1])
      throw std::invalid_argument("weights[" + std::to_string(i) + "]: weights must be nondecreasing");
  }
}

std::string to_string(const MultiIndex& index) {
  std::string out = "(";
  for (std::size_t i = 0; i < index.indices.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(index.indices[i]);
  }
  return out + ")";
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

void combinations(int n, int k, int start, std::vector<int>& current, std::vector<MultiIndex>& out) {
  if (static_cast<int>(current.size()) == k) {
    out.push_back(MultiIndex{current});
    return;
  }
  for (int i = start; i <= n; ++i) {
    current.push_back(i);
    combinations(n, k, i + 1, current, out);
    current.pop_back();
  }
}

}  // namespace

BasisTable::BasisTable(int n, Weighting weights) : n_(n), weights_(std::move(weights)) {
  check_weighting(weights_, n_);
  elements_.resize(static_cast<std::size_t>(n_ + 1));
  lookup_.resize(static_cast<std::size_t>(n_ + 1));
  for (int k = 0; k <= n_; ++k) {
    std::vector<MultiIndex> indices;
    std::vector<int> current;
    combinations(n_, k, 1, current, indices);
    auto& elems = elements_[static_cast<std::size_t>(k)];
    for (auto& idx : indices) {
      int w = 0;
      for (int i : idx.indices) w += weights_[static_cast<std::size_t>(i - 1)];
      lookup_[static_cast<std::size_t>(k)].emplace(idx, static_cast<Index>(elems.size()));
      elems.push_back(BasisElement{std::move(idx), w});
    }
  }
}

const std::vector<BasisElement>& BasisTable::degree(int k) const {
  if (k < 0 || k > n_) throw std::out_of_range("degree " + std::to_string(k) + " out of range");
  return elements_[static_cast<std::size_t>(k)];
}

Index BasisTable::size(int k) const {
  if (k < 0 || k > n_) return 0;
  return static_cast<Index>(elements_[static_cast<std::size_t>(k)].size());
}

std::optional<Index> BasisTable::position(const MultiIndex& index) const {
  const int k = index.degree();
  if (k > n_) return std::nullopt;
  const auto& table = lookup_[static_cast<std::size_t>(k)];
  auto it = table.find(index);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

int BasisTable::total_weight() const { return std::accumulate(weights_.begin(), weights_.end(), 0); }

BasisPtr enumerate_basis(int n, const Weighting& weights) { return std::make_shared<const BasisTable>(n, weights); }

std::optional<SignedIndex> sort_indices(std::vector<int> sequence) {
  int sign = 1;
  // Insertion sort counting transpositions; sequences are short.
  for (std::size_t i = 1; i < sequence.size(); ++i) {
    for (std::size_t j = i; j > 0 && sequence[j - 1] >= sequence[j]; --j) {
      if (sequence[j - 1] == sequence[j]) return std::nullopt;
      std::swap(sequence[j - 1], sequence[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < sequence.size(); ++i)
    if (sequence[i - 1] == sequence[i]) return std::nullopt;
  return SignedIndex{sign, MultiIndex{std::move(sequence)}};
}

std::optional<SignedIndex> wedge(const MultiIndex& a, const MultiIndex& b) {
  std::vector<int> seq = a.indices;
  seq.insert(seq.end(), b.indices.begin(), b.indices.end());
  return sort_indices(std::move(seq));
}

SignedIndex complement_sign(const MultiIndex& index, int n) {
  std::vector<bool> used(static_cast<std::size_t>(n + 1), false);
  for (int i : index.indices) {
    if (i < 1 || i > n) throw std::invalid_argument("complement_sign: index out of range");
    used[static_cast<std::size_t>(i)] = true;
  }
  MultiIndex complement;
  for (int i = 1; i <= n; ++i)
    if (!used[static_cast<std::size_t>(i)]) complement.indices.push_back(i);
  auto sorted = wedge(index, complement);
  if (!sorted) throw std::invalid_argument("complement_sign: repeated index");
  return SignedIndex{sorted->sign, std::move(complement)};
}

MatrixQ hodge_star_matrix(int k, const BasisTable& basis) {
  const int n = basis.dimension();
  if (k < 0 || k > n) throw std::out_of_range("hodge_star_matrix: degree out of range");
  MatrixQ star = MatrixQ::Zero(basis.size(n - k), basis.size(k));
  const auto& elems = basis.degree(k);
  for (std::size_t c = 0; c < elems.size(); ++c) {
    const auto comp = complement_sign(elems[c].index, n);
    star(*basis.position(comp.index), static_cast<Index>(c)) = Rational(comp.sign);
  }
  return star;
}

MatrixQ hodge_star_matrix(int k, const BasisTable& basis, const MatrixQ& gram1) {
  const Index n = basis.dimension();
  if (!equal(gram1, MatrixQ::Identity(n, n)))
    throw std::invalid_argument("hodge_star_matrix: only available for an orthonormal (identity Gram) basis");
  return hodge_star_matrix(k, basis);
}

}  // namespace filtcx
