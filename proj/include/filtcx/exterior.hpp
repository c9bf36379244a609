#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "filtcx/rational.hpp"

namespace filtcx {

// Generator weights, nondecreasing and positive.
using Weighting = std::vector<int>;

// Throws std::invalid_argument when the weights are not valid for dimension n.
void check_weighting(const Weighting& weights, int n);

// Strictly increasing 1-based indices; the degree is the length.
struct MultiIndex {
  std::vector<int> indices;

  int degree() const { return static_cast<int>(indices.size()); }
  auto operator<=>(const MultiIndex&) const = default;
  bool operator==(const MultiIndex&) const = default;
};

std::string to_string(const MultiIndex& index);

struct BasisElement {
  MultiIndex index;
  int weight;
};

// Per-degree lexicographic basis of the exterior algebra with cached weights.
class BasisTable {
 public:
  BasisTable(int n, Weighting weights);

  int dimension() const { return n_; }
  const Weighting& weights() const { return weights_; }
  const std::vector<BasisElement>& degree(int k) const;
  // Number of basis elements in degree k; 0 outside 0..n.
  Index size(int k) const;
  std::optional<Index> position(const MultiIndex& index) const;
  int total_weight() const;

 private:
  int n_;
  Weighting weights_;
  std::vector<std::vector<BasisElement>> elements_;
  std::vector<std::map<MultiIndex, Index>> lookup_;
};

using BasisPtr = std::shared_ptr<const BasisTable>;

BasisPtr enumerate_basis(int n, const Weighting& weights);

struct SignedIndex {
  int sign;
  MultiIndex index;
};

// Sign of the permutation (I, complement of I) together with the complement.
SignedIndex complement_sign(const MultiIndex& index, int n);

// Wedge of two basis monomials: nullopt when an index repeats, otherwise the
// sorting sign and the sorted index.
std::optional<SignedIndex> wedge(const MultiIndex& a, const MultiIndex& b);

// Sorts an arbitrary index sequence; nullopt on repeats.
std::optional<SignedIndex> sort_indices(std::vector<int> sequence);

// Hodge star in an orthonormal basis: I maps to sign(I) times its complement.
MatrixQ hodge_star_matrix(int k, const BasisTable& basis);

// Same, but rejects (std::invalid_argument) a degree-1 Gram that is not the identity.
MatrixQ hodge_star_matrix(int k, const BasisTable& basis, const MatrixQ& gram1);

long long binomial(int n, int k);

}  // namespace filtcx
