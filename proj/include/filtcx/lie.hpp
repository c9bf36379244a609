#pragma once

#include <array>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "filtcx/exterior.hpp"
#include "filtcx/rational.hpp"

namespace filtcx {

// Sparse bracket table: (i, j) with i < j, 1-based, to {k: c_ij^k}.
using BracketTable = std::map<std::pair<int, int>, std::map<int, Rational>>;

struct LieAlgebraSpec {
  std::string name;
  int n = 0;
  Weighting weights;
  BracketTable brackets;

  // [e_i, e_j] as a dense vector, antisymmetry synthesized. 1-based.
  VectorQ bracket(int i, int j) const;
  // Bracket of two arbitrary vectors.
  VectorQ bracket(const VectorQ& u, const VectorQ& v) const;
  // Structure constant c_ij^k, 1-based, antisymmetric in i, j.
  Rational coefficient(int i, int j, int k) const;

  bool operator==(const LieAlgebraSpec&) const = default;
};

struct JacobiViolation {
  std::array<int, 3> triple;
  VectorQ residual;
};

struct FiltrationViolation {
  int i, j, k;
  Rational coefficient;
};

struct ValidationReport {
  std::vector<std::string> structural;  // malformed record
  std::vector<JacobiViolation> jacobi;
  std::vector<FiltrationViolation> filtration;
  bool graded = false;

  bool ok() const { return structural.empty() && jacobi.empty() && filtration.empty(); }
};

ValidationReport validate(const LieAlgebraSpec& spec);

// Throws std::invalid_argument with the first problem when validate fails.
void require_valid(const LieAlgebraSpec& spec);

LieAlgebraSpec associated_graded(const LieAlgebraSpec& spec);

std::vector<std::string> builtin_names();
LieAlgebraSpec builtin(std::string_view name);

// Column i of A is the new basis vector in old coordinates.
LieAlgebraSpec change_frame(const LieAlgebraSpec& spec, const MatrixQ& a);

// Distinct weights in increasing order, and the generator positions (0-based) of each.
std::vector<std::pair<int, std::vector<Index>>> weight_layers(const Weighting& weights);

struct LayerGrams {
  std::vector<int> layer_weights;
  std::vector<MatrixQ> blocks;  // vector-side scalar products, one per layer
  MatrixQ assembled() const;    // block-diagonal n x n matrix
};

// Scalar product on each layer pushed forward from the tensor power of the
// layer-1 scalar product g1 (vector side). Requires a graded stratified spec.
LayerGrams induced_layer_gram(const LieAlgebraSpec& spec, const MatrixQ& g1);

struct CompatibilityResult {
  bool compatible = false;
  bool block_diagonal = true;  // false: G mixes layers, the premise already fails
  int layer_weight = 0;
  Index row = 0, col = 0;  // position inside the layer block
  Rational expected, actual;
};

// g is the full vector-side Gram matrix on the algebra.
CompatibilityResult is_compatible(const LieAlgebraSpec& spec, const MatrixQ& g);

// Step-2 algebra: brackets of weight-1 generators land in the weight-2 centre.
// With filtered = true some central generators get weight 1, giving
// non-graded filtered brackets. Coefficients have numerators and
// denominators bounded by max_entry.
LieAlgebraSpec random_step2(std::mt19937_64& rng, int n, int max_entry, bool filtered = false);

}  // namespace filtcx
