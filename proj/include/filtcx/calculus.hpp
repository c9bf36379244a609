#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "filtcx/exterior.hpp"
#include "filtcx/lie.hpp"
#include "filtcx/linalg.hpp"
#include "filtcx/rational.hpp"

namespace filtcx {

// One matrix per form degree k = 0..n, mapping degree k to degree k + shift.
// Columns are indexed by the source basis, rows by the target basis; blocks
// whose target degree falls outside 0..n have zero rows.
template <class Scalar>
class OperatorFamily {
 public:
  using Matrix = DenseMatrix<Scalar>;

  OperatorFamily() = default;

  OperatorFamily(BasisPtr basis, int shift) : basis_(std::move(basis)), shift_(shift) {
    const int n = basis_->dimension();
    blocks_.reserve(static_cast<std::size_t>(n + 1));
    for (int k = 0; k <= n; ++k) blocks_.push_back(Matrix::Zero(basis_->size(k + shift_), basis_->size(k)));
  }

  static OperatorFamily identity(BasisPtr basis) {
    OperatorFamily out(basis, 0);
    for (int k = 0; k <= out.max_degree(); ++k) out[k].setIdentity();
    return out;
  }

  int shift() const { return shift_; }
  int max_degree() const { return basis_->dimension(); }
  const BasisTable& basis() const { return *basis_; }
  const BasisPtr& basis_ptr() const { return basis_; }

  const Matrix& operator[](int k) const { return blocks_.at(static_cast<std::size_t>(k)); }
  Matrix& operator[](int k) { return blocks_.at(static_cast<std::size_t>(k)); }

  OperatorFamily& operator+=(const OperatorFamily& o) {
    check_same(o);
    for (std::size_t k = 0; k < blocks_.size(); ++k) blocks_[k] += o.blocks_[k];
    return *this;
  }
  OperatorFamily& operator-=(const OperatorFamily& o) {
    check_same(o);
    for (std::size_t k = 0; k < blocks_.size(); ++k) blocks_[k] -= o.blocks_[k];
    return *this;
  }

  friend OperatorFamily operator+(OperatorFamily a, const OperatorFamily& b) { return a += b; }
  friend OperatorFamily operator-(OperatorFamily a, const OperatorFamily& b) { return a -= b; }
  friend OperatorFamily operator-(OperatorFamily a) {
    for (auto& m : a.blocks_) m = -m;
    return a;
  }
  friend OperatorFamily operator*(const Scalar& s, OperatorFamily a) {
    for (auto& m : a.blocks_) m *= s;
    return a;
  }

  // Composition: (a * b) applies b first.
  friend OperatorFamily operator*(const OperatorFamily& a, const OperatorFamily& b) {
    if (a.basis_->weights() != b.basis_->weights() || a.basis_->dimension() != b.basis_->dimension())
      throw std::invalid_argument("OperatorFamily: composing families over different bases");
    OperatorFamily out(a.basis_, a.shift_ + b.shift_);
    for (int k = 0; k <= out.max_degree(); ++k) {
      const int mid = k + b.shift_;
      if (mid < 0 || mid > out.max_degree()) continue;
      out[k] = a[mid] * b[k];
    }
    return out;
  }

  friend bool operator==(const OperatorFamily& a, const OperatorFamily& b) {
    if (a.shift_ != b.shift_ || a.blocks_.size() != b.blocks_.size()) return false;
    for (std::size_t k = 0; k < a.blocks_.size(); ++k)
      if (!equal(a.blocks_[k], b.blocks_[k])) return false;
    return true;
  }

  bool is_zero() const {
    for (const auto& m : blocks_)
      if (!filtcx::is_zero(m)) return false;
    return true;
  }

 private:
  void check_same(const OperatorFamily& o) const {
    if (shift_ != o.shift_ || blocks_.size() != o.blocks_.size())
      throw std::invalid_argument("OperatorFamily: adding families of different shape");
  }

  BasisPtr basis_;
  int shift_ = 0;
  std::vector<Matrix> blocks_;
};

using Family = OperatorFamily<Rational>;

// Per-degree Gram matrices on forms, induced from the degree-1 Gram.
class GramFamily {
 public:
  GramFamily() = default;
  explicit GramFamily(std::vector<MatrixQ> blocks) : blocks_(std::move(blocks)) {}

  const MatrixQ& operator[](int k) const { return blocks_.at(static_cast<std::size_t>(k)); }
  int max_degree() const { return static_cast<int>(blocks_.size()) - 1; }
  bool is_identity() const;

 private:
  std::vector<MatrixQ> blocks_;
};

// d(theta^k) = -sum_{i<j} c_ij^k theta^i ^ theta^j, extended by Leibniz.
// Throws std::logic_error if the result does not square to zero.
Family ce_differential(const LieAlgebraSpec& spec);
Family ce_differential(const LieAlgebraSpec& spec, BasisPtr basis);

// G_k[I][J] = det(<theta^{i_a}, theta^{j_b}>). Throws when g1 is not SPD.
GramFamily gram_family(const MatrixQ& g1, const BasisTable& basis);

// Adjoint for the Gram family: G_k^-1 M_k^T G_{k+s}, one block per degree.
Family adjoint(const Family& t, const GramFamily& g);

struct FiltrationWitness {
  int degree;
  MultiIndex source;
  int source_weight;
  MultiIndex target;
  int target_weight;
  Rational entry;
};

std::string to_string(const FiltrationWitness& w);

struct FiltrationCheck {
  bool holds;
  std::optional<FiltrationWitness> witness;
};

// Entries whose source and target weights agree.
Family gr_part(const Family& t);
// Every entry with target weight < source weight vanishes.
FiltrationCheck respects_filtration(const Family& t);
// Additionally every weight-preserving entry vanishes.
FiltrationCheck increases_weight(const Family& t);

// N0(k) = max weight - min weight + 1 over the degree-k basis.
std::vector<int> nilpotency_bound(const BasisTable& basis);
std::vector<int> nilpotency_bound(int n, const Weighting& weights);

}  // namespace filtcx
