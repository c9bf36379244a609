#include "filtcx/lie.hpp"

#include <algorithm>
#include <stdexcept>

#include "filtcx/linalg.hpp"

namespace filtcx {

VectorQ LieAlgebraSpec::bracket(int i, int j) const {
  VectorQ out = VectorQ::Zero(n);
  if (i == j) return out;
  const bool swapped = i > j;
  auto it = brackets.find(swapped ? std::make_pair(j, i) : std::make_pair(i, j));
  if (it == brackets.end()) return out;
  for (const auto& [k, c] : it->second) out(k - 1) = swapped ? Rational(-c) : c;
  return out;
}

VectorQ LieAlgebraSpec::bracket(const VectorQ& u, const VectorQ& v) const {
  VectorQ out = VectorQ::Zero(n);
  for (const auto& [ij, coeffs] : brackets) {
    const auto [i, j] = ij;
    const Rational w = u(i - 1) * v(j - 1) - u(j - 1) * v(i - 1);
    if (w == 0) continue;
    for (const auto& [k, c] : coeffs) out(k - 1) += w * c;
  }
  return out;
}

Rational LieAlgebraSpec::coefficient(int i, int j, int k) const {
  if (i == j) return Rational(0);
  const bool swapped = i > j;
  auto it = brackets.find(swapped ? std::make_pair(j, i) : std::make_pair(i, j));
  if (it == brackets.end()) return Rational(0);
  auto c = it->second.find(k);
  if (c == it->second.end()) return Rational(0);
  return swapped ? Rational(-c->second) : c->second;
}

ValidationReport validate(const LieAlgebraSpec& spec) {
  ValidationReport report;
  try {
    check_weighting(spec.weights, spec.n);
  } catch (const std::invalid_argument& e) {
    report.structural.emplace_back(e.what());
    return report;
  }
  for (const auto& [ij, coeffs] : spec.brackets) {
    const auto [i, j] = ij;
    const std::string where = "bracket (" + std::to_string(i) + "," + std::to_string(j) + ")";
    if (i < 1 || j > spec.n || i >= j) report.structural.push_back(where + ": need 1 <= i < j <= n");
    for (const auto& [k, c] : coeffs)
      if (k < 1 || k > spec.n) report.structural.push_back(where + ": target index " + std::to_string(k) + " out of range");
  }
  if (!report.structural.empty()) return report;

  const auto w = [&](int i) { return spec.weights[static_cast<std::size_t>(i - 1)]; };
  report.graded = true;
  for (const auto& [ij, coeffs] : spec.brackets) {
    const auto [i, j] = ij;
    for (const auto& [k, c] : coeffs) {
      if (c == 0) continue;
      if (w(k) > w(i) + w(j)) report.filtration.push_back(FiltrationViolation{i, j, k, c});
      if (w(k) != w(i) + w(j)) report.graded = false;
    }
  }

  const auto unit = [&](int i) {
    VectorQ e = VectorQ::Zero(spec.n);
    e(i - 1) = 1;
    return e;
  };
  for (int i = 1; i <= spec.n; ++i)
    for (int j = i + 1; j <= spec.n; ++j)
      for (int k = j + 1; k <= spec.n; ++k) {
        const VectorQ ei = unit(i), ej = unit(j), ek = unit(k);
        const VectorQ r = spec.bracket(ei, spec.bracket(j, k)) + spec.bracket(ej, spec.bracket(k, i)) +
                          spec.bracket(ek, spec.bracket(i, j));
        if (!is_zero(r)) report.jacobi.push_back(JacobiViolation{{i, j, k}, r});
      }
  return report;
}

void require_valid(const LieAlgebraSpec& spec) {
  const auto report = validate(spec);
  if (!report.structural.empty()) throw std::invalid_argument(spec.name + ": " + report.structural.front());
  if (!report.jacobi.empty()) {
    const auto& t = report.jacobi.front().triple;
    throw std::invalid_argument(spec.name + ": Jacobi identity fails for (e" + std::to_string(t[0]) + ",e" +
                                std::to_string(t[1]) + ",e" + std::to_string(t[2]) + ")");
  }
  if (!report.filtration.empty()) {
    const auto& f = report.filtration.front();
    throw std::invalid_argument(spec.name + ": bracket [e" + std::to_string(f.i) + ",e" + std::to_string(f.j) +
                                "] has a component on e" + std::to_string(f.k) + " of too high weight");
  }
}

namespace {

void drop_zeros(BracketTable& table) {
  for (auto it = table.begin(); it != table.end();) {
    std::erase_if(it->second, [](const auto& kv) { return kv.second == 0; });
    it = it->second.empty() ? table.erase(it) : std::next(it);
  }
}

}  // namespace

LieAlgebraSpec associated_graded(const LieAlgebraSpec& spec) {
  require_valid(spec);
  LieAlgebraSpec out{spec.name, spec.n, spec.weights, {}};
  const auto w = [&](int i) { return spec.weights[static_cast<std::size_t>(i - 1)]; };
  for (const auto& [ij, coeffs] : spec.brackets)
    for (const auto& [k, c] : coeffs)
      if (w(k) == w(ij.first) + w(ij.second)) out.brackets[ij][k] = c;
  drop_zeros(out.brackets);
  return out;
}

std::vector<std::string> builtin_names() { return {"heisenberg3", "heisenberg5", "engel4", "free_n633"}; }

LieAlgebraSpec builtin(std::string_view name) {
  const Rational one(1);
  if (name == "heisenberg3") return {"heisenberg3", 3, {1, 1, 2}, {{{1, 2}, {{3, one}}}}};
  if (name == "heisenberg5")
    return {"heisenberg5", 5, {1, 1, 1, 1, 2}, {{{1, 2}, {{5, one}}}, {{3, 4}, {{5, one}}}}};
  if (name == "engel4") return {"engel4", 4, {1, 1, 2, 2}, {{{1, 2}, {{3, one}}}, {{1, 3}, {{4, one}}}}};
  if (name == "free_n633")
    return {"free_n633",
            6,
            {1, 1, 1, 2, 2, 2},
            {{{1, 2}, {{4, one}}}, {{1, 3}, {{5, one}}}, {{2, 3}, {{6, one}}}}};
  throw std::invalid_argument("unknown builtin algebra '" + std::string(name) + "'");
}

LieAlgebraSpec change_frame(const LieAlgebraSpec& spec, const MatrixQ& a) {
  require_valid(spec);
  if (a.rows() != spec.n || a.cols() != spec.n) throw std::invalid_argument("change_frame: matrix has the wrong shape");
  for (Index k = 0; k < a.rows(); ++k)
    for (Index i = 0; i < a.cols(); ++i)
      if (a(k, i) != 0 && spec.weights[static_cast<std::size_t>(k)] > spec.weights[static_cast<std::size_t>(i)])
        throw std::invalid_argument("change_frame: new frame does not respect the filtration");
  MatrixQ a_inv;
  try {
    a_inv = inverse(a);
  } catch (const std::domain_error&) {
    throw std::invalid_argument("change_frame: matrix is singular");
  }
  LieAlgebraSpec out{spec.name, spec.n, spec.weights, {}};
  for (int i = 1; i <= spec.n; ++i)
    for (int j = i + 1; j <= spec.n; ++j) {
      const VectorQ c = a_inv * spec.bracket(VectorQ(a.col(i - 1)), VectorQ(a.col(j - 1)));
      for (int k = 1; k <= spec.n; ++k)
        if (c(k - 1) != 0) out.brackets[{i, j}][k] = c(k - 1);
    }
  require_valid(out);
  return out;
}

std::vector<std::pair<int, std::vector<Index>>> weight_layers(const Weighting& weights) {
  std::vector<std::pair<int, std::vector<Index>>> layers;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (layers.empty() || layers.back().first != weights[i]) layers.push_back({weights[i], {}});
    layers.back().second.push_back(static_cast<Index>(i));
  }
  return layers;
}

MatrixQ LayerGrams::assembled() const {
  Index n = 0;
  for (const auto& b : blocks) n += b.rows();
  MatrixQ g = MatrixQ::Zero(n, n);
  Index at = 0;
  for (const auto& b : blocks) {
    g.block(at, at, b.rows(), b.cols()) = b;
    at += b.rows();
  }
  return g;
}

namespace {

MatrixQ kronecker(const MatrixQ& a, const MatrixQ& b) {
  MatrixQ out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Matrix of v1 (x) ... (x) vj -> [v1,[v2,...[v_{j-1},vj]]] from the layer-1
// tensor power to the full algebra. Tensor basis is row-major in the factors.
MatrixQ iterated_bracket_map(const LieAlgebraSpec& spec, const std::vector<Index>& layer1, int j) {
  const Index m = static_cast<Index>(layer1.size());
  Index count = 1;
  for (int t = 0; t < j; ++t) count *= m;
  MatrixQ out(spec.n, count);
  for (Index col = 0; col < count; ++col) {
    std::vector<Index> factors(static_cast<std::size_t>(j));
    Index rest = col;
    for (int t = j - 1; t >= 0; --t) {
      factors[static_cast<std::size_t>(t)] = layer1[static_cast<std::size_t>(rest % m)];
      rest /= m;
    }
    VectorQ v = VectorQ::Zero(spec.n);
    v(factors.back()) = 1;
    for (int t = j - 2; t >= 0; --t) {
      VectorQ e = VectorQ::Zero(spec.n);
      e(factors[static_cast<std::size_t>(t)]) = 1;
      v = spec.bracket(e, v);
    }
    out.col(col) = v;
  }
  return out;
}

}  // namespace

LayerGrams induced_layer_gram(const LieAlgebraSpec& spec, const MatrixQ& g1) {
  const auto report = validate(spec);
  if (!report.ok()) throw std::invalid_argument("induced_layer_gram: invalid algebra");
  if (!report.graded) throw std::invalid_argument("induced_layer_gram: algebra is not graded");
  const auto layers = weight_layers(spec.weights);
  const auto& layer1 = layers.front().second;
  if (layers.front().first != 1) throw std::invalid_argument("induced_layer_gram: no weight-1 layer");
  if (g1.rows() != static_cast<Index>(layer1.size()) || g1.cols() != g1.rows())
    throw std::invalid_argument("induced_layer_gram: layer-1 Gram has the wrong size");
  if (!is_positive_definite(g1)) throw std::invalid_argument("induced_layer_gram: layer-1 Gram is not positive definite");

  LayerGrams out;
  out.layer_weights.push_back(1);
  out.blocks.push_back(g1);
  const MatrixQ g1_inv = inverse(g1);
  MatrixQ k_inv = g1_inv;
  for (std::size_t l = 1; l < layers.size(); ++l) {
    const int j = layers[l].first;
    if (j != static_cast<int>(l) + 1)
      throw std::invalid_argument("induced_layer_gram: weights skip layer " + std::to_string(l + 1));
    k_inv = kronecker(k_inv, g1_inv);
    const MatrixQ full = iterated_bracket_map(spec, layer1, j);
    MatrixQ m(static_cast<Index>(layers[l].second.size()), full.cols());
    for (std::size_t r = 0; r < layers[l].second.size(); ++r) m.row(static_cast<Index>(r)) = full.row(layers[l].second[r]);
    if (rank(m) != m.rows())
      throw std::invalid_argument("induced_layer_gram: layer " + std::to_string(j) +
                                  " is not generated by brackets (algebra not stratified)");
    // Minimal-norm preimage: |w|^2 = w^T (M K^-1 M^T)^-1 w.
    out.layer_weights.push_back(j);
    out.blocks.push_back(inverse(MatrixQ(m * k_inv * m.transpose())));
  }
  return out;
}

CompatibilityResult is_compatible(const LieAlgebraSpec& spec, const MatrixQ& g) {
  if (g.rows() != spec.n || g.cols() != spec.n) throw std::invalid_argument("is_compatible: Gram has the wrong size");
  if (!is_positive_definite(g)) throw std::invalid_argument("is_compatible: Gram is not positive definite");
  CompatibilityResult result;
  for (Index i = 0; i < g.rows(); ++i)
    for (Index j = 0; j < g.cols(); ++j)
      if (g(i, j) != 0 && spec.weights[static_cast<std::size_t>(i)] != spec.weights[static_cast<std::size_t>(j)]) {
        result.block_diagonal = false;
        result.row = i;
        result.col = j;
        result.actual = g(i, j);
        return result;
      }
  const auto layers = weight_layers(spec.weights);
  const auto& l1 = layers.front().second;
  MatrixQ g1(static_cast<Index>(l1.size()), static_cast<Index>(l1.size()));
  for (std::size_t a = 0; a < l1.size(); ++a)
    for (std::size_t b = 0; b < l1.size(); ++b) g1(static_cast<Index>(a), static_cast<Index>(b)) = g(l1[a], l1[b]);
  const auto induced = induced_layer_gram(spec, g1);
  for (std::size_t l = 0; l < layers.size(); ++l) {
    const auto& idx = layers[l].second;
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b < idx.size(); ++b) {
        const Rational& want = induced.blocks[l](static_cast<Index>(a), static_cast<Index>(b));
        const Rational& have = g(idx[a], idx[b]);
        if (want != have) {
          result.layer_weight = layers[l].first;
          result.row = static_cast<Index>(a);
          result.col = static_cast<Index>(b);
          result.expected = want;
          result.actual = have;
          return result;
        }
      }
  }
  result.compatible = true;
  return result;
}

LieAlgebraSpec random_step2(std::mt19937_64& rng, int n, int max_entry, bool filtered) {
  if (n < 2) throw std::invalid_argument("random_step2: need n >= 2");
  std::uniform_int_distribution<int> pick_m(2, n);
  const int m = pick_m(rng);  // non-central generators
  // Among the n - m central generators, the first `low` get weight 1.
  int low = 0;
  if (filtered && n - m > 0) low = std::uniform_int_distribution<int>(1, n - m)(rng);
  LieAlgebraSpec spec;
  spec.name = "random_step2";
  spec.n = n;
  for (int i = 1; i <= n; ++i) spec.weights.push_back(i <= m + low ? 1 : 2);
  std::uniform_int_distribution<int> num(-max_entry, max_entry);
  std::uniform_int_distribution<int> den(1, max_entry);
  std::bernoulli_distribution present(0.5);
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      for (int k = m + 1; k <= n; ++k) {
        if (!present(rng)) continue;
        const int p = num(rng);
        const int q = den(rng);
        const Rational c(p, q);
        if (c != 0) spec.brackets[{i, j}][k] = c;
      }
  return spec;
}

}  // namespace filtcx
