#pragma once

#include <optional>
#include <string>
#include <vector>

#include "filtcx/calculus.hpp"
#include "filtcx/lie.hpp"
#include "filtcx/projections.hpp"

namespace filtcx {

// Selects the top differential of the pipeline. For left-invariant forms the
// full de Rham differential and its algebraic part coincide.
enum class TopDifferential { full, algebraic };

struct IdentityCheck {
  std::string name;
  bool passed;
  std::string witness;  // empty when passed
};

using BettiVector = std::vector<int>;

struct ConjugatorHomotopy {
  Family g;      // C delta0 Box0^-1 + delta0 Box0^-1 d0 on F0, identity on E0
  Family g_inv;
  Family h;
};

struct SubcomplexReport {
  std::string algebra;
  std::string gram_fingerprint;
  std::vector<int> dim_e0, dim_f0;
  std::vector<MatrixQ> e0_basis, f0_basis;  // columns
  std::vector<MatrixQ> d_e0;                // D in E0 coordinates, degree k to k+1
  std::vector<MatrixQ> c_f0;                // C in F0 coordinates
  BettiVector betti;

  Family d, d0, delta0;
  ProjectionBundle bundle;
  Family big_d, big_c, d_c;
  ConjugatorHomotopy homotopy;

  std::vector<IdentityCheck> ledger;

  bool passed() const;
  const IdentityCheck* first_failure() const;
};

// Degree-1 Gram on covectors; rejects Grams mixing generators of different weight.
GramFamily checked_gram(const LieAlgebraSpec& spec, const BasisTable& basis, const MatrixQ& g1);

SubcomplexReport build_subcomplex(const LieAlgebraSpec& spec, const MatrixQ& g1,
                                  TopDifferential top = TopDifferential::full);

ConjugatorHomotopy conjugator_and_homotopy(const ProjectionBundle& bundle, const Family& d, const Family& d0,
                                           const Family& delta0, const Family& big_c);

BettiVector ce_cohomology_oracle(const LieAlgebraSpec& spec);
BettiVector betti_of_subcomplex(const SubcomplexReport& report);

struct ComparisonResult {
  bool equal = true;          // E0 subspaces agree in every degree
  int degree = -1;            // first degree where the E0 subspaces differ
  VectorQ witness;            // lies in one E0 but not in the other
  bool witness_in_first = true;
  bool projectors_equal = true;  // Pi0 matrices agree in every degree
  int projector_degree = -1;     // first degree where the Pi0 matrices differ
  Index row = 0, col = 0;
  Rational entry_a, entry_b;
};

ComparisonResult compare_e0(const LieAlgebraSpec& spec, const MatrixQ& gram_a, const MatrixQ& gram_b);

}  // namespace filtcx
