#pragma once

#include <vector>

#include "filtcx/calculus.hpp"

namespace filtcx {

struct BoxAndProjection {
  Family box0;
  Family pi0;
};

// box0 = d0 delta0 + delta0 d0; pi0 = G-orthogonal projection onto ker box0.
BoxAndProjection base_box_and_projection(const Family& d0, const Family& delta0, const GramFamily& g);

// Inverse of d0 on Im d0, zero on its G-orthogonal complement, image Im delta0.
Family partial_inverse(const Family& d0, const GramFamily& g);

// (I - N)^-1 as the finite series sum_{j < N0(k)} N^j. N must increase weight.
Family neumann_inverse(const Family& n);

struct RuminProjection {
  Family b;     // -d0inv (d - d0)
  Family b1;    // -(d - d0) d0inv
  Family pi_f;  // projection onto F along E
};

RuminProjection rumin_projection(const Family& d, const Family& d0, const Family& d0inv);

// Projection onto ker(box^N0) along Im(box^N0), degree by degree.
// Throws std::domain_error when the two subspaces are not complementary.
Family generalized_kernel_projection(const Family& box, const std::vector<int>& n0);

struct Conjugator {
  Family l;
  Family l_inv;
};

// L = P Pi0 + (I - P)(I - Pi0), inverted by its Neumann series.
Conjugator build_l(const Family& p, const Family& pi0);

struct ProjectionBundle {
  Family box0, pi0;
  Family d0inv;
  Family box;  // d delta0 + delta0 d
  Family p;
  Family b, b1, pi_f, pi_e;
  Family l, l_inv;
};

ProjectionBundle build_projections(const Family& d, const Family& d0, const Family& delta0, const GramFamily& g);

}  // namespace filtcx
