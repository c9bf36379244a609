#pragma once

#include <string>
#include <utility>
#include <vector>

#include "filtcx/contact.hpp"

namespace filtcx::contact {

std::string join_terms(const std::vector<std::pair<Rational, std::string>>& terms);
std::string monomial_to_string(const Monomial& m);

// The three rows of the frame brackets as coefficients on (X, Y, T):
// [X,Y], [X,T], [Y,T].
struct BracketRow {
  int lo, hi;
  CoefPoly on[3];
};
const std::vector<BracketRow>& frame_brackets();

// d-tilde and d in degrees 0..2 built from first principles, without any
// rewriting of the structure functions.
SymbolicMatrix dtilde_matrix(int degree, bool graded_only = false);
SymbolicMatrix d_matrix(int degree);

}  // namespace filtcx::contact
