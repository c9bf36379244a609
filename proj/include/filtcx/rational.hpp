#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

namespace filtcx {

// Expression templates are off so that Eigen sees a plain value type.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

using MatrixQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VectorQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

// Canonical text: "p/q" with q > 0 and gcd 1, or "p" when q = 1.
std::string to_string(const Rational& r);

// Accepts "p", "p/q", with an optional sign. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

}  // namespace filtcx
