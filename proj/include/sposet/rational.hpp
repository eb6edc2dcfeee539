#pragma once

#include <string>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

namespace sposet {

/// Exact rational scalar. Expression templates are off so the type composes
/// cleanly with Eigen's own expression machinery.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = Matrix<Rational>;
using RationalVector = Vector<Rational>;
using IntMatrix = Eigen::MatrixXi;
using IntVector = Eigen::VectorXi;

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);

/// Parses "p", "-p" or "p/q".
Rational parse_rational(const std::string& text);

bool is_integer(const Rational& value);

}  // namespace sposet
