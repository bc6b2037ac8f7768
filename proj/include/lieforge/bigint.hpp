#ifndef LIEFORGE_BIGINT_HPP
#define LIEFORGE_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Core>

#include <string>
#include <tuple>

namespace lieforge {

// Expression templates are disabled so that the type composes with Eigen.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::cpp_rational;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<BigInt>;
using IntVector = Vector<BigInt>;

namespace arith {

/// Floor division for any integer-like scalar (the quotient rounds toward -inf).
template <typename Scalar>
Scalar floor_div(const Scalar& a, const Scalar& b) {
  Scalar q = a / b;
  Scalar r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0))) q -= 1;
  return q;
}

/// Returns (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0.
template <typename Scalar>
std::tuple<Scalar, Scalar, Scalar> ext_gcd(Scalar a, Scalar b) {
  Scalar s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    Scalar q = a / b;
    Scalar r = a - q * b;
    a = b;
    b = r;
    Scalar s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
    Scalar t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (a < 0) return {Scalar(-a), Scalar(-s0), Scalar(-t0)};
  return {a, s0, t0};
}

template <typename Scalar>
Scalar abs(const Scalar& a) {
  return a < 0 ? Scalar(-a) : a;
}

/// Entrywise equality; Eigen's operator== does not instantiate for cpp_int.
template <typename Scalar>
bool equal(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

}  // namespace arith

inline std::string to_string(const BigInt& v) { return v.str(); }
inline std::string to_string(const Rational& v) { return v.str(); }

}  // namespace lieforge

#endif  // LIEFORGE_BIGINT_HPP
