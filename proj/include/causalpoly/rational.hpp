#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace causalpoly {

// Expression templates are disabled so the type composes with Eigen's own.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = Matrix<Rational>;
using RationalVector = Vector<Rational>;

/// "p/q" (or "p" when q == 1).
std::string to_string(const Rational& r);

/// Accepts "p", "-p", "p/q" and plain decimal integers. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline bool is_zero(double v, double tol = 1e-12) { return v < tol && v > -tol; }

}  // namespace causalpoly

namespace Eigen {

template <>
struct NumTraits<causalpoly::Rational> : GenericNumTraits<causalpoly::Rational> {
  using Real = causalpoly::Rational;
  using NonInteger = causalpoly::Rational;
  using Nested = causalpoly::Rational;
  using Literal = causalpoly::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
