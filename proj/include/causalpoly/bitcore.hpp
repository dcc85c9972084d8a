#pragma once

// Scenario conventions shared by every module.
//
// Bit strings are integers with party 1 in the most significant bit. A
// process vector is a 2^n x 2^n matrix whose rows are indexed by the output
// string a and whose columns are indexed by the input string x, so the entry
// (a, x) holds M(a|x) (or P(a|x) for a behavior).

#include "causalpoly/rational.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace causalpoly {

struct Scenario {
  int n_parties = 1;
  int input_cardinality = 2;
  int output_cardinality = 2;

  int strings() const { return 1 << n_parties; }
};

Scenario binary_scenario(int n_parties);

constexpr int string_count(int n) { return 1 << n; }

/// Bit of `party` (0-based) in an n-party string.
constexpr int bit_of(int value, int n, int party) { return (value >> (n - 1 - party)) & 1; }
constexpr int party_mask(int n, int party) { return 1 << (n - 1 - party); }

int index_of(std::span<const int> bits);
std::vector<int> bits_of(int index, int n);

/// 0 = constant 0, 1 = identity, 2 = bit flip, 3 = constant 1.
class LocalOp {
 public:
  explicit LocalOp(int tag);

  int tag() const { return tag_; }
  int apply(int x) const;
  /// D(a|x), a left-stochastic {0,1} table.
  int entry(int a, int x) const { return apply(x) == a ? 1 : 0; }

 private:
  int tag_;
};

/// Tensor product of n local operations, stored as the map x -> a.
class ProductOp {
 public:
  explicit ProductOp(std::vector<int> tags);

  int parties() const { return static_cast<int>(tags_.size()); }
  const std::vector<int>& tags() const { return tags_; }
  int apply(int x) const { return map_[static_cast<std::size_t>(x)]; }
  int entry(int a, int x) const { return apply(x) == a ? 1 : 0; }
  const std::vector<int>& map() const { return map_; }

  /// Position in tag-lexicographic order (party 1 most significant, base 4).
  int ordinal() const;
  static ProductOp from_ordinal(int ordinal, int n);

  /// Dense {0,1} matrix with rows a, columns x.
  template <typename Scalar = Rational>
  Matrix<Scalar> matrix() const {
    const int dim = string_count(parties());
    Matrix<Scalar> m = Matrix<Scalar>::Zero(dim, dim);
    for (int x = 0; x < dim; ++x) m(apply(x), x) = Scalar(1);
    return m;
  }

 private:
  std::vector<int> tags_;
  std::vector<int> map_;
};

std::vector<ProductOp> product_op(int n);  // all 4^n, tag-lexicographic
ProductOp product_op(std::vector<int> tags);

/// Flat 4^n-array of the maps of all product operations, ops ordered by
/// ordinal: table[op * 2^n + x] = a. Used by the hot enumeration loops.
std::vector<std::uint8_t> product_op_table(int n);

struct Behavior {
  Scenario scenario;
  RationalMatrix p;  // rows a, columns x
  bool no_signaling = false;

  bool normalized() const;
  bool nonnegative() const;
  bool satisfies_no_signaling() const;
};

Behavior local_det_behavior(const ProductOp& op);

/// Frobenius pairing sum_{a,x} u(a|x) v(a|x). Throws std::invalid_argument on a
/// dimension mismatch.
template <typename DerivedU, typename DerivedV>
typename DerivedU::Scalar inner(const Eigen::MatrixBase<DerivedU>& u,
                                const Eigen::MatrixBase<DerivedV>& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols())
    throw std::invalid_argument("inner: dimension mismatch");
  typename DerivedU::Scalar acc(0);
  for (Eigen::Index j = 0; j < u.cols(); ++j)
    for (Eigen::Index i = 0; i < u.rows(); ++i)
      if (!is_zero(v(i, j))) acc += u(i, j) * v(i, j);
  return acc;
}

template <typename Derived>
typename Derived::Scalar inner(const Eigen::MatrixBase<Derived>& u, const ProductOp& d) {
  const int dim = string_count(d.parties());
  if (u.rows() != dim || u.cols() != dim) throw std::invalid_argument("inner: dimension mismatch");
  typename Derived::Scalar acc(0);
  for (int x = 0; x < dim; ++x) acc += u(d.apply(x), x);
  return acc;
}

/// Row-major flattening index of (a, x), matching the H-representation coordinates.
constexpr int flat_index(int n, int a, int x) { return a * string_count(n) + x; }

template <typename Scalar>
Vector<Scalar> flatten(const Matrix<Scalar>& m) {
  Vector<Scalar> v(m.size());
  for (Eigen::Index a = 0; a < m.rows(); ++a)
    for (Eigen::Index x = 0; x < m.cols(); ++x) v(a * m.cols() + x) = m(a, x);
  return v;
}

template <typename Scalar>
Matrix<Scalar> unflatten(const Vector<Scalar>& v, int n) {
  const int dim = string_count(n);
  if (v.size() != dim * dim) throw std::invalid_argument("unflatten: wrong length");
  Matrix<Scalar> m(dim, dim);
  for (int a = 0; a < dim; ++a)
    for (int x = 0; x < dim; ++x) m(a, x) = v(a * dim + x);
  return m;
}

}  // namespace causalpoly
