#pragma once

// Gaussian elimination over an exact or floating scalar.

#include "causalpoly/rational.hpp"

#include <cmath>
#include <vector>

namespace causalpoly {

template <typename Scalar>
struct ScalarTraits {
  static bool zero(const Scalar& v) { return v == Scalar(0); }
  static Scalar magnitude(const Scalar& v) { return v < 0 ? Scalar(-v) : v; }
};

template <>
struct ScalarTraits<double> {
  static constexpr double tolerance = 1e-9;
  static bool zero(double v) { return std::abs(v) <= tolerance; }
  static double magnitude(double v) { return std::abs(v); }
};

template <typename Scalar>
struct RowEchelon {
  Matrix<Scalar> reduced;    // reduced row-echelon form, zero rows dropped
  std::vector<int> pivots;   // pivot column of each row of `reduced`
  int rank() const { return static_cast<int>(pivots.size()); }
};

/// Reduced row-echelon form. Exact scalars pivot on the first nonzero entry;
/// doubles use partial pivoting with ScalarTraits<double>::tolerance.
template <typename Scalar>
RowEchelon<Scalar> row_reduce(Matrix<Scalar> a) {
  using T = ScalarTraits<Scalar>;
  RowEchelon<Scalar> out;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Eigen::Index pick = -1;
    for (Eigen::Index r = row; r < a.rows(); ++r) {
      if (T::zero(a(r, col))) continue;
      if constexpr (std::is_same_v<Scalar, double>) {
        if (pick < 0 || T::magnitude(a(r, col)) > T::magnitude(a(pick, col))) pick = r;
      } else {
        pick = r;
        break;
      }
    }
    if (pick < 0) continue;
    if (pick != row) a.row(pick).swap(a.row(row));
    const Scalar inv = Scalar(1) / a(row, col);
    for (Eigen::Index c = col; c < a.cols(); ++c)
      if (!T::zero(a(row, c))) a(row, c) *= inv;
    a(row, col) = Scalar(1);
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      if (r == row || T::zero(a(r, col))) continue;
      const Scalar factor = a(r, col);
      for (Eigen::Index c = col; c < a.cols(); ++c)
        if (!T::zero(a(row, c))) a(r, c) -= factor * a(row, c);
      a(r, col) = Scalar(0);
    }
    out.pivots.push_back(static_cast<int>(col));
    ++row;
  }
  out.reduced = a.topRows(row);
  if constexpr (std::is_same_v<Scalar, double>) {
    for (Eigen::Index i = 0; i < out.reduced.size(); ++i)
      if (T::zero(out.reduced.data()[i])) out.reduced.data()[i] = 0.0;
  }
  return out;
}

template <typename Scalar>
int rank(const Matrix<Scalar>& a) {
  return row_reduce<Scalar>(a).rank();
}

/// True iff every row of `b` lies in the row space of `a`.
template <typename Scalar>
bool row_space_contains(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  if (b.rows() == 0) return true;
  Matrix<Scalar> stacked(a.rows() + b.rows(), a.cols());
  stacked << a, b;
  return rank<Scalar>(stacked) == rank<Scalar>(a);
}

template <typename Scalar>
bool same_row_space(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  return row_space_contains(a, b) && row_space_contains(b, a);
}

/// Basis of {t : a t = 0}, one column per free variable.
template <typename Scalar>
Matrix<Scalar> null_space(const Matrix<Scalar>& a) {
  const RowEchelon<Scalar> e = row_reduce<Scalar>(a);
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
  for (int p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<int> free;
  for (int c = 0; c < a.cols(); ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free.push_back(c);
  Matrix<Scalar> basis = Matrix<Scalar>::Zero(a.cols(), static_cast<Eigen::Index>(free.size()));
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis(free[k], static_cast<Eigen::Index>(k)) = Scalar(1);
    for (int r = 0; r < e.rank(); ++r) basis(e.pivots[static_cast<std::size_t>(r)], static_cast<Eigen::Index>(k)) = -e.reduced(r, free[k]);
  }
  return basis;
}

}  // namespace causalpoly
