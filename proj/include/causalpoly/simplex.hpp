#pragma once

// Dense two-phase tableau simplex, templated on the scalar.
//
//   maximize c.x  subject to  A x = b,  x >= 0
//
// With Rational the result is an exact basic optimal solution, i.e. a vertex
// of the feasible polytope. With double, ScalarTraits<double>::tolerance
// decides signs. Dantzig pricing falls back to Bland's rule during long
// degenerate stretches, so the exact solver cannot cycle.

#include "causalpoly/linalg.hpp"

#include <limits>
#include <stdexcept>
#include <vector>

namespace causalpoly {

enum class LpStatus { Optimal, Infeasible, Unbounded, PivotLimit };

const char* to_string(LpStatus s);

template <typename Scalar>
struct StandardFormLp {
  Matrix<Scalar> a;
  Vector<Scalar> b;
  Vector<Scalar> c;
};

template <typename Scalar>
struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Scalar objective = Scalar(0);
  Vector<Scalar> x;
  std::vector<int> basis;  // basic column of each surviving row
  long pivots = 0;

  bool optimal() const { return status == LpStatus::Optimal; }
};

struct SimplexOptions {
  long max_pivots = 1'000'000;
  int degenerate_streak_for_bland = 30;
};

namespace detail {

template <typename Scalar>
class Tableau {
 public:
  using T = ScalarTraits<Scalar>;

  Tableau(const StandardFormLp<Scalar>& lp, const SimplexOptions& opt)
      : m_(lp.a.rows()), n_(lp.a.cols()), opt_(opt) {
    if (lp.b.size() != m_ || lp.c.size() != n_) throw std::invalid_argument("simplex: dimension mismatch");
    t_ = Matrix<Scalar>::Zero(m_, n_ + m_ + 1);
    for (Eigen::Index i = 0; i < m_; ++i) {
      const bool flip = lp.b(i) < 0;
      for (Eigen::Index j = 0; j < n_; ++j)
        if (!T::zero(lp.a(i, j))) t_(i, j) = flip ? Scalar(-lp.a(i, j)) : lp.a(i, j);
      t_(i, n_ + i) = Scalar(1);
      t_(i, rhs()) = flip ? Scalar(-lp.b(i)) : lp.b(i);
    }
    basis_.resize(static_cast<std::size_t>(m_));
    for (Eigen::Index i = 0; i < m_; ++i) basis_[static_cast<std::size_t>(i)] = static_cast<int>(n_ + i);
    active_.assign(static_cast<std::size_t>(n_ + m_), true);
  }

  LpSolution<Scalar> run(const Vector<Scalar>& c) {
    LpSolution<Scalar> out;
    // Phase 1: maximize -sum(artificials).
    Vector<Scalar> phase1 = Vector<Scalar>::Zero(n_ + m_);
    for (Eigen::Index i = 0; i < m_; ++i) phase1(n_ + i) = Scalar(-1);
    price(phase1);
    LpStatus s = iterate();
    out.pivots = pivots_;
    if (s == LpStatus::PivotLimit) {
      out.status = s;
      return out;
    }
    if (!T::zero(objective_)) {
      out.status = LpStatus::Infeasible;
      return out;
    }
    expel_artificials();

    Vector<Scalar> phase2 = Vector<Scalar>::Zero(n_ + m_);
    phase2.head(n_) = c;
    for (Eigen::Index j = n_; j < n_ + m_; ++j) active_[static_cast<std::size_t>(j)] = false;
    price(phase2);
    s = iterate();
    out.pivots = pivots_;
    out.status = s;
    if (s != LpStatus::Optimal) return out;

    out.objective = objective_;
    out.x = Vector<Scalar>::Zero(n_);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (dropped_[i]) continue;
      const int j = basis_[i];
      if (j < n_) out.x(j) = t_(static_cast<Eigen::Index>(i), rhs());
      out.basis.push_back(j);
    }
    if constexpr (std::is_same_v<Scalar, double>) {
      for (Eigen::Index j = 0; j < n_; ++j)
        if (T::zero(out.x(j))) out.x(j) = 0.0;
    }
    return out;
  }

 private:
  Eigen::Index rhs() const { return n_ + m_; }

  void price(const Vector<Scalar>& cost) {
    cost_ = cost;
    reduced_ = cost;
    objective_ = Scalar(0);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (dropped_.size() && dropped_[i]) continue;
      const Scalar& cb = cost(basis_[i]);
      if (T::zero(cb)) continue;
      const auto r = static_cast<Eigen::Index>(i);
      for (Eigen::Index j = 0; j < n_ + m_; ++j)
        if (!T::zero(t_(r, j))) reduced_(j) -= cb * t_(r, j);
      objective_ += cb * t_(r, rhs());
    }
    if (dropped_.empty()) dropped_.assign(basis_.size(), false);
  }

  int choose_entering(bool bland) const {
    int best = -1;
    for (Eigen::Index j = 0; j < n_ + m_; ++j) {
      if (!active_[static_cast<std::size_t>(j)]) continue;
      if (!(reduced_(j) > 0) || T::zero(reduced_(j))) continue;
      if (bland) return static_cast<int>(j);
      if (best < 0 || reduced_(j) > reduced_(best)) best = static_cast<int>(j);
    }
    return best;
  }

  int choose_leaving(int col) const {
    int best = -1;
    Scalar best_ratio(0);
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (dropped_[static_cast<std::size_t>(i)]) continue;
      const Scalar& e = t_(i, col);
      if (!(e > 0) || T::zero(e)) continue;
      const Scalar ratio = t_(i, rhs()) / e;
      if (best < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(best)])) {
        best = static_cast<int>(i);
        best_ratio = ratio;
      }
    }
    return best;
  }

  void pivot(int row, int col) {
    const Eigen::Index r = row;
    const Scalar inv = Scalar(1) / t_(r, col);
    nz_.clear();
    for (Eigen::Index j = 0; j <= rhs(); ++j) {
      if (T::zero(t_(r, j))) {
        t_(r, j) = Scalar(0);
        continue;
      }
      t_(r, j) *= inv;
      nz_.push_back(static_cast<int>(j));
    }
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (i == r || T::zero(t_(i, col))) continue;
      const Scalar factor = t_(i, col);
      for (int j : nz_) t_(i, j) -= factor * t_(r, j);
      t_(i, col) = Scalar(0);
    }
    if (!T::zero(reduced_(col))) {
      const Scalar factor = reduced_(col);
      for (int j : nz_)
        if (j < rhs()) reduced_(j) -= factor * t_(r, j);
      objective_ += factor * t_(r, rhs());
      reduced_(col) = Scalar(0);
    }
    basis_[static_cast<std::size_t>(row)] = col;
    ++pivots_;
  }

  LpStatus iterate() {
    int streak = 0;
    while (true) {
      if (pivots_ >= opt_.max_pivots) return LpStatus::PivotLimit;
      const bool bland = streak >= opt_.degenerate_streak_for_bland;
      const int col = choose_entering(bland);
      if (col < 0) return LpStatus::Optimal;
      const int row = choose_leaving(col);
      if (row < 0) return LpStatus::Unbounded;
      const bool degenerate = T::zero(t_(row, rhs()));
      pivot(row, col);
      streak = degenerate ? streak + 1 : 0;
    }
  }

  void expel_artificials() {
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (basis_[static_cast<std::size_t>(i)] < n_) continue;
      int col = -1;
      for (Eigen::Index j = 0; j < n_; ++j)
        if (!T::zero(t_(i, j))) {
          col = static_cast<int>(j);
          break;
        }
      if (col >= 0)
        pivot(static_cast<int>(i), col);
      else
        dropped_[static_cast<std::size_t>(i)] = true;  // redundant equality
    }
  }

  Eigen::Index m_, n_;
  SimplexOptions opt_;
  Matrix<Scalar> t_;
  Vector<Scalar> cost_, reduced_;
  Scalar objective_ = Scalar(0);
  std::vector<int> basis_;
  std::vector<bool> active_, dropped_;
  std::vector<int> nz_;
  long pivots_ = 0;
};

}  // namespace detail

template <typename Scalar>
LpSolution<Scalar> solve_lp(const StandardFormLp<Scalar>& lp, const SimplexOptions& opt = {}) {
  detail::Tableau<Scalar> tableau(lp, opt);
  return tableau.run(lp.c);
}

}  // namespace causalpoly
