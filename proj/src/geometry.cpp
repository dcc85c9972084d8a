#include "causalpoly/geometry.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace causalpoly {

namespace {

RationalMatrix stack_rows(const std::vector<RationalVector>& rows, int dim) {
  RationalMatrix m(static_cast<Eigen::Index>(rows.size()), dim);
  for (std::size_t i = 0; i < rows.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
  return m;
}

RationalMatrix augmented(const RationalMatrix& a, const RationalVector& b) {
  RationalMatrix m(a.rows(), a.cols() + 1);
  m << a, b;
  return m;
}

HPolytope with_nonnegativity(int dim, RationalMatrix eq, RationalVector rhs) {
  HPolytope h;
  h.dim = dim;
  h.eq = std::move(eq);
  h.eq_rhs = std::move(rhs);
  h.ineq = RationalMatrix::Identity(dim, dim);
  h.ineq_rhs = RationalVector::Zero(dim);
  return h;
}

RationalVector op_row(const ProductOp& d) {
  const int n = d.parties();
  RationalVector row = RationalVector::Zero(string_count(n) * string_count(n));
  for (int x = 0; x < string_count(n); ++x) row(flat_index(n, d.apply(x), x)) = 1;
  return row;
}

RationalVector process_row(const DetProcess& f) {
  RationalVector row = RationalVector::Zero(string_count(f.n) * string_count(f.n));
  for (int a = 0; a < string_count(f.n); ++a) row(flat_index(f.n, a, f(a))) = 1;
  return row;
}

// Scales to a primitive integer vector with the same direction.
void normalize_ray(RationalVector& r) {
  using boost::multiprecision::mpz_int;
  mpz_int lcm = 1, g = 0;
  for (Eigen::Index i = 0; i < r.size(); ++i) {
    if (r(i).is_zero()) continue;
    lcm = boost::multiprecision::lcm(lcm, mpz_int(denominator(r(i))));
  }
  for (Eigen::Index i = 0; i < r.size(); ++i) {
    if (r(i).is_zero()) continue;
    r(i) *= Rational(lcm);
    g = boost::multiprecision::gcd(g, mpz_int(numerator(r(i))));
  }
  if (g > 1)
    for (Eigen::Index i = 0; i < r.size(); ++i) r(i) /= Rational(g);
}

}  // namespace

bool HPolytope::contains(const RationalVector& p) const {
  if (p.size() != dim) return false;
  for (Eigen::Index i = 0; i < eq.rows(); ++i)
    if (eq.row(i).dot(p) != eq_rhs(i)) return false;
  for (Eigen::Index i = 0; i < ineq.rows(); ++i)
    if (ineq.row(i).dot(p) < ineq_rhs(i)) return false;
  return true;
}

HPolytope ns_hrep(int n) {
  if (n < 1) throw std::invalid_argument("ns_hrep: n must be positive");
  const int s = string_count(n);
  std::vector<RationalVector> rows;
  for (int x = 0; x < s; ++x) {
    RationalVector r = RationalVector::Zero(s * s);
    for (int a = 0; a < s; ++a) r(flat_index(n, a, x)) = 1;
    rows.push_back(r);
  }
  for (int i = 0; i < n; ++i) {
    const int mask = party_mask(n, i);
    for (int x = 0; x < s; ++x) {
      if (x & mask) continue;
      for (int rest = 0; rest < s; ++rest) {
        if (rest & mask) continue;
        RationalVector r = RationalVector::Zero(s * s);
        for (int ai = 0; ai < 2; ++ai) {
          const int a = rest | (ai ? mask : 0);
          r(flat_index(n, a, x)) += 1;
          r(flat_index(n, a, x | mask)) -= 1;
        }
        rows.push_back(r);
      }
    }
  }
  RationalVector rhs = RationalVector::Zero(static_cast<Eigen::Index>(rows.size()));
  rhs.head(s).setOnes();
  return with_nonnegativity(s * s, stack_rows(rows, s * s), rhs);
}

HPolytope cp_hrep(int n) {
  if (n < 1) throw std::invalid_argument("cp_hrep: n must be positive");
  const int s = string_count(n);
  std::vector<RationalVector> rows;
  for (const ProductOp& d : product_op(n)) rows.push_back(op_row(d));
  return with_nonnegativity(s * s, stack_rows(rows, s * s),
                            RationalVector::Ones(static_cast<Eigen::Index>(rows.size())));
}

HPolytope nonnegative_with(const RationalMatrix& eq, const RationalVector& rhs) {
  return with_nonnegativity(static_cast<int>(eq.cols()), eq, rhs);
}

AffineHull affine_hull(const RationalMatrix& eq, const RationalVector& rhs) {
  if (eq.rows() != rhs.size()) throw std::invalid_argument("affine_hull: row count mismatch");
  AffineHull out;
  const RowEchelon<Rational> e = row_reduce<Rational>(augmented(eq, rhs));
  const int cols = static_cast<int>(eq.cols());
  out.basis = e.reduced;
  for (int p : e.pivots)
    if (p == cols) out.consistent = false;
  out.rank = e.rank() - (out.consistent ? 0 : 1);
  out.point = RationalVector::Zero(cols);
  if (out.consistent)
    for (int r = 0; r < e.rank(); ++r) out.point(e.pivots[static_cast<std::size_t>(r)]) = e.reduced(r, cols);
  out.directions = null_space<Rational>(eq);
  return out;
}

VPolytope vertex_enum(const HPolytope& h, const VertexEnumOptions& opt) {
  VPolytope out;
  out.dim = h.dim;
  const AffineHull hull = affine_hull(h.eq, h.eq_rhs);
  if (!hull.consistent) {
    out.note = "equalities are inconsistent; the polytope is empty";
    return out;
  }
  const int k = static_cast<int>(hull.directions.cols());
  if (k > opt.max_affine_dim) throw std::invalid_argument("vertex_enum: affine dimension above guard");

  // Homogenized cone in (t, s): G t - (h - g p0) s >= 0 and s >= 0.
  const int m = static_cast<int>(h.ineq.rows()) + 1;
  RationalMatrix cons = RationalMatrix::Zero(m, k + 1);
  cons(0, k) = 1;
  for (int i = 0; i < h.ineq.rows(); ++i) {
    cons.row(i + 1).head(k) = h.ineq.row(i) * hull.directions;
    cons(i + 1, k) = h.ineq.row(i).dot(hull.point) - h.ineq_rhs(i);
  }

  std::vector<RationalVector> lineality;
  for (int i = 0; i <= k; ++i) lineality.push_back(RationalVector::Unit(k + 1, i));
  std::vector<RationalVector> rays;
  std::vector<boost::dynamic_bitset<>> zeros;
  auto zero_set = [&](const RationalVector& r, int upto) {
    boost::dynamic_bitset<> z(static_cast<std::size_t>(m));
    for (int c = 0; c <= upto; ++c)
      if (cons.row(c).dot(r).is_zero()) z.set(static_cast<std::size_t>(c));
    return z;
  };

  for (int c = 0; c < m; ++c) {
    const auto row = cons.row(c);
    auto lit = std::find_if(lineality.begin(), lineality.end(),
                            [&](const RationalVector& l) { return !row.dot(l).is_zero(); });
    if (lit != lineality.end()) {
      RationalVector l = *lit;
      lineality.erase(lit);
      if (row.dot(l) < 0) l = -l;
      const Rational al = row.dot(l);
      for (auto& other : lineality) other -= l * (row.dot(other) / al);
      for (auto& r : rays) {
        r -= l * (row.dot(r) / al);
        normalize_ray(r);
      }
      normalize_ray(l);
      rays.push_back(l);
      zeros.clear();
      for (const auto& r : rays) zeros.push_back(zero_set(r, c));
      continue;
    }
    std::vector<Rational> val(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = row.dot(rays[i]);
      if (val[i] > 0) pos.push_back(i);
      if (val[i] < 0) neg.push_back(i);
    }
    if (neg.empty()) {
      for (std::size_t i = 0; i < rays.size(); ++i)
        if (val[i].is_zero()) zeros[i].set(static_cast<std::size_t>(c));
      continue;
    }
    std::vector<RationalVector> next;
    std::vector<boost::dynamic_bitset<>> next_zeros;
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (!(val[i] < 0)) {
        next.push_back(rays[i]);
        auto z = zeros[i];
        if (val[i].is_zero()) z.set(static_cast<std::size_t>(c));
        next_zeros.push_back(z);
      }
    for (std::size_t p : pos)
      for (std::size_t q : neg) {
        const auto common = zeros[p] & zeros[q];
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
          if (r != p && r != q && common.is_subset_of(zeros[r])) adjacent = false;
        if (!adjacent) continue;
        RationalVector ray = rays[q] * val[p] - rays[p] * val[q];
        normalize_ray(ray);
        auto z = common;
        z.set(static_cast<std::size_t>(c));
        next.push_back(std::move(ray));
        next_zeros.push_back(std::move(z));
        if (next.size() > opt.max_rays) {
          out.complete = false;
          out.note = "ray budget exceeded after " + std::to_string(c) + " of " + std::to_string(m) + " constraints";
          return out;
        }
      }
    rays = std::move(next);
    zeros = std::move(next_zeros);
  }

  if (!lineality.empty()) {
    out.complete = false;
    out.note = "polytope is unbounded (nontrivial lineality)";
    return out;
  }
  for (const auto& r : rays) {
    if (r(k).is_zero()) {
      out.complete = false;
      out.note = "polytope is unbounded (ray at infinity)";
      continue;
    }
    const RationalVector t = r.head(k) / r(k);
    out.vertices.push_back(hull.point + hull.directions * t);
  }
  std::sort(out.vertices.begin(), out.vertices.end(), [](const RationalVector& l, const RationalVector& r) {
    for (Eigen::Index i = 0; i < l.size(); ++i)
      if (l(i) != r(i)) return l(i) < r(i);
    return false;
  });
  out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()), out.vertices.end());
  return out;
}

bool irredundant(const VPolytope& v) {
  for (std::size_t k = 0; k < v.vertices.size(); ++k) {
    StandardFormLp<Rational> lp;
    const auto others = static_cast<Eigen::Index>(v.vertices.size() - 1);
    lp.a = RationalMatrix::Zero(v.dim + 1, others);
    lp.b = RationalVector(v.dim + 1);
    lp.b.head(v.dim) = v.vertices[k];
    lp.b(v.dim) = 1;
    Eigen::Index col = 0;
    for (std::size_t j = 0; j < v.vertices.size(); ++j) {
      if (j == k) continue;
      lp.a.col(col).head(v.dim) = v.vertices[j];
      lp.a(v.dim, col) = 1;
      ++col;
    }
    lp.c = RationalVector::Zero(others);
    if (solve_lp(lp).status != LpStatus::Infeasible) return false;
  }
  return true;
}

LpModel::LpModel(const HPolytope& h) : dim_(h.dim) {
  // Unit rows p_j >= 0 are the variable bounds; anything else gets a slack.
  std::vector<bool> bounded(static_cast<std::size_t>(dim_), false);
  std::vector<Eigen::Index> general;
  for (Eigen::Index i = 0; i < h.ineq.rows(); ++i) {
    int nz = 0, at = -1;
    for (Eigen::Index j = 0; j < dim_; ++j)
      if (!h.ineq(i, j).is_zero()) {
        ++nz;
        at = static_cast<int>(j);
      }
    if (nz == 1 && h.ineq(i, at) > 0 && h.ineq_rhs(i).is_zero())
      bounded[static_cast<std::size_t>(at)] = true;
    else
      general.push_back(i);
  }
  if (std::find(bounded.begin(), bounded.end(), false) != bounded.end())
    throw std::invalid_argument("LpModel: every coordinate needs a nonnegativity row");
  slack_ = static_cast<int>(general.size());

  RationalMatrix full = RationalMatrix::Zero(h.eq.rows() + slack_, dim_ + slack_ + 1);
  full.topLeftCorner(h.eq.rows(), dim_) = h.eq;
  full.col(dim_ + slack_).head(h.eq.rows()) = h.eq_rhs;
  for (int s = 0; s < slack_; ++s) {
    const Eigen::Index r = h.eq.rows() + s;
    full.row(r).head(dim_) = h.ineq.row(general[static_cast<std::size_t>(s)]);
    full(r, dim_ + s) = -1;
    full(r, dim_ + slack_) = h.ineq_rhs(general[static_cast<std::size_t>(s)]);
  }
  const RowEchelon<Rational> e = row_reduce<Rational>(full);
  for (int p : e.pivots)
    if (p == dim_ + slack_) consistent_ = false;
  a_ = e.reduced.leftCols(dim_ + slack_);
  b_ = e.reduced.col(dim_ + slack_);
}

LpSolution<Rational> LpModel::maximize(const RationalVector& objective, const std::vector<signed char>* fixing,
                                       const SimplexOptions& opt) const {
  if (objective.size() != dim_) throw std::invalid_argument("lp: objective has the wrong length");
  LpSolution<Rational> out;
  if (!consistent_) return out;
  const int total = dim_ + slack_;
  std::vector<int> free_cols;
  RationalVector rhs = b_;
  Rational constant = 0;
  for (int j = 0; j < total; ++j) {
    const int fx = (fixing && j < dim_) ? (*fixing)[static_cast<std::size_t>(j)] : -1;
    if (fx < 0) {
      free_cols.push_back(j);
    } else if (fx == 1) {
      rhs -= a_.col(j);
      constant += objective(j);
    }
  }
  StandardFormLp<Rational> lp;
  lp.a = RationalMatrix(a_.rows(), static_cast<Eigen::Index>(free_cols.size()));
  lp.c = RationalVector::Zero(static_cast<Eigen::Index>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    lp.a.col(static_cast<Eigen::Index>(k)) = a_.col(free_cols[k]);
    if (free_cols[k] < dim_) lp.c(static_cast<Eigen::Index>(k)) = objective(free_cols[k]);
  }
  lp.b = rhs;
  LpSolution<Rational> sol = solve_lp(lp, opt);
  out.status = sol.status;
  out.pivots = sol.pivots;
  if (!sol.optimal()) return out;
  out.objective = sol.objective + constant;
  out.x = RationalVector::Zero(dim_);
  for (int j = 0; j < dim_; ++j)
    if (fixing && (*fixing)[static_cast<std::size_t>(j)] == 1) out.x(j) = 1;
  for (std::size_t k = 0; k < free_cols.size(); ++k)
    if (free_cols[k] < dim_) out.x(free_cols[k]) = sol.x(static_cast<Eigen::Index>(k));
  for (int b : sol.basis) out.basis.push_back(free_cols[static_cast<std::size_t>(b)]);
  return out;
}

LpVertex lp_vertex(const LpModel& model, const RationalVector& objective) {
  const LpSolution<Rational> sol = model.maximize(objective);
  LpVertex v;
  v.status = sol.status;
  if (sol.optimal()) {
    v.point = sol.x;
    v.value = sol.objective;
  }
  return v;
}

LpVertex lp_vertex(const HPolytope& h, const RationalVector& objective) {
  return lp_vertex(LpModel(h), objective);
}

DetProcess build_md_family(int n, int future_party, const std::vector<int>& constants,
                           const std::vector<int>& flips) {
  if (n < 2 || future_party < 1 || future_party > n)
    throw std::invalid_argument("build_md_family: future party out of range");
  if (static_cast<int>(constants.size()) != n - 1 || static_cast<int>(flips.size()) != n - 1)
    throw std::invalid_argument("build_md_family: need n-1 constants and n-1 flips");
  const int fut = future_party - 1;
  return DetProcess::from_function(n, [&](int a) {
    int x = 0, slot = 0, any = 0;
    for (int i = 0; i < n; ++i) {
      if (i == fut) continue;
      const auto s = static_cast<std::size_t>(slot++);
      if (constants[s]) x |= party_mask(n, i);
      any |= bit_of(a, n, i) ^ flips[s];
    }
    if (any) x |= party_mask(n, fut);
    return x;
  });
}

std::vector<DetProcess> md_family(int n) {
  std::vector<DetProcess> out;
  const int m = 1 << (n - 1);
  for (int fut = 1; fut <= n; ++fut)
    for (int xs = 0; xs < m; ++xs)
      for (int cs = 0; cs < m; ++cs) {
        std::vector<int> constants = bits_of(xs, n - 1), flips = bits_of(cs, n - 1);
        out.push_back(build_md_family(n, fut, constants, flips));
      }
  return out;
}

DerivationReport derive_ns_from_cp(int n) {
  if (n < 2 || n > 3) throw std::invalid_argument("derive_ns_from_cp: n must be 2 or 3");
  DerivationReport rep;
  rep.n = n;
  const int s = string_count(n);
  std::vector<RationalVector> rows;
  for (int x0 = 0; x0 < s; ++x0) rows.push_back(process_row(constant_process(n, x0)));
  const auto family = md_family(n);
  rep.family_size = static_cast<int>(family.size());
  for (const DetProcess& f : family) {
    // Pair with the constant process that agrees on the past parties and
    // hands the future party a 1.
    int fut = 0;
    for (int i = 0; i < n; ++i) {
      bool constant = true;
      for (int a = 1; a < s && constant; ++a) constant = f.coordinate(i, a) == f.coordinate(i, 0);
      if (!constant) fut = i;
    }
    const int x1 = (f(0) & ~party_mask(n, fut)) | party_mask(n, fut);
    rows.push_back(process_row(f) - process_row(constant_process(n, x1)));
  }
  RationalMatrix derived = stack_rows(rows, s * s);
  // Difference rows have right-hand side 0; normalization rows keep 1.
  RationalVector rhs = RationalVector::Zero(derived.rows());
  rhs.head(s).setOnes();
  const RationalMatrix lhs_aug = augmented(derived, rhs);
  const HPolytope ns = ns_hrep(n);
  const RationalMatrix ns_aug = augmented(ns.eq, ns.eq_rhs);
  rep.derived_rank = rank<Rational>(lhs_aug);
  rep.ns_rank = rank<Rational>(ns_aug);

  for (Eigen::Index i = 0; i < ns_aug.rows(); ++i)
    if (!row_space_contains<Rational>(lhs_aug, RationalMatrix(ns_aug.row(i)))) rep.missing.push_back(ns_aug.row(i).transpose());
  for (Eigen::Index i = 0; i < lhs_aug.rows(); ++i)
    if (!row_space_contains<Rational>(ns_aug, RationalMatrix(lhs_aug.row(i)))) rep.extra.push_back(lhs_aug.row(i).transpose());
  rep.spans_match = rep.missing.empty() && rep.extra.empty();

  std::vector<RationalVector> all = rows;
  for (const DetProcess& f : enumerate_det(n)) all.push_back(process_row(f));
  RationalMatrix everything = stack_rows(all, s * s);
  RationalVector everything_rhs = RationalVector::Ones(everything.rows());
  everything_rhs.segment(s, derived.rows() - s).setZero();
  rep.rank_with_all_vertices = rank<Rational>(augmented(everything, everything_rhs));
  rep.remaining_redundant = rep.rank_with_all_vertices == rep.derived_rank;
  return rep;
}

DualityReport check_duality(int n) {
  if (n < 2 || n > 3) throw std::invalid_argument("check_duality: n must be 2 or 3");
  DualityReport rep;
  rep.n = n;
  const int s = string_count(n);

  // (a) behaviors normalized against every deterministic process.
  std::vector<RationalVector> cat_rows;
  for (const DetProcess& f : enumerate_det(n)) cat_rows.push_back(process_row(f));
  const HPolytope from_catalog =
      nonnegative_with(stack_rows(cat_rows, s * s), RationalVector::Ones(static_cast<Eigen::Index>(cat_rows.size())));
  const HPolytope ns = ns_hrep(n);
  const RationalMatrix cat_aug = augmented(from_catalog.eq, from_catalog.eq_rhs);
  const RationalMatrix ns_aug = augmented(ns.eq, ns.eq_rhs);
  rep.cp_catalog_rank = rank<Rational>(cat_aug);
  rep.ns_rank = rank<Rational>(ns_aug);
  // Same consistent equality span and the same nonnegativity rows give the
  // same polytope, hence the same vertex set.
  rep.direction_a = affine_hull(from_catalog.eq, from_catalog.eq_rhs).consistent &&
                    same_row_space<Rational>(cat_aug, ns_aug);
  if (!rep.direction_a) rep.counterexample = "direction (a): equality spans differ";

  // (b) processes normalized against every local deterministic state.
  std::vector<RationalVector> state_rows;
  for (const ProductOp& d : product_op(n)) {
    const Behavior q = local_det_behavior(d);
    state_rows.push_back(flatten(q.p));
  }
  const RationalMatrix states = stack_rows(state_rows, s * s);
  const RationalVector ones = RationalVector::Ones(states.rows());
  const HPolytope cp = cp_hrep(n);
  const RationalMatrix st_aug = augmented(states, ones);
  const RationalMatrix cp_aug = augmented(cp.eq, cp.eq_rhs);
  rep.local_state_rank = rank<Rational>(st_aug);
  rep.cp_rank = rank<Rational>(cp_aug);
  rep.direction_b = same_row_space<Rational>(st_aug, cp_aug);
  if (!rep.direction_b) rep.counterexample += (rep.counterexample.empty() ? "" : "; ") + std::string("direction (b): equality spans differ");

  if (n == 2) {
    const VPolytope va = vertex_enum(from_catalog), vns = vertex_enum(ns);
    const VPolytope vb = vertex_enum(nonnegative_with(states, ones)), vcp = vertex_enum(cp);
    rep.vertices_a = static_cast<int>(va.vertices.size());
    rep.vertices_ns = static_cast<int>(vns.vertices.size());
    rep.vertices_b = static_cast<int>(vb.vertices.size());
    rep.vertices_cp = static_cast<int>(vcp.vertices.size());
    const bool same_a = va.complete && vns.complete && va.vertices == vns.vertices;
    const bool same_b = vb.complete && vcp.complete && vb.vertices == vcp.vertices;
    if (!same_a) {
      rep.direction_a = false;
      rep.counterexample += "; direction (a): vertex sets differ";
    }
    if (!same_b) {
      rep.direction_b = false;
      rep.counterexample += "; direction (b): vertex sets differ";
    }
  }

  // Negative controls for (b).
  const RationalMatrix minus_one = states.bottomRows(states.rows() - 1);
  rep.single_removal_unchanged =
      same_row_space<Rational>(augmented(minus_one, ones.head(minus_one.rows())), cp_aug);

  std::vector<RationalVector> kept;
  std::vector<std::size_t> removed;
  const auto ops = product_op(n);
  for (std::size_t k = 0; k < ops.size(); ++k) {
    const int t1 = ops[k].tags()[0];
    if (t1 == 1 || t1 == 2)
      removed.push_back(k);
    else
      kept.push_back(state_rows[k]);
  }
  const RationalMatrix kept_m = stack_rows(kept, s * s);
  const RationalVector kept_ones = RationalVector::Ones(kept_m.rows());
  rep.control_rank = rank<Rational>(augmented(kept_m, kept_ones));
  const LpModel relaxed(nonnegative_with(kept_m, kept_ones));
  for (std::size_t k : removed) {
    const LpSolution<Rational> hi = relaxed.maximize(state_rows[k]);
    const LpSolution<Rational> lo = relaxed.maximize(-state_rows[k]);
    const LpSolution<Rational>* hit = nullptr;
    if (hi.optimal() && hi.objective != 1) hit = &hi;
    else if (lo.optimal() && -lo.objective != 1) hit = &lo;
    if (hit) {
      rep.control_strictly_larger = true;
      rep.control_witness = unflatten(hit->x, n);
      rep.control_value = state_rows[k].dot(hit->x);
      break;
    }
  }
  if (!rep.control_strictly_larger && !rep.counterexample.empty())
    rep.counterexample += "; negative control found no witness";
  return rep;
}

void write_hrep(std::ostream& out, const HPolytope& h) {
  out << "H-representation dim " << h.dim << " eq " << h.eq.rows() << " ge " << h.ineq.rows() << "\n";
  auto emit = [&](const char* tag, const RationalMatrix& m, const RationalVector& rhs) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      out << tag << ' ' << to_string(rhs(i));
      for (Eigen::Index j = 0; j < m.cols(); ++j) out << ' ' << to_string(m(i, j));
      out << "\n";
    }
  };
  emit("eq", h.eq, h.eq_rhs);
  emit("ge", h.ineq, h.ineq_rhs);
}

namespace {

std::vector<Rational> read_fields(std::istringstream& is, int count) {
  std::vector<Rational> out;
  std::string tok;
  while (is >> tok) out.push_back(parse_rational(tok));
  if (static_cast<int>(out.size()) != count) throw std::invalid_argument("representation row has the wrong length");
  return out;
}

}  // namespace

HPolytope read_hrep(std::istream& in) {
  std::string line, word;
  if (!std::getline(in, line)) throw std::invalid_argument("read_hrep: missing header");
  std::istringstream head(line);
  int dim = -1, neq = -1, nge = -1;
  std::string w1, w2, w3, w4;
  head >> w1 >> w2 >> dim >> w3 >> neq >> w4 >> nge;
  if (w1 != "H-representation" || w2 != "dim" || w3 != "eq" || w4 != "ge" || dim < 0 || neq < 0 || nge < 0)
    throw std::invalid_argument("read_hrep: malformed header");
  HPolytope h;
  h.dim = dim;
  h.eq = RationalMatrix::Zero(neq, dim);
  h.eq_rhs = RationalVector::Zero(neq);
  h.ineq = RationalMatrix::Zero(nge, dim);
  h.ineq_rhs = RationalVector::Zero(nge);
  int ie = 0, ig = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream is(line);
    is >> word;
    const auto v = read_fields(is, dim + 1);
    if (word == "eq" && ie < neq) {
      h.eq_rhs(ie) = v[0];
      for (int j = 0; j < dim; ++j) h.eq(ie, j) = v[static_cast<std::size_t>(j + 1)];
      ++ie;
    } else if (word == "ge" && ig < nge) {
      h.ineq_rhs(ig) = v[0];
      for (int j = 0; j < dim; ++j) h.ineq(ig, j) = v[static_cast<std::size_t>(j + 1)];
      ++ig;
    } else {
      throw std::invalid_argument("read_hrep: unexpected row '" + word + "'");
    }
  }
  if (ie != neq || ig != nge) throw std::invalid_argument("read_hrep: row count disagrees with header");
  return h;
}

void write_vrep(std::ostream& out, const VPolytope& v) {
  out << "V-representation dim " << v.dim << " vertices " << v.vertices.size() << (v.complete ? "" : " partial")
      << "\n";
  for (const auto& p : v.vertices) {
    out << 'v';
    for (Eigen::Index j = 0; j < p.size(); ++j) out << ' ' << to_string(p(j));
    out << "\n";
  }
}

VPolytope read_vrep(std::istream& in) {
  std::string line, w1, w2, w3, flag;
  if (!std::getline(in, line)) throw std::invalid_argument("read_vrep: missing header");
  std::istringstream head(line);
  int dim = -1;
  std::size_t count = 0;
  head >> w1 >> w2 >> dim >> w3 >> count >> flag;
  if (w1 != "V-representation" || w2 != "dim" || w3 != "vertices" || dim < 0)
    throw std::invalid_argument("read_vrep: malformed header");
  VPolytope v;
  v.dim = dim;
  v.complete = flag != "partial";
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream is(line);
    std::string tag;
    is >> tag;
    if (tag != "v") throw std::invalid_argument("read_vrep: unexpected row '" + tag + "'");
    const auto f = read_fields(is, dim);
    RationalVector p(dim);
    for (int j = 0; j < dim; ++j) p(j) = f[static_cast<std::size_t>(j)];
    v.vertices.push_back(p);
  }
  if (v.vertices.size() != count) throw std::invalid_argument("read_vrep: vertex count disagrees with header");
  return v;
}

}  // namespace causalpoly
