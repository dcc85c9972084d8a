#pragma once

// Exact polytopes over the (a, x) coordinates: p(a|x) sits at flat_index(n, a, x).

#include "causalpoly/process.hpp"
#include "causalpoly/simplex.hpp"

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace causalpoly {

/// Equalities eq * p = eq_rhs and inequalities ineq * p >= ineq_rhs.
struct HPolytope {
  int dim = 0;
  RationalMatrix eq;
  RationalVector eq_rhs;
  RationalMatrix ineq;
  RationalVector ineq_rhs;

  bool contains(const RationalVector& p) const;
};

struct VPolytope {
  int dim = 0;
  std::vector<RationalVector> vertices;
  bool complete = true;  // false when the enumeration budget ran out
  std::string note;
};

/// Normalization and marginal equalities plus nonnegativity.
HPolytope ns_hrep(int n);
/// inner(M, D) = 1 for every product operation D, plus nonnegativity.
HPolytope cp_hrep(int n);
/// Nonnegativity of every coordinate, with the given equalities.
HPolytope nonnegative_with(const RationalMatrix& eq, const RationalVector& rhs);

struct AffineHull {
  bool consistent = true;
  int rank = 0;
  RationalMatrix basis;      // reduced row-echelon rows of [eq | rhs]
  RationalVector point;      // a particular solution
  RationalMatrix directions; // null space of eq, one column per direction
};

AffineHull affine_hull(const RationalMatrix& eq, const RationalVector& rhs);

struct VertexEnumOptions {
  std::size_t max_rays = 200000;
  int max_affine_dim = 64;
};

/// Double description over the affine hull, exact rationals.
VPolytope vertex_enum(const HPolytope& h, const VertexEnumOptions& opt = {});

/// True iff no listed point is a convex combination of the others (exact LP).
bool irredundant(const VPolytope& v);

/// Standard-form view of an H-polytope that needs p >= 0 coordinatewise.
/// Equalities are reduced once, so repeated solves stay cheap.
class LpModel {
 public:
  explicit LpModel(const HPolytope& h);

  int dim() const { return dim_; }
  bool consistent() const { return consistent_; }
  const RationalMatrix& reduced_eq() const { return a_; }
  const RationalVector& reduced_rhs() const { return b_; }

  /// Maximizes objective . p. `fixing`, when given, pins coordinate j to 0 or 1
  /// (entry -1 leaves it free).
  LpSolution<Rational> maximize(const RationalVector& objective,
                                const std::vector<signed char>* fixing = nullptr,
                                const SimplexOptions& opt = {}) const;

 private:
  int dim_ = 0;
  int slack_ = 0;
  bool consistent_ = true;
  RationalMatrix a_;  // columns: coordinates then slacks
  RationalVector b_;
};

struct LpVertex {
  LpStatus status = LpStatus::Infeasible;
  RationalVector point;
  Rational value = 0;
};

LpVertex lp_vertex(const HPolytope& h, const RationalVector& objective);
LpVertex lp_vertex(const LpModel& model, const RationalVector& objective);

/// Parties other than `future_party` (1-based) receive the constants X in
/// party order; the future party receives OR_j (a_j xor c_j).
DetProcess build_md_family(int n, int future_party, const std::vector<int>& constants,
                           const std::vector<int>& flips);
std::vector<DetProcess> md_family(int n);

struct DerivationReport {
  int n = 0;
  int family_size = 0;
  int derived_rank = 0;       // rank of normalization rows plus difference rows
  int ns_rank = 0;            // rank of the no-signaling equalities
  bool spans_match = false;
  int rank_with_all_vertices = 0;
  bool remaining_redundant = false;
  std::vector<RationalVector> missing;  // ns directions outside the derived span
  std::vector<RationalVector> extra;    // derived directions outside the ns span
  bool ok() const { return spans_match && remaining_redundant && derived_rank == ns_rank; }
};

DerivationReport derive_ns_from_cp(int n);

struct DualityReport {
  int n = 0;
  bool direction_a = false;
  bool direction_b = false;
  int ns_rank = 0;
  int cp_catalog_rank = 0;   // rank of {inner(M, P) = 1 : M deterministic}
  int cp_rank = 0;
  int local_state_rank = 0;  // rank of {inner(M, Q) = 1 : Q local deterministic}
  int vertices_a = -1;       // explicit vertex counts, when enumerated
  int vertices_ns = -1;
  int vertices_b = -1;
  int vertices_cp = -1;
  std::string counterexample;

  // Removing a single local state.
  bool single_removal_unchanged = false;
  // Removing every local state in which party 1 copies or flips its input.
  int control_rank = 0;
  bool control_strictly_larger = false;
  RationalMatrix control_witness;  // in the enlarged set, not in cp_hrep
  Rational control_value = 0;      // inner(witness, removed state) != 1
};

DualityReport check_duality(int n);

void write_hrep(std::ostream& out, const HPolytope& h);
HPolytope read_hrep(std::istream& in);
void write_vrep(std::ostream& out, const VPolytope& v);
VPolytope read_vrep(std::istream& in);

}  // namespace causalpoly
