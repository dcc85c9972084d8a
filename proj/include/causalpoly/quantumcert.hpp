#pragma once

// Quantum parallel-serial switch with parties S1, S2 (binary), S3 (x3 binary,
// a3 ternary) and the auxiliary M1 (y binary, b ternary); the causal
// inequality on its statistics and LP bounds over the causal sets.
// Floating point throughout.

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <string>
#include <vector>

namespace causalpoly::qc {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

inline constexpr double kNormTol = 1e-10;
inline constexpr double kBoundTol = 1e-6;

/// Column k of s3[x3] is the ket of effect a3 = k; likewise m1[y] for b.
/// Amplitudes are <effect|state>.
struct MeasurementSettings {
  std::array<CMatrix, 2> s3;
  std::array<CMatrix, 2> m1;
};

/// Fourier basis: column k = 3^-1/2 sum_q w^(q (k + theta)) |q>, w = e^(2 pi i/3).
CMatrix fourier_basis(double theta);
/// Optimal qutrit measurements for the tailored I3, rotated by a local
/// unitary so that M1 at y = 0 measures the control basis |0>,|1>,|2>.
MeasurementSettings optimal_settings();
/// Throws std::invalid_argument unless every basis is 3x3 orthonormal.
void validate_settings(const MeasurementSettings& m);

/// How the recorded a_i relates to the measured target value m_i.
enum class OutcomeEncoding {
  Measured,   // a_i = m_i
  XnorInput,  // a_i = m_i xor x_i xor 1
};

/// p(a1 a2 a3 b | x1 x2 x3 y), 16 settings x 36 outcomes.
struct ProbTable {
  static constexpr int kOutcomes = 36;
  static constexpr int kSettings = 16;
  static constexpr int kSize = kOutcomes * kSettings;

  std::array<double, kSize> p{};

  static int outcome(int a1, int a2, int a3, int b) { return ((a1 * 2 + a2) * 3 + a3) * 3 + b; }
  static int setting(int x1, int x2, int x3, int y) { return ((x1 * 2 + x2) * 2 + x3) * 2 + y; }
  static int index(int a1, int a2, int a3, int b, int x1, int x2, int x3, int y) {
    return setting(x1, x2, x3, y) * kOutcomes + outcome(a1, a2, a3, b);
  }
  double at(int a1, int a2, int a3, int b, int x1, int x2, int x3, int y) const {
    return p[static_cast<std::size_t>(index(a1, a2, a3, b, x1, x2, x3, y))];
  }
  double& at(int a1, int a2, int a3, int b, int x1, int x2, int x3, int y) {
    return p[static_cast<std::size_t>(index(a1, a2, a3, b, x1, x2, x3, y))];
  }

  static ProbTable uniform();
};

/// Bipartite p(a3 b | x3 y), index ((x * 2 + y) * 3 + a) * 3 + b.
struct BipartiteTable {
  std::array<double, 36> p{};
  static int index(int x, int y, int a, int b) { return ((x * 2 + y) * 3 + a) * 3 + b; }
  double at(int x, int y, int a, int b) const { return p[static_cast<std::size_t>(index(x, y, a, b))]; }
};

ProbTable born_probs(const MeasurementSettings& m, OutcomeEncoding enc = OutcomeEncoding::XnorInput);
ProbTable born_probs();
/// The slice x1 = x2 = 0 marginalized over a1, a2.
BipartiteTable bipartite_slice(const ProbTable& t);
/// Optimal measurements applied to the maximally entangled qutrit pair.
BipartiteTable maximally_entangled_point();

/// Largest deviation from per-setting normalization.
double normalization_error(const ProbTable& t);

/// Largest deviation from each architecture constraint.
struct ArchitectureCheck {
  double abx3 = 0;       // {a1, a2, b} independent of x3
  double b_x = 0;        // b independent of x1, x2, x3
  double a_y = 0;        // (a1, a2, a3) independent of y
  double bipartite = 0;  // at x1 = x2 = 0, a1 = a2 = const and (a3, b) carry everything
  bool ok(double tol = kNormTol) const { return abx3 <= tol && b_x <= tol && a_y <= tol && bipartite <= tol; }
};
ArchitectureCheck check_architecture(const ProbTable& t);

int guess_game_f(int a1, int a2, int x1, int x2);

struct LgyniTerms {
  double b0 = 0;  // p(b=0, x2 (a2 xor x1) = 0 | y=0)
  double b1 = 0;  // p(b=1, x1 (a1 xor x2) = 0 | y=0)
};
LgyniTerms eval_lgyni_terms(const ProbTable& t);
/// p(b=2, F = 1 | y=0).
double eval_guess_game(const ProbTable& t);

enum class I3Reading {
  Normalized,  // 3 (w1 P - w2 Q) + 2 - 2 sqrt3: local (1+3 sqrt3)/2, quantum 4, ns 2+2 sqrt3
  Printed,     // w1 P + w2 Q with every weight positive
};

/// c[index(x, y, a, b)] and constant so that I3 = c . p + constant.
struct I3Functional {
  std::array<double, 36> c{};
  double constant = 0;
};
I3Functional i3_functional(I3Reading reading);
double eval_i3(const BipartiteTable& b, I3Reading reading = I3Reading::Normalized);
double eval_i3(const ProbTable& t, I3Reading reading = I3Reading::Normalized);

struct I3Bounds {
  double local = 0;      // brute force over 9 x 9 deterministic pairs
  double ns = 0;         // LP over the bipartite no-signaling polytope
  double quantum = 0;    // maximally entangled point
  double algebraic = 0;  // every term at its best outcome
};
I3Bounds i3_bounds(I3Reading reading);
/// 4/sqrt3 + 4 (3 - sqrt3)/6 = 2 + 2/sqrt3: every printed term at 1.
double i3_weight_sum();

double claimed_rhs();  // 7/8 + 1/(2 sqrt3)
double switch_lhs();   // 1 + 1/(3 + sqrt3)

struct CertReport {
  std::array<double, 3> alpha_terms{};
  double alpha = 0;
  double i3 = 0;
  double lhs = 0;
  double rhs_claimed = 0;
  double rhs_lp = 0;  // filled in from causal_bound when available
  double margin = 0;  // lhs - rhs_claimed
  double tolerance = kBoundTol;
  bool violated = false;
  std::vector<std::string> flags;
};
CertReport eval_inequality(const ProbTable& t);

/// Objective vector over a ProbTable and constant so that LHS = c . p + constant.
/// Built from the game definitions, independent of eval_inequality.
struct LhsFunctional {
  std::array<double, ProbTable::kSize> c{};
  double constant = 0;
  double eval(const ProbTable& t) const;
};
LhsFunctional lhs_functional();

enum class ConstraintSet {
  Free,          // normalization and nonnegativity only
  Base,          // plus (a1,a2,a3) indep. y and b indep. (x1,x2,x3)
  OneToTwo,      // base plus a1 b indep. x2 and {a1,a2,b} indep. x3
  TwoToOne,      // base plus a2 b indep. x1 and {a1,a2,b} indep. x3
  NoSignaling,   // both of the above
};
const char* to_string(ConstraintSet s);

struct LpBound {
  ConstraintSet set = ConstraintSet::Base;
  bool optimal = false;
  double value = 0;
  ProbTable optimizer;
  long pivots = 0;
};
LpBound lhs_lp_bound(ConstraintSet set);
/// Best deterministic strategy in the set (OneToTwo, TwoToOne or NoSignaling).
double deterministic_bound(ConstraintSet set);

struct CausalBoundReport {
  std::vector<LpBound> constituents;  // OneToTwo, TwoToOne, NoSignaling
  double bound = 0;                   // max over constituents
  double base_only = 0;
  double free = 0;
  double algebraic = 0;
  double deterministic_one_to_two = 0;
  double deterministic_two_to_one = 0;
  double f_one_way_max = 0;           // best F over deterministic one-way strategies
  double lgyni_b1_one_to_two = 0;     // best second LGYNI game when S1 precedes S2
  bool matches_claim = false;
  bool discrepancy = false;
  std::string discrepancy_report;
};
CausalBoundReport causal_bound();

struct Claim3Report {
  double lp_optimum = 0;  // max over NS of I3/(4 (3+sqrt3)) + p(b=0|y=0)/4
  double bound = 0;       // 1/8 + 1/(2 sqrt3)
  double local_scan = 0;
  double quantum_point = 0;
  bool ok = false;
};
Claim3Report claim3_check();

}  // namespace causalpoly::qc
