#include "causalpoly/quantumcert.hpp"
#include "causalpoly/switchlab.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace causalpoly;
using namespace causalpoly::qc;

namespace {

const double s3 = std::sqrt(3.0);

ProbTable random_table(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0, 1);
  ProbTable t;
  for (int s = 0; s < ProbTable::kSettings; ++s) {
    double sum = 0;
    for (int o = 0; o < ProbTable::kOutcomes; ++o) sum += t.p[static_cast<std::size_t>(s * 36 + o)] = u(rng);
    for (int o = 0; o < ProbTable::kOutcomes; ++o) t.p[static_cast<std::size_t>(s * 36 + o)] /= sum;
  }
  return t;
}

}  // namespace

TEST_CASE("measurement settings") {
  const MeasurementSettings m = optimal_settings();
  CHECK_NOTHROW(validate_settings(m));
  CHECK((m.m1[0] - CMatrix::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-12);
  MeasurementSettings bad = m;
  bad.s3[1](0, 0) *= 2.0;
  CHECK_THROWS_AS(validate_settings(bad), std::invalid_argument);
  CHECK_THROWS_AS(born_probs(bad), std::invalid_argument);
}

TEST_CASE("born rule table is normalized and respects the architecture") {
  for (OutcomeEncoding enc : {OutcomeEncoding::Measured, OutcomeEncoding::XnorInput}) {
    const ProbTable t = born_probs(optimal_settings(), enc);
    CHECK(normalization_error(t) < 1e-10);
    const ArchitectureCheck a = check_architecture(t);
    CHECK(a.abx3 < 1e-10);
    CHECK(a.b_x < 1e-10);
    CHECK(a.a_y < 1e-10);
    CHECK(a.bipartite < 1e-10);
  }
}

TEST_CASE("conditioned on x1 = x2 = 0 the table is the entangled pair") {
  const BipartiteTable slice = bipartite_slice(born_probs());
  const BipartiteTable me = maximally_entangled_point();
  for (std::size_t i = 0; i < 36; ++i) CHECK(slice.p[i] == doctest::Approx(me.p[i]).epsilon(1e-12));
}

TEST_CASE("postselected b = 0 reproduces the forward channel") {
  // With y = 0 and b = 0 the second party reads the first party's output,
  // just as x2 = a1 in the classical switch when both controls output 0.
  const ProbTable t = born_probs(optimal_settings(), OutcomeEncoding::Measured);
  for (int x1 = 0; x1 < 2; ++x1)
    for (int x2 = 0; x2 < 2; ++x2)
      for (int x3 = 0; x3 < 2; ++x3) {
        double on = 0, total = 0;
        for (int a1 = 0; a1 < 2; ++a1)
          for (int a2 = 0; a2 < 2; ++a2)
            for (int a3 = 0; a3 < 3; ++a3) {
              const double p = t.at(a1, a2, a3, 0, x1, x2, x3, 0);
              total += p;
              if (a2 == x1) on += p;
            }
        CHECK(total == doctest::Approx(1.0 / 3));
        CHECK(on == doctest::Approx(total));
      }
  const DetProcess f = parser_process();
  for (int a1 = 0; a1 < 2; ++a1)
    for (int a2 = 0; a2 < 2; ++a2) CHECK(f.coordinate(1, (a1 << 3) | (a2 << 2)) == a1);
}

TEST_CASE("games on simple strategies") {
  // a_i = not x_i wins F on every input pair.
  for (int x1 = 0; x1 < 2; ++x1)
    for (int x2 = 0; x2 < 2; ++x2) CHECK(guess_game_f(!x1, !x2, x1, x2) == 1);
  CHECK(guess_game_f(0, 0, 0, 1) == 0);

  const ProbTable u = ProbTable::uniform();
  const LgyniTerms l = eval_lgyni_terms(u);
  CHECK(l.b0 == doctest::Approx(1.0 / 4));  // p(b) = 1/3 times win fraction 3/4
  CHECK(l.b1 == doctest::Approx(1.0 / 4));
  CHECK(eval_guess_game(u) == doctest::Approx(1.0 / 8));  // 1/3 times 3/8
  const CertReport r = eval_inequality(u);
  CHECK(r.lhs < claimed_rhs());
  CHECK_FALSE(r.violated);
}

TEST_CASE("tailored I3 values") {
  const I3Bounds n = i3_bounds(I3Reading::Normalized);
  CHECK(n.local == doctest::Approx((1 + 3 * s3) / 2).epsilon(1e-9));
  CHECK(n.quantum == doctest::Approx(4).epsilon(1e-9));
  CHECK(n.ns == doctest::Approx(2 + 2 * s3).epsilon(1e-9));
  CHECK(n.algebraic >= n.ns - 1e-9);

  const I3Bounds p = i3_bounds(I3Reading::Printed);
  CHECK(i3_weight_sum() == doctest::Approx(2 + 2 / s3));
  CHECK(i3_weight_sum() < 4);
  CHECK(p.algebraic <= i3_weight_sum());
  CHECK(p.local <= p.ns + 1e-9);
}

TEST_CASE("switch statistics violate the claimed bound") {
  const CertReport r = eval_inequality(born_probs());
  CHECK(r.alpha == doctest::Approx(1).epsilon(1e-12));
  for (double a : r.alpha_terms) CHECK(a == doctest::Approx(1.0 / 3));
  CHECK(r.i3 == doctest::Approx(4).epsilon(1e-10));
  CHECK(std::abs(r.lhs - (1 + 1 / (3 + s3))) < 1e-7);
  CHECK(r.rhs_claimed == doctest::Approx(7.0 / 8 + 1 / (2 * s3)));
  CHECK(std::abs(r.margin - 0.0476497308) < 1e-7);
  CHECK(r.violated);
  CHECK(switch_lhs() == doctest::Approx(r.lhs));

  const CertReport measured = eval_inequality(born_probs(optimal_settings(), OutcomeEncoding::Measured));
  CHECK(measured.alpha == doctest::Approx(5.0 / 6));
}

TEST_CASE("lhs functional matches direct evaluation") {
  std::mt19937_64 rng(8);
  const LhsFunctional f = lhs_functional();
  for (int t = 0; t < 50; ++t) {
    const ProbTable p = random_table(rng);
    CHECK(f.eval(p) == doctest::Approx(eval_inequality(p).lhs).epsilon(1e-12));
  }
  CHECK(f.eval(born_probs()) == doctest::Approx(switch_lhs()).epsilon(1e-12));
}

TEST_CASE("claim on the bipartite term") {
  const Claim3Report c = claim3_check();
  CHECK(c.ok);
  CHECK(c.lp_optimum <= 1.0 / 8 + 1 / (2 * s3) + 1e-6);
  CHECK(c.local_scan <= c.lp_optimum + 1e-9);
  CHECK(c.quantum_point < c.bound);
}

TEST_CASE("causal LP bounds") {
  const CausalBoundReport r = causal_bound();
  REQUIRE(r.constituents.size() == 3);
  for (const auto& b : r.constituents) {
    CHECK(b.optimal);
    CHECK(normalization_error(b.optimizer) < 1e-9);
    CHECK(lhs_functional().eval(b.optimizer) == doctest::Approx(b.value).epsilon(1e-9));
  }
  // Regression values of the three constituent optima.
  CHECK(r.constituents[0].value == doctest::Approx(1.2429219591).epsilon(1e-9));
  CHECK(r.constituents[1].value == doctest::Approx(1.2429219591).epsilon(1e-9));
  CHECK(r.constituents[2].value == doctest::Approx(7.0 / 8 + 1 / (2 * s3)).epsilon(1e-9));
  // Monotone in the constraint set.
  CHECK(r.free >= r.base_only - 1e-9);
  CHECK(r.base_only >= r.bound - 1e-9);
  CHECK(r.free == doctest::Approx(r.algebraic).epsilon(1e-9));
  CHECK(r.deterministic_one_to_two <= r.constituents[0].value + 1e-9);
  CHECK(r.deterministic_two_to_one <= r.constituents[1].value + 1e-9);
  CHECK(deterministic_bound(ConstraintSet::NoSignaling) <= r.constituents[2].value + 1e-9);
  CHECK(r.f_one_way_max == doctest::Approx(1));
  CHECK(r.lgyni_b1_one_to_two == doctest::Approx(0.75));
  CHECK(r.discrepancy);
  CHECK_FALSE(r.discrepancy_report.empty());
  CHECK_THROWS_AS(deterministic_bound(ConstraintSet::Base), std::invalid_argument);
}
