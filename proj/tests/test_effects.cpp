#include "causalpoly/effects.hpp"
#include "causalpoly/geometry.hpp"

#include <doctest.h>

#include <random>

using namespace causalpoly;

namespace {

ZMatrix zmatrix(int n, std::initializer_list<std::pair<int, int>> ones) {
  ZMatrix z;
  z.n = n;
  for (auto p : ones) z.ones.insert(p);
  return z;
}

ZMatrix random_zmatrix(int n, std::mt19937_64& rng) {
  const int dim = string_count(n);
  std::uniform_int_distribution<int> size(0, dim - 1), cell(0, dim - 1);
  ZMatrix z;
  z.n = n;
  const int k = size(rng);
  while (static_cast<int>(z.ones.size()) < k) z.ones.emplace(cell(rng), cell(rng));
  return z;
}

void check_against_oracle(const ZMatrix& z) {
  EffectVerdict v;
  REQUIRE_NOTHROW(v = classify(z));
  CHECK((v.kind == EffectKind::Normal) == oracle(z));
  if (v.kind == EffectKind::Extra) {
    REQUIRE(v.witness.has_value());
    CHECK(inner(z.matrix(), *v.witness) >= 2);
  }
}

}  // namespace

TEST_CASE("identical index sets") {
  CHECK(identical_index_set(0b101, 0b100, 3) == std::vector<int>{0, 1});
  CHECK(identical_index_set(std::vector<int>{1, 0}, std::vector<int>{1, 1}) == std::vector<int>{0});
  CHECK(identical_index_set(0b11, 0b11, 2).size() == 2);
}

TEST_CASE("the four cases") {
  CHECK(classify(zmatrix(2, {})).which == EffectCase::Empty);
  CHECK(classify(zmatrix(2, {{1, 2}})).which == EffectCase::Single);
  CHECK(classify(zmatrix(2, {{1, 2}})).kind == EffectKind::Normal);

  // One column, two rows: an operation picks a single output per input.
  const EffectVerdict col = classify(zmatrix(2, {{0, 0}, {1, 0}}));
  CHECK(col.which == EffectCase::Separated);
  CHECK(col.kind == EffectKind::Normal);
  // One row, two columns: the constant operation hits both.
  CHECK(classify(zmatrix(2, {{0, 0}, {0, 1}})).kind == EffectKind::Extra);

  // (00, 00) and (11, 11): the identity hits both.
  const EffectVerdict diag = classify(zmatrix(2, {{0b00, 0b00}, {0b11, 0b11}}));
  CHECK(diag.which == EffectCase::Overlapping);
  CHECK(diag.kind == EffectKind::Extra);
  REQUIRE(diag.witness);
  CHECK(inner(zmatrix(2, {{0b00, 0b00}, {0b11, 0b11}}).matrix(), *diag.witness) == 2);

  CHECK_THROWS_AS(classify(zmatrix(1, {{0, 0}, {1, 1}})), std::invalid_argument);
  CHECK_THROWS_AS(ZMatrix::from_matrix(RationalMatrix::Constant(2, 2, Rational(1, 2))), std::invalid_argument);
}

TEST_CASE("classifier agrees with the oracle on every small bipartite effect") {
  const int cells = 16;
  long checked = 0;
  for (int i = -1; i < cells; ++i)
    for (int j = i + 1; j <= cells; ++j)
      for (int k = j + 1; k <= cells + 1; ++k) {
        ZMatrix z;
        z.n = 2;
        for (int c : {i, j, k})
          if (c >= 0 && c < cells) z.ones.emplace(c / 4, c % 4);
        check_against_oracle(z);
        ++checked;
      }
  CHECK(checked > 500);
}

TEST_CASE("classifier agrees with the oracle on random larger effects") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 3000; ++t) check_against_oracle(random_zmatrix(3, rng));
  for (int t = 0; t < 1000; ++t) check_against_oracle(random_zmatrix(4, rng));
}

TEST_CASE("serialize and matrix agree") {
  const ZMatrix z = zmatrix(2, {{1, 3}, {2, 0}});
  const RationalMatrix m = z.matrix();
  CHECK(m.sum() == 2);
  CHECK(m(1, 3) == 1);
  CHECK(ZMatrix::from_matrix(m).ones == z.ones);
  CHECK_FALSE(z.serialize().empty());
}

TEST_CASE("fractional classical vertices are fine-tuned") {
  const LpModel model(cp_hrep(3));
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> coef(-20, 20);
  int probed = 0;
  for (int t = 0; t < 1000 && probed < 3; ++t) {
    RationalVector c(model.dim());
    for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = coef(rng);
    const LpVertex v = lp_vertex(model, c);
    REQUIRE(v.status == LpStatus::Optimal);
    const RationalMatrix m = unflatten(v.point, 3);
    bool fractional = false;
    for (Eigen::Index i = 0; i < m.size(); ++i) fractional |= denominator(m(i)) != 1;
    if (!fractional) {
      CHECK_THROWS_AS(probe_fractional_vertex(m), std::invalid_argument);
      continue;
    }
    const ProbeResult p = probe_fractional_vertex(m);
    REQUIRE(p.found);
    CHECK(classify(p.witness).kind == EffectKind::Extra);
    CHECK(inner(p.selection, p.operation) >= 2);
    for (auto [a, x] : p.witness.ones) CHECK(m(a, x) > 0);
    ++probed;
  }
  CHECK(probed == 3);
}
