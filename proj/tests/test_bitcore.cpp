#include "causalpoly/bitcore.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace causalpoly;

TEST_CASE("index_of and bits_of round trip with party 1 most significant") {
  CHECK(index_of(std::vector<int>{0, 0, 0}) == 0);
  CHECK(index_of(std::vector<int>{1, 0, 0}) == 4);
  CHECK(bits_of(4, 3) == std::vector<int>{1, 0, 0});
  for (int n = 1; n <= 5; ++n)
    for (int v = 0; v < string_count(n); ++v) CHECK(index_of(bits_of(v, n)) == v);
  CHECK_THROWS_AS(bits_of(8, 3), std::out_of_range);
  CHECK_THROWS_AS(bits_of(-1, 3), std::out_of_range);
  CHECK_THROWS_AS(index_of(std::vector<int>{0, 2}), std::invalid_argument);
}

TEST_CASE("local operations are left stochastic") {
  for (int t = 0; t < 4; ++t) {
    LocalOp d(t);
    for (int x = 0; x < 2; ++x) CHECK(d.entry(0, x) + d.entry(1, x) == 1);
  }
  CHECK(LocalOp(0).apply(1) == 0);
  CHECK(LocalOp(1).apply(1) == 1);
  CHECK(LocalOp(2).apply(1) == 0);
  CHECK(LocalOp(3).apply(0) == 1);
  CHECK_THROWS_AS(LocalOp(4), std::invalid_argument);
}

TEST_CASE("product operation maps") {
  CHECK(product_op({1, 1}).apply(0b01) == 0b01);
  for (int x = 0; x < 4; ++x) CHECK(product_op({0, 3}).apply(x) == 0b01);
  CHECK(product_op({2, 2}).apply(0b01) == 0b10);
  CHECK_THROWS_AS(product_op({1, 5}), std::invalid_argument);

  for (int n = 1; n <= 4; ++n) {
    const auto ops = product_op(n);
    REQUIRE(ops.size() == static_cast<std::size_t>(1 << (2 * n)));
    for (std::size_t k = 0; k < ops.size(); ++k) {
      CHECK(ops[k].ordinal() == static_cast<int>(k));
      CHECK(ProductOp::from_ordinal(static_cast<int>(k), n).tags() == ops[k].tags());
      // Column determinism: each x has exactly one a.
      const RationalMatrix m = ops[k].matrix();
      for (int x = 0; x < string_count(n); ++x) CHECK(m.col(x).sum() == 1);
      CHECK(m.sum() == string_count(n));
      for (int x = 0; x < string_count(n); ++x)
        for (int i = 0; i < n; ++i)
          CHECK(bit_of(ops[k].apply(x), n, i) == LocalOp(ops[k].tags()[static_cast<std::size_t>(i)]).apply(bit_of(x, n, i)));
    }
  }
}

TEST_CASE("product operation table agrees with apply") {
  const int n = 3;
  const auto table = product_op_table(n);
  const auto ops = product_op(n);
  for (std::size_t k = 0; k < ops.size(); ++k)
    for (int x = 0; x < 8; ++x) CHECK(table[k * 8 + static_cast<std::size_t>(x)] == ops[k].apply(x));
}

TEST_CASE("local deterministic behaviors are distinct and no-signaling") {
  CHECK(local_det_behavior(product_op({1, 1})).p == RationalMatrix::Identity(4, 4));
  const Behavior zero = local_det_behavior(product_op({0, 0}));
  for (int x = 0; x < 4; ++x) CHECK(zero.p(0, x) == 1);

  for (int n = 1; n <= 3; ++n) {
    std::set<std::vector<int>> distinct;
    for (const ProductOp& d : product_op(n)) {
      const Behavior b = local_det_behavior(d);
      CHECK(b.normalized());
      CHECK(b.nonnegative());
      CHECK(b.satisfies_no_signaling());
      std::vector<int> key;
      for (int x = 0; x < string_count(n); ++x)
        for (int a = 0; a < string_count(n); ++a)
          if (b.p(a, x) == 1) key.push_back(a);
      distinct.insert(key);
    }
    CHECK(distinct.size() == static_cast<std::size_t>(1 << (2 * n)));
  }
}

TEST_CASE("a signaling behavior is detected") {
  Behavior b{binary_scenario(2), RationalMatrix::Zero(4, 4), false};
  // Party 2 outputs party 1's input.
  for (int x = 0; x < 4; ++x) b.p(bit_of(x, 2, 0), x) = 1;
  CHECK(b.normalized());
  CHECK_FALSE(b.satisfies_no_signaling());
}

TEST_CASE("inner product") {
  RationalMatrix z = RationalMatrix::Zero(4, 4);
  z(0, 0) = 1;
  z(0, 1) = 1;
  CHECK(inner(z, product_op({0, 0})) == 2);
  CHECK(inner(RationalMatrix::Zero(4, 4), product_op({1, 2})) == 0);
  CHECK_THROWS_AS(inner(z, RationalMatrix::Zero(8, 8)), std::invalid_argument);
  CHECK_THROWS_AS(inner(z, product_op({1, 1, 1})), std::invalid_argument);
}

TEST_CASE("inner is bilinear and symmetric on random vectors") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  auto random_matrix = [&] {
    RationalMatrix m(4, 4);
    for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = Rational(num(rng)) / den(rng);
    return m;
  };
  for (int trial = 0; trial < 200; ++trial) {
    const RationalMatrix u = random_matrix(), v = random_matrix(), w = random_matrix();
    const Rational s = Rational(num(rng)) / den(rng);
    CHECK(inner(u, v) == inner(v, u));
    const RationalMatrix combo = u * s + w;
    CHECK(inner(combo, v) == s * inner(u, v) + inner(w, v));
    const ProductOp d = ProductOp::from_ordinal(trial % 16, 2);
    CHECK(inner(u, d) == inner(u, d.matrix()));
  }
}

TEST_CASE("flatten round trip") {
  RationalMatrix m(4, 4);
  for (int i = 0; i < 16; ++i) m(i / 4, i % 4) = i;
  const RationalVector v = flatten(m);
  CHECK(v(flat_index(2, 1, 2)) == 6);
  CHECK(unflatten(v, 2) == m);
}
