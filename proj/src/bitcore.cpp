#include "causalpoly/bitcore.hpp"

#include <string>

namespace causalpoly {

Scenario binary_scenario(int n_parties) {
  if (n_parties < 1) throw std::invalid_argument("scenario needs at least one party");
  return Scenario{n_parties, 2, 2};
}

int index_of(std::span<const int> bits) {
  int value = 0;
  for (int b : bits) {
    if (b != 0 && b != 1) throw std::invalid_argument("index_of: bits must be 0 or 1");
    value = (value << 1) | b;
  }
  return value;
}

std::vector<int> bits_of(int index, int n) {
  if (n < 1 || n > 30 || index < 0 || index >= string_count(n))
    throw std::out_of_range("bits_of: index " + std::to_string(index) + " out of range for n=" +
                            std::to_string(n));
  std::vector<int> bits(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) bits[static_cast<std::size_t>(i)] = bit_of(index, n, i);
  return bits;
}

LocalOp::LocalOp(int tag) : tag_(tag) {
  if (tag < 0 || tag > 3) throw std::invalid_argument("local operation tag must be in 0..3");
}

int LocalOp::apply(int x) const {
  switch (tag_) {
    case 0: return 0;
    case 1: return x;
    case 2: return 1 - x;
    default: return 1;
  }
}

ProductOp::ProductOp(std::vector<int> tags) : tags_(std::move(tags)) {
  const int n = parties();
  if (n < 1) throw std::invalid_argument("product operation needs at least one party");
  std::vector<LocalOp> ops;
  ops.reserve(tags_.size());
  for (int t : tags_) ops.emplace_back(t);
  map_.resize(static_cast<std::size_t>(string_count(n)));
  for (int x = 0; x < string_count(n); ++x) {
    int a = 0;
    for (int i = 0; i < n; ++i) a = (a << 1) | ops[static_cast<std::size_t>(i)].apply(bit_of(x, n, i));
    map_[static_cast<std::size_t>(x)] = a;
  }
}

int ProductOp::ordinal() const {
  int k = 0;
  for (int t : tags_) k = k * 4 + t;
  return k;
}

ProductOp ProductOp::from_ordinal(int ordinal, int n) {
  std::vector<int> tags(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    tags[static_cast<std::size_t>(i)] = ordinal % 4;
    ordinal /= 4;
  }
  return ProductOp(std::move(tags));
}

std::vector<ProductOp> product_op(int n) {
  std::vector<ProductOp> ops;
  const int count = 1 << (2 * n);
  ops.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) ops.push_back(ProductOp::from_ordinal(k, n));
  return ops;
}

ProductOp product_op(std::vector<int> tags) { return ProductOp(std::move(tags)); }

std::vector<std::uint8_t> product_op_table(int n) {
  const int count = 1 << (2 * n);
  const int dim = string_count(n);
  std::vector<std::uint8_t> table(static_cast<std::size_t>(count * dim));
  for (int k = 0; k < count; ++k) {
    const ProductOp op = ProductOp::from_ordinal(k, n);
    for (int x = 0; x < dim; ++x) table[static_cast<std::size_t>(k * dim + x)] = static_cast<std::uint8_t>(op.apply(x));
  }
  return table;
}

bool Behavior::normalized() const {
  for (Eigen::Index x = 0; x < p.cols(); ++x)
    if (p.col(x).sum() != 1) return false;
  return true;
}

bool Behavior::nonnegative() const {
  for (Eigen::Index i = 0; i < p.size(); ++i)
    if (p.data()[i] < 0) return false;
  return true;
}

bool Behavior::satisfies_no_signaling() const {
  const int n = scenario.n_parties;
  const int dim = string_count(n);
  for (int party = 0; party < n; ++party) {
    const int m = party_mask(n, party);
    for (int x = 0; x < dim; ++x) {
      if (x & m) continue;
      for (int a = 0; a < dim; ++a) {
        if (a & m) continue;
        const Rational lhs = p(a, x) + p(a | m, x);
        const Rational rhs = p(a, x | m) + p(a | m, x | m);
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

Behavior local_det_behavior(const ProductOp& op) {
  Behavior b;
  b.scenario = binary_scenario(op.parties());
  b.p = op.matrix<Rational>();
  b.no_signaling = true;
  return b;
}

}  // namespace causalpoly
