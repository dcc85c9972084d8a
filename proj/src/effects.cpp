#include "causalpoly/effects.hpp"

#include "causalpoly/linalg.hpp"

#include <sstream>

namespace causalpoly {

const char* to_string(EffectKind k) { return k == EffectKind::Normal ? "normal" : "extra"; }

const char* to_string(EffectCase c) {
  switch (c) {
    case EffectCase::Empty: return "1.1";
    case EffectCase::Single: return "1.2";
    case EffectCase::Separated: return "2";
    default: return "3";
  }
}

ZMatrix ZMatrix::from_matrix(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("effect matrix must be square");
  ZMatrix z;
  z.n = 0;
  while (string_count(z.n) < m.rows()) ++z.n;
  if (z.n < 1 || string_count(z.n) != m.rows()) throw std::invalid_argument("effect matrix side must be 2^n");
  for (Eigen::Index a = 0; a < m.rows(); ++a)
    for (Eigen::Index x = 0; x < m.cols(); ++x) {
      if (m(a, x) == 1)
        z.ones.emplace(static_cast<int>(a), static_cast<int>(x));
      else if (m(a, x) != 0)
        throw std::invalid_argument("effect matrix entries must be 0 or 1");
    }
  return z;
}

RationalMatrix ZMatrix::matrix() const {
  RationalMatrix m = RationalMatrix::Zero(string_count(n), string_count(n));
  for (auto [a, x] : ones) m(a, x) = 1;
  return m;
}

std::string ZMatrix::serialize() const {
  std::ostringstream os;
  os << "n=" << n << " ones=";
  for (auto [a, x] : ones) os << '(' << a << '|' << x << ')';
  return os.str();
}

std::vector<int> identical_index_set(int u, int v, int n) {
  std::vector<int> out;
  for (int q = 0; q < n; ++q)
    if (bit_of(u, n, q) == bit_of(v, n, q)) out.push_back(q);
  return out;
}

std::vector<int> identical_index_set(const std::vector<int>& u, const std::vector<int>& v) {
  if (u.size() != v.size()) throw std::invalid_argument("identical_index_set: length mismatch");
  std::vector<int> out;
  for (std::size_t q = 0; q < u.size(); ++q)
    if (u[q] == v[q]) out.push_back(static_cast<int>(q));
  return out;
}

bool separated(int n, std::pair<int, int> p, std::pair<int, int> q) {
  for (int i : identical_index_set(p.second, q.second, n))
    if (bit_of(p.first, n, i) != bit_of(q.first, n, i)) return true;
  return false;
}

namespace {

int hits(const ZMatrix& z, const ProductOp& d) {
  int c = 0;
  for (auto [a, x] : z.ones) c += d.apply(x) == a;
  return c;
}

std::optional<ProductOp> first_witness(const ZMatrix& z) {
  for (int k = 0; k < (1 << (2 * z.n)); ++k) {
    ProductOp d = ProductOp::from_ordinal(k, z.n);
    if (hits(z, d) >= 2) return d;
  }
  return std::nullopt;
}

}  // namespace

bool oracle(const ZMatrix& z) { return !first_witness(z).has_value(); }

EffectVerdict classify(const ZMatrix& z) {
  if (z.n < 1 || z.n > 8) throw std::invalid_argument("classify: unsupported party count");
  if (static_cast<int>(z.ones.size()) >= string_count(z.n))
    throw std::invalid_argument("classify: needs fewer than 2^n ones");
  EffectVerdict v;
  if (z.ones.empty()) return v;
  if (z.ones.size() == 1) {
    v.which = EffectCase::Single;
    return v;
  }
  bool overlap = false;
  for (auto p = z.ones.begin(); p != z.ones.end() && !overlap; ++p)
    for (auto q = std::next(p); q != z.ones.end(); ++q)
      if (!separated(z.n, *p, *q)) {
        overlap = true;
        v.pair = {*p, *q};
        break;
      }
  v.witness = first_witness(z);
  if (overlap != v.witness.has_value())
    throw std::logic_error("classify: pairwise rule and operation scan disagree on " + z.serialize());
  v.kind = overlap ? EffectKind::Extra : EffectKind::Normal;
  v.which = overlap ? EffectCase::Overlapping : EffectCase::Separated;
  return v;
}

bool is_cp_vertex(const RationalMatrix& m) {
  const ZMatrix support = [&] {
    ZMatrix z;
    z.n = 0;
    while (string_count(z.n) < m.rows()) ++z.n;
    for (Eigen::Index a = 0; a < m.rows(); ++a)
      for (Eigen::Index x = 0; x < m.cols(); ++x)
        if (m(a, x) != 0) z.ones.emplace(static_cast<int>(a), static_cast<int>(x));
    return z;
  }();
  const int n = support.n;
  const int ops = 1 << (2 * n);
  RationalMatrix cols(ops, static_cast<Eigen::Index>(support.ones.size()));
  Eigen::Index c = 0;
  for (auto [a, x] : support.ones) {
    for (int k = 0; k < ops; ++k) cols(k, c) = ProductOp::from_ordinal(k, n).apply(x) == a ? 1 : 0;
    ++c;
  }
  return rank<Rational>(cols) == static_cast<int>(support.ones.size());
}

ProbeResult probe_fractional_vertex(const RationalMatrix& m) {
  if (!validate_vector(m)) throw std::invalid_argument("probe: input is not a valid process vector");
  int n = 0;
  while (string_count(n) < m.rows()) ++n;
  bool fractional = false;
  int support = 0;
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    if (m.data()[i] != 0) ++support;
    if (m.data()[i] != 0 && m.data()[i] != 1) fractional = true;
  }
  if (!fractional) throw std::invalid_argument("probe: input is deterministic");
  if (support > 64) throw std::invalid_argument("probe: support of " + std::to_string(support) + " entries exceeds the guard of 64");
  if (!is_cp_vertex(m)) throw std::invalid_argument("probe: input is not a vertex");

  const int dim = string_count(n);
  ProbeResult res{ZMatrix{n, {}}, RationalMatrix::Zero(dim, dim), ProductOp::from_ordinal(0, n), false};
  for (int a = 0; a < dim && !res.found; ++a)
    for (int x = 0; x < dim && !res.found; ++x) {
      if (m(a, x) == 0) continue;
      for (int b = a + 1; b < dim && !res.found; ++b)
        for (int y = 0; y < dim && !res.found; ++y) {
          if (m(b, y) == 0 || separated(n, {a, x}, {b, y})) continue;
          res.witness.ones = {{a, x}, {b, y}};
          res.found = true;
        }
    }
  if (!res.found) return res;

  const auto first = *res.witness.ones.begin();
  const auto second = *std::next(res.witness.ones.begin());
  for (int a = 0; a < dim; ++a) {
    int pick = -1;
    if (a == first.first) pick = first.second;
    else if (a == second.first) pick = second.second;
    else
      for (int x = 0; x < dim && pick < 0; ++x)
        if (m(a, x) != 0) pick = x;
    res.selection(a, pick) = 1;
  }
  const EffectVerdict v = classify(res.witness);
  if (v.kind != EffectKind::Extra) throw std::logic_error("probe: witness pair did not classify as extra");
  res.operation = *v.witness;
  return res;
}

}  // namespace causalpoly
