#include "causalpoly/process.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace causalpoly {

DetProcess::DetProcess(int parties, std::vector<int> table) : n(parties), x_of_a(std::move(table)) {
  if (n < 1 || n > 8) throw std::invalid_argument("process: unsupported party count");
  if (static_cast<int>(x_of_a.size()) != string_count(n))
    throw std::invalid_argument("process: table must have 2^n entries");
  for (int x : x_of_a)
    if (x < 0 || x >= string_count(n)) throw std::invalid_argument("process: input index out of range");
}

DetProcess constant_process(int n, int x0) {
  return DetProcess(n, std::vector<int>(static_cast<std::size_t>(string_count(n)), x0));
}

RationalMatrix to_matrix(const DetProcess& f) {
  const int dim = string_count(f.n);
  RationalMatrix m = RationalMatrix::Zero(dim, dim);
  for (int a = 0; a < dim; ++a) m(a, f(a)) = 1;
  return m;
}

std::vector<int> fixed_points(const DetProcess& f, const ProductOp& d) {
  if (d.parties() != f.n) throw std::invalid_argument("fixed_points: party count mismatch");
  std::vector<int> out;
  for (int a = 0; a < string_count(f.n); ++a)
    if (d.apply(f(a)) == a) out.push_back(a);
  return out;
}

namespace {

// Product operations that are constant on every party always have exactly one
// fixed point, so the scan only visits the rest, identity-heavy ones first.
std::vector<int> scan_order(int n) {
  std::vector<int> order;
  const int count = 1 << (2 * n);
  for (int k = 0; k < count; ++k) {
    bool all_constant = true;
    for (int i = 0, r = k; i < n; ++i, r /= 4)
      if (r % 4 == 1 || r % 4 == 2) all_constant = false;
    if (!all_constant) order.push_back(k);
  }
  auto responsive = [n](int k) {
    int c = 0;
    for (int i = 0; i < n; ++i, k /= 4) c += (k % 4 == 1 || k % 4 == 2);
    return c;
  };
  std::stable_sort(order.begin(), order.end(), [&](int l, int r) { return responsive(l) > responsive(r); });
  return order;
}

struct ConsistencyChecker {
  int n;
  int dim;
  std::vector<std::uint8_t> table;
  std::vector<int> order;

  explicit ConsistencyChecker(int parties)
      : n(parties), dim(string_count(parties)), table(product_op_table(parties)), order(scan_order(parties)) {}

  template <typename Table>
  bool operator()(const Table& f) const {
    for (int k : order) {
      const std::uint8_t* d = &table[static_cast<std::size_t>(k * dim)];
      int count = 0;
      for (int a = 0; a < dim; ++a) count += (d[f[a]] == a);
      if (count != 1) return false;
    }
    return true;
  }
};

}  // namespace

bool is_consistent(const DetProcess& f) {
  const ConsistencyChecker check(f.n);
  return check(f.x_of_a);
}

int thread_cap() {
  if (const char* env = std::getenv("CF_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<DetProcess> enumerate_det(int n, int threads) {
  if (n < 1 || n > 3) throw std::invalid_argument("enumerate_det: exhaustive scan is limited to n <= 3");
  const int dim = string_count(n);
  std::uint64_t total = 1;
  for (int i = 0; i < dim; ++i) total *= static_cast<std::uint64_t>(dim);
  if (threads <= 0) threads = thread_cap();
  threads = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(threads), total));

  const ConsistencyChecker check(n);
  std::vector<std::vector<DetProcess>> partial(static_cast<std::size_t>(threads));
  auto worker = [&](int w) {
    const std::uint64_t begin = total * static_cast<std::uint64_t>(w) / static_cast<std::uint64_t>(threads);
    const std::uint64_t end = total * static_cast<std::uint64_t>(w + 1) / static_cast<std::uint64_t>(threads);
    std::vector<int> f(static_cast<std::size_t>(dim));
    std::uint64_t code = begin;
    for (int a = dim - 1; a >= 0; --a) {
      f[static_cast<std::size_t>(a)] = static_cast<int>(code % static_cast<std::uint64_t>(dim));
      code /= static_cast<std::uint64_t>(dim);
    }
    for (std::uint64_t c = begin; c < end; ++c) {
      if (check(f)) partial[static_cast<std::size_t>(w)].emplace_back(n, f);
      for (int a = dim - 1; a >= 0; --a) {  // odometer, entry 0 most significant
        if (++f[static_cast<std::size_t>(a)] < dim) break;
        f[static_cast<std::size_t>(a)] = 0;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < threads; ++w) pool.emplace_back(worker, w);
  worker(0);
  for (auto& t : pool) t.join();

  std::vector<DetProcess> out;
  for (auto& p : partial) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end(), [](const DetProcess& l, const DetProcess& r) { return l.x_of_a < r.x_of_a; });
  return out;
}

int dk_class(const DetProcess& f) {
  int k = 0;
  for (int party = 0; party < f.n; ++party) {
    const int first = f.coordinate(party, 0);
    bool constant = true;
    for (int a = 1; a < string_count(f.n) && constant; ++a) constant = f.coordinate(party, a) == first;
    k += constant;
  }
  return k;
}

bool validate_vector(const RationalMatrix& m) {
  if (m.rows() != m.cols() || m.rows() < 2) return false;
  int n = 0;
  while (string_count(n) < m.rows()) ++n;
  if (string_count(n) != m.rows()) return false;
  for (Eigen::Index i = 0; i < m.size(); ++i)
    if (m.data()[i] < 0) return false;
  for (const ProductOp& d : product_op(n))
    if (inner(m, d) != 1) return false;
  return true;
}

RationalMatrix read_matrix_csv(std::istream& in) {
  std::vector<std::vector<Rational>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<Rational> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(parse_rational(cell));
    if (!rows.empty() && row.size() != rows.front().size()) throw std::invalid_argument("matrix csv: ragged rows");
    rows.push_back(std::move(row));
  }
  const std::size_t dim = rows.size();
  if (dim < 2 || (dim & (dim - 1)) != 0 || rows.front().size() != dim)
    throw std::invalid_argument("matrix csv: expected a 2^n x 2^n matrix");
  RationalMatrix m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t x = 0; x < dim; ++x) m(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(x)) = rows[a][x];
  return m;
}

void write_matrix_csv(std::ostream& out, const RationalMatrix& m) {
  for (Eigen::Index a = 0; a < m.rows(); ++a) {
    for (Eigen::Index x = 0; x < m.cols(); ++x) out << (x ? "," : "") << to_string(m(a, x));
    out << '\n';
  }
}

}  // namespace causalpoly
