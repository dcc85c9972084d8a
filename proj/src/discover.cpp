#include "causalpoly/discover.hpp"

#include <json.hpp>

#include <boost/crc.hpp>

#include <algorithm>
#include <atomic>
#include <memory>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>
#include <unordered_set>

namespace causalpoly {

using nlohmann::json;

SymmetryElement identity_element(int n) {
  SymmetryElement g;
  g.perm.resize(static_cast<std::size_t>(n));
  std::iota(g.perm.begin(), g.perm.end(), 0);
  return g;
}

int permute_bits(int s, const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  int out = 0;
  for (int i = 0; i < n; ++i)
    if (bit_of(s, n, i)) out |= party_mask(n, perm[static_cast<std::size_t>(i)]);
  return out;
}

SymmetryElement compose(const SymmetryElement& g, const SymmetryElement& h) {
  if (g.parties() != h.parties()) throw std::invalid_argument("compose: party count mismatch");
  SymmetryElement out;
  out.perm.resize(g.perm.size());
  for (std::size_t i = 0; i < g.perm.size(); ++i) out.perm[i] = g.perm[static_cast<std::size_t>(h.perm[i])];
  out.input_flips = g.input_flips ^ permute_bits(h.input_flips, g.perm);
  out.output_flips = g.output_flips ^ permute_bits(h.output_flips, g.perm);
  return out;
}

SymmetryElement inverse(const SymmetryElement& g) {
  SymmetryElement out;
  out.perm.resize(g.perm.size());
  for (std::size_t i = 0; i < g.perm.size(); ++i) out.perm[static_cast<std::size_t>(g.perm[i])] = static_cast<int>(i);
  out.input_flips = permute_bits(g.input_flips, out.perm);
  out.output_flips = permute_bits(g.output_flips, out.perm);
  return out;
}

DetProcess act(const SymmetryElement& g, const DetProcess& f) {
  if (g.parties() != f.n) throw std::invalid_argument("act: party count mismatch");
  std::vector<int> inv(g.perm.size());
  for (std::size_t i = 0; i < g.perm.size(); ++i) inv[static_cast<std::size_t>(g.perm[i])] = static_cast<int>(i);
  return DetProcess::from_function(f.n, [&](int a) {
    return permute_bits(f(permute_bits(a ^ g.output_flips, inv)), g.perm) ^ g.input_flips;
  });
}

std::vector<SymmetryElement> symmetry_group(int n) {
  std::vector<SymmetryElement> out;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (int u = 0; u < string_count(n); ++u)
      for (int v = 0; v < string_count(n); ++v) out.push_back(SymmetryElement{perm, u, v});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::uint64_t group_order(int n) {
  std::uint64_t order = 1;
  for (int i = 2; i <= n; ++i) order *= static_cast<std::uint64_t>(i);
  return order << (2 * n);
}

namespace {

// Bit-permutation tables for every element, so orbit scans are table lookups.
struct GroupTables {
  int n;
  int dim;
  std::vector<std::vector<int>> forward;  // per party permutation: s -> perm(s)
  std::vector<std::vector<int>> backward; // s -> perm^-1(s)

  explicit GroupTables(int parties) : n(parties), dim(string_count(parties)) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<int> inv(perm.size());
      for (std::size_t i = 0; i < perm.size(); ++i) inv[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);
      std::vector<int> fw(static_cast<std::size_t>(dim)), bw(static_cast<std::size_t>(dim));
      for (int s = 0; s < dim; ++s) {
        fw[static_cast<std::size_t>(s)] = permute_bits(s, perm);
        bw[static_cast<std::size_t>(s)] = permute_bits(s, inv);
      }
      forward.push_back(std::move(fw));
      backward.push_back(std::move(bw));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  template <typename Visit>
  void for_each_image(const std::vector<int>& f, Visit&& visit) const {
    std::vector<int> img(static_cast<std::size_t>(dim));
    for (std::size_t p = 0; p < forward.size(); ++p) {
      const auto& fw = forward[p];
      const auto& bw = backward[p];
      for (int u = 0; u < dim; ++u)
        for (int v = 0; v < dim; ++v) {
          for (int a = 0; a < dim; ++a)
            img[static_cast<std::size_t>(a)] =
                fw[static_cast<std::size_t>(f[static_cast<std::size_t>(bw[static_cast<std::size_t>(a ^ v)])])] ^ u;
          visit(img);
        }
    }
  }
};

const GroupTables& tables(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<GroupTables>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<GroupTables>(n);
  return *slot;
}

std::uint64_t pack(const std::vector<int>& f) {
  std::uint64_t key = 0;
  for (int x : f) key = (key << 4) | static_cast<std::uint64_t>(x);
  return key;
}

}  // namespace

DetProcess canonical_form(const DetProcess& f) {
  std::vector<int> best = f.x_of_a;
  tables(f.n).for_each_image(f.x_of_a, [&](const std::vector<int>& img) {
    if (img < best) best = img;
  });
  return DetProcess(f.n, best);
}

std::string process_key(const DetProcess& f) {
  const int width = (f.n + 3) / 4;
  std::string key;
  char buf[16];
  for (int x : f.x_of_a) {
    std::snprintf(buf, sizeof buf, "%0*x", width, static_cast<unsigned>(x));
    key += buf;
  }
  return key;
}

std::string canonical_key(const DetProcess& f) { return process_key(canonical_form(f)); }

std::uint64_t orbit_size(const DetProcess& f) {
  if (f.n > 4) throw std::invalid_argument("orbit_size: at most 4 parties");
  std::unordered_set<std::uint64_t> seen;
  tables(f.n).for_each_image(f.x_of_a, [&](const std::vector<int>& img) { seen.insert(pack(img)); });
  return seen.size();
}

namespace {

std::string checksum(const std::string& text) {
  boost::crc_32_type crc;
  crc.process_bytes(text.data(), text.size());
  char buf[16];
  std::snprintf(buf, sizeof buf, "%08x", crc.checksum());
  return buf;
}

json entry_body(const CatalogEntry& e) {
  return json{{"key", e.key},
              {"x_of_a", e.representative.x_of_a},
              {"dk", e.dk},
              {"orbit", e.orbit},
              {"structure", e.structure}};
}

std::string header_line(int n) {
  json h{{"format", "causalpoly-catalog"}, {"version", 1}, {"n", n}, {"checksum", "crc32 of the entry without its check field"}};
  return h.dump();
}

CatalogEntry make_entry(const DetProcess& canonical) {
  CatalogEntry e;
  e.key = process_key(canonical);
  e.representative = canonical;
  e.dk = dk_class(canonical);
  e.orbit = orbit_size(canonical);
  e.structure = structure_id(signaling_digraph(canonical));
  return e;
}

}  // namespace

std::string entry_to_json_line(const CatalogEntry& e) {
  json body = entry_body(e);
  const std::string check = checksum(body.dump());
  body["check"] = check;
  return body.dump();
}

CatalogEntry entry_from_json_line(const std::string& line, int n) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception& ex) {
    throw std::runtime_error(std::string("catalog: unreadable line: ") + ex.what());
  }
  if (!j.contains("check")) throw std::runtime_error("catalog: entry without checksum");
  const std::string check = j["check"].get<std::string>();
  j.erase("check");
  if (checksum(j.dump()) != check) throw std::runtime_error("catalog: checksum mismatch for key " + j.value("key", "?"));
  CatalogEntry e;
  e.key = j.at("key").get<std::string>();
  e.representative = DetProcess(n, j.at("x_of_a").get<std::vector<int>>());
  e.dk = j.at("dk").get<int>();
  e.orbit = j.at("orbit").get<std::uint64_t>();
  e.structure = j.at("structure").get<std::uint32_t>();
  if (process_key(e.representative) != e.key) throw std::runtime_error("catalog: key does not match table");
  return e;
}

Catalog::Catalog(int n) : n_(n) {
  if (n < 1 || n > 4) throw std::invalid_argument("catalog: 1 to 4 parties");
}

Catalog Catalog::open(const std::string& path, int n) {
  Catalog cat(n);
  std::ifstream in(path);
  if (in) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("catalog: empty file " + path);
    json head;
    try {
      head = json::parse(line);
    } catch (const json::exception&) {
      throw std::runtime_error("catalog: bad header in " + path);
    }
    if (head.value("format", "") != "causalpoly-catalog" || head.value("n", -1) != n)
      throw std::runtime_error("catalog: header does not match n=" + std::to_string(n));
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      CatalogEntry e = entry_from_json_line(line, n);
      if (canonical_key(e.representative) != e.key) throw std::runtime_error("catalog: non-canonical key " + e.key);
      cat.entries_.emplace(e.key, std::move(e));
    }
    if (in.bad()) throw std::runtime_error("catalog: read error on " + path);
  } else {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("catalog: cannot create " + path);
    out << header_line(n) << '\n';
    out.flush();
    if (!out) throw std::runtime_error("catalog: write failed on " + path);
  }
  cat.path_ = path;
  return cat;
}

void Catalog::append_line(const CatalogEntry& e) {
  if (path_.empty()) return;
  const std::string line = entry_to_json_line(e) + "\n";
  std::ofstream out(path_, std::ios::app | std::ios::binary);
  if (!out) throw std::runtime_error("catalog: cannot append to " + path_);
  out.write(line.data(), static_cast<std::streamsize>(line.size()));
  out.flush();
  if (!out) throw std::runtime_error("catalog: write failed on " + path_);
}

bool Catalog::insert(const DetProcess& f) {
  if (f.n != n_) throw std::invalid_argument("catalog: party count mismatch");
  const DetProcess c = canonical_form(f);
  const std::string key = process_key(c);
  if (entries_.count(key)) return false;
  CatalogEntry e = make_entry(c);
  append_line(e);
  entries_.emplace(key, std::move(e));
  return true;
}

std::uint64_t Catalog::total_orbit() const {
  std::uint64_t total = 0;
  for (const auto& [k, e] : entries_) total += e.orbit;
  return total;
}

std::size_t catalog_merge(Catalog& catalog, const std::vector<DetProcess>& vertices) {
  std::size_t added = 0;
  for (const DetProcess& f : vertices) {
    if (!is_consistent(f)) throw std::invalid_argument("catalog_merge: inconsistent process " + process_key(f));
    added += catalog.insert(f);
  }
  return added;
}

std::uint64_t orbit_expand(const CatalogEntry& entry) { return orbit_size(entry.representative); }

const LpModel& cp4_model() {
  static const LpModel model(cp_hrep(4));
  return model;
}

namespace {

DetProcess process_from_point(const RationalVector& x, int n) {
  const int dim = string_count(n);
  std::vector<int> table(static_cast<std::size_t>(dim), -1);
  for (int a = 0; a < dim; ++a)
    for (int c = 0; c < dim; ++c)
      if (x(flat_index(n, a, c)) == 1) {
        if (table[static_cast<std::size_t>(a)] >= 0) throw std::logic_error("ilp: row with two ones");
        table[static_cast<std::size_t>(a)] = c;
      }
  for (int v : table)
    if (v < 0) throw std::logic_error("ilp: row without a one");
  return DetProcess(n, table);
}

bool integral(const RationalVector& x) {
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (x(i) != 0 && x(i) != 1) return false;
  return true;
}

}  // namespace

IlpResult ilp_solve(const LpModel& model, int n, const RationalVector& objective, int max_nodes) {
  IlpResult res;
  const int dim = string_count(n);
  std::vector<std::vector<signed char>> stack;
  stack.emplace_back(static_cast<std::size_t>(model.dim()), static_cast<signed char>(-1));
  int nodes = 0;
  while (!stack.empty() && nodes < max_nodes) {
    const std::vector<signed char> fixing = std::move(stack.back());
    stack.pop_back();
    ++nodes;
    const LpSolution<Rational> sol = model.maximize(objective, &fixing);
    ++res.lp_solves;
    if (!sol.optimal()) continue;
    if (res.found && sol.objective <= res.best_value) continue;
    if (integral(sol.x)) {
      DetProcess f = process_from_point(sol.x, n);
      if (!is_consistent(f)) throw std::logic_error("ilp: integer point is not a consistent process");
      res.integer_points.push_back(f);
      res.found = true;
      res.best = f;
      res.best_value = sol.objective;
      continue;
    }
    ++res.fractional_nodes;
    int pick = -1;
    Rational best_gap = 2;
    for (Eigen::Index j = 0; j < sol.x.size(); ++j) {
      if (sol.x(j) == 0 || sol.x(j) == 1) continue;
      Rational gap = sol.x(j) - Rational(1, 2);
      if (gap < 0) gap = -gap;
      if (gap < best_gap) {
        best_gap = gap;
        pick = static_cast<int>(j);
      }
    }
    std::vector<signed char> zero = fixing, one = fixing;
    zero[static_cast<std::size_t>(pick)] = 0;
    const int row = pick / dim;
    for (int c = 0; c < dim; ++c) {
      const auto j = static_cast<std::size_t>(row * dim + c);
      one[j] = (static_cast<int>(j) == pick) ? 1 : 0;
    }
    stack.push_back(std::move(zero));
    stack.push_back(std::move(one));  // explored first
  }
  return res;
}

IlpStats ilp_sample(const IlpOptions& opt, const std::function<void(const DetProcess&)>& on_vertex) {
  const LpModel& model = cp4_model();
  const auto start = std::chrono::steady_clock::now();
  const auto deadline = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                    std::chrono::duration<double>(opt.seconds));
  IlpStats stats;
  std::mutex mu;
  std::atomic<long> trials_started{0};
  std::atomic<bool> stop{false};
  const int workers = std::max(1, opt.threads);

  auto worker = [&](int w) {
    std::seed_seq seq{opt.seed, static_cast<std::uint64_t>(w)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<int> coef(-opt.objective_range, opt.objective_range);
    while (!stop && std::chrono::steady_clock::now() < deadline) {
      const long t = trials_started.fetch_add(1);
      if (opt.max_trials >= 0 && t >= opt.max_trials) break;
      RationalVector c(model.dim());
      for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = coef(rng);
      const IlpResult r = ilp_solve(model, 4, c, opt.max_nodes_per_trial);
      std::lock_guard<std::mutex> lock(mu);
      ++stats.trials;
      stats.lp_solves += r.lp_solves;
      stats.fractional_nodes += r.fractional_nodes;
      stats.integer_points += static_cast<long>(r.integer_points.size());
      for (const DetProcess& f : r.integer_points) on_vertex(f);
      if (opt.stop && opt.stop()) {
        stop = true;
        stats.stopped = true;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(worker, w);
  worker(0);
  for (auto& t : pool) t.join();
  stats.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  stats.budget_exhausted = !stats.stopped && std::chrono::steady_clock::now() >= deadline;
  return stats;
}

std::vector<DetProcess> ilp_sample(std::uint64_t seed, double seconds) {
  IlpOptions opt;
  opt.seed = seed;
  opt.seconds = seconds;
  std::vector<DetProcess> out;
  ilp_sample(opt, [&](const DetProcess& f) { out.push_back(f); });
  return out;
}

void for_each_consistent(int n, const std::function<void(const std::vector<int>&)>& visit) {
  if (n < 1 || n > 4) throw std::invalid_argument("for_each_consistent: 1 to 4 parties");
  const int dim = string_count(n);
  const int ops = 1 << (2 * n);
  const auto table = product_op_table(n);
  // hits[a * dim + x]: operations d with d(x) = a, i.e. a becomes a fixed point.
  std::vector<std::vector<int>> hits(static_cast<std::size_t>(dim * dim));
  for (int k = 0; k < ops; ++k)
    for (int x = 0; x < dim; ++x)
      hits[static_cast<std::size_t>(table[static_cast<std::size_t>(k * dim + x)] * dim + x)].push_back(k);
  std::vector<int> count(static_cast<std::size_t>(ops), 0), f(static_cast<std::size_t>(dim), 0);

  std::function<void(int)> rec = [&](int a) {
    if (a == dim) {
      for (int c : count)
        if (c != 1) return;
      visit(f);
      return;
    }
    for (int x = 0; x < dim; ++x) {
      const auto& h = hits[static_cast<std::size_t>(a * dim + x)];
      std::size_t i = 0;
      bool ok = true;
      for (; i < h.size(); ++i)
        if (++count[static_cast<std::size_t>(h[i])] > 1) {
          ok = false;
          ++i;
          break;
        }
      if (ok) {
        f[static_cast<std::size_t>(a)] = x;
        rec(a + 1);
      }
      for (std::size_t j = 0; j < i; ++j) --count[static_cast<std::size_t>(h[j])];
    }
  };
  rec(0);
}

ExhaustiveSummary exhaustive_catalog(int n) {
  ExhaustiveSummary out;
  out.n = n;
  std::vector<std::uint64_t> all;
  for_each_consistent(n, [&](const std::vector<int>& f) { all.push_back(pack(f)); });
  out.processes = all.size();
  std::sort(all.begin(), all.end());
  std::vector<bool> seen(all.size(), false);
  const int dim = string_count(n);
  std::map<std::uint32_t, CausalType> structures;
  for (std::size_t k = 0; k < all.size(); ++k) {
    if (seen[k]) continue;
    std::vector<int> f(static_cast<std::size_t>(dim));
    for (int a = 0; a < dim; ++a) f[static_cast<std::size_t>(a)] = static_cast<int>((all[k] >> (4 * (dim - 1 - a))) & 15u);
    std::uint64_t orbit = 0;
    // The first member met in sorted order is the least table of its orbit.
    tables(n).for_each_image(f, [&](const std::vector<int>& img) {
      const auto it = std::lower_bound(all.begin(), all.end(), pack(img));
      if (it == all.end() || *it != pack(img)) throw std::logic_error("exhaustive: orbit leaves the consistent set");
      const auto idx = static_cast<std::size_t>(it - all.begin());
      if (!seen[idx]) {
        seen[idx] = true;
        ++orbit;
      }
    });
    CatalogEntry e;
    e.representative = DetProcess(n, f);
    e.key = process_key(e.representative);
    e.dk = dk_class(e.representative);
    e.orbit = orbit;
    const SignalingDigraph g = signaling_digraph(e.representative);
    e.structure = structure_id(g);
    structures.emplace(e.structure, classify_type(g));
    out.all_soc = out.all_soc && is_soc(g);
    out.classes.push_back(std::move(e));
  }
  out.structures = structures.size();
  for (const auto& [id, t] : structures) {
    if (t == CausalType::Fixed) ++out.fixed;
    else if (t == CausalType::Adaptive) ++out.adaptive;
    else ++out.ico;
  }
  return out;
}

}  // namespace causalpoly
