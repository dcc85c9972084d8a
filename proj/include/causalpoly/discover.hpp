#pragma once

// Relabeling symmetries, canonical forms, ILP sampling of deterministic
// vertices and a persistent class catalog.

#include "causalpoly/caustruct.hpp"
#include "causalpoly/geometry.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace causalpoly {

/// (perm, u, v) relabels party i as perm[i], flips inputs by u after the
/// process and outputs by v before it:
///   f'(a) = perm(f(perm^-1(a ^ v))) ^ u.
struct SymmetryElement {
  std::vector<int> perm;
  int input_flips = 0;
  int output_flips = 0;

  int parties() const { return static_cast<int>(perm.size()); }
  friend bool operator==(const SymmetryElement&, const SymmetryElement&) = default;
};

SymmetryElement identity_element(int n);
/// act(compose(g, h), f) == act(g, act(h, f)).
SymmetryElement compose(const SymmetryElement& g, const SymmetryElement& h);
SymmetryElement inverse(const SymmetryElement& g);

/// Moves the bit of party i to party perm[i].
int permute_bits(int s, const std::vector<int>& perm);

DetProcess act(const SymmetryElement& g, const DetProcess& f);

/// All n! * 4^n elements.
std::vector<SymmetryElement> symmetry_group(int n);
std::uint64_t group_order(int n);

/// Lexicographically least table over the orbit.
DetProcess canonical_form(const DetProcess& f);
std::string canonical_key(const DetProcess& f);
std::string process_key(const DetProcess& f);
std::uint64_t orbit_size(const DetProcess& f);

struct CatalogEntry {
  std::string key;
  DetProcess representative;
  int dk = 0;
  std::uint64_t orbit = 0;
  std::uint32_t structure = 0;
};

/// Canonical classes keyed by canonical_key. When attached to a file, every
/// new class is appended as one JSON line before insert() returns.
class Catalog {
 public:
  explicit Catalog(int n);

  /// Replays an existing file (verifying every checksum) or starts a new one.
  static Catalog open(const std::string& path, int n);

  int parties() const { return n_; }
  bool insert(const DetProcess& f);
  std::size_t size() const { return entries_.size(); }
  const std::map<std::string, CatalogEntry>& entries() const { return entries_; }
  std::uint64_t total_orbit() const;
  const std::string& path() const { return path_; }

 private:
  void append_line(const CatalogEntry& e);

  int n_;
  std::string path_;
  std::map<std::string, CatalogEntry> entries_;
};

/// Inserts each vertex; returns how many new classes appeared.
std::size_t catalog_merge(Catalog& catalog, const std::vector<DetProcess>& vertices);
/// Orbit size recomputed from the group action.
std::uint64_t orbit_expand(const CatalogEntry& entry);

std::string entry_to_json_line(const CatalogEntry& e);
CatalogEntry entry_from_json_line(const std::string& line, int n);

struct IlpOptions {
  std::uint64_t seed = 1;
  double seconds = 60;
  long max_trials = -1;          // < 0: limited only by time
  int threads = 1;
  int max_nodes_per_trial = 64;
  int objective_range = 100;     // objective entries uniform in [-range, range]
  std::function<bool()> stop;    // polled after each trial; true ends the run
};

struct IlpStats {
  long trials = 0;
  long lp_solves = 0;
  long fractional_nodes = 0;
  long integer_points = 0;
  double elapsed = 0;
  bool budget_exhausted = false;
  bool stopped = false;
};

/// Depth-first branch and bound for max objective . M over the integer points
/// of the model. Every integer relaxation optimum met on the way is reported.
struct IlpResult {
  bool found = false;
  DetProcess best;
  Rational best_value = 0;
  std::vector<DetProcess> integer_points;
  long lp_solves = 0;
  long fractional_nodes = 0;
};

IlpResult ilp_solve(const LpModel& model, int n, const RationalVector& objective, int max_nodes = 1 << 20);

/// Random-objective sampler over cp_hrep(4). `on_vertex` is called serially.
IlpStats ilp_sample(const IlpOptions& opt, const std::function<void(const DetProcess&)>& on_vertex);
std::vector<DetProcess> ilp_sample(std::uint64_t seed, double seconds);

/// Shared model of cp_hrep(4); built once.
const LpModel& cp4_model();

/// Depth-first search over partial tables, pruning any operation that
/// already has two fixed points. n <= 4.
void for_each_consistent(int n, const std::function<void(const std::vector<int>&)>& visit);

struct ExhaustiveSummary {
  int n = 0;
  std::uint64_t processes = 0;
  std::vector<CatalogEntry> classes;  // ordered by key
  std::size_t structures = 0;
  std::size_t fixed = 0, adaptive = 0, ico = 0;
  bool all_soc = true;
};

ExhaustiveSummary exhaustive_catalog(int n);

}  // namespace causalpoly
