#pragma once

// {0,1}-valued effects: normal (a sub-pattern of a valid process) or extra.

#include "causalpoly/process.hpp"

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace causalpoly {

/// Positions (a, x) holding a one.
struct ZMatrix {
  int n = 1;
  std::set<std::pair<int, int>> ones;

  static ZMatrix from_matrix(const RationalMatrix& m);  // entries must be 0 or 1
  RationalMatrix matrix() const;
  std::string serialize() const;
};

enum class EffectKind { Normal, Extra };
enum class EffectCase { Empty, Single, Separated, Overlapping };  // 1.1, 1.2, 2, 3

const char* to_string(EffectKind k);
const char* to_string(EffectCase c);

struct EffectVerdict {
  EffectKind kind = EffectKind::Normal;
  EffectCase which = EffectCase::Empty;
  std::optional<ProductOp> witness;  // first operation in tag order with inner >= 2
  std::pair<std::pair<int, int>, std::pair<int, int>> pair{};  // the overlapping pair, case 3
};

/// Parties (0-based) on which u and v agree.
std::vector<int> identical_index_set(int u, int v, int n);
std::vector<int> identical_index_set(const std::vector<int>& u, const std::vector<int>& v);

/// True iff some party q has x_q = x'_q and a_q != a'_q.
bool separated(int n, std::pair<int, int> p, std::pair<int, int> q);

/// Throws std::invalid_argument when |ones| >= 2^n and std::logic_error if
/// the pairwise rule ever disagrees with the operation scan.
EffectVerdict classify(const ZMatrix& z);

/// inner(z, D) <= 1 for every product operation D.
bool oracle(const ZMatrix& z);

struct ProbeResult {
  ZMatrix witness;          // two ones from distinct rows, classified Extra
  RationalMatrix selection; // {0,1} row-stochastic pattern inside the support
  ProductOp operation;      // inner(selection, operation) >= 2
  bool found = false;
};

/// For a fractional vertex of cp_hrep(n): a row-stochastic selection inside
/// its support that holds an extra pair. Throws std::invalid_argument for a
/// deterministic input, a non-vertex, or a support above 64 entries.
ProbeResult probe_fractional_vertex(const RationalMatrix& m);

/// Vertex test for points of cp_hrep(n): the constraint columns on the
/// support are linearly independent.
bool is_cp_vertex(const RationalMatrix& m);

}  // namespace causalpoly
