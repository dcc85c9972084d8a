#pragma once

// Causal structures of deterministic processes.

#include "causalpoly/process.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace causalpoly {

/// Directed graph on the parties; edge i -> j is bit i*n + j of `adjacency`.
struct SignalingDigraph {
  int n = 0;
  std::uint32_t adjacency = 0;

  bool edge(int i, int j) const { return (adjacency >> (i * n + j)) & 1u; }
  void add_edge(int i, int j) { adjacency |= 1u << (i * n + j); }
  int in_degree(int j) const;
  std::vector<std::pair<int, int>> edges() const;  // 0-based (i, j), row-major

  friend bool operator==(const SignalingDigraph&, const SignalingDigraph&) = default;
};

enum class CausalType { Fixed, Adaptive, ICO };

const char* to_string(CausalType t);

/// Edge i -> j iff flipping a_i flips x_j for some output string.
SignalingDigraph signaling_digraph(const DetProcess& f);

/// Relabels nodes: node i of g becomes node perm[i].
SignalingDigraph permute(const SignalingDigraph& g, const std::vector<int>& perm);

/// Lexicographically least adjacency mask over all n! relabelings.
SignalingDigraph canonical_digraph(const SignalingDigraph& g);
std::uint32_t structure_id(const SignalingDigraph& g);

bool is_acyclic(const SignalingDigraph& g);

/// Each simple directed cycle as its node sequence, smallest node first.
std::vector<std::vector<int>> simple_cycles(const SignalingDigraph& g);

/// Every directed cycle holds two distinct nodes with a common parent.
bool is_soc(const SignalingDigraph& g);

/// Type from the graph alone: acyclic, else a node without parents, else ICO.
CausalType classify_type(const SignalingDigraph& g);
/// Type of a process: acyclic digraph, else some constant input, else ICO.
CausalType classify_type(const DetProcess& f);

struct StructureClass {
  SignalingDigraph canonical;
  CausalType type = CausalType::Fixed;
  bool soc = true;
  std::vector<std::size_t> members;  // indices into the input list
};

/// Partition under node relabeling, ordered by canonical mask.
std::vector<StructureClass> iso_classes(const std::vector<SignalingDigraph>& graphs);

}  // namespace causalpoly
