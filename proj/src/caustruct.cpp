#include "causalpoly/caustruct.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace causalpoly {

const char* to_string(CausalType t) {
  switch (t) {
    case CausalType::Fixed: return "fixed";
    case CausalType::Adaptive: return "adaptive";
    default: return "ico";
  }
}

int SignalingDigraph::in_degree(int j) const {
  int d = 0;
  for (int i = 0; i < n; ++i) d += edge(i, j);
  return d;
}

std::vector<std::pair<int, int>> SignalingDigraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (edge(i, j)) out.emplace_back(i, j);
  return out;
}

SignalingDigraph signaling_digraph(const DetProcess& f) {
  if (f.n > 5) throw std::invalid_argument("signaling_digraph: at most 5 parties");
  SignalingDigraph g{f.n, 0};
  for (int a = 0; a < string_count(f.n); ++a)
    for (int i = 0; i < f.n; ++i) {
      const int diff = f(a) ^ f(a ^ party_mask(f.n, i));
      for (int j = 0; j < f.n; ++j)
        if (j != i && ((diff & party_mask(f.n, j)) != 0)) g.add_edge(i, j);
    }
  return g;
}

SignalingDigraph permute(const SignalingDigraph& g, const std::vector<int>& perm) {
  SignalingDigraph out{g.n, 0};
  for (auto [i, j] : g.edges()) out.add_edge(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
  return out;
}

SignalingDigraph canonical_digraph(const SignalingDigraph& g) {
  std::vector<int> perm(static_cast<std::size_t>(g.n));
  std::iota(perm.begin(), perm.end(), 0);
  SignalingDigraph best = g;
  do {
    const SignalingDigraph h = permute(g, perm);
    if (h.adjacency < best.adjacency) best = h;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::uint32_t structure_id(const SignalingDigraph& g) { return canonical_digraph(g).adjacency; }

bool is_acyclic(const SignalingDigraph& g) {
  std::vector<int> indeg(static_cast<std::size_t>(g.n));
  for (int j = 0; j < g.n; ++j) indeg[static_cast<std::size_t>(j)] = g.in_degree(j);
  std::vector<int> ready;
  for (int j = 0; j < g.n; ++j)
    if (indeg[static_cast<std::size_t>(j)] == 0) ready.push_back(j);
  int seen = 0;
  while (!ready.empty()) {
    const int i = ready.back();
    ready.pop_back();
    ++seen;
    for (int j = 0; j < g.n; ++j)
      if (g.edge(i, j) && --indeg[static_cast<std::size_t>(j)] == 0) ready.push_back(j);
  }
  return seen == g.n;
}

std::vector<std::vector<int>> simple_cycles(const SignalingDigraph& g) {
  std::vector<std::vector<int>> cycles;
  std::vector<int> path;
  std::vector<bool> on_path(static_cast<std::size_t>(g.n), false);
  // Cycles are rooted at their smallest node; only larger nodes are visited.
  std::function<void(int, int)> dfs = [&](int root, int v) {
    for (int w = 0; w < g.n; ++w) {
      if (!g.edge(v, w)) continue;
      if (w == root) {
        cycles.push_back(path);
      } else if (w > root && !on_path[static_cast<std::size_t>(w)]) {
        on_path[static_cast<std::size_t>(w)] = true;
        path.push_back(w);
        dfs(root, w);
        path.pop_back();
        on_path[static_cast<std::size_t>(w)] = false;
      }
    }
  };
  for (int root = 0; root < g.n; ++root) {
    path = {root};
    on_path.assign(static_cast<std::size_t>(g.n), false);
    on_path[static_cast<std::size_t>(root)] = true;
    dfs(root, root);
  }
  return cycles;
}

bool is_soc(const SignalingDigraph& g) {
  for (const auto& cycle : simple_cycles(g)) {
    bool siblings = false;
    for (std::size_t s = 0; s < cycle.size() && !siblings; ++s)
      for (std::size_t t = s + 1; t < cycle.size() && !siblings; ++t)
        for (int p = 0; p < g.n && !siblings; ++p)
          siblings = g.edge(p, cycle[s]) && g.edge(p, cycle[t]);
    if (!siblings) return false;
  }
  return true;
}

CausalType classify_type(const SignalingDigraph& g) {
  if (is_acyclic(g)) return CausalType::Fixed;
  for (int j = 0; j < g.n; ++j)
    if (g.in_degree(j) == 0) return CausalType::Adaptive;
  return CausalType::ICO;
}

CausalType classify_type(const DetProcess& f) {
  if (is_acyclic(signaling_digraph(f))) return CausalType::Fixed;
  return dk_class(f) > 0 ? CausalType::Adaptive : CausalType::ICO;
}

std::vector<StructureClass> iso_classes(const std::vector<SignalingDigraph>& graphs) {
  std::map<std::pair<int, std::uint32_t>, StructureClass> classes;
  for (std::size_t k = 0; k < graphs.size(); ++k) {
    const SignalingDigraph c = canonical_digraph(graphs[k]);
    auto [it, fresh] = classes.try_emplace({c.n, c.adjacency});
    if (fresh) {
      it->second.canonical = c;
      it->second.type = classify_type(c);
      it->second.soc = is_soc(c);
    }
    it->second.members.push_back(k);
  }
  std::vector<StructureClass> out;
  for (auto& [key, cls] : classes) out.push_back(std::move(cls));
  return out;
}

}  // namespace causalpoly
