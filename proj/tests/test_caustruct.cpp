#include "causalpoly/caustruct.hpp"
#include "causalpoly/switchlab.hpp"
#include "fixtures.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace causalpoly;

namespace {

SignalingDigraph graph_of(int n, std::initializer_list<std::pair<int, int>> edges) {
  SignalingDigraph g;
  g.n = n;
  for (auto [i, j] : edges) g.add_edge(i, j);
  return g;
}

}  // namespace

TEST_CASE("self-circle signals every way and is soc") {
  const SignalingDigraph g = signaling_digraph(fixtures::self_circle());
  CHECK(g.edges().size() == 6);
  CHECK(classify_type(g) == CausalType::ICO);
  CHECK(classify_type(fixtures::self_circle()) == CausalType::ICO);
  CHECK(is_soc(g));
  CHECK_FALSE(is_acyclic(g));
}

TEST_CASE("soc on small graphs") {
  // A bare cycle has no two nodes with a common parent.
  CHECK_FALSE(is_soc(graph_of(3, {{0, 1}, {1, 2}, {2, 0}})));
  CHECK_FALSE(is_soc(graph_of(2, {{0, 1}, {1, 0}})));
  // A third node feeding both members of a two-cycle.
  CHECK(is_soc(graph_of(3, {{0, 1}, {1, 0}, {2, 0}, {2, 1}})));
  CHECK(is_soc(graph_of(3, {{0, 1}, {1, 2}})));
  CHECK(is_acyclic(graph_of(3, {{0, 1}, {1, 2}, {0, 2}})));
}

TEST_CASE("simple cycles of the complete three-node graph") {
  const auto g = graph_of(3, {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}});
  const auto cycles = simple_cycles(g);
  CHECK(cycles.size() == 5);
  int twos = 0, threes = 0;
  for (const auto& c : cycles) (c.size() == 2 ? twos : threes)++;
  CHECK(twos == 3);
  CHECK(threes == 2);
}

TEST_CASE("four-party examples by type") {
  CHECK(is_consistent(fixtures::fixed_four()));
  CHECK(is_consistent(fixtures::adaptive_four()));
  CHECK(is_consistent(fixtures::complete_four()));
  CHECK(is_consistent(parser_process()));
  CHECK(classify_type(fixtures::fixed_four()) == CausalType::Fixed);
  CHECK(classify_type(fixtures::adaptive_four()) == CausalType::Adaptive);
  CHECK(classify_type(fixtures::complete_four()) == CausalType::ICO);
  CHECK(classify_type(parser_process()) == CausalType::Adaptive);
  CHECK(is_acyclic(signaling_digraph(fixtures::fixed_four())));
  for (const auto& f : {fixtures::fixed_four(), fixtures::adaptive_four(), fixtures::complete_four(), parser_process()})
    CHECK(is_soc(signaling_digraph(f)));
}

TEST_CASE("canonical digraph is invariant under relabeling") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    SignalingDigraph g;
    g.n = 4;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (i != j && (rng() & 1)) g.add_edge(i, j);
    std::vector<int> perm(4);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const SignalingDigraph h = permute(g, perm);
    CHECK(canonical_digraph(h) == canonical_digraph(g));
    CHECK(structure_id(h) == structure_id(g));
    CHECK(is_soc(h) == is_soc(g));
    CHECK(classify_type(h) == classify_type(g));
    CHECK(h.edges().size() == g.edges().size());
  }
}

TEST_CASE("graph and process typing agree on every tripartite process") {
  const auto all = enumerate_det(3);
  for (const auto& f : all) {
    const SignalingDigraph g = signaling_digraph(f);
    CHECK(classify_type(g) == classify_type(f));
    CHECK(is_soc(g));
  }
}

TEST_CASE("tripartite structures up to isomorphism") {
  std::vector<SignalingDigraph> graphs;
  for (const auto& f : enumerate_det(3)) graphs.push_back(signaling_digraph(f));
  const auto classes = iso_classes(graphs);
  std::size_t members = 0;
  int fixed = 0, adaptive = 0, ico = 0;
  for (const auto& c : classes) {
    members += c.members.size();
    CHECK(c.soc);
    switch (c.type) {
      case CausalType::Fixed: ++fixed; break;
      case CausalType::Adaptive: ++adaptive; break;
      case CausalType::ICO: ++ico; break;
    }
  }
  CHECK(members == graphs.size());
  // Regression constants from the exhaustive scan (the empty graph counts as fixed).
  CHECK(classes.size() == 8);
  CHECK(fixed == 6);
  CHECK(adaptive == 1);
  CHECK(ico == 1);
}
