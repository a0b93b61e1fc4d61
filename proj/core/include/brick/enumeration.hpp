#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "brick/arrangement.hpp"

namespace brick {

struct EnumOptions {
  std::size_t max_nodes = 0;  // 0 = default cap (BRICK_MAX_NODES env or 10^6)
  int jobs = 1;
};

std::size_t default_node_cap();

/// Every arrangement supported by the network, reached by flips from the
/// greedy one; canonical order = lexicographic mark string. Throws NotSorting
/// or ResourceLimit.
std::vector<Arrangement> all_arrangements(const Network& net, EnumOptions opt = {});

/// Flip graph on the canonical arrangement order. Every node has degree
/// m - C(n,2).
struct FlipGraph {
  std::vector<std::string> nodes;  // canonical mark strings
  struct Edge {
    int a, b;           // node indices, a < b
    int contact_of_a;   // contact in node a exchanged with...
    int contact_of_b;   // ...the contact in node b (= crossing in a)
    int decreasing_to;  // endpoint reached by the decreasing flip
  };
  std::vector<Edge> edges;  // sorted by (a, b)
  int degree = 0;
};

FlipGraph flip_graph(const Network& net, EnumOptions opt = {});

/// Orient every edge toward its decreasing endpoint; checks the orientation is
/// acyclic with a unique source (the greedy arrangement) and a unique sink.
struct DecreasingOrientation {
  std::vector<std::pair<int, int>> arcs;  // (from, to) in edge order
  int source = -1;
  int sink = -1;
};
DecreasingOrientation decreasing_orientation(const FlipGraph& fg);

/// Contact sets of the arrangements, canonical node order (facets of the
/// simplicial complex of "non-crossing" commutator subsets).
std::vector<std::vector<int>> complex_facets(const Network& net, EnumOptions opt = {});

/// Connected components of the contact graph (the same for every supported
/// arrangement).
std::vector<std::vector<int>> irreducible_components(const Network& net);

/// Irreducible with m = C(n,2) + n - 1; equivalently the contact graphs are
/// trees.
bool is_minimal(const Network& net);

/// Deterministic DOT (LF line endings). Directed=true emits the decreasing
/// orientation as a digraph.
std::string flip_graph_dot(const FlipGraph& fg, bool directed = false);

}  // namespace brick
