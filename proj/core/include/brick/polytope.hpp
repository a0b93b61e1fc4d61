#pragma once

#include <memory>
#include <string>
#include <vector>

#include "brick/enumeration.hpp"

namespace brick {

bool is_acyclic(const ContactGraph& g);

/// Ordered partition (source, sink) of one weak component with every crossing
/// arc directed source -> sink and both sides weakly connected.
struct DirectedCut {
  std::vector<int> source;
  std::vector<int> sink;
  std::vector<int> arcs;  // indices into g.arcs crossing the cut
};

/// All minimal directed cuts, per component, canonical subset order.
/// Throws CyclicGraph.
std::vector<DirectedCut> minimal_directed_cuts(const ContactGraph& g,
                                               const std::vector<std::vector<int>>& components);

struct Facet {
  std::vector<int> normal;    // 0/1, length = ambient
  long long rhs = 0;          // <normal, x> >= rhs on the polytope
  std::vector<int> vertices;  // ascending incident vertex indices
};

struct BrickPolytope {
  std::shared_ptr<const Network> net;
  int ambient = 0;
  long long depth_sum = 0;  // all points satisfy sum(x) = depth_sum
  int dim = 0;              // = n - #components
  std::vector<std::vector<int>> components;

  std::vector<std::vector<int>> vertices;  // canonical lexicographic order
  std::vector<std::string> vertex_marks;   // unique preimage arrangements

  std::vector<Facet> facets;  // empty when dim <= 1; sorted by normal

  struct Face {
    std::vector<int> vertices;  // ascending; empty face has none
    int dim = -1;               // -1 for the empty face, `dim` for the whole polytope
  };
  std::vector<Face> faces;  // sorted by (dim, vertex set); includes empty + full

  std::vector<long long> f_vector;  // dim 0: (1); dim 1: (2); else (f_0..f_{d-1})

  std::vector<std::vector<int>> all_vectors;  // brick vectors of every arrangement,
                                              // canonical arrangement order
};

BrickPolytope build_polytope(const Network& net, EnumOptions opt = {});

/// Vertex pairs of the 1-faces, ascending.
std::vector<std::pair<int, int>> polytope_graph(const BrickPolytope& p);

/// Vertex lies on exactly dim facets; cross-checked against the Hasse diagram
/// of its contact graph being a tree (per component).
bool is_simple_vertex(const BrickPolytope& p, int vertex);

/// Distinct vectors omega(arr, b) over all arrangements, sorted.
std::vector<std::vector<int>> minkowski_summand(const Network& net, const Brick& b,
                                                EnumOptions opt = {});

/// Support-function battery: h(Omega) == sum_b h(Omega(.,b)) over a fixed set
/// of directions (exhaustive {-1,0,1}^n for n <= 6, seeded otherwise).
bool verify_minkowski_sum(const Network& net, EnumOptions opt = {});

/// z_I = min over the polytope of sum_{i in I} x_i, y via inclusion-exclusion;
/// indexes are bitmasks over [1..n]. Requires an irreducible network.
struct GPCoordinates {
  int n = 0;
  std::vector<long long> z;  // size 2^n, z[0] = 0
  std::vector<long long> y;
};
GPCoordinates gp_coordinates(const BrickPolytope& p);

/// Text dump: "dim/ambient/D" header, V lines, F lines, f-vector line.
std::string polytope_dump(const BrickPolytope& p);

}  // namespace brick
