#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "battery.hpp"
#include "brick/enumeration.hpp"
#include "doctest.h"

using namespace brick;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  throw std::runtime_error("expected a brick::Error");
}

long long catalan(int n) {
  long long c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

// number of k-fans of non-crossing paths = determinant of the Catalan Hankel
// minor; counts the arrangements of the depth-k bubble kernel on n levels + 2k
long long hankel_count(int n, int k) {
  std::vector<std::vector<long long>> a(k, std::vector<long long>(k));
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j) a[i - 1][j - 1] = catalan(n - i - j);
  // cofactor expansion is plenty for k <= 3
  std::function<long long(std::vector<std::vector<long long>>)> det =
      [&](std::vector<std::vector<long long>> mat) -> long long {
    const int sz = static_cast<int>(mat.size());
    if (sz == 1) return mat[0][0];
    long long acc = 0;
    for (int c = 0; c < sz; ++c) {
      std::vector<std::vector<long long>> sub;
      for (int r = 1; r < sz; ++r) {
        std::vector<long long> row;
        for (int cc = 0; cc < sz; ++cc)
          if (cc != c) row.push_back(mat[r][cc]);
        sub.push_back(std::move(row));
      }
      acc += (c % 2 ? -1 : 1) * mat[0][c] * det(std::move(sub));
    }
    return acc;
  };
  return det(std::move(a));
}

}  // namespace

TEST_SUITE_BEGIN("enumeration");

TEST_CASE("bubble kernel counts match the Catalan Hankel determinants") {
  CHECK(hankel_count(5, 1) == 5);
  CHECK(hankel_count(6, 1) == 14);
  for (auto [n, k] : std::vector<std::pair<int, int>>{
           {5, 1}, {6, 1}, {7, 1}, {8, 1}, {7, 2}, {8, 2}, {9, 2}, {9, 3}}) {
    CAPTURE(n);
    CAPTURE(k);
    CHECK(static_cast<long long>(all_arrangements(kernel(bubble_network(n), k)).size()) ==
          hankel_count(n, k));
  }
}

TEST_CASE("duplicated network counts multiply over the pairs") {
  // one factor per pseudoline pair: 1 + number of duplicated edges on it
  auto product_count = [](const DupGraph& g) {
    long long prod = 1;
    for (int p = 1; p <= g.n; ++p)
      for (int q = p + 1; q <= g.n; ++q) {
        long long copies = 1;
        for (auto [a, b] : g.edges)
          if ((a == p && b == q) || (a == q && b == p)) ++copies;
        prod *= copies;
      }
    return prod;
  };
  const std::vector<DupGraph> graphs{
      {2, {{1, 2}}},
      {3, {{1, 2}, {2, 3}}},
      {3, {{1, 2}, {1, 3}, {2, 3}}},
      {3, {{1, 2}, {1, 2}, {2, 3}}},
      {4, {{1, 2}, {2, 3}, {3, 4}}},
      {4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}},
      {4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}},
  };
  for (const auto& g : graphs) {
    CAPTURE(g.n);
    CHECK(static_cast<long long>(all_arrangements(duplicated_network(g)).size()) ==
          product_count(g));
  }
}

TEST_CASE("x networks flip along a complete graph") {
  for (int m = 2; m <= 8; ++m) {
    FlipGraph fg = flip_graph(x_network(m));
    CHECK(static_cast<int>(fg.nodes.size()) == m);
    CHECK(fg.degree == m - 1);
    CHECK(static_cast<long long>(fg.edges.size()) == static_cast<long long>(m) * (m - 1) / 2);
  }
}

TEST_CASE("decreasing orientation on the x3 path") {
  FlipGraph fg = flip_graph(x_network(3));
  REQUIRE(fg.nodes == std::vector<std::string>{"CCX", "CXC", "XCC"});
  DecreasingOrientation ori = decreasing_orientation(fg);
  CHECK(fg.nodes[ori.source] == "XCC");  // the greedy arrangement
  CHECK(fg.nodes[ori.sink] == "CCX");
  CHECK(ori.arcs.size() == fg.edges.size());
}

TEST_CASE("complex facets are the contact sets") {
  auto facets = complex_facets(x_network(3));
  REQUIRE(facets.size() == 3);
  CHECK(facets[0] == std::vector<int>{0, 1});
  CHECK(facets[1] == std::vector<int>{0, 2});
  CHECK(facets[2] == std::vector<int>{1, 2});
}

TEST_CASE("irreducible components and minimality") {
  CHECK(irreducible_components(x_network(4)) == std::vector<std::vector<int>>{{1, 2}});
  CHECK(irreducible_components(Network(3, {1, 2, 1, 1})) ==
        std::vector<std::vector<int>>{{1}, {2, 3}});
  CHECK(irreducible_components(bubble_network(3)) ==
        std::vector<std::vector<int>>{{1}, {2}, {3}});
  CHECK(is_minimal(x_network(2)));
  CHECK(is_minimal(y_network(5)));
  CHECK(is_minimal(kernel(bubble_network(7), 1)));
  CHECK_FALSE(is_minimal(x_network(3)));
  CHECK_FALSE(is_minimal(y_network(7)));
  CHECK_FALSE(is_minimal(kernel(bubble_network(7), 2)));
  CHECK_FALSE(is_minimal(bubble_network(3)));
}

TEST_CASE("dot output is stable") {
  FlipGraph fg = flip_graph(x_network(2));
  CHECK(flip_graph_dot(fg) ==
        "graph flips {\n"
        "  n0 [label=\"CX\"];\n"
        "  n1 [label=\"XC\"];\n"
        "  n0 -- n1 [label=\"1-2\"];\n"
        "}\n");
  CHECK(flip_graph_dot(fg, true) ==
        "digraph flips {\n"
        "  n0 [label=\"CX\"];\n"
        "  n1 [label=\"XC\"];\n"
        "  n1 -> n0 [label=\"1-2\"];\n"
        "}\n");
}

TEST_CASE("node caps") {
  CHECK(code_of([] { all_arrangements(y_network(11), EnumOptions{10, 1}); }) ==
        ErrorCode::resource_limit);
  setenv("BRICK_MAX_NODES", "123", 1);
  CHECK(default_node_cap() == 123);
  setenv("BRICK_MAX_NODES", "3", 1);
  CHECK(code_of([] { all_arrangements(x_network(5)); }) == ErrorCode::resource_limit);
  unsetenv("BRICK_MAX_NODES");
  CHECK(default_node_cap() == 1000000);
}

TEST_CASE("parallel enumeration is deterministic") {
  Network net = kernel(bubble_network(8), 2);
  FlipGraph one = flip_graph(net, EnumOptions{0, 1});
  FlipGraph four = flip_graph(net, EnumOptions{0, 4});
  CHECK(one.nodes == four.nodes);
  CHECK(one.degree == four.degree);
  REQUIRE(one.edges.size() == four.edges.size());
  for (std::size_t i = 0; i < one.edges.size(); ++i) {
    CHECK(one.edges[i].a == four.edges[i].a);
    CHECK(one.edges[i].b == four.edges[i].b);
    CHECK(one.edges[i].contact_of_a == four.edges[i].contact_of_a);
    CHECK(one.edges[i].contact_of_b == four.edges[i].contact_of_b);
    CHECK(one.edges[i].decreasing_to == four.edges[i].decreasing_to);
  }
}

TEST_SUITE_END();
