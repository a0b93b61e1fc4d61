#include "brick/enumeration.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>
#include <thread>

namespace brick {

std::size_t default_node_cap() {
  if (const char* s = std::getenv("BRICK_MAX_NODES")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 1000000;
}

std::vector<Arrangement> all_arrangements(const Network& net, EnumOptions opt) {
  auto sp = std::make_shared<const Network>(net);
  Arrangement g0 = greedy(sp);
  const std::size_t cap = opt.max_nodes ? opt.max_nodes : default_node_cap();
  const int jobs = std::max(1, opt.jobs);

  std::map<std::string, Arrangement> seen;
  seen.emplace(g0.mark_string(), g0);
  std::vector<Arrangement> frontier{std::move(g0)};
  if (seen.size() > cap) fail(ErrorCode::resource_limit, "arrangement enumeration exceeded node cap");

  auto expand = [](const Arrangement& a, std::vector<Arrangement>& out) {
    for (int v : a.contacts()) out.push_back(flip(a, v));
  };

  while (!frontier.empty()) {
    std::vector<Arrangement> produced;
    if (jobs == 1 || frontier.size() < 2 * static_cast<std::size_t>(jobs)) {
      for (const Arrangement& a : frontier) expand(a, produced);
    } else {
      std::vector<std::vector<Arrangement>> parts(jobs);
      std::vector<std::thread> threads;
      threads.reserve(jobs);
      for (int t = 0; t < jobs; ++t)
        threads.emplace_back([&, t] {
          for (std::size_t i = t; i < frontier.size(); i += jobs) expand(frontier[i], parts[t]);
        });
      for (auto& th : threads) th.join();
      for (auto& part : parts)
        for (Arrangement& a : part) produced.push_back(std::move(a));
    }
    std::vector<Arrangement> next;
    for (Arrangement& a : produced) {
      std::string key = a.mark_string();
      if (seen.emplace(std::move(key), a).second) {
        if (seen.size() > cap)
          fail(ErrorCode::resource_limit, "arrangement enumeration exceeded node cap");
        next.push_back(std::move(a));
      }
    }
    frontier = std::move(next);
  }

  std::vector<Arrangement> out;
  out.reserve(seen.size());
  for (auto& [key, a] : seen) out.push_back(std::move(a));
  return out;
}

FlipGraph flip_graph(const Network& net, EnumOptions opt) {
  std::vector<Arrangement> arrs = all_arrangements(net, opt);
  FlipGraph fg;
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < arrs.size(); ++i) {
    fg.nodes.push_back(arrs[i].mark_string());
    index[fg.nodes.back()] = static_cast<int>(i);
  }
  const int n = net.n();
  fg.degree = net.m() - n * (n - 1) / 2;
  for (int i = 0; i < static_cast<int>(arrs.size()); ++i) {
    BRICK_CHECK(arrs[i].contact_count() == fg.degree, "every node has the same flip degree");
    for (int v : arrs[i].contacts()) {
      Arrangement b = flip(arrs[i], v);
      auto it = index.find(b.mark_string());
      BRICK_CHECK(it != index.end(), "flip target was enumerated");
      int j = it->second;
      if (i < j) {
        auto [below, above] = arrs[i].meet(v);
        int w = arrs[i].crossing_of(below, above);
        fg.edges.push_back({i, j, v, w, w < v ? j : i});
      }
    }
  }
  std::sort(fg.edges.begin(), fg.edges.end(),
            [](const FlipGraph::Edge& a, const FlipGraph::Edge& b) {
              return std::tie(a.a, a.b) < std::tie(b.a, b.b);
            });
  for (std::size_t e = 1; e < fg.edges.size(); ++e)
    BRICK_CHECK(std::tie(fg.edges[e - 1].a, fg.edges[e - 1].b) !=
                    std::tie(fg.edges[e].a, fg.edges[e].b),
                "one edge per adjacent pair");
  return fg;
}

DecreasingOrientation decreasing_orientation(const FlipGraph& fg) {
  DecreasingOrientation d;
  const int nn = static_cast<int>(fg.nodes.size());
  std::vector<int> indeg(nn, 0), outdeg(nn, 0);
  for (const FlipGraph::Edge& e : fg.edges) {
    int to = e.decreasing_to;
    int from = (to == e.a) ? e.b : e.a;
    d.arcs.emplace_back(from, to);
    ++indeg[to];
    ++outdeg[from];
  }
  // Kahn's algorithm: the orientation must be acyclic.
  {
    std::vector<std::vector<int>> adj(nn);
    for (auto [u, v] : d.arcs) adj[u].push_back(v);
    std::vector<int> deg = indeg, queue;
    for (int v = 0; v < nn; ++v)
      if (deg[v] == 0) queue.push_back(v);
    int seen = 0;
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      ++seen;
      for (int w : adj[v])
        if (--deg[w] == 0) queue.push_back(w);
    }
    BRICK_CHECK(seen == nn, "decreasing flips admit no cycle");
  }
  d.source = d.sink = -1;
  for (int v = 0; v < nn; ++v) {
    if (indeg[v] == 0) {
      BRICK_CHECK(d.source < 0, "unique node with decreasing flips only");
      d.source = v;
    }
    if (outdeg[v] == 0) {
      BRICK_CHECK(d.sink < 0, "unique node with increasing flips only");
      d.sink = v;
    }
  }
  BRICK_CHECK(d.source >= 0 && d.sink >= 0, "source and sink exist");
  return d;
}

std::vector<std::vector<int>> complex_facets(const Network& net, EnumOptions opt) {
  std::vector<Arrangement> arrs = all_arrangements(net, opt);
  std::vector<std::vector<int>> out;
  out.reserve(arrs.size());
  for (const Arrangement& a : arrs) out.push_back(a.contacts());
  return out;
}

std::vector<std::vector<int>> irreducible_components(const Network& net) {
  return contact_graph(greedy(net)).components();
}

bool is_minimal(const Network& net) {
  const int n = net.n();
  if (!is_sorting(net)) fail(ErrorCode::not_sorting, "network does not support an arrangement");
  ContactGraph g = contact_graph(greedy(net));
  bool irreducible = g.components().size() == 1;
  bool count = net.m() == n * (n - 1) / 2 + n - 1;
  // A connected graph on n nodes with n-1 arcs is a tree; cross-check.
  bool tree = irreducible && static_cast<int>(g.arcs.size()) == n - 1;
  BRICK_CHECK((irreducible && count) == tree, "minimality characterizations agree");
  return irreducible && count;
}

std::string flip_graph_dot(const FlipGraph& fg, bool directed) {
  std::ostringstream os;
  os << (directed ? "digraph flips {\n" : "graph flips {\n");
  for (std::size_t i = 0; i < fg.nodes.size(); ++i)
    os << "  n" << i << " [label=\"" << fg.nodes[i] << "\"];\n";
  for (const FlipGraph::Edge& e : fg.edges) {
    int from = e.a, to = e.b;
    if (directed && e.decreasing_to == e.a) {
      from = e.b;
      to = e.a;
    }
    os << "  n" << from << (directed ? " -> n" : " -- n") << to << " [label=\""
       << (e.contact_of_a + 1) << "-" << (e.contact_of_b + 1) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace brick
