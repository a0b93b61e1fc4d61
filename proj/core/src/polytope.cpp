#include "brick/polytope.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "brick/hull_oracle.hpp"

namespace brick {

bool is_acyclic(const ContactGraph& g) {
  std::vector<std::vector<int>> adj(g.n + 1);
  std::vector<int> indeg(g.n + 1, 0);
  for (const ContactArc& a : g.arcs) {
    adj[a.from].push_back(a.to);
    ++indeg[a.to];
  }
  std::vector<int> queue;
  for (int v = 1; v <= g.n; ++v)
    if (indeg[v] == 0) queue.push_back(v);
  int seen = 0;
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    ++seen;
    for (int w : adj[v])
      if (--indeg[w] == 0) queue.push_back(w);
  }
  return seen == g.n;
}

std::vector<DirectedCut> minimal_directed_cuts(const ContactGraph& g,
                                               const std::vector<std::vector<int>>& components) {
  if (!is_acyclic(g)) fail(ErrorCode::cyclic_graph, "contact graph has a directed cycle");
  std::vector<DirectedCut> cuts;
  for (const std::vector<int>& comp : components) {
    const int s = static_cast<int>(comp.size());
    if (s < 2) continue;
    BRICK_CHECK(s <= 25, "component too large for cut enumeration");
    std::map<int, int> pos;
    for (int i = 0; i < s; ++i) pos[comp[i]] = i;
    struct CArc {
      int fi, ti, idx;
    };
    std::vector<CArc> carcs;
    for (int ai = 0; ai < static_cast<int>(g.arcs.size()); ++ai) {
      auto itf = pos.find(g.arcs[ai].from);
      if (itf == pos.end()) continue;
      auto itt = pos.find(g.arcs[ai].to);
      BRICK_CHECK(itt != pos.end(), "arcs stay within a component");
      carcs.push_back({itf->second, itt->second, ai});
    }
    auto connected_within = [&](unsigned mask) {
      std::vector<int> par(s);
      std::iota(par.begin(), par.end(), 0);
      auto find = [&](int x) {
        while (par[x] != x) x = par[x] = par[par[x]];
        return x;
      };
      for (const CArc& a : carcs)
        if ((mask >> a.fi & 1u) && (mask >> a.ti & 1u)) par[find(a.fi)] = find(a.ti);
      int root = -1;
      for (int i = 0; i < s; ++i)
        if (mask >> i & 1u) {
          if (root < 0)
            root = find(i);
          else if (find(i) != root)
            return false;
        }
      return true;
    };
    for (unsigned mask = 1; mask + 1 < (1u << s); ++mask) {
      bool ok = true;
      std::vector<int> crossing;
      for (const CArc& a : carcs) {
        bool fu = mask >> a.fi & 1u, tu = mask >> a.ti & 1u;
        if (fu && !tu) {
          crossing.push_back(a.idx);
        } else if (!fu && tu) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      unsigned vmask = ((1u << s) - 1u) & ~mask;
      if (!connected_within(mask) || !connected_within(vmask)) continue;
      DirectedCut cut;
      for (int i = 0; i < s; ++i)
        if (mask >> i & 1u) cut.source.push_back(comp[i]);
      for (int i = 0; i < s; ++i)
        if (vmask >> i & 1u) cut.sink.push_back(comp[i]);
      cut.arcs = std::move(crossing);
      cuts.push_back(std::move(cut));
    }
  }
  std::sort(cuts.begin(), cuts.end(), [](const DirectedCut& a, const DirectedCut& b) {
    return std::tie(a.sink, a.source) < std::tie(b.sink, b.source);
  });
  return cuts;
}

namespace {

std::vector<std::vector<int>> coords_of(const BrickPolytope& p, const std::vector<int>& idx) {
  std::vector<std::vector<int>> pts;
  pts.reserve(idx.size());
  for (int i : idx) pts.push_back(p.vertices[i]);
  return pts;
}

long long dot(const std::vector<int>& a, const std::vector<int>& b) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long long>(a[i]) * b[i];
  return s;
}

}  // namespace

BrickPolytope build_polytope(const Network& net, EnumOptions opt) {
  BrickPolytope P;
  P.net = std::make_shared<const Network>(net);
  P.ambient = net.n();
  P.depth_sum = total_depth(net);

  std::vector<Arrangement> arrs = all_arrangements(net, opt);
  P.components = contact_graph(arrs.front()).components();
  const int n = P.ambient;
  const int p = static_cast<int>(P.components.size());

  P.all_vectors.reserve(arrs.size());
  for (const Arrangement& a : arrs) {
    P.all_vectors.push_back(brick_vector(a));
    long long s = 0;
    for (int c : P.all_vectors.back()) s += c;
    BRICK_CHECK(s == P.depth_sum, "brick vectors lie on the depth hyperplane");
  }

  // Vertices are exactly the brick vectors of acyclic contact graphs, one
  // arrangement per vertex.
  std::map<std::vector<int>, int> vmap;
  for (std::size_t i = 0; i < arrs.size(); ++i) {
    ContactGraph g = contact_graph(arrs[i]);
    BRICK_CHECK(g.components() == P.components, "components do not depend on the arrangement");
    if (is_acyclic(g)) {
      bool fresh = vmap.emplace(P.all_vectors[i], static_cast<int>(i)).second;
      BRICK_CHECK(fresh, "acyclic arrangements have distinct brick vectors");
    }
  }
  BRICK_CHECK(!vmap.empty(), "a polytope has at least one vertex");
  for (auto& [vec, ai] : vmap) {
    P.vertices.push_back(vec);
    P.vertex_marks.push_back(arrs[ai].mark_string());
  }
  P.dim = affine_rank(P.vertices);
  BRICK_CHECK(P.dim == n - p, "dimension is the number of levels minus components");

  // Facets from the minimal directed cuts of the vertex arrangements.
  if (P.dim >= 2) {
    std::set<std::vector<int>> normals;
    std::vector<std::pair<std::vector<int>, long long>> tight_claims;
    for (auto& [vec, ai] : vmap) {
      ContactGraph g = contact_graph(arrs[ai]);
      for (const DirectedCut& cut : minimal_directed_cuts(g, P.components)) {
        std::vector<int> normal(n, 0);
        for (int v : cut.sink) normal[v - 1] = 1;
        for (const std::vector<int>& comp : P.components) {
          if (std::binary_search(comp.begin(), comp.end(), cut.sink.front())) continue;
          for (int v : comp) normal[v - 1] = 1;
        }
        normals.insert(normal);
        long long value = dot(vec, normal);
        tight_claims.emplace_back(std::move(normal), value);
      }
    }
    for (const std::vector<int>& normal : normals) {
      Facet f;
      f.normal = normal;
      f.rhs = dot(P.vertices[0], normal);
      for (const std::vector<int>& v : P.vertices) f.rhs = std::min(f.rhs, dot(v, normal));
      for (int i = 0; i < static_cast<int>(P.vertices.size()); ++i)
        if (dot(P.vertices[i], normal) == f.rhs) f.vertices.push_back(i);
      for (const std::vector<int>& q : P.all_vectors)
        BRICK_CHECK(dot(q, normal) >= f.rhs, "facet inequality valid on every brick vector");
      BRICK_CHECK(affine_rank(coords_of(P, f.vertices)) == P.dim - 1,
                  "every minimal directed cut supports a facet");
      P.facets.push_back(std::move(f));
    }
    for (auto& [normal, value] : tight_claims) {
      long long rhs = dot(P.vertices[0], normal);
      for (const std::vector<int>& v : P.vertices) rhs = std::min(rhs, dot(v, normal));
      BRICK_CHECK(value == rhs, "a cut's own arrangement attains the facet minimum");
    }
  }

  // Face lattice: intersections of facet vertex sets, plus empty and full.
  std::vector<int> full(P.vertices.size());
  std::iota(full.begin(), full.end(), 0);
  std::set<std::vector<int>> fam;
  fam.insert(full);
  fam.insert({});
  if (P.dim == 1) {
    fam.insert({0});
    fam.insert({1});
  } else if (P.dim >= 2) {
    std::deque<std::vector<int>> queue{full};
    while (!queue.empty()) {
      std::vector<int> x = std::move(queue.front());
      queue.pop_front();
      for (const Facet& f : P.facets) {
        std::vector<int> y;
        std::set_intersection(x.begin(), x.end(), f.vertices.begin(), f.vertices.end(),
                              std::back_inserter(y));
        if (fam.insert(y).second) queue.push_back(y);
      }
    }
  }
  for (const std::vector<int>& x : fam) {
    BrickPolytope::Face face;
    face.vertices = x;
    face.dim = x.empty() ? -1 : affine_rank(coords_of(P, x));
    P.faces.push_back(std::move(face));
  }
  std::sort(P.faces.begin(), P.faces.end(),
            [](const BrickPolytope::Face& a, const BrickPolytope::Face& b) {
              return std::tie(a.dim, a.vertices) < std::tie(b.dim, b.vertices);
            });

  if (P.dim == 0) {
    P.f_vector = {1};
  } else if (P.dim == 1) {
    P.f_vector = {2};
  } else {
    P.f_vector.assign(P.dim, 0);
    for (const BrickPolytope::Face& face : P.faces)
      if (face.dim >= 0 && face.dim < P.dim) ++P.f_vector[face.dim];
    BRICK_CHECK(P.f_vector[0] == static_cast<long long>(P.vertices.size()),
                "every vertex is a face");
    BRICK_CHECK(P.f_vector[P.dim - 1] == static_cast<long long>(P.facets.size()),
                "facet count matches the lattice");
    long long euler = 0;
    for (int d = 0; d < P.dim; ++d) euler += (d % 2 ? -1 : 1) * P.f_vector[d];
    BRICK_CHECK(euler == 1 + (P.dim % 2 ? 1 : -1), "boundary Euler characteristic");
  }
  return P;
}

std::vector<std::pair<int, int>> polytope_graph(const BrickPolytope& p) {
  std::vector<std::pair<int, int>> edges;
  for (const BrickPolytope::Face& f : p.faces)
    if (f.dim == 1) {
      BRICK_CHECK(f.vertices.size() == 2, "an edge has two vertices");
      edges.emplace_back(f.vertices[0], f.vertices[1]);
    }
  std::sort(edges.begin(), edges.end());
  return edges;
}

bool is_simple_vertex(const BrickPolytope& p, int vertex) {
  if (vertex < 0 || vertex >= static_cast<int>(p.vertices.size()))
    fail(ErrorCode::invalid_argument, "vertex index out of range");
  bool simple = true;
  if (p.dim >= 2) {
    int cnt = 0;
    for (const Facet& f : p.facets)
      if (std::binary_search(f.vertices.begin(), f.vertices.end(), vertex)) ++cnt;
    BRICK_CHECK(cnt >= p.dim, "a vertex lies on at least dim facets");
    simple = (cnt == p.dim);
  }

  // Cross-check: simple iff the transitive reduction of the contact graph is a
  // forest (a tree on each component).
  Arrangement arr = parse_marks(p.net, p.vertex_marks[vertex]);
  ContactGraph g = contact_graph(arr);
  BRICK_CHECK(is_acyclic(g), "vertex arrangements are acyclic");
  const int n = g.n;
  std::vector<std::vector<char>> reach(n + 1, std::vector<char>(n + 1, 0));
  for (const ContactArc& a : g.arcs) reach[a.from][a.to] = 1;
  for (int k = 1; k <= n; ++k)
    for (int i = 1; i <= n; ++i)
      if (reach[i][k])
        for (int j = 1; j <= n; ++j)
          if (reach[k][j]) reach[i][j] = 1;
  int hasse = 0;
  for (int u = 1; u <= n; ++u)
    for (int v = 1; v <= n; ++v) {
      if (!reach[u][v]) continue;
      bool covered = false;
      for (int w = 1; w <= n && !covered; ++w)
        if (w != u && w != v && reach[u][w] && reach[w][v]) covered = true;
      if (!covered) ++hasse;
    }
  BRICK_CHECK(simple == (hasse == p.dim), "facet count criterion matches the tree criterion");
  return simple;
}

std::vector<std::vector<int>> minkowski_summand(const Network& net, const Brick& b,
                                                EnumOptions opt) {
  std::set<std::vector<int>> out;
  for (const Arrangement& a : all_arrangements(net, opt)) out.insert(summand_vector(a, b));
  return {out.begin(), out.end()};
}

bool verify_minkowski_sum(const Network& net, EnumOptions opt) {
  std::vector<Arrangement> arrs = all_arrangements(net, opt);
  std::vector<Brick> bs = bricks(net);
  const int n = net.n();

  std::vector<std::vector<int>> vecs;
  vecs.reserve(arrs.size());
  std::vector<std::set<std::vector<int>>> summands(bs.size());
  for (const Arrangement& a : arrs) {
    vecs.push_back(brick_vector(a));
    for (std::size_t bi = 0; bi < bs.size(); ++bi) summands[bi].insert(summand_vector(a, bs[bi]));
  }

  std::vector<std::vector<int>> dirs;
  if (n <= 6) {
    std::vector<int> d(n, -1);
    while (true) {
      if (std::any_of(d.begin(), d.end(), [](int c) { return c != 0; })) dirs.push_back(d);
      int i = 0;
      while (i < n && d[i] == 1) d[i++] = -1;
      if (i == n) break;
      ++d[i];
    }
  } else {
    for (int i = 0; i < n; ++i) {
      std::vector<int> e(n, 0);
      e[i] = 1;
      dirs.push_back(e);
      e[i] = -1;
      dirs.push_back(e);
    }
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<int> d(n, 0);
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1u) d[i] = 1;
      dirs.push_back(d);
    }
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> coef(-9, 9);
    for (int t = 0; t < 400; ++t) {
      std::vector<int> d(n);
      bool nonzero = false;
      for (int& c : d) {
        c = coef(rng);
        nonzero |= (c != 0);
      }
      if (nonzero) dirs.push_back(std::move(d));
    }
  }

  for (const std::vector<int>& d : dirs) {
    long long lhs = dot(vecs[0], d);
    for (const std::vector<int>& v : vecs) lhs = std::max(lhs, dot(v, d));
    long long rhs = 0;
    for (const auto& sset : summands) {
      long long best = dot(*sset.begin(), d);
      for (const std::vector<int>& s : sset) best = std::max(best, dot(s, d));
      rhs += best;
    }
    if (lhs != rhs) return false;
  }
  return true;
}

GPCoordinates gp_coordinates(const BrickPolytope& p) {
  if (p.components.size() != 1)
    fail(ErrorCode::not_irreducible, "coordinates are defined for irreducible networks only");
  const int n = p.ambient;
  BRICK_CHECK(n <= 20, "too many levels for subset coordinates");
  GPCoordinates gp;
  gp.n = n;
  const std::size_t size = std::size_t{1} << n;
  gp.z.assign(size, 0);
  for (std::size_t mask = 1; mask < size; ++mask) {
    long long best = 0;
    bool first = true;
    for (const std::vector<int>& v : p.vertices) {
      long long s = 0;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1u) s += v[i];
      if (first || s < best) best = s;
      first = false;
    }
    gp.z[mask] = best;
  }
  gp.y.assign(size, 0);
  for (std::size_t mask = 1; mask < size; ++mask) {
    int bits = __builtin_popcountll(mask);
    long long acc = 0;
    for (std::size_t sub = mask;; sub = (sub - 1) & mask) {
      int sign = ((bits - __builtin_popcountll(sub)) % 2) ? -1 : 1;
      acc += sign * gp.z[sub];
      if (sub == 0) break;
    }
    gp.y[mask] = acc;
  }
  for (std::size_t mask = 1; mask < size; ++mask) {
    long long acc = 0;
    for (std::size_t sub = mask;; sub = (sub - 1) & mask) {
      acc += gp.y[sub];
      if (sub == 0) break;
    }
    BRICK_CHECK(acc == gp.z[mask], "subset coordinates reconstruct the support minima");
  }
  BRICK_CHECK(gp.z[size - 1] == p.depth_sum, "full-set minimum is the depth sum");
  return gp;
}

std::string polytope_dump(const BrickPolytope& p) {
  std::ostringstream os;
  os << "dim " << p.dim << " / ambient " << p.ambient << " / D " << p.depth_sum << "\n";
  for (const std::vector<int>& v : p.vertices) {
    os << "V";
    for (int c : v) os << " " << c;
    os << "\n";
  }
  for (const Facet& f : p.facets) {
    os << "F ";
    for (int c : f.normal) os << c;
    os << " " << f.rhs << "\n";
  }
  os << "f-vector:";
  for (long long c : p.f_vector) os << " " << c;
  os << "\n";
  return os.str();
}

}  // namespace brick
