#pragma once

// Cross-module laws every supported network must satisfy, phrased as plain
// functions that throw std::runtime_error with a readable witness. The unit
// suite and the acceptance binary both run them over the battery.

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "battery.hpp"
#include "brick/arrangement.hpp"
#include "brick/enumeration.hpp"
#include "brick/hull_oracle.hpp"
#include "brick/network.hpp"
#include "brick/polytope.hpp"

namespace testbed {

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::runtime_error(msg);
}

inline long long choose2(long long n) { return n * (n - 1) / 2; }

inline std::string vec_str(const std::vector<int>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

template <class T>
std::vector<T> sorted_copy(std::vector<T> vs) {
  std::sort(vs.begin(), vs.end());
  return vs;
}

// face counts by dimension, full face included, empty face excluded
inline std::vector<long long> face_poly(const brick::BrickPolytope& p) {
  std::vector<long long> poly(static_cast<std::size_t>(p.dim) + 1, 0);
  for (const auto& f : p.faces)
    if (f.dim >= 0) ++poly[static_cast<std::size_t>(f.dim)];
  return poly;
}

inline std::vector<long long> convolve(const std::vector<long long>& a,
                                       const std::vector<long long>& b) {
  std::vector<long long> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

inline void check_entry_laws(const BatteryEntry& e) {
  using namespace brick;
  const Network& net = e.net;
  const int n = net.n();
  const int m = net.m();
  const std::string& name = e.name;

  require(is_sorting(net), name + ": network must be sorting");
  auto arrs = all_arrangements(net);
  require(static_cast<long long>(arrs.size()) == e.count,
          name + ": expected " + std::to_string(e.count) + " arrangements, got " +
              std::to_string(arrs.size()));

  // canonical order is strictly increasing lexicographic mark strings
  for (std::size_t i = 1; i < arrs.size(); ++i)
    require(arrs[i - 1].mark_string() < arrs[i].mark_string(), name + ": canonical order broken");

  const long long contacts_each = m - choose2(n);
  const auto brick_list = bricks(net);
  require(static_cast<long long>(brick_list.size()) == m - n + 1,
          name + ": brick count must be m - n + 1");
  const long long depth_sum = total_depth(net);
  {
    long long s = 0;
    for (const auto& b : brick_list) {
      require(b.depth == n - b.band, name + ": brick depth must be n - band");
      s += b.depth;
    }
    require(s == depth_sum, name + ": total_depth disagrees with the brick list");
  }

  const auto components = irreducible_components(net);
  require(is_minimal(net) == (components.size() == 1 && m == choose2(n) + n - 1),
          name + ": is_minimal must mean irreducible with m = C(n,2) + n - 1");

  const Arrangement greedy_arr = greedy(net);
  std::vector<std::vector<int>> vectors;
  std::vector<std::string> acyclic_marks;
  for (const auto& arr : arrs) {
    require(arr.contact_count() == contacts_each, name + ": every arrangement has m - C(n,2) contacts");
    const auto w = brick_vector(arr);
    long long s = 0;
    for (int x : w) s += x;
    require(s == depth_sum, name + ": brick vector off the hyperplane sum(x) = D");
    vectors.push_back(w);

    // summand decomposition: per-brick 0/1 rows sum back to the brick vector
    std::vector<int> acc(n, 0);
    for (const auto& b : brick_list) {
      const auto sv = summand_vector(arr, b);
      long long rs = 0;
      for (int i = 0; i < n; ++i) {
        rs += sv[i];
        acc[i] += sv[i];
      }
      require(rs == b.depth, name + ": summand row must sum to the brick depth");
    }
    require(acc == w, name + ": summand rows must sum to the brick vector");

    // component stability
    require(contact_graph(arr).components() == components,
            name + ": contact components must not depend on the arrangement");
    if (is_acyclic(contact_graph(arr))) acyclic_marks.push_back(arr.mark_string());

    // greedy leaves every contact to the right of its pair's crossing
    if (arr == greedy_arr)
      for (int j : arr.contacts()) {
        auto [below, above] = arr.meet(j);
        require(arr.crossing_of(below, above) < j, name + ": greedy contact left of its crossing");
      }

    // flips: involution, position rule, brick-vector delta along the contact arc
    for (int j : arr.contacts()) {
      auto [below, above] = arr.meet(j);
      const Arrangement next = flip(arr, j);
      const int w2 = arr.crossing_of(below, above);
      require(next.mark(j) == Mark::crossing && next.mark(w2) == Mark::contact,
              name + ": flip must exchange the contact with its pair's crossing");
      require(flip(next, w2) == arr, name + ": flipping back must restore the arrangement");
      require(is_decreasing_flip(arr, j) == (w2 < j),
              name + ": decreasing means the new contact lands to the left");
      const auto wv = brick_vector(next);
      int c = wv[below - 1] - w[below - 1];
      require(c >= 1, name + ": flip delta must move weight onto the below line");
      for (int i = 1; i <= n; ++i) {
        int want = i == below ? c : (i == above ? -c : 0);
        require(wv[i - 1] - w[i - 1] == want,
                name + ": flip delta must be c*(e_below - e_above), got " + vec_str(wv) +
                    " - " + vec_str(w));
      }
    }
  }

  // flip graph over the same canonical order
  FlipGraph fg = flip_graph(net);
  require(static_cast<long long>(fg.nodes.size()) == e.count, name + ": flip graph node count");
  for (std::size_t i = 0; i < arrs.size(); ++i)
    require(fg.nodes[i] == arrs[i].mark_string(), name + ": flip graph node order");
  require(fg.degree == contacts_each, name + ": flip graph degree must be m - C(n,2)");
  require(static_cast<long long>(fg.edges.size()) * 2 ==
              static_cast<long long>(fg.nodes.size()) * fg.degree,
          name + ": flip graph edge count");
  for (const auto& ed : fg.edges) {
    require(ed.a < ed.b, name + ": edge endpoints must be ordered");
    require(flip(arrs[ed.a], ed.contact_of_a) == arrs[ed.b],
            name + ": edge contact_of_a must flip a to b");
    require(flip(arrs[ed.b], ed.contact_of_b) == arrs[ed.a],
            name + ": edge contact_of_b must flip b to a");
    const int dec = is_decreasing_flip(arrs[ed.a], ed.contact_of_a) ? ed.b : ed.a;
    require(ed.decreasing_to == dec, name + ": decreasing endpoint mislabeled");
  }

  DecreasingOrientation ori = decreasing_orientation(fg);
  require(fg.nodes[ori.source] == greedy_arr.mark_string(),
          name + ": the greedy arrangement must be the unique decreasing source");
  {
    std::vector<int> outdeg(fg.nodes.size(), 0), indeg(fg.nodes.size(), 0);
    for (auto [from, to] : ori.arcs) {
      ++outdeg[from];
      ++indeg[to];
    }
    int sources = 0, sinks = 0;
    for (std::size_t i = 0; i < fg.nodes.size(); ++i) {
      if (indeg[i] == 0) ++sources;
      if (outdeg[i] == 0) ++sinks;
    }
    require(sources == 1 && sinks == 1, name + ": decreasing orientation needs one source, one sink");
    require(outdeg[ori.sink] == 0 && indeg[ori.source] == 0, name + ": source/sink mislabeled");
  }

  {
    auto facets = complex_facets(net);
    require(facets.size() == arrs.size(), name + ": one complex facet per arrangement");
    for (std::size_t i = 0; i < arrs.size(); ++i)
      require(facets[i] == arrs[i].contacts(), name + ": complex facet must be the contact set");
  }

  // the polytope
  BrickPolytope p = build_polytope(net);
  require(p.ambient == n && p.depth_sum == depth_sum, name + ": polytope header fields");
  require(p.components == components, name + ": polytope component list");
  require(p.dim == n - static_cast<int>(components.size()), name + ": dim must be n - #components");
  require(p.all_vectors == vectors, name + ": all_vectors must follow the canonical order");
  require(sorted_copy(p.vertex_marks) == sorted_copy(acyclic_marks),
          name + ": vertices must be exactly the acyclic contact graphs");
  for (std::size_t i = 1; i < p.vertices.size(); ++i)
    require(p.vertices[i - 1] < p.vertices[i], name + ": vertex order");
  // each stored mark string really belongs to its coordinate row
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    Arrangement va = parse_marks(p.net, p.vertex_marks[i]);
    require(brick_vector(va) == p.vertices[i],
            name + ": vertex marks must match the vertex coordinates");
    require(is_acyclic(contact_graph(va)), name + ": vertex arrangements must be acyclic");
  }

  // f-vector versus the face list, plus the Euler relation
  if (p.dim >= 2) {
    std::vector<long long> counts(static_cast<std::size_t>(p.dim), 0);
    for (const auto& f : p.faces)
      if (f.dim >= 0 && f.dim < p.dim) ++counts[static_cast<std::size_t>(f.dim)];
    require(p.f_vector == counts, name + ": f-vector must count the proper faces");
    long long euler = 0;
    for (int d = 0; d < p.dim; ++d) euler += (d % 2 ? -1 : 1) * p.f_vector[d];
    require(euler == 1 - (p.dim % 2 ? -1 : 1), name + ": Euler relation fails");
    require(static_cast<long long>(p.facets.size()) == p.f_vector[p.dim - 1],
            name + ": facet list must match the top f-vector entry");
  }

  // facet inequalities hold on the whole point cloud, tight exactly as stored
  for (const auto& f : p.facets) {
    int ones = 0;
    for (int c : f.normal) {
      require(c == 0 || c == 1, name + ": facet normals are 0/1 vectors");
      ones += c;
    }
    require(ones > 0 && ones < n, name + ": facet normal must be a proper subset indicator");
    std::vector<int> tight;
    for (std::size_t vi = 0; vi < p.vertices.size(); ++vi) {
      long long dot = 0;
      for (int i = 0; i < n; ++i) dot += static_cast<long long>(f.normal[i]) * p.vertices[vi][i];
      require(dot >= f.rhs, name + ": facet inequality violated by a vertex");
      if (dot == f.rhs) tight.push_back(static_cast<int>(vi));
    }
    require(tight == f.vertices, name + ": facet incidence list disagrees with tightness");
    for (const auto& w : vectors) {
      long long dot = 0;
      for (int i = 0; i < n; ++i) dot += static_cast<long long>(f.normal[i]) * w[i];
      require(dot >= f.rhs, name + ": facet inequality violated by a brick vector");
    }
  }

  // independent certification of vertices and facets
  {
    auto report = hull_oracle_verify(p, p.all_vectors);
    require(report.vertices_checked == static_cast<int>(p.vertices.size()),
            name + ": oracle vertex count");
    if (p.dim >= 2)
      require(report.facets_checked == static_cast<int>(p.facets.size()) &&
                  report.derived_facets == p.facets.size(),
              name + ": oracle facet counts");
  }

  require(verify_minkowski_sum(net), name + ": brick summands must add up to the polytope");

  if (components.size() == 1) {
    // irreducible: support minima determine consistent Minkowski weights
    GPCoordinates g = gp_coordinates(p);
    require(g.n == n, name + ": gp dimension");
    const std::uint32_t full = (1u << n) - 1;
    require(g.z[0] == 0 && g.z[full] == depth_sum, name + ": gp endpoints");
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      long long mn = 0;
      bool first = true;
      for (const auto& w : vectors) {
        long long s = 0;
        for (int i = 0; i < n; ++i)
          if (mask >> i & 1) s += w[i];
        if (first || s < mn) mn = s;
        first = false;
      }
      require(g.z[mask] == mn, name + ": gp z must be the support minimum");
      long long zsum = 0;
      for (std::uint32_t sub = mask;; sub = (sub - 1) & mask) {
        zsum += g.y[sub];
        if (sub == 0) break;
      }
      require(zsum == g.z[mask], name + ": gp y must invert to z by subset sums");
      if (e.loday) {
        if (g.y[mask] != 0) {
          require(g.y[mask] > 0, name + ": interval weights must be nonnegative");
          int lo = n, hi = -1, cnt = 0;
          for (int i = 0; i < n; ++i)
            if (mask >> i & 1) {
              lo = std::min(lo, i);
              hi = std::max(hi, i);
              ++cnt;
            }
          require(hi - lo + 1 == cnt, name + ": weights must live on intervals");
        }
      }
      if (e.permutahedron) {
        const int pc = __builtin_popcount(mask);
        if (pc > 2) require(g.y[mask] == 0, name + ": weights must live on singletons and pairs");
        if (pc == 2) require(g.y[mask] == 1, name + ": pair weights must all be one");
      }
    }
  } else {
    // reducible: the face counts factor over the components
    std::vector<long long> prod{1};
    for (const auto& comp : components) {
      Network cn = restriction(arrs[0], comp);
      prod = convolve(prod, face_poly(build_polytope(cn)));
    }
    require(face_poly(p) == prod, name + ": face counts must factor over the components");
  }

  // reflections: left-right reverses the coordinates, top-bottom complements
  {
    Network rv = reflect(net, Axis::vertical);
    auto got = sorted_copy(build_polytope(rv).all_vectors);
    std::vector<std::vector<int>> want;
    for (auto w : vectors) {
      std::reverse(w.begin(), w.end());
      want.push_back(std::move(w));
    }
    require(got == sorted_copy(want), name + ": left-right reflection must reverse coordinates");
  }
  {
    Network rh = reflect(net, Axis::horizontal);
    const int total = static_cast<int>(brick_list.size());
    auto got = sorted_copy(build_polytope(rh).all_vectors);
    std::vector<std::vector<int>> want;
    for (auto w : vectors) {
      std::reverse(w.begin(), w.end());
      for (int& x : w) x = total - x;
      want.push_back(std::move(w));
    }
    require(got == sorted_copy(want),
            name + ": top-bottom reflection must complement against the brick total");
  }
}

// The big kernel hosting a copy of the network: fixing every non-witness
// commutator to a contact carves out a family in bijection with the small
// network's arrangements, flip by flip.
inline void check_universality(const BatteryEntry& e) {
  using namespace brick;
  const Network& net = e.net;
  UniversalityEmbedding u = universality_embedding(net);
  require(static_cast<int>(u.witness.size()) == net.m(), "witness size must be m");
  {
    std::set<int> seen(u.frozen.begin(), u.frozen.end());
    for (int j : u.witness) seen.insert(j);
    require(static_cast<int>(seen.size()) == u.host.m(),
            e.name + ": witness and frozen must partition the host commutators");
  }

  auto host_ptr = std::make_shared<const Network>(u.host);
  const std::set<int> frozen(u.frozen.begin(), u.frozen.end());
  auto lift = [&](const Arrangement& a) {
    std::vector<Mark> hm(static_cast<std::size_t>(u.host.m()), Mark::contact);
    for (int i = 0; i < net.m(); ++i) hm[static_cast<std::size_t>(u.witness[i])] = a.mark(i);
    auto res = Arrangement::try_from_marks(host_ptr, std::move(hm));
    require(res.has_value(), e.name + ": lifted marks must form a host arrangement");
    return *std::move(res);
  };

  auto arrs = all_arrangements(net);
  std::map<std::string, std::size_t> index;
  std::set<std::string> lifted;
  for (std::size_t i = 0; i < arrs.size(); ++i) {
    index[arrs[i].mark_string()] = i;
    lifted.insert(lift(arrs[i]).mark_string());
  }
  require(lifted.size() == arrs.size(), e.name + ": lift must be injective");

  // every flip of the small network is mirrored by the lifted witness contact
  for (const auto& a : arrs)
    for (int j : a.contacts())
      require(lift(flip(a, j)) == flip(lift(a), u.witness[j]),
              e.name + ": lift must commute with flips");

  // flipping only non-frozen contacts from the lifted greedy reaches exactly
  // the lifted family
  std::set<std::string> reached;
  std::queue<Arrangement> todo;
  todo.push(lift(greedy(net)));
  reached.insert(todo.front().mark_string());
  while (!todo.empty()) {
    Arrangement cur = std::move(todo.front());
    todo.pop();
    for (int j : cur.contacts()) {
      if (frozen.count(j)) continue;
      Arrangement next = flip(cur, j);
      for (int f : u.frozen)
        require(next.mark(f) == Mark::contact, e.name + ": flips must preserve the frozen contacts");
      // the witness marks of a family member must come from a small arrangement
      std::vector<Mark> restricted;
      for (int i = 0; i < net.m(); ++i) restricted.push_back(next.mark(u.witness[i]));
      auto small = Arrangement::try_from_marks(std::make_shared<const Network>(net), restricted);
      require(small.has_value() && index.count(small->mark_string()) > 0,
              e.name + ": family member must restrict to a small arrangement");
      if (reached.insert(next.mark_string()).second) todo.push(std::move(next));
    }
  }
  require(reached == lifted, e.name + ": the frozen family must be exactly the lifted copies");
}

}  // namespace testbed
