#include "brick/network.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "brick/arrangement.hpp"

namespace brick {

Network::Network(int n, std::vector<int> bands, std::vector<std::pair<int, int>> labels)
    : n_(n), bands_(std::move(bands)), labels_(std::move(labels)) {
  if (n_ < 1) fail(ErrorCode::too_few_levels, "a network needs at least one level");
  for (int b : bands_)
    if (b < 1 || b >= n_)
      fail(ErrorCode::invalid_band,
           "band " + std::to_string(b) + " outside [1, " + std::to_string(n_ - 1) + "]");
  if (!labels_.empty() && labels_.size() != bands_.size())
    fail(ErrorCode::invalid_argument, "label list must match the commutator count");
}

int Network::find_label(std::pair<int, int> pq) const {
  if (pq.first > pq.second) std::swap(pq.first, pq.second);
  for (int j = 0; j < m(); ++j)
    if (labels_[j] == pq) return j;
  return -1;
}

bool DupGraph::connected() const {
  if (n <= 0) return false;
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [u, v] : edges) parent[find(u)] = find(v);
  for (int v = 2; v <= n; ++v)
    if (find(v) != find(1)) return false;
  return true;
}

Network make_network(int n, const std::vector<int>& bands) {
  if (n < 2) fail(ErrorCode::too_few_levels, "need at least two levels");
  return Network(n, bands);
}

Network alternating_network(const std::string& word) {
  const int n = static_cast<int>(word.size()) + 2;
  for (char c : word)
    if (c != 'a' && c != 'b') fail(ErrorCode::invalid_argument, "word must be over {a, b}");

  // Integer realization of P_x: vertex v at abscissa v, inner vertices on the
  // parabolas y = +-(v-1)(n-v) according to the letter. This placement has no
  // three collinear points, so chords of equal slope are vertex-disjoint.
  std::vector<long long> ys(n + 1, 0);
  for (int v = 2; v <= n - 1; ++v) {
    long long h = static_cast<long long>(v - 1) * (n - v);
    ys[v] = (word[v - 2] == 'a') ? h : -h;
  }

  struct Chord {
    int i, j;
    long long dy;
    int dx;
  };
  std::vector<Chord> chords;
  chords.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) chords.push_back({i, j, ys[j] - ys[i], j - i});
  auto slope_less = [](const Chord& a, const Chord& b) {
    return a.dy * b.dx < b.dy * a.dx;  // dx > 0
  };
  std::stable_sort(chords.begin(), chords.end(), slope_less);

  // Dual sweep: the chord order is the crossing order of the wiring diagram.
  std::vector<int> level_of(n + 1), occ(n + 1);
  std::iota(level_of.begin(), level_of.end(), 0);
  std::iota(occ.begin(), occ.end(), 0);
  std::vector<int> bands;
  std::vector<std::pair<int, int>> labels;
  bands.reserve(chords.size());
  labels.reserve(chords.size());

  std::size_t idx = 0;
  while (idx < chords.size()) {
    std::size_t end = idx + 1;
    while (end < chords.size() && !slope_less(chords[idx], chords[end])) ++end;
    // Equal-slope chords commute; take them bottom band first.
    std::vector<const Chord*> group;
    for (std::size_t t = idx; t < end; ++t) group.push_back(&chords[t]);
    std::sort(group.begin(), group.end(), [&](const Chord* a, const Chord* b) {
      return std::min(level_of[a->i], level_of[a->j]) < std::min(level_of[b->i], level_of[b->j]);
    });
    for (const Chord* c : group) {
      int li = level_of[c->i], lj = level_of[c->j];
      BRICK_CHECK(li + 1 == lj || lj + 1 == li, "chord endpoints adjacent at their slope");
      int b = std::min(li, lj);
      bands.push_back(b);
      labels.emplace_back(c->i, c->j);
      std::swap(occ[b], occ[b + 1]);
      level_of[c->i] = lj;
      level_of[c->j] = li;
    }
    idx = end;
  }
  for (int l = 1; l <= n; ++l) BRICK_CHECK(occ[l] == n + 1 - l, "sweep reverses the order");
  return Network(n, std::move(bands), std::move(labels));
}

Network bubble_network(int n) {
  if (n < 2) fail(ErrorCode::too_few_levels, "need at least two levels");
  return alternating_network(std::string(n - 2, 'b'));
}

Network x_network(int m) {
  if (m < 1) fail(ErrorCode::invalid_argument, "need at least one commutator");
  return Network(2, std::vector<int>(m, 1));
}

Network y_network(int m) {
  if (m < 1) fail(ErrorCode::invalid_argument, "need at least one commutator");
  std::vector<int> bands(m);
  for (int j = 0; j < m; ++j) bands[j] = (j % 2 == 0) ? 2 : 1;
  return Network(3, std::move(bands));
}

Network kernel(const Network& net, int k) {
  if (k < 0) fail(ErrorCode::invalid_argument, "kernel depth must be nonnegative");
  if (net.n() <= 2 * k)
    fail(ErrorCode::kernel_too_deep,
         "cannot erase " + std::to_string(2 * k) + " of " + std::to_string(net.n()) + " levels");
  std::vector<int> bands;
  std::vector<std::pair<int, int>> labels;
  for (int j = 0; j < net.m(); ++j) {
    int b = net.band(j);
    if (b > k && b < net.n() - k) {
      bands.push_back(b - k);
      if (net.has_labels()) labels.push_back(net.label(j));
    }
  }
  return Network(net.n() - 2 * k, std::move(bands), std::move(labels));
}

Network duplicated_network(const DupGraph& g) {
  if (g.n < 2) fail(ErrorCode::too_few_levels, "need at least two levels");
  std::map<std::pair<int, int>, int> mult;
  for (auto [u, v] : g.edges) {
    if (u < 1 || u > g.n || v < 1 || v > g.n || u == v)
      fail(ErrorCode::invalid_argument, "bad edge in duplication graph");
    mult[{std::min(u, v), std::max(u, v)}]++;
  }
  if (!g.connected()) fail(ErrorCode::disconnected_graph, "duplication graph must be connected");
  Network base = bubble_network(g.n);
  std::vector<int> bands;
  for (int j = 0; j < base.m(); ++j) {
    bands.push_back(base.band(j));
    auto it = mult.find(base.label(j));
    if (it != mult.end())
      for (int t = 0; t < it->second; ++t) bands.push_back(base.band(j));
  }
  return Network(g.n, std::move(bands));
}

Network reflect(const Network& net, Axis axis) {
  std::vector<int> bands = net.bands();
  if (axis == Axis::vertical) {
    std::reverse(bands.begin(), bands.end());
  } else {
    for (int& b : bands) b = net.n() - b;
  }
  return Network(net.n(), std::move(bands));
}

bool is_alternating(const Network& net) {
  for (int level = 2; level <= net.n() - 1; ++level) {
    int last = 0;  // 1 = below (band level-1), 2 = above (band level)
    for (int j = 0; j < net.m(); ++j) {
      int side = 0;
      if (net.band(j) == level - 1) side = 1;
      if (net.band(j) == level) side = 2;
      if (!side) continue;
      if (side == last) return false;
      last = side;
    }
  }
  return true;
}

std::vector<Brick> bricks(const Network& net) {
  std::vector<std::vector<int>> by_band(net.n());
  for (int j = 0; j < net.m(); ++j) by_band[net.band(j)].push_back(j);
  std::vector<Brick> out;
  for (int b = 1; b < net.n(); ++b)
    for (std::size_t t = 0; t + 1 < by_band[b].size(); ++t)
      out.push_back({b, by_band[b][t], by_band[b][t + 1], net.n() - b});
  return out;
}

long long total_depth(const Network& net) {
  long long d = 0;
  for (const Brick& b : bricks(net)) d += b.depth;
  return d;
}

Network restriction(const Arrangement& arr, const std::vector<int>& pseudolines) {
  const Network& net = arr.network();
  std::vector<char> keep(net.n() + 1, 0);
  for (int u : pseudolines) {
    if (u < 1 || u > net.n()) fail(ErrorCode::invalid_argument, "pseudoline label out of range");
    keep[u] = 1;
  }
  int kn = 0;
  for (int u = 1; u <= net.n(); ++u) kn += keep[u];
  if (kn < 1) fail(ErrorCode::invalid_argument, "empty restriction");

  std::vector<int> occ(net.n() + 1);
  std::iota(occ.begin(), occ.end(), 0);
  std::vector<int> bands;
  for (int j = 0; j < net.m(); ++j) {
    int b = net.band(j);
    if (keep[occ[b]] && keep[occ[b + 1]]) {
      int q = 0;
      for (int l = 1; l <= b; ++l) q += keep[occ[l]];
      bands.push_back(q);
    }
    if (arr.mark(j) == Mark::crossing) std::swap(occ[b], occ[b + 1]);
  }
  return Network(kn, std::move(bands));
}

UniversalityEmbedding universality_embedding(const Network& net) {
  const int n = net.n(), m = net.m();
  if (n < 2) fail(ErrorCode::too_few_levels, "need at least two levels");
  if (m < 1) fail(ErrorCode::invalid_argument, "need at least one commutator");
  Network host = kernel(bubble_network(n + 2 * m - 2), m - 1);
  std::vector<int> witness(m, -1);
  std::vector<char> used(host.m(), 0);
  for (int i = 0; i < m; ++i) {
    std::pair<int, int> label{i + 1, i + 1 + net.band(i) + m - 1};
    int j = host.find_label(label);
    BRICK_CHECK(j >= 0, "universality witness label present in host");
    BRICK_CHECK(!used[j], "universality witness labels distinct");
    used[j] = 1;
    witness[i] = j;
  }
  std::vector<int> frozen;
  for (int j = 0; j < host.m(); ++j)
    if (!used[j]) frozen.push_back(j);
  return {std::move(host), std::move(witness), std::move(frozen)};
}

}  // namespace brick
