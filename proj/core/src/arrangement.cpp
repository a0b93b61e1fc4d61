#include "brick/arrangement.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace brick {

std::vector<std::vector<int>> ContactGraph::components() const {
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const ContactArc& a : arcs) parent[find(a.from)] = find(a.to);
  std::map<int, std::vector<int>> by_root;
  for (int v = 1; v <= n; ++v) by_root[find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : by_root) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Arrangement> Arrangement::try_from_marks(std::shared_ptr<const Network> net,
                                                       std::vector<Mark> marks) {
  const Network& N = *net;
  if (static_cast<int>(marks.size()) != N.m()) return std::nullopt;
  const int n = N.n();
  Arrangement a;
  a.net_ = std::move(net);
  a.marks_ = std::move(marks);
  a.meets_.resize(N.m());
  a.crossing_index_.assign(static_cast<std::size_t>(n) * n, -1);
  a.contact_count_ = 0;

  std::vector<int> occ(n + 1);
  std::iota(occ.begin(), occ.end(), 0);
  for (int j = 0; j < N.m(); ++j) {
    int b = N.band(j);
    int below = occ[b], above = occ[b + 1];
    a.meets_[j] = {below, above};
    if (a.marks_[j] == Mark::crossing) {
      int lo = std::min(below, above) - 1, hi = std::max(below, above) - 1;
      int& slot = a.crossing_index_[static_cast<std::size_t>(lo) * n + hi];
      if (slot != -1) return std::nullopt;  // a pair may cross only once
      slot = j;
      std::swap(occ[b], occ[b + 1]);
    } else {
      ++a.contact_count_;
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (a.crossing_index_[static_cast<std::size_t>(i) * n + j] < 0) return std::nullopt;
  return a;
}

Arrangement Arrangement::from_marks(std::shared_ptr<const Network> net, std::vector<Mark> marks) {
  auto a = try_from_marks(std::move(net), std::move(marks));
  if (!a) fail(ErrorCode::invalid_argument, "marks do not describe a pseudoline arrangement");
  return *std::move(a);
}

int Arrangement::crossing_of(int i, int j) const {
  const int n = net_->n();
  if (i < 1 || j < 1 || i > n || j > n || i == j)
    fail(ErrorCode::invalid_argument, "bad pseudoline pair");
  int lo = std::min(i, j) - 1, hi = std::max(i, j) - 1;
  return crossing_index_[static_cast<std::size_t>(lo) * n + hi];
}

std::vector<int> Arrangement::contacts() const {
  std::vector<int> out;
  out.reserve(contact_count_);
  for (int j = 0; j < static_cast<int>(marks_.size()); ++j)
    if (marks_[j] == Mark::contact) out.push_back(j);
  return out;
}

std::string Arrangement::mark_string() const {
  std::string s(marks_.size(), 'X');
  for (std::size_t j = 0; j < marks_.size(); ++j)
    if (marks_[j] == Mark::contact) s[j] = 'C';
  return s;
}

Arrangement greedy(std::shared_ptr<const Network> net) {
  const Network& N = *net;
  const int n = N.n();
  std::vector<int> occ(n + 1);
  std::iota(occ.begin(), occ.end(), 0);
  std::vector<Mark> marks(N.m());
  long long crossings = 0;
  for (int j = 0; j < N.m(); ++j) {
    int b = N.band(j);
    // Two pseudolines stay in initial relative order until they cross, so
    // "smaller label below" means the pair has not crossed yet.
    if (occ[b] < occ[b + 1]) {
      marks[j] = Mark::crossing;
      std::swap(occ[b], occ[b + 1]);
      ++crossings;
    } else {
      marks[j] = Mark::contact;
    }
  }
  if (crossings != static_cast<long long>(n) * (n - 1) / 2)
    fail(ErrorCode::not_sorting, "network does not support an arrangement");
  auto a = Arrangement::try_from_marks(std::move(net), std::move(marks));
  BRICK_CHECK(a.has_value(), "greedy marks validate");
  return *std::move(a);
}

Arrangement greedy(const Network& net) { return greedy(std::make_shared<const Network>(net)); }

bool is_sorting(const Network& net) {
  const int n = net.n();
  std::vector<int> occ(n + 1);
  std::iota(occ.begin(), occ.end(), 0);
  long long crossings = 0;
  for (int j = 0; j < net.m(); ++j) {
    int b = net.band(j);
    if (occ[b] < occ[b + 1]) {
      std::swap(occ[b], occ[b + 1]);
      ++crossings;
    }
  }
  return crossings == static_cast<long long>(n) * (n - 1) / 2;
}

Arrangement flip(const Arrangement& arr, int contact_index) {
  if (contact_index < 0 || contact_index >= arr.network().m() ||
      arr.mark(contact_index) != Mark::contact)
    fail(ErrorCode::not_a_contact,
         "commutator " + std::to_string(contact_index + 1) + " is not a contact");
  auto [below, above] = arr.meet(contact_index);
  int w = arr.crossing_of(below, above);
  std::vector<Mark> marks = arr.marks();
  marks[contact_index] = Mark::crossing;
  marks[w] = Mark::contact;
  auto res = Arrangement::try_from_marks(arr.network_ptr(), std::move(marks));
  BRICK_CHECK(res.has_value(), "flip produces an arrangement");
  return *std::move(res);
}

bool is_decreasing_flip(const Arrangement& arr, int contact_index) {
  if (contact_index < 0 || contact_index >= arr.network().m() ||
      arr.mark(contact_index) != Mark::contact)
    fail(ErrorCode::not_a_contact,
         "commutator " + std::to_string(contact_index + 1) + " is not a contact");
  auto [below, above] = arr.meet(contact_index);
  return arr.crossing_of(below, above) < contact_index;
}

ContactGraph contact_graph(const Arrangement& arr) {
  ContactGraph g;
  g.n = arr.network().n();
  for (int j : arr.contacts()) {
    auto [below, above] = arr.meet(j);
    g.arcs.push_back({above, below, j});
  }
  return g;
}

std::vector<int> brick_vector(const Arrangement& arr) {
  const Network& N = arr.network();
  const int n = N.n();
  auto bs = bricks(N);
  std::vector<std::vector<const Brick*>> by_left(N.m());
  for (const Brick& b : bs) by_left[b.left_wall].push_back(&b);

  std::vector<int> occ(n + 1);
  std::iota(occ.begin(), occ.end(), 0);
  std::vector<int> w(n, 0);
  for (int j = 0; j < N.m(); ++j) {
    if (arr.mark(j) == Mark::crossing) std::swap(occ[N.band(j)], occ[N.band(j) + 1]);
    for (const Brick* br : by_left[j])
      for (int l = br->band + 1; l <= n; ++l) ++w[occ[l] - 1];
  }
  return w;
}

std::vector<int> summand_vector(const Arrangement& arr, const Brick& brick) {
  const Network& N = arr.network();
  const int n = N.n();
  if (brick.left_wall < 0 || brick.right_wall >= N.m() || brick.left_wall >= brick.right_wall ||
      N.band(brick.left_wall) != brick.band || N.band(brick.right_wall) != brick.band)
    fail(ErrorCode::invalid_argument, "brick does not belong to this network");
  std::vector<int> occ(n + 1);
  std::iota(occ.begin(), occ.end(), 0);
  std::vector<int> w(n, 0);
  for (int j = 0; j <= brick.left_wall; ++j)
    if (arr.mark(j) == Mark::crossing) std::swap(occ[N.band(j)], occ[N.band(j) + 1]);
  for (int l = brick.band + 1; l <= n; ++l) w[occ[l] - 1] = 1;
  return w;
}

Arrangement from_contact_graph(const Network& net, const std::vector<std::pair<int, int>>& arcs) {
  auto sp = std::make_shared<const Network>(net);
  const int n = net.n();
  std::map<std::pair<int, int>, int> remaining;
  for (auto [from, to] : arcs) {
    if (from < 1 || from > n || to < 1 || to > n || from == to)
      fail(ErrorCode::invalid_argument, "bad contact arc");
    remaining[{from, to}]++;
  }
  std::vector<int> occ(n + 1);
  std::iota(occ.begin(), occ.end(), 0);
  std::vector<Mark> marks(net.m());
  for (int j = 0; j < net.m(); ++j) {
    int b = net.band(j);
    int below = occ[b], above = occ[b + 1];
    auto it = remaining.find({above, below});
    if (it != remaining.end() && it->second > 0) {
      --it->second;
      marks[j] = Mark::contact;
    } else {
      marks[j] = Mark::crossing;
      std::swap(occ[b], occ[b + 1]);
    }
  }
  for (auto& [arc, count] : remaining)
    if (count > 0)
      fail(ErrorCode::graph_mismatch, "no arrangement of this network has that contact graph");
  auto res = Arrangement::try_from_marks(std::move(sp), std::move(marks));
  if (!res)
    fail(ErrorCode::graph_mismatch, "no arrangement of this network has that contact graph");
  return *std::move(res);
}

Arrangement parse_marks(std::shared_ptr<const Network> net, const std::string& s) {
  if (static_cast<int>(s.size()) != net->m())
    fail(ErrorCode::invalid_argument, "mark string length must equal the commutator count");
  std::vector<Mark> marks(s.size());
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (s[j] == 'X')
      marks[j] = Mark::crossing;
    else if (s[j] == 'C')
      marks[j] = Mark::contact;
    else
      fail(ErrorCode::invalid_argument, "mark string must be over {X, C}");
  }
  return Arrangement::from_marks(std::move(net), std::move(marks));
}

}  // namespace brick
