#include "brick/triangulations.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <sstream>

namespace brick {

PolygonWord::PolygonWord(std::string word) : word_(std::move(word)) {
  for (char c : word_)
    if (c != 'a' && c != 'b') fail(ErrorCode::invalid_argument, "word must be over {a, b}");
  if (word_.empty()) fail(ErrorCode::invalid_argument, "polygon needs at least 3 vertices");
  n_ = static_cast<int>(word_.size()) + 2;
  cyclic_.push_back(1);
  for (int v = 2; v <= n_ - 1; ++v)
    if (letter(v) == 'a') cyclic_.push_back(v);
  cyclic_.push_back(n_);
  for (int v = n_ - 1; v >= 2; --v)
    if (letter(v) == 'b') cyclic_.push_back(v);
  pos_.assign(n_ + 1, -1);
  for (int i = 0; i < n_; ++i) pos_[cyclic_[i]] = i;
}

char PolygonWord::letter(int v) const {
  if (v < 2 || v > n_ - 1) fail(ErrorCode::invalid_argument, "no letter for hull-extreme vertices");
  return word_[v - 2];
}

namespace {
int diagonal_count(int n, int k) { return k * (2 * n - 2 * k - 1); }

std::pair<int, int> check_pair(int n, std::pair<int, int> d) {
  if (d.first > d.second) std::swap(d.first, d.second);
  if (d.first < 1 || d.second > n || d.first == d.second)
    fail(ErrorCode::invalid_argument, "not a vertex pair of the polygon");
  return d;
}
}  // namespace

bool PolygonWord::crossing(std::pair<int, int> d1, std::pair<int, int> d2) const {
  d1 = check_pair(n_, d1);
  d2 = check_pair(n_, d2);
  if (d1.first == d2.first || d1.first == d2.second || d1.second == d2.first ||
      d1.second == d2.second)
    return false;
  int a = pos_[d1.first], b = pos_[d1.second];
  auto inside = [&](int v) {
    int p = pos_[v];
    int fwd = ((b - a) % n_ + n_) % n_;
    int off = ((p - a) % n_ + n_) % n_;
    return 0 < off && off < fwd;
  };
  return inside(d2.first) != inside(d2.second);
}

std::pair<int, int> PolygonWord::side_counts(std::pair<int, int> d) const {
  d = check_pair(n_, d);
  int fwd = ((pos_[d.second] - pos_[d.first]) % n_ + n_) % n_;
  int s1 = fwd - 1, s2 = n_ - fwd - 1;
  return {std::min(s1, s2), std::max(s1, s2)};
}

int PolygonWord::arc_edges(int u, int v, int avoiding) const {
  check_pair(n_, {u, v});
  if (avoiding == u || avoiding == v || avoiding < 1 || avoiding > n_)
    fail(ErrorCode::invalid_argument, "bad arc avoidance vertex");
  int fwd = ((pos_[v] - pos_[u]) % n_ + n_) % n_;
  int off = ((pos_[avoiding] - pos_[u]) % n_ + n_) % n_;
  bool avoid_on_fwd = 0 < off && off < fwd;
  return avoid_on_fwd ? n_ - fwd : fwd;
}

DiagClass classify_diagonal(const PolygonWord& poly, int k, std::pair<int, int> d) {
  if (k < 1) fail(ErrorCode::invalid_argument, "k must be positive");
  int small = poly.side_counts(d).first;
  if (small >= k) return DiagClass::relevant;
  if (small == k - 1) return DiagClass::boundary;
  return DiagClass::irrelevant;
}

std::pair<int, int> KTriangulation::normalized(std::pair<int, int> d) {
  if (d.first > d.second) std::swap(d.first, d.second);
  return d;
}

Duality::Duality(const std::string& word, int k)
    : poly_(word), full_(alternating_network(word)), k_(k) {
  if (k_ < 1) fail(ErrorCode::invalid_argument, "k must be positive");
  kern_ = std::make_shared<const Network>(kernel(full_, k_));
  const int n = poly_.n();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (classify_diagonal(poly_, k_, {i, j}) != DiagClass::relevant) compulsory_.insert({i, j});
  BRICK_CHECK(static_cast<int>(compulsory_.size()) == n * k_,
              "n*k diagonals are too close to the hull to cross k others");
  for (int j = 0; j < kern_->m(); ++j) {
    auto [it, fresh] = label_index_.emplace(kern_->label(j), j);
    BRICK_CHECK(fresh, "kernel commutator labels are distinct");
    BRICK_CHECK(classify_diagonal(poly_, k_, it->first) == DiagClass::relevant,
                "kernel commutators carry the k-relevant diagonals");
  }
  BRICK_CHECK(static_cast<int>(label_index_.size() + compulsory_.size()) == n * (n - 1) / 2,
              "every vertex pair is compulsory or relevant");
}

Arrangement Duality::to_arrangement(const KTriangulation& t) const {
  if (t.n != poly_.n() || t.k != k_)
    fail(ErrorCode::invalid_argument, "triangulation belongs to a different polygon");
  for (const std::pair<int, int>& d : compulsory_)
    if (!t.diagonals.count(d))
      fail(ErrorCode::not_a_triangulation, "missing a compulsory (boundary/irrelevant) diagonal");
  std::vector<Mark> marks(kern_->m(), Mark::crossing);
  for (const std::pair<int, int>& d : t.diagonals) {
    if (compulsory_.count(d)) continue;
    auto it = label_index_.find(d);
    if (it == label_index_.end())
      fail(ErrorCode::not_a_triangulation, "diagonal set contains a non-diagonal entry");
    marks[it->second] = Mark::contact;
  }
  auto arr = Arrangement::try_from_marks(kern_, std::move(marks));
  if (!arr)
    fail(ErrorCode::not_a_triangulation, "diagonals do not avoid k+1 mutual crossings");
  BRICK_CHECK(static_cast<int>(t.diagonals.size()) == diagonal_count(poly_.n(), k_),
              "a k-triangulation has k(2n-2k-1) diagonals");
  return *std::move(arr);
}

KTriangulation Duality::to_triangulation(const Arrangement& arr) const {
  if (!(arr.network() == *kern_))
    fail(ErrorCode::invalid_argument, "arrangement lives on a different network");
  KTriangulation t;
  t.n = poly_.n();
  t.k = k_;
  t.diagonals = compulsory_;
  for (int j : arr.contacts()) t.diagonals.insert(kern_->label(j));
  BRICK_CHECK(static_cast<int>(t.diagonals.size()) == diagonal_count(poly_.n(), k_),
              "a k-triangulation has k(2n-2k-1) diagonals");
  return t;
}

KTriangulation Duality::complete(const std::set<std::pair<int, int>>& diagonals) const {
  KTriangulation t;
  t.n = poly_.n();
  t.k = k_;
  t.diagonals = compulsory_;
  for (std::pair<int, int> d : diagonals) t.diagonals.insert(check_pair(poly_.n(), d));
  to_arrangement(t);  // validation only
  return t;
}

std::vector<KTriangulation> Duality::all_triangulations(EnumOptions opt) const {
  std::vector<KTriangulation> out;
  for (const Arrangement& a : all_arrangements(*kern_, opt)) out.push_back(to_triangulation(a));
  return out;
}

std::pair<KTriangulation, std::pair<int, int>> Duality::flip_diagonal(const KTriangulation& t,
                                                                      std::pair<int, int> e) const {
  e = check_pair(poly_.n(), e);
  if (classify_diagonal(poly_, k_, e) != DiagClass::relevant)
    fail(ErrorCode::not_relevant, "only k-relevant diagonals can be flipped");
  if (!t.diagonals.count(e))
    fail(ErrorCode::not_relevant, "diagonal is not in the triangulation");
  Arrangement arr = to_arrangement(t);
  int j = label_index_.at(e);
  auto [below, above] = arr.meet(j);
  int w = arr.crossing_of(below, above);
  Arrangement flipped = flip(arr, j);
  return {to_triangulation(flipped), kern_->label(w)};
}

std::vector<std::vector<int>> Duality::k_stars(const KTriangulation& t) const {
  Arrangement arr = to_arrangement(t);
  const int n = poly_.n();
  const int nk = n - 2 * k_;
  std::vector<std::set<std::pair<int, int>>> edges(nk + 1);
  for (int j : arr.contacts()) {
    auto [below, above] = arr.meet(j);
    edges[below].insert(kern_->label(j));
    edges[above].insert(kern_->label(j));
  }
  // Boundary edges attach to the pseudoline occupying the outermost kernel
  // level at the erased commutator's abscissa.
  std::vector<int> occ(nk + 1);
  std::iota(occ.begin(), occ.end(), 0);
  int kj = 0;
  for (int fj = 0; fj < full_.m(); ++fj) {
    int b = full_.band(fj);
    if (b > k_ && b < full_.n() - k_) {
      if (arr.mark(kj) == Mark::crossing) std::swap(occ[b - k_], occ[b - k_ + 1]);
      ++kj;
    } else {
      std::pair<int, int> d = full_.label(fj);
      bool boundary = classify_diagonal(poly_, k_, d) == DiagClass::boundary;
      BRICK_CHECK(boundary == (b == k_ || b == full_.n() - k_),
                  "k-boundary diagonals cross at the erased bands next to the kernel");
      if (boundary) edges[b == k_ ? occ[1] : occ[nk]].insert(d);
    }
  }
  BRICK_CHECK(kj == kern_->m(), "sweep visits every kernel commutator");

  std::vector<std::vector<int>> stars;
  for (int line = 1; line <= nk; ++line) {
    std::set<int> vset;
    for (const std::pair<int, int>& d : edges[line]) {
      vset.insert(d.first);
      vset.insert(d.second);
    }
    std::vector<int> verts(vset.begin(), vset.end());
    std::sort(verts.begin(), verts.end(),
              [&](int a, int b) { return poly_.position(a) < poly_.position(b); });
    const int sz = static_cast<int>(verts.size());
    BRICK_CHECK(sz == 2 * k_ + 1, "a k-star has 2k+1 vertices");
    BRICK_CHECK(static_cast<int>(edges[line].size()) == 2 * k_ + 1, "a k-star has 2k+1 edges");
    std::set<std::pair<int, int>> expected;
    for (int i = 0; i < sz; ++i)
      expected.insert(KTriangulation::normalized({verts[i], verts[(i + k_) % sz]}));
    BRICK_CHECK(expected == edges[line], "star edges step k vertices around the star");
    stars.push_back(std::move(verts));
  }
  return stars;
}

std::vector<int> hl_coordinates(const PolygonWord& poly, const KTriangulation& t) {
  if (t.k != 1) fail(ErrorCode::invalid_argument, "coordinates are defined for k = 1");
  if (t.n != poly.n()) fail(ErrorCode::invalid_argument, "triangulation of a different polygon");
  const int n = poly.n();
  std::vector<int> out(n - 2);
  for (int j = 1; j <= n - 2; ++j) {
    const int w = j + 1;
    int fu = -1, fv = -1, count = 0;
    for (int u = 1; u < w; ++u) {
      if (!t.contains({u, w})) continue;
      for (int v = w + 1; v <= n; ++v)
        if (t.contains({w, v}) && t.contains({u, v})) {
          fu = u;
          fv = v;
          ++count;
        }
    }
    if (count != 1)
      fail(ErrorCode::not_a_triangulation, "no unique triangle at an interior vertex");
    int pi = poly.arc_edges(fu, w, fv) * poly.arc_edges(w, fv, fu);
    out[j - 1] = (poly.letter(w) == 'b') ? pi : n + 1 - pi;
  }
  return out;
}

std::vector<std::pair<KTriangulation, std::vector<int>>> cyclohedron_vertices(
    const std::string& word) {
  const int len = static_cast<int>(word.size());
  if (len % 2 != 0)
    fail(ErrorCode::not_antisymmetric, "word length must be even");
  for (int i = 1; i <= len; ++i)
    if (word[i - 1] == word[len - i])
      fail(ErrorCode::not_antisymmetric,
           "letters at mirror positions must differ for a half-turn symmetry");
  Duality dual(word, 1);
  const int n2 = len + 2;  // 2n vertices
  auto sigma = [n2](int v) { return n2 + 1 - v; };
  std::vector<std::pair<KTriangulation, std::vector<int>>> out;
  for (const KTriangulation& t : dual.all_triangulations()) {
    std::set<std::pair<int, int>> image;
    for (const std::pair<int, int>& d : t.diagonals)
      image.insert(KTriangulation::normalized({sigma(d.first), sigma(d.second)}));
    if (image == t.diagonals) out.emplace_back(t, brick_vector(dual.to_arrangement(t)));
  }
  return out;
}

std::vector<std::string> valid_sequences(int p, int q) {
  if (p < 1 || q < 1) fail(ErrorCode::invalid_argument, "p and q must be positive");
  BRICK_CHECK(q <= 25, "sequence length too large to enumerate");
  std::vector<std::string> out;
  for (unsigned mask = 1; mask + 1 < (1u << q); ++mask) {
    std::string s(q, '0');
    for (int i = 0; i < q; ++i)
      if (mask >> (q - 1 - i) & 1u) s[i] = '1';
    int last_one = -1;
    bool ok = true;
    for (int i = 0; i < q && ok; ++i)
      if (s[i] == '1') {
        if (last_one >= 0 && i - last_one - 1 >= p) ok = false;
        last_one = i;
      }
    if (ok) out.push_back(std::move(s));
  }
  return out;
}

std::vector<long long> valid_sequence_series(int p, int qmax) {
  if (p < 1 || qmax < 0) fail(ErrorCode::invalid_argument, "p must be positive, qmax nonnegative");
  // denominator (1 - 2x + x^{p+1})(1 - x), numerator x^2 (2 - x^p)
  std::vector<long long> a(p + 2, 0);
  a[0] = 1;
  a[1] = -2;
  a[p + 1] += 1;
  std::vector<long long> den(p + 3, 0);
  for (int i = 0; i < p + 2; ++i) {
    den[i] += a[i];
    den[i + 1] -= a[i];
  }
  std::vector<long long> num(std::max(p + 3, qmax + 1), 0);
  num[2] += 2;
  num[p + 2] -= 1;
  BRICK_CHECK(den[0] == 1, "series denominator is monic");
  std::vector<long long> c(qmax + 1, 0);
  for (int k = 0; k <= qmax; ++k) {
    long long acc = num[k];
    for (int i = 1; i <= std::min(k, p + 2); ++i) acc -= den[i] * c[k - i];
    c[k] = acc;
  }
  return c;
}

std::vector<std::pair<int, int>> d_sigma(int n, int k, const std::string& sigma) {
  if (k < 1) fail(ErrorCode::invalid_argument, "k must be positive");
  if (static_cast<int>(sigma.size()) != n - 2 * k)
    fail(ErrorCode::invalid_argument, "sequence length must be n - 2k");
  for (char c : sigma)
    if (c != '0' && c != '1') fail(ErrorCode::invalid_argument, "sequence must be over {0, 1}");
  std::string padded = std::string(k, '0') + sigma + std::string(k, '0');
  std::vector<int> zeros;
  for (int i = 0; i < n; ++i)
    if (padded[i] == '0') zeros.push_back(i + 1);
  const int count = static_cast<int>(zeros.size()) - k;  // |sigma|_0 + k
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < count; ++i) out.emplace_back(zeros[i], zeros[i + k]);
  return out;
}

std::string triangulation_to_text(const KTriangulation& t) {
  std::ostringstream os;
  os << t.n << " " << t.k << "\n";
  for (const std::pair<int, int>& d : t.diagonals) os << d.first << " " << d.second << "\n";
  return os.str();
}

KTriangulation triangulation_from_text(const std::string& text) {
  std::istringstream is(text);
  KTriangulation t;
  if (!(is >> t.n >> t.k)) fail(ErrorCode::invalid_argument, "missing n/k header");
  int a, b;
  while (is >> a) {
    if (!(is >> b)) fail(ErrorCode::invalid_argument, "dangling diagonal endpoint");
    t.diagonals.insert(KTriangulation::normalized({a, b}));
  }
  if (!is.eof()) fail(ErrorCode::invalid_argument, "malformed diagonal line");
  return t;
}

}  // namespace brick
