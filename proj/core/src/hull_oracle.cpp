#include "brick/hull_oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

namespace brick {

namespace {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

std::string vec_str(const std::vector<int>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

// Fraction-free elimination; every intermediate entry is a minor of the input,
// so with small integer inputs everything fits comfortably in 64 bits.
int matrix_rank(std::vector<std::vector<long long>> a) {
  const int rows = static_cast<int>(a.size());
  if (!rows) return 0;
  const int cols = static_cast<int>(a[0].size());
  int rank = 0;
  long long prev = 1;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[rank], a[piv]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int c = col + 1; c < cols; ++c) {
        __int128 num = static_cast<__int128>(a[r][c]) * a[rank][col] -
                       static_cast<__int128>(a[r][col]) * a[rank][c];
        BRICK_CHECK(num % prev == 0, "fraction-free elimination stays integral");
        __int128 q = num / prev;
        BRICK_CHECK(q<(static_cast<__int128>(1) << 62) && q> - (static_cast<__int128>(1) << 62),
                    "rank arithmetic stays within bounds");
        a[r][c] = static_cast<long long>(q);
      }
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

BigInt dot_big(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void make_primitive(std::vector<BigInt>& v) {
  BigInt g = 0;
  for (const BigInt& c : v) g = boost::multiprecision::gcd(g, boost::multiprecision::abs(c));
  if (g > 1)
    for (BigInt& c : v) c /= g;
}

/// Independent subset of `vectors` spanning the same space.
std::vector<std::vector<BigInt>> span_basis(const std::vector<std::vector<BigInt>>& vectors) {
  std::vector<std::vector<Rat>> echelon;  // rows with recorded pivot columns
  std::vector<std::size_t> pivots;
  std::vector<std::vector<BigInt>> basis;
  for (const std::vector<BigInt>& v : vectors) {
    std::vector<Rat> r(v.begin(), v.end());
    for (std::size_t i = 0; i < echelon.size(); ++i)
      if (r[pivots[i]] != 0) {
        Rat f = r[pivots[i]];
        for (std::size_t j = 0; j < r.size(); ++j) r[j] -= f * echelon[i][j];
      }
    std::size_t p = 0;
    while (p < r.size() && r[p] == 0) ++p;
    if (p == r.size()) continue;
    Rat d = r[p];
    for (Rat& c : r) c /= d;
    echelon.push_back(std::move(r));
    pivots.push_back(p);
    basis.push_back(v);
  }
  return basis;
}

/// Primitive integer basis of {u in span(B) : u ⊥ c for all c in C}, for an
/// independent family B.
std::vector<std::vector<BigInt>> in_span_orthogonal(const std::vector<std::vector<BigInt>>& B,
                                                    const std::vector<std::vector<BigInt>>& C) {
  const std::size_t nb = B.size();
  std::vector<std::vector<Rat>> M;
  for (const std::vector<BigInt>& c : C) {
    std::vector<Rat> row(nb);
    for (std::size_t j = 0; j < nb; ++j) row[j] = Rat(dot_big(c, B[j]));
    M.push_back(std::move(row));
  }
  // Gauss-Jordan on M, then read the nullspace off the free columns.
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < nb && rank < M.size(); ++col) {
    std::size_t piv = rank;
    while (piv < M.size() && M[piv][col] == 0) ++piv;
    if (piv == M.size()) continue;
    std::swap(M[rank], M[piv]);
    Rat d = M[rank][col];
    for (Rat& c : M[rank]) c /= d;
    for (std::size_t i = 0; i < M.size(); ++i)
      if (i != rank && M[i][col] != 0) {
        Rat f = M[i][col];
        for (std::size_t j = 0; j < nb; ++j) M[i][j] -= f * M[rank][j];
      }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<char> is_piv(nb, 0);
  for (std::size_t c : pivot_col) is_piv[c] = 1;
  std::vector<std::vector<BigInt>> out;
  for (std::size_t col = 0; col < nb; ++col) {
    if (is_piv[col]) continue;
    std::vector<Rat> alpha(nb, 0);
    alpha[col] = 1;
    for (std::size_t i = 0; i < rank; ++i) alpha[pivot_col[i]] = -M[i][col];
    BigInt lcm = 1;
    for (const Rat& q : alpha)
      lcm = boost::multiprecision::lcm(lcm, BigInt(boost::multiprecision::denominator(q)));
    const std::size_t amb = B[0].size();
    std::vector<BigInt> u(amb, 0);
    for (std::size_t j = 0; j < nb; ++j) {
      BigInt coef = BigInt(boost::multiprecision::numerator(alpha[j])) *
                    (lcm / BigInt(boost::multiprecision::denominator(alpha[j])));
      for (std::size_t t = 0; t < amb; ++t) u[t] += coef * B[j][t];
    }
    make_primitive(u);
    out.push_back(std::move(u));
  }
  return out;
}

struct HullCtx {
  const std::vector<std::vector<int>>& pts;
  std::size_t amb;
  std::map<std::vector<int>, std::vector<std::vector<int>>> memo;

  explicit HullCtx(const std::vector<std::vector<int>>& p) : pts(p), amb(p.at(0).size()) {}

  std::vector<BigInt> diff(int a, int b) const {
    std::vector<BigInt> d(amb);
    for (std::size_t i = 0; i < amb; ++i) d[i] = BigInt(pts[a][i]) - pts[b][i];
    return d;
  }

  int rank_of(const std::vector<int>& S) const {
    std::vector<std::vector<long long>> rows;
    for (std::size_t i = 1; i < S.size(); ++i) {
      std::vector<long long> r(amb);
      for (std::size_t c = 0; c < amb; ++c) r[c] = pts[S[i]][c] - pts[S[0]][c];
      rows.push_back(std::move(r));
    }
    return rows.empty() ? 0 : matrix_rank(std::move(rows));
  }

  /// Supporting functional step: given nonneg values y over S (zero set Z) and
  /// a direction w, move to the face Z ∪ argmin_{y>0} x/y where x = <w, p-r0>.
  /// Returns the new zero set; new functional = y*·w - x*·(old functional).
  std::vector<int> sharpen(const std::vector<int>& S, int r0, const std::vector<BigInt>& u,
                           const std::vector<BigInt>& w, std::vector<BigInt>* out_functional) {
    BigInt bx, by = 0;
    for (int p : S) {
      BigInt y = dot_big(u, diff(p, r0));
      BRICK_CHECK(y >= 0, "functional supports the subset");
      if (y == 0) continue;
      BigInt x = dot_big(w, diff(p, r0));
      if (by == 0 || x * by < bx * y) {
        bx = x;
        by = y;
      }
    }
    BRICK_CHECK(by > 0, "some point lies off the supporting hyperplane");
    std::vector<int> zero;
    for (int p : S) {
      BigInt y = dot_big(u, diff(p, r0));
      BigInt x = dot_big(w, diff(p, r0));
      if (x * by == bx * y) zero.push_back(p);  // zero set of y*·w - x*·u
    }
    if (out_functional) {
      std::vector<BigInt> zeta(amb);
      for (std::size_t t = 0; t < amb; ++t) zeta[t] = by * w[t] - bx * u[t];
      make_primitive(zeta);
      *out_functional = std::move(zeta);
    }
    std::sort(zero.begin(), zero.end());
    return zero;
  }

  std::vector<int> rotate(const std::vector<int>& S, const std::vector<int>& F,
                          const std::vector<int>& R) {
    const int r0 = R[0];
    std::vector<std::vector<BigInt>> ds, df, dr;
    for (int s : S)
      if (s != r0) ds.push_back(diff(s, r0));
    for (int f : F)
      if (f != r0) df.push_back(diff(f, r0));
    for (int x : R)
      if (x != r0) dr.push_back(diff(x, r0));

    auto us = in_span_orthogonal(span_basis(ds), df);
    BRICK_CHECK(us.size() == 1, "facet has a unique normal direction in the span");
    std::vector<BigInt> u = std::move(us[0]);
    int q0 = -1;
    for (int s : S)
      if (!std::binary_search(F.begin(), F.end(), s)) {
        q0 = s;
        break;
      }
    BRICK_CHECK(q0 >= 0, "a facet is a proper subset");
    if (dot_big(u, diff(q0, r0)) < 0)
      for (BigInt& c : u) c = -c;

    auto ws = in_span_orthogonal(span_basis(df), dr);
    BRICK_CHECK(ws.size() == 1, "ridge has a unique rotation direction in the facet");
    std::vector<BigInt> w = std::move(ws[0]);
    int f0 = -1;
    for (int f : F)
      if (!std::binary_search(R.begin(), R.end(), f)) {
        f0 = f;
        break;
      }
    BRICK_CHECK(f0 >= 0, "a ridge is a proper subset of its facet");
    if (dot_big(w, diff(f0, r0)) < 0)
      for (BigInt& c : w) c = -c;

    std::vector<int> zero = sharpen(S, r0, u, w, nullptr);
    std::vector<int> G;
    for (int p : zero)
      if (dot_big(u, diff(p, r0)) > 0 || std::binary_search(R.begin(), R.end(), p)) G.push_back(p);
    // zero = R ∪ {y > 0 minimizers}: points of F\R sit at x > 0, y = 0 and are
    // never in the zero set of the rotated functional.
    BRICK_CHECK(G == zero, "rotated support set is the ridge plus new points");
    BRICK_CHECK(G != F, "rotation reaches a different facet");
    return G;
  }

  std::vector<int> initial_facet(const std::vector<int>& S, int r) {
    // Start from the minimizers of some coordinate, then cut down to a facet.
    std::vector<int> C;
    std::vector<BigInt> u(amb, 0);
    int base = -1;
    for (std::size_t t = 0; t < amb && base < 0; ++t) {
      int lo = pts[S[0]][t];
      for (int s : S) lo = std::min(lo, pts[s][t]);
      std::vector<int> mins;
      for (int s : S)
        if (pts[s][t] == lo) mins.push_back(s);
      if (mins.size() < S.size()) {
        C = std::move(mins);
        u.assign(amb, 0);
        u[t] = 1;
        base = C[0];
      }
    }
    BRICK_CHECK(base >= 0, "a subset of rank >= 1 is not constant");
    while (rank_of(C) < r - 1) {
      std::vector<std::vector<BigInt>> ds, constraints;
      for (int s : S)
        if (s != base) ds.push_back(diff(s, base));
      for (int c : C)
        if (c != base) constraints.push_back(diff(c, base));
      constraints.push_back(u);
      auto wcands = in_span_orthogonal(span_basis(ds), constraints);
      BRICK_CHECK(!wcands.empty(), "a non-facet face can be rotated further");
      C = sharpen(S, base, u, wcands[0], &u);
      base = C[0];
    }
    return C;
  }

  const std::vector<std::vector<int>>& facets_of(const std::vector<int>& S) {
    auto it = memo.find(S);
    if (it != memo.end()) return it->second;
    std::vector<std::vector<int>> result;
    const int r = rank_of(S);
    if (r <= 0) {
      // a point (or empty): no proper facets
    } else if (r == 1) {
      std::vector<BigInt> d;
      for (std::size_t i = 1; i < S.size(); ++i)
        if (pts[S[i]] != pts[S[0]]) {
          d = diff(S[i], S[0]);
          break;
        }
      int lo = S[0], hi = S[0];
      BigInt lov = 0, hiv = 0;
      for (int s : S) {
        BigInt v = dot_big(d, diff(s, S[0]));
        if (v < lov) {
          lov = v;
          lo = s;
        }
        if (v > hiv) {
          hiv = v;
          hi = s;
        }
      }
      result.push_back({lo});
      result.push_back({hi});
      std::sort(result.begin(), result.end());
    } else {
      std::vector<int> f0 = initial_facet(S, r);
      std::set<std::vector<int>> seen{f0};
      std::deque<std::vector<int>> queue{f0};
      while (!queue.empty()) {
        std::vector<int> f = std::move(queue.front());
        queue.pop_front();
        for (const std::vector<int>& ridge : facets_of(f)) {
          std::vector<int> g = rotate(S, f, ridge);
          if (seen.insert(g).second) queue.push_back(g);
        }
      }
      result.assign(seen.begin(), seen.end());
    }
    return memo.emplace(S, std::move(result)).first->second;
  }
};

[[noreturn]] void mismatch(const std::string& what) { fail(ErrorCode::oracle_mismatch, what); }

}  // namespace

int affine_rank(const std::vector<std::vector<int>>& points) {
  if (points.empty()) return -1;
  std::vector<std::vector<long long>> rows;
  for (std::size_t i = 1; i < points.size(); ++i) {
    std::vector<long long> r(points[i].size());
    for (std::size_t c = 0; c < r.size(); ++c) r[c] = points[i][c] - points[0][c];
    rows.push_back(std::move(r));
  }
  return rows.empty() ? 0 : matrix_rank(std::move(rows));
}

bool in_convex_hull(const std::vector<int>& x, const std::vector<std::vector<int>>& pts) {
  const int k = static_cast<int>(pts.size());
  if (!k) return false;
  const int n = static_cast<int>(x.size());
  const int rows = n + 1;
  const int cols = k + rows;  // lambdas then artificials
  std::vector<std::vector<Rat>> T(rows, std::vector<Rat>(cols + 1, 0));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < k; ++c) T[r][c] = Rat(pts[c][r]) - x[r];
  for (int c = 0; c < k; ++c) T[n][c] = 1;
  T[n][cols] = 1;
  std::vector<int> basis(rows);
  for (int r = 0; r < rows; ++r) {
    // Flip rows to keep the artificial basis feasible (rhs >= 0 throughout).
    if (T[r][cols] < 0)
      for (int c = 0; c <= cols; ++c) T[r][c] = -T[r][c];
    T[r][k + r] = 1;
    basis[r] = k + r;
  }
  auto artificial = [&](int j) { return j >= k; };
  while (true) {
    int enter = -1;
    for (int j = 0; j < cols && enter < 0; ++j) {
      Rat rc = artificial(j) ? 1 : 0;
      for (int r = 0; r < rows; ++r)
        if (artificial(basis[r])) rc -= T[r][j];
      if (rc < 0) enter = j;  // Bland's rule: first improving column
    }
    if (enter < 0) break;
    int leave = -1;
    Rat best;
    for (int r = 0; r < rows; ++r) {
      if (T[r][enter] <= 0) continue;
      Rat ratio = T[r][cols] / T[r][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    BRICK_CHECK(leave >= 0, "phase-1 objective is bounded below");
    Rat piv = T[leave][enter];
    for (int c = 0; c <= cols; ++c) T[leave][c] /= piv;
    for (int r = 0; r < rows; ++r) {
      if (r == leave || T[r][enter] == 0) continue;
      Rat f = T[r][enter];
      for (int c = 0; c <= cols; ++c) T[r][c] -= f * T[leave][c];
    }
    basis[leave] = enter;
  }
  Rat obj = 0;
  for (int r = 0; r < rows; ++r)
    if (artificial(basis[r])) obj += T[r][cols];
  return obj == 0;
}

std::vector<std::vector<int>> hull_facets(const std::vector<std::vector<int>>& points) {
  BRICK_CHECK(!points.empty(), "hull of a nonempty point set");
  BRICK_CHECK(std::set<std::vector<int>>(points.begin(), points.end()).size() == points.size(),
              "hull points are distinct");
  HullCtx ctx(points);
  std::vector<int> all(points.size());
  std::iota(all.begin(), all.end(), 0);
  return ctx.facets_of(all);
}

OracleReport hull_oracle_verify(const BrickPolytope& p,
                                const std::vector<std::vector<int>>& all_vectors) {
  if (p.ambient > 8)
    fail(ErrorCode::dimension_too_large, "oracle supports at most 8 coordinates");
  OracleReport rep;

  std::vector<std::vector<int>> cloud(all_vectors.begin(), all_vectors.end());
  std::sort(cloud.begin(), cloud.end());
  cloud.erase(std::unique(cloud.begin(), cloud.end()), cloud.end());
  std::set<std::vector<int>> cloud_set(cloud.begin(), cloud.end());
  std::set<std::vector<int>> vset(p.vertices.begin(), p.vertices.end());
  if (vset.size() != p.vertices.size()) mismatch("claimed vertices are not distinct");
  for (const std::vector<int>& v : p.vertices)
    if (!cloud_set.count(v)) mismatch("claimed vertex " + vec_str(v) + " is not among the points");

  const int dim = affine_rank(p.vertices);
  if (dim != p.dim) mismatch("claimed dimension disagrees with the claimed vertex span");
  if (affine_rank(cloud) != dim)
    mismatch("the point cloud spans a different affine hull than the claimed vertices");

  // Facets re-derived from the claimed vertex list alone. Checking every point
  // against every derived inequality certifies conv(points) == conv(vertices);
  // a point is then a vertex iff its tight derived facets meet in that point
  // only (the minimal face containing it is a single point). This realizes the
  // convex-combination checks (a)/(b) without solving linear programs.
  std::vector<std::vector<int>> derived = hull_facets(p.vertices);
  std::sort(derived.begin(), derived.end());
  rep.derived_facets = derived.size();

  const std::size_t cloud_n = cloud.size();
  if (dim == 0) {
    if (cloud_n != 1 || p.vertices.size() != 1) mismatch("a point has exactly one vertex");
    if (!p.facets.empty()) mismatch("a point has no facets");
    rep.vertices_checked = 1;
    return rep;
  }

  std::vector<std::vector<BigInt>> vb;
  for (const std::vector<int>& v : p.vertices) vb.emplace_back(v.begin(), v.end());
  auto dot_point = [&](const std::vector<BigInt>& u, const std::vector<int>& q) {
    BigInt s = 0;
    for (std::size_t c = 0; c < u.size(); ++c) s += u[c] * q[c];
    return s;
  };

  if (dim == 1) {
    if (p.vertices.size() != 2) mismatch("a segment has two vertices");
    if (!p.facets.empty()) mismatch("facets are only stored from dimension 2 up");
    BRICK_CHECK(derived == std::vector<std::vector<int>>({{0}, {1}}),
                "a segment has its endpoints as facets");
    std::vector<BigInt> d(p.ambient);
    for (int c = 0; c < p.ambient; ++c) d[c] = BigInt(p.vertices[1][c]) - p.vertices[0][c];
    const BigInt lo = dot_point(d, p.vertices[0]), hi = dot_point(d, p.vertices[1]);
    for (const std::vector<int>& q : cloud) {
      BigInt t = dot_point(d, q);
      if (t < lo || t > hi)
        mismatch("point " + vec_str(q) + " lies outside the claimed segment");
      const bool endpoint = (t == lo || t == hi);
      if (endpoint != (vset.count(q) > 0))
        mismatch("vertexhood of point " + vec_str(q) + " disagrees with the claim");
      endpoint ? ++rep.vertices_checked : ++rep.nonvertices_checked;
    }
    return rep;
  }

  // dim >= 2: one primitive inward functional per derived facet.
  std::vector<std::vector<BigInt>> directions;
  for (std::size_t i = 1; i < vb.size(); ++i) {
    std::vector<BigInt> dv(p.ambient);
    for (int c = 0; c < p.ambient; ++c) dv[c] = vb[i][c] - vb[0][c];
    directions.push_back(std::move(dv));
  }
  directions = span_basis(directions);

  const std::size_t words = (cloud_n + 63) / 64;
  std::vector<std::vector<std::uint64_t>> tight_mask;
  for (const std::vector<int>& F : derived) {
    const int f0 = F[0];
    std::vector<std::vector<BigInt>> facet_dirs;
    for (int fi : F)
      if (fi != f0) {
        std::vector<BigInt> dv(p.ambient);
        for (int c = 0; c < p.ambient; ++c) dv[c] = vb[fi][c] - vb[f0][c];
        facet_dirs.push_back(std::move(dv));
      }
    auto us = in_span_orthogonal(directions, facet_dirs);
    BRICK_CHECK(us.size() == 1, "derived facet has a unique normal within the span");
    std::vector<BigInt> u = std::move(us[0]);
    BigInt base = dot_point(u, p.vertices[f0]);
    BigInt side = 0;
    for (std::size_t i = 0; i < vb.size() && side == 0; ++i)
      side = dot_point(u, p.vertices[i]) - base;
    BRICK_CHECK(side != 0, "some vertex lies off the derived facet");
    if (side < 0)
      for (BigInt& c : u) c = -c;
    const BigInt rhs = dot_point(u, p.vertices[f0]);
    std::vector<std::uint64_t> mask(words, 0);
    for (std::size_t i = 0; i < cloud_n; ++i) {
      BigInt val = dot_point(u, cloud[i]) - rhs;
      if (val < 0)
        mismatch("point " + vec_str(cloud[i]) +
                 " lies outside the hull of the claimed vertices");
      if (val == 0) mask[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    tight_mask.push_back(std::move(mask));
  }

  for (std::size_t i = 0; i < cloud_n; ++i) {
    std::vector<std::uint64_t> meet(words, ~std::uint64_t{0});
    bool any_tight = false;
    for (const std::vector<std::uint64_t>& mask : tight_mask) {
      if (!(mask[i >> 6] >> (i & 63) & 1)) continue;
      any_tight = true;
      for (std::size_t w = 0; w < words; ++w) meet[w] &= mask[w];
    }
    bool singleton = false;
    if (any_tight) {
      std::size_t bits = 0;
      for (std::uint64_t w : meet) bits += static_cast<std::size_t>(std::popcount(w));
      singleton = (bits == 1) && (meet[i >> 6] >> (i & 63) & 1);
    }
    const bool claimed = vset.count(cloud[i]) > 0;
    if (singleton && !claimed)
      mismatch("point " + vec_str(cloud[i]) + " is a vertex but is not claimed as one");
    if (!singleton && claimed)
      mismatch("claimed vertex " + vec_str(cloud[i]) +
               " is a convex combination of the other points");
    singleton ? ++rep.vertices_checked : ++rep.nonvertices_checked;
  }

  for (const Facet& f : p.facets) {
    std::vector<int> tight;
    for (int i = 0; i < static_cast<int>(p.vertices.size()); ++i) {
      long long d = 0;
      for (int c = 0; c < p.ambient; ++c)
        d += static_cast<long long>(f.normal[c]) * p.vertices[i][c];
      if (d == f.rhs)
        tight.push_back(i);
      else if (d < f.rhs)
        mismatch("facet inequality violated at vertex " + vec_str(p.vertices[i]));
    }
    for (const std::vector<int>& q : cloud) {
      long long d = 0;
      for (int c = 0; c < p.ambient; ++c) d += static_cast<long long>(f.normal[c]) * q[c];
      if (d < f.rhs) mismatch("facet inequality violated at point " + vec_str(q));
    }
    if (tight != f.vertices) mismatch("facet incident set differs from the tight set");
    std::vector<std::vector<int>> coords;
    for (int i : tight) coords.push_back(p.vertices[i]);
    if (affine_rank(coords) != p.dim - 1)
      mismatch("facet support is not (dim-1)-dimensional");
    ++rep.facets_checked;
  }

  std::vector<std::vector<int>> claimed;
  for (const Facet& f : p.facets) claimed.push_back(f.vertices);
  std::sort(claimed.begin(), claimed.end());
  if (derived != claimed) {
    std::string msg = "independent facet derivation disagrees:";
    for (const std::vector<int>& d : derived)
      if (!std::binary_search(claimed.begin(), claimed.end(), d)) {
        msg += " derived-only facet with " + std::to_string(d.size()) + " vertices";
        break;
      }
    for (const std::vector<int>& c : claimed) {
      bool found = false;
      for (const std::vector<int>& d : derived) found |= (d == c);
      if (!found) {
        msg += " claimed-only facet with " + std::to_string(c.size()) + " vertices";
        break;
      }
    }
    mismatch(msg);
  }
  return rep;
}

}  // namespace brick
