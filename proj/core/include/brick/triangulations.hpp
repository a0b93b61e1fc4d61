#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "brick/enumeration.hpp"
#include "brick/network.hpp"

namespace brick {

/// Convex polygon P_x: n = |x| + 2 vertices labeled by abscissa, vertex i+1
/// above the axis when x_i = a, below when x_i = b. Only the combinatorial
/// data survives: the cyclic hull order and the letters.
class PolygonWord {
 public:
  explicit PolygonWord(std::string word);

  int n() const { return n_; }
  const std::string& word() const { return word_; }
  char letter(int v) const;  // side of vertex v, 2 <= v <= n-1

  /// Hull order starting at vertex 1 (1, above left-to-right, n, below
  /// right-to-left).
  const std::vector<int>& cyclic() const { return cyclic_; }
  int position(int v) const { return pos_[v]; }

  /// Do the chords cross (endpoints strictly interleaved on the hull)?
  bool crossing(std::pair<int, int> d1, std::pair<int, int> d2) const;

  /// Vertices strictly on each side of the chord, as (smaller, larger).
  std::pair<int, int> side_counts(std::pair<int, int> d) const;

  /// Hull edges on the arc from u to v not passing through `avoiding`.
  int arc_edges(int u, int v, int avoiding) const;

 private:
  std::string word_;
  int n_;
  std::vector<int> cyclic_;
  std::vector<int> pos_;
};

enum class DiagClass { relevant, boundary, irrelevant };

/// min side >= k: relevant; == k-1: boundary; < k-1: irrelevant.
DiagClass classify_diagonal(const PolygonWord& poly, int k, std::pair<int, int> d);

/// A k-triangulation of P_x stores all of its k(2n-2k-1) diagonals, the
/// k-irrelevant and k-boundary ones included.
struct KTriangulation {
  int n = 0;
  int k = 0;
  std::set<std::pair<int, int>> diagonals;

  bool contains(std::pair<int, int> d) const { return diagonals.count(normalized(d)) > 0; }
  static std::pair<int, int> normalized(std::pair<int, int> d);
  bool operator==(const KTriangulation& o) const { return diagonals == o.diagonals; }
  bool operator<(const KTriangulation& o) const { return diagonals < o.diagonals; }
};

/// Duality with the kernel N_x^k: contacts of an arrangement <-> k-relevant
/// diagonals of a k-triangulation.
class Duality {
 public:
  Duality(const std::string& word, int k);

  const PolygonWord& polygon() const { return poly_; }
  const Network& full_network() const { return full_; }
  const Network& kernel_network() const { return *kern_; }
  int k() const { return k_; }

  /// Diagonals every k-triangulation contains (k-irrelevant + k-boundary).
  const std::set<std::pair<int, int>>& compulsory() const { return compulsory_; }

  /// Marks: contact iff the commutator's label is in T. Throws
  /// NotATriangulation when the induced marks are not an arrangement.
  Arrangement to_arrangement(const KTriangulation& t) const;
  KTriangulation to_triangulation(const Arrangement& arr) const;

  /// Accept any diagonal set, complete it with the compulsory diagonals and
  /// validate through the duality.
  KTriangulation complete(const std::set<std::pair<int, int>>& diagonals) const;

  std::vector<KTriangulation> all_triangulations(EnumOptions opt = {}) const;

  /// Exchange e with the common bisector f of the two k-stars containing it;
  /// returns (flipped triangulation, f). Throws NotRelevant.
  std::pair<KTriangulation, std::pair<int, int>> flip_diagonal(const KTriangulation& t,
                                                               std::pair<int, int> e) const;

  /// The n-2k k-stars of T, one per dual pseudoline: vertex tuples in hull
  /// order, rotated to start at the vertex with the smallest hull position.
  std::vector<std::vector<int>> k_stars(const KTriangulation& t) const;

 private:
  PolygonWord poly_;
  Network full_;
  std::shared_ptr<const Network> kern_;
  int k_;
  std::set<std::pair<int, int>> compulsory_;
  std::map<std::pair<int, int>, int> label_index_;
};

/// For each j in [n-2] the unique triangle u < j+1 < v of T; coordinate j is
/// (edges between u and j+1) x (edges between j+1 and v), complemented to
/// n+1-pi when vertex j+1 lies above the axis.
std::vector<int> hl_coordinates(const PolygonWord& poly, const KTriangulation& t);

/// Triangulations of the antisymmetric 2n-gon word fixed by the central
/// symmetry v -> 2n+1-v, with the brick vectors of their duals.
/// Throws NotAntisymmetric.
std::vector<std::pair<KTriangulation, std::vector<int>>> cyclohedron_vertices(
    const std::string& word);

/// All sigma in {0,1}^q except 0^q and 1^q with no factor 1 0^r 1 for r >= p;
/// lexicographic order.
std::vector<std::string> valid_sequences(int p, int q);

/// Coefficients [x^0..x^qmax] of x^2 (2 - x^p) / ((1 - 2x + x^{p+1})(1 - x)).
std::vector<long long> valid_sequence_series(int p, int qmax);

/// Pad sigma to 0^k sigma 0^k (length n), list the zero positions z_1 < z_2 <
/// ... and form {z_i, z_{i+k}} for i = 1..(zeros(sigma) + k).
std::vector<std::pair<int, int>> d_sigma(int n, int k, const std::string& sigma);

/// "n k" header, then one "i j" line per diagonal, ascending.
std::string triangulation_to_text(const KTriangulation& t);
KTriangulation triangulation_from_text(const std::string& text);

}  // namespace brick
