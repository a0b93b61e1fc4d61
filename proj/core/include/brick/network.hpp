#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "brick/error.hpp"

namespace brick {

class Arrangement;

/// A sorting-network diagram: n horizontal levels (numbered 1..n, bottom to
/// top) and m commutators, each joining two consecutive levels. The defining
/// datum is the total left-to-right order of the commutators; band(j) is the
/// lower of the two levels joined by commutator j.
///
/// Commutators may optionally carry a label {p, q}: the pair of pseudolines of
/// the unique supported arrangement that meet there. Labels are produced by
/// alternating_network() and preserved by kernel(); they drive the polygon
/// duality in triangulations.hpp.
class Network {
 public:
  Network(int n, std::vector<int> bands, std::vector<std::pair<int, int>> labels = {});

  int n() const { return n_; }
  int m() const { return static_cast<int>(bands_.size()); }
  int band(int j) const { return bands_[j]; }
  const std::vector<int>& bands() const { return bands_; }

  bool has_labels() const { return !labels_.empty(); }
  std::pair<int, int> label(int j) const { return labels_[j]; }
  const std::vector<std::pair<int, int>>& labels() const { return labels_; }

  /// Index of the commutator carrying a given label, or -1.
  int find_label(std::pair<int, int> pq) const;

  bool operator==(const Network& o) const { return n_ == o.n_ && bands_ == o.bands_; }

 private:
  int n_;
  std::vector<int> bands_;
  std::vector<std::pair<int, int>> labels_;  // empty or size m
};

/// A bounded cell of the diagram: it lives in band `band` between two
/// consecutive band-mates left_wall < right_wall. depth = n - band is the
/// number of levels above the brick.
struct Brick {
  int band;
  int left_wall;
  int right_wall;
  int depth;
  bool operator==(const Brick& o) const {
    return band == o.band && left_wall == o.left_wall && right_wall == o.right_wall;
  }
};

/// Multigraph input for duplicated_network (vertices are levels 1..n).
struct DupGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  bool connected() const;
};

enum class Axis { vertical, horizontal };

Network make_network(int n, const std::vector<int>& bands);

/// The reduced alternating network N_x of a word x over {a, b} (|x| = n - 2):
/// the (i+1)-th pseudoline of its unique arrangement touches the top level if
/// x_i = a and the bottom level if x_i = b. Commutators carry labels.
Network alternating_network(const std::string& word);

/// b^(n-2) shorthand: the bubble network B_n.
Network bubble_network(int n);

/// Two levels, m parallel commutators.
Network x_network(int m);

/// Three levels, m commutators with bands 2,1,2,1,...
Network y_network(int m);

/// Erase the first and last k levels together with every commutator incident
/// to them; surviving commutators keep their labels.
Network kernel(const Network& net, int k);

/// Base B_n with the commutator labeled {i, j} duplicated (one extra copy
/// immediately to its right) for every edge {i, j} of g.
Network duplicated_network(const DupGraph& g);

/// vertical: reverse the left-to-right order; horizontal: flip bands b -> n-b.
/// Labels are dropped (the unique arrangement is relabeled by the reflection).
Network reflect(const Network& net, Axis axis);

/// Band-mates adjacent to every intermediate level alternate above/below.
bool is_alternating(const Network& net);

/// All bricks, ordered by (band, left_wall).
std::vector<Brick> bricks(const Network& net);

/// D(N) = sum of brick depths.
long long total_depth(const Network& net);

/// Keep the curves of `arr` labeled by `pseudolines` (and the commutators
/// joining two kept curves); returns the network they trace.
Network restriction(const Arrangement& arr, const std::vector<int>& pseudolines);

/// net (n levels, m commutators, i-th at band b_i) embedded in the host
/// kernel B_{n+2m-2}^{m-1}: witness commutators are those labeled
/// {i, i + b_i + m - 1}; every other host commutator is frozen.
struct UniversalityEmbedding {
  Network host;
  std::vector<int> witness;  // witness[i] = host index of the i-th net commutator
  std::vector<int> frozen;   // ascending host indices
};
UniversalityEmbedding universality_embedding(const Network& net);

}  // namespace brick
