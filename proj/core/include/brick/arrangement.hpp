#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "brick/network.hpp"

namespace brick {

enum class Mark : unsigned char { crossing, contact };

/// Directed multigraph on the pseudoline labels [1..n]: one arc per contact,
/// oriented from the pseudoline passing above the contact to the one below.
struct ContactArc {
  int from;        // above
  int to;          // below
  int commutator;  // 0-based position in the network
};

struct ContactGraph {
  int n = 0;
  std::vector<ContactArc> arcs;  // in commutator order

  /// Weakly connected components, canonical (sorted members, sorted by min).
  std::vector<std::vector<int>> components() const;
};

/// A pseudoline arrangement supported by a network: one mark per commutator,
/// every pair of pseudolines crossing exactly once. Pseudoline i enters at
/// level i and exits at level n+1-i.
class Arrangement {
 public:
  static std::optional<Arrangement> try_from_marks(std::shared_ptr<const Network> net,
                                                   std::vector<Mark> marks);
  /// Throws InvalidArgument when the marks do not give an arrangement.
  static Arrangement from_marks(std::shared_ptr<const Network> net, std::vector<Mark> marks);

  const Network& network() const { return *net_; }
  std::shared_ptr<const Network> network_ptr() const { return net_; }

  const std::vector<Mark>& marks() const { return marks_; }
  Mark mark(int j) const { return marks_[j]; }

  /// {below, above}: labels of the two pseudolines meeting at commutator j.
  std::pair<int, int> meet(int j) const { return meets_[j]; }

  /// Commutator where pseudolines i and j cross.
  int crossing_of(int i, int j) const;

  /// Ascending indices of contact commutators.
  std::vector<int> contacts() const;
  int contact_count() const { return contact_count_; }

  /// "XC..." over the commutators.
  std::string mark_string() const;

  bool operator==(const Arrangement& o) const { return marks_ == o.marks_; }

 private:
  Arrangement() = default;

  std::shared_ptr<const Network> net_;
  std::vector<Mark> marks_;
  std::vector<std::pair<int, int>> meets_;
  std::vector<int> crossing_index_;  // n*n, -1 off-diagonal init
  int contact_count_ = 0;
};

/// Sweep left to right carrying the reverse permutation and cross as soon as
/// possible; the result is the unique arrangement all of whose contacts lie to
/// the right of their pair's crossing. Throws NotSorting.
Arrangement greedy(const Network& net);
Arrangement greedy(std::shared_ptr<const Network> net);

bool is_sorting(const Network& net);

/// Exchange the contact at `contact_index` with the crossing of its pair.
Arrangement flip(const Arrangement& arr, int contact_index);

/// True when the flip adds a contact to the left of the removed one.
bool is_decreasing_flip(const Arrangement& arr, int contact_index);

ContactGraph contact_graph(const Arrangement& arr);

/// omega(arr): coordinate i counts the bricks below pseudoline i.
std::vector<int> brick_vector(const Arrangement& arr);

/// 0/1 vector of the pseudolines passing above brick b; entries sum to depth(b).
std::vector<int> summand_vector(const Arrangement& arr, const Brick& b);

/// Rebuild the arrangement with the given contact graph; throws GraphMismatch
/// when no supported arrangement has it.
Arrangement from_contact_graph(const Network& net, const std::vector<std::pair<int, int>>& arcs);

/// Parse "XC..." against a network; throws InvalidArgument.
Arrangement parse_marks(std::shared_ptr<const Network> net, const std::string& s);

}  // namespace brick
