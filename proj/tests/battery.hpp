#pragma once

// Named reference networks shared by the unit tests and the acceptance run.
// Every entry carries an independently predicted arrangement count: a closed
// form (x/y families), a product rule (duplicated networks), a Hankel
// determinant of Catalan numbers (alternating kernels), or a hand-checked
// value for the tiny custom ones. Flags opt entries into family-specific laws.

#include <string>
#include <utility>
#include <vector>

#include "brick/network.hpp"

namespace testbed {

struct BatteryEntry {
  std::string name;
  brick::Network net;
  long long count;          // expected number of supported arrangements
  bool loday = false;       // Minkowski weights: intervals only, nonnegative
  bool permutahedron = false;  // Minkowski weights: singletons and pairs only
  bool universality = false;   // small enough for the embedding bijection test
};

inline const std::vector<BatteryEntry>& battery() {
  using brick::Network;
  static const std::vector<BatteryEntry> entries = [] {
    std::vector<BatteryEntry> b;
    auto add = [&](std::string name, Network net, long long count, bool loday = false,
                   bool perm = false, bool uni = false) {
      b.push_back(BatteryEntry{std::move(name), std::move(net), count, loday, perm, uni});
    };
    for (int m = 2; m <= 8; ++m)
      add("x" + std::to_string(m), brick::x_network(m), m, false, false, m <= 6);
    for (int m = 3; m <= 11; m += 2)
      add("y" + std::to_string(m), brick::y_network(m),
          static_cast<long long>(m - 1) * m * (m + 1) / 24, false, false, m <= 6);
    add("rigid3", brick::bubble_network(3), 1, false, false, true);
    add("red_1211", Network(3, {1, 2, 1, 1}), 2, false, false, true);
    add("red_1212", Network(3, {1, 2, 1, 2}), 2, false, false, true);
    add("z_path3", brick::duplicated_network({3, {{1, 2}, {2, 3}}}), 4, false, false, true);
    add("z_k3", brick::duplicated_network({3, {{1, 2}, {1, 3}, {2, 3}}}), 8, false, true, true);
    add("z_multi", brick::duplicated_network({3, {{1, 2}, {1, 2}, {2, 3}}}), 6, false, false,
        true);
    add("z_path4", brick::duplicated_network({4, {{1, 2}, {2, 3}, {3, 4}}}), 8);
    add("z_cycle4", brick::duplicated_network({4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}}), 16);
    add("z_k4",
        brick::duplicated_network({4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}}), 64,
        false, true);
    add("assoc5", brick::kernel(brick::bubble_network(5), 1), 5, true, false, true);
    add("assoc6", brick::kernel(brick::bubble_network(6), 1), 14, true);
    add("assoc7", brick::kernel(brick::bubble_network(7), 1), 42, true);
    add("assoc8", brick::kernel(brick::bubble_network(8), 1), 132, true);
    add("assoc5_aab", brick::kernel(brick::alternating_network("aab"), 1), 5, false, false,
        true);
    add("assoc6_abab", brick::kernel(brick::alternating_network("abab"), 1), 14);
    add("assoc6_aabb", brick::kernel(brick::alternating_network("aabb"), 1), 14);
    add("multi7_2", brick::kernel(brick::bubble_network(7), 2), 14);
    add("multi8_2", brick::kernel(brick::bubble_network(8), 2), 84);
    add("multi9_2", brick::kernel(brick::bubble_network(9), 2), 594);
    add("multi9_3", brick::kernel(brick::bubble_network(9), 3), 30);
    return b;
  }();
  return entries;
}

inline const BatteryEntry& battery_entry(const std::string& name) {
  for (const auto& e : battery())
    if (e.name == name) return e;
  throw std::runtime_error("no battery entry named " + name);
}

}  // namespace testbed
