#include "brick/json_io.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "json.hpp"

namespace brick {

std::string network_to_json(const Network& net) {
  nlohmann::ordered_json j;
  j["n"] = net.n();
  j["bands"] = net.bands();
  if (net.has_labels()) {
    auto labels = nlohmann::ordered_json::array();
    for (int i = 0; i < net.m(); ++i) {
      std::pair<int, int> l = net.label(i);
      labels.push_back({l.first, l.second});
    }
    j["labels"] = std::move(labels);
  }
  return j.dump();
}

Network network_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object())
    fail(ErrorCode::invalid_argument, "not a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer())
    fail(ErrorCode::invalid_argument, "missing integer field n");
  if (!j.contains("bands") || !j["bands"].is_array())
    fail(ErrorCode::invalid_argument, "missing array field bands");
  int n = j["n"].get<int>();
  std::vector<int> bands;
  for (const auto& b : j["bands"]) {
    if (!b.is_number_integer()) fail(ErrorCode::invalid_argument, "bands must be integers");
    bands.push_back(b.get<int>());
  }
  std::vector<std::pair<int, int>> labels;
  bool has_labels = j.contains("labels");
  if (has_labels) {
    if (!j["labels"].is_array()) fail(ErrorCode::invalid_argument, "labels must be an array");
    for (const auto& l : j["labels"]) {
      if (!l.is_array() || l.size() != 2 || !l[0].is_number_integer() || !l[1].is_number_integer())
        fail(ErrorCode::invalid_argument, "each label must be a pair of integers");
      int p = l[0].get<int>(), q = l[1].get<int>();
      if (p == q) fail(ErrorCode::invalid_argument, "label endpoints must differ");
      labels.emplace_back(std::min(p, q), std::max(p, q));
    }
  }
  return has_labels ? Network(n, std::move(bands), std::move(labels))
                    : Network(n, std::move(bands));
}

}  // namespace brick
