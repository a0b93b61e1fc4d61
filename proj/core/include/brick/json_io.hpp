#pragma once

#include <string>

#include "brick/network.hpp"

namespace brick {

/// {"n": ..., "bands": [...], "labels": [[p,q], ...]} — labels emitted only
/// when present; canonical single-line output, whitespace-insensitive input.
std::string network_to_json(const Network& net);
Network network_from_json(const std::string& text);

}  // namespace brick
