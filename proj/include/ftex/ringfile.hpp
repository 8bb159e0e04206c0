#pragma once

#include <string>

#include "ftex/ideal.hpp"

namespace ftex {

// Ring files are JSON:
//   {"prime": 2, "variables": ["x","y","z"], "quotient": ["x^3+y^3+z^3"]}
RingSpec load_ring(const std::string& path);
RingSpec load_ring_from_string(const std::string& json_text, const std::string& name = "");

// Canonical JSON serialization; load -> print -> load round-trips.
std::string print_ring(const RingSpec& ring);

}  // namespace ftex
