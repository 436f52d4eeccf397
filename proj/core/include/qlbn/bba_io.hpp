#pragma once

// Line-oriented text form of a belief assignment:
//
//   # comment
//   frame: a, b, c
//   a = 0.5
//   b,c = 0.5
//
// The frame line is optional; without it the frame is every label mentioned,
// in order of first appearance. A focal set may be wrapped in braces, and
// "{}" names the empty set.

#include <filesystem>
#include <string>
#include <string_view>

#include "qlbn/belief.hpp"

namespace qlbn {

BeliefAssignment parse_bba(std::string_view text);
BeliefAssignment load_bba(const std::filesystem::path& path);

std::string format_bba(const BeliefAssignment& bba);

}  // namespace qlbn
