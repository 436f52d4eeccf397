#pragma once

// JSON network definition shared by the classical and quantum paths:
//
//   {
//     "variables": [{"name": "P1", "outcomes": ["Cooperate", "Defect"]}, ...],
//     "edges": [["P1", "P2"]],
//     "cpts": {"P2": [{"given": {"P1": "Defect"}, "dist": {"Defect": 0.87, "Cooperate": 0.13}}, ...]}
//   }
//
// Probabilities may be JSON numbers or decimal strings ("0.87"); both are
// rounded to the nearest double.

#include <filesystem>
#include <string>
#include <string_view>

#include "qlbn/network.hpp"

namespace qlbn {

Network parse_network(std::string_view json_text);
Network load_network(const std::filesystem::path& path);

/// Serializes with 17 significant digits so that parse_network reproduces
/// every CPT entry bit for bit.
std::string network_to_json(const Network& net);

}  // namespace qlbn
