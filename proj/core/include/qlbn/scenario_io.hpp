#pragma once

// Scenario files: a JSON list of
//   {"name": ..., "p_defect_given_defect": 0.87, "p_defect_given_cooperate": 0.74,
//    "observed_unknown": 0.64, "prior_defect": 0.5, "payoff_note": "..."}
// where prior_defect and payoff_note are optional, and the two conditionals
// may be omitted for observed-only placeholders.
//
// Literature files: a JSON list of
//   {"scenario": ..., "observed": 0.66,
//    "models": [{"model": "QPDT", "predicted": 0.625, "fit_error": 0.0531}, ...]}

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "qlbn/scenarios.hpp"

namespace qlbn {

std::vector<Scenario> parse_scenarios(std::string_view json_text);
std::vector<Scenario> load_scenarios(const std::filesystem::path& path);
std::string scenarios_to_json(const std::vector<Scenario>& scenarios);

std::vector<LiteratureRow> parse_literature(std::string_view json_text);
std::vector<LiteratureRow> load_literature(const std::filesystem::path& path);
std::string literature_to_json(const std::vector<LiteratureRow>& rows);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace qlbn
