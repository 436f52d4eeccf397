#include "qlbn/scenario_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qlbn/errors.hpp"
#include "qlbn/numeric.hpp"

namespace qlbn {

using nlohmann::json;

namespace {

json parse_document(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

double number(const json& value, const std::string& where) {
  if (value.is_number()) return value.get<double>();
  if (value.is_string()) return parse_decimal(value.get<std::string>());
  throw Error(ErrorKind::ParseError, where + " must be a number");
}

std::optional<double> optional_number(const json& object, const char* key, const std::string& where) {
  if (!object.contains(key) || object.at(key).is_null()) return std::nullopt;
  return number(object.at(key), where + "." + key);
}

double required_number(const json& object, const char* key, const std::string& where) {
  if (!object.contains(key)) throw Error(ErrorKind::ParseError, where + ": missing field '" + key + "'");
  return number(object.at(key), where + "." + key);
}

std::string required_string(const json& object, const char* key, const std::string& where) {
  if (!object.contains(key) || !object.at(key).is_string()) {
    throw Error(ErrorKind::ParseError, where + ": missing string field '" + key + "'");
  }
  return object.at(key).get<std::string>();
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<Scenario> parse_scenarios(std::string_view json_text) {
  const json doc = parse_document(json_text);
  if (!doc.is_array()) throw Error(ErrorKind::ParseError, "scenario file must hold a JSON list");
  std::vector<Scenario> out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const json& item = doc[i];
    const std::string where = "scenario[" + std::to_string(i) + "]";
    if (!item.is_object()) throw Error(ErrorKind::ParseError, where + " must be an object");
    Scenario s;
    s.name = required_string(item, "name", where);
    s.p_defect_given_defect = optional_number(item, "p_defect_given_defect", where);
    s.p_defect_given_cooperate = optional_number(item, "p_defect_given_cooperate", where);
    if (s.p_defect_given_defect.has_value() != s.p_defect_given_cooperate.has_value()) {
      throw Error(ErrorKind::ParseError, where + ": give both conditionals or neither");
    }
    s.observed_unknown = required_number(item, "observed_unknown", where);
    if (auto prior = optional_number(item, "prior_defect", where)) s.prior_defect = *prior;
    if (item.contains("payoff_note") && item.at("payoff_note").is_string()) {
      s.payoff_note = item.at("payoff_note").get<std::string>();
    }
    validate_scenario(s);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Scenario> load_scenarios(const std::filesystem::path& path) {
  return parse_scenarios(read_text_file(path));
}

std::string scenarios_to_json(const std::vector<Scenario>& scenarios) {
  json doc = json::array();
  for (const auto& s : scenarios) {
    json item = {{"name", s.name}};
    if (s.p_defect_given_defect) item["p_defect_given_defect"] = *s.p_defect_given_defect;
    if (s.p_defect_given_cooperate) item["p_defect_given_cooperate"] = *s.p_defect_given_cooperate;
    item["observed_unknown"] = s.observed_unknown;
    item["prior_defect"] = s.prior_defect;
    if (s.payoff_note) item["payoff_note"] = *s.payoff_note;
    doc.push_back(std::move(item));
  }
  return doc.dump(2);
}

std::vector<LiteratureRow> parse_literature(std::string_view json_text) {
  const json doc = parse_document(json_text);
  if (!doc.is_array()) throw Error(ErrorKind::ParseError, "literature file must hold a JSON list");
  std::vector<LiteratureRow> out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const json& item = doc[i];
    const std::string where = "literature[" + std::to_string(i) + "]";
    LiteratureRow row;
    row.scenario = required_string(item, "scenario", where);
    row.observed = required_number(item, "observed", where);
    if (item.contains("models")) {
      for (const auto& m : item.at("models")) {
        row.models.push_back({required_string(m, "model", where), required_number(m, "predicted", where),
                              required_number(m, "fit_error", where)});
      }
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<LiteratureRow> load_literature(const std::filesystem::path& path) {
  return parse_literature(read_text_file(path));
}

std::string literature_to_json(const std::vector<LiteratureRow>& rows) {
  json doc = json::array();
  for (const auto& row : rows) {
    json models = json::array();
    for (const auto& m : row.models) {
      models.push_back({{"model", m.model}, {"predicted", m.predicted}, {"fit_error", m.fit_error}});
    }
    doc.push_back({{"scenario", row.scenario}, {"observed", row.observed}, {"models", models}});
  }
  return doc.dump(2);
}

}  // namespace qlbn
