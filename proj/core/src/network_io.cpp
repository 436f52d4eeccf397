#include "qlbn/network_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qlbn/errors.hpp"
#include "qlbn/numeric.hpp"

namespace qlbn {

using nlohmann::json;

namespace {

double probability_value(const json& value, const std::string& where) {
  if (value.is_number()) return value.get<double>();
  if (value.is_string()) return parse_decimal(value.get<std::string>());
  throw Error(ErrorKind::ParseError, where + ": probability must be a number or decimal string");
}

const json& require(const json& object, const char* key, const std::string& where) {
  if (!object.is_object() || !object.contains(key)) {
    throw Error(ErrorKind::ParseError, where + ": missing field '" + key + "'");
  }
  return object.at(key);
}

}  // namespace

Network parse_network(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }

  NetworkBuilder builder;
  try {
    for (const auto& var : require(doc, "variables", "network")) {
      builder.add_variable(require(var, "name", "variable").get<std::string>(),
                           require(var, "outcomes", "variable").get<std::vector<std::string>>());
    }
    if (doc.contains("edges")) {
      for (const auto& edge : doc.at("edges")) {
        if (!edge.is_array() || edge.size() != 2) {
          throw Error(ErrorKind::ParseError, "edges must be [parent, child] pairs");
        }
        builder.add_edge(edge[0].get<std::string>(), edge[1].get<std::string>());
      }
    }
    for (const auto& [name, rows] : require(doc, "cpts", "network").items()) {
      if (!rows.is_array()) throw Error(ErrorKind::ParseError, "cpts." + name + " must be a list of rows");
      for (const auto& row : rows) {
        Assignment given;
        if (row.contains("given")) given = row.at("given").get<Assignment>();
        std::map<std::string, double> dist;
        for (const auto& [outcome, p] : require(row, "dist", "cpts." + name).items()) {
          dist[outcome] = probability_value(p, "cpts." + name);
        }
        builder.set_cpt_row(name, given, dist);
      }
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  return builder.build();
}

Network load_network(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_network(buf.str());
}

std::string network_to_json(const Network& net) {
  json doc;
  doc["variables"] = json::array();
  doc["edges"] = json::array();
  doc["cpts"] = json::object();
  for (std::size_t v = 0; v < net.size(); ++v) {
    const auto& var = net.variable(v);
    doc["variables"].push_back({{"name", var.name}, {"outcomes", var.outcomes}});
    for (std::size_t p : net.parents(v)) doc["edges"].push_back({net.variable(p).name, var.name});

    const auto& parents = net.parents(v);
    json rows = json::array();
    const auto& cpt = net.cpt(v);
    for (std::size_t r = 0; r < cpt.size(); ++r) {
      // Decode the mixed-radix row index back into parent outcomes.
      std::size_t rest = r;
      json given = json::object();
      for (std::size_t k = parents.size(); k > 0; --k) {
        const auto& parent = net.variable(parents[k - 1]);
        given[parent.name] = parent.outcomes[rest % parent.outcomes.size()];
        rest /= parent.outcomes.size();
      }
      json dist = json::object();
      for (std::size_t x = 0; x < var.outcomes.size(); ++x) dist[var.outcomes[x]] = format_exact(cpt[r][x]);
      rows.push_back({{"given", given}, {"dist", dist}});
    }
    doc["cpts"][var.name] = rows;
  }
  return doc.dump(2);
}

}  // namespace qlbn
