#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "astck/epistemic.hpp"
#include "json.hpp"

namespace astck {

/// A model loaded from
/// {"states": [...], "agents": [{"name": ..., "partition": [[...], ...]}, ...],
///  "events": {"name": [...], ...}}
/// where states are opaque strings.
struct LoadedModel {
  AumannModel model;
  std::map<std::string, StateSet> events;
};

namespace detail {

inline const nlohmann::json& require(const nlohmann::json& j, const char* key,
                                     const std::string& where) {
  if (!j.is_object() || !j.contains(key)) {
    throw ModelError(where.empty() ? key : where + "." + key, "missing field");
  }
  return j.at(key);
}

inline void require_array(const nlohmann::json& j, const std::string& field) {
  if (!j.is_array()) throw ModelError(field, "expected an array");
}

}  // namespace detail

inline LoadedModel parse_model(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ModelError("$", "expected a JSON object");

  const auto& states_json = detail::require(doc, "states", "");
  detail::require_array(states_json, "states");
  std::vector<std::string> states;
  std::map<std::string, StateId> index;
  for (std::size_t s = 0; s < states_json.size(); ++s) {
    const std::string field = "states[" + std::to_string(s) + "]";
    if (!states_json[s].is_string()) throw ModelError(field, "expected a string");
    states.push_back(states_json[s].get<std::string>());
    if (!index.emplace(states.back(), s).second) {
      throw ModelError(field, "duplicate state '" + states.back() + "'");
    }
  }

  const auto lookup = [&](const nlohmann::json& j, const std::string& field) {
    if (!j.is_string()) throw ModelError(field, "expected a state name");
    const auto it = index.find(j.get<std::string>());
    if (it == index.end()) throw ModelError(field, "unknown state '" + j.get<std::string>() + "'");
    return it->second;
  };

  const auto& agents_json = detail::require(doc, "agents", "");
  detail::require_array(agents_json, "agents");
  std::vector<AumannModel::Agent> agents;
  for (std::size_t i = 0; i < agents_json.size(); ++i) {
    const std::string where = "agents[" + std::to_string(i) + "]";
    const auto& agent = agents_json[i];
    const auto& name = detail::require(agent, "name", where);
    if (!name.is_string()) throw ModelError(where + ".name", "expected a string");
    const auto& partition = detail::require(agent, "partition", where);
    detail::require_array(partition, where + ".partition");
    Partition cells;
    for (std::size_t c = 0; c < partition.size(); ++c) {
      const std::string cell_field = where + ".partition[" + std::to_string(c) + "]";
      detail::require_array(partition[c], cell_field);
      std::vector<StateId> cell;
      for (std::size_t k = 0; k < partition[c].size(); ++k) {
        cell.push_back(lookup(partition[c][k], cell_field + "[" + std::to_string(k) + "]"));
      }
      cells.push_back(std::move(cell));
    }
    agents.push_back({name.get<std::string>(), std::move(cells)});
  }

  LoadedModel loaded{AumannModel(std::move(states), std::move(agents)), {}};

  if (doc.contains("events")) {
    const auto& events = doc.at("events");
    if (!events.is_object()) throw ModelError("events", "expected an object");
    for (const auto& [name, members] : events.items()) {
      const std::string field = "events." + name;
      detail::require_array(members, field);
      StateSet set = loaded.model.empty_set();
      for (std::size_t k = 0; k < members.size(); ++k) {
        set.set(lookup(members[k], field + "[" + std::to_string(k) + "]"));
      }
      loaded.events.emplace(name, std::move(set));
    }
  }
  return loaded;
}

/// Throws nlohmann::json::parse_error (with line and column) on malformed
/// JSON and ModelError on schema violations.
inline LoadedModel load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_model(nlohmann::json::parse(in));
}

}  // namespace astck
