#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "semikit/lattice.hpp"
#include "semikit/semigroup.hpp"
#include "semikit/word.hpp"

namespace semikit {

inline nlohmann::json to_json(const FiniteSemigroup& s) {
  nlohmann::json rows = nlohmann::json::array();
  for (int a = 0; a < s.order; ++a) {
    nlohmann::json row = nlohmann::json::array();
    for (int b = 0; b < s.order; ++b) row.push_back(s.at(a, b));
    rows.push_back(std::move(row));
  }
  return {{"name", s.name}, {"order", s.order}, {"table", std::move(rows)}};
}

inline FiniteSemigroup semigroup_from_json(const nlohmann::json& j) {
  std::vector<std::vector<int>> rows = j.at("table").get<std::vector<std::vector<int>>>();
  if (j.contains("order") && j.at("order").get<int>() != static_cast<int>(rows.size()))
    throw std::invalid_argument("declared order does not match table size");
  return validate_associative(rows, j.value("name", ""));
}

inline nlohmann::json to_json(const FiniteLattice& l) {
  nlohmann::json rows = nlohmann::json::array();
  for (int a = 0; a < l.order; ++a) {
    nlohmann::json row = nlohmann::json::array();
    for (int b = 0; b < l.order; ++b) row.push_back(l.le(a, b) ? 1 : 0);
    rows.push_back(std::move(row));
  }
  return {{"order", l.order}, {"leq", std::move(rows)}};
}

inline FiniteLattice lattice_from_json(const nlohmann::json& j) {
  auto rows = j.at("leq").get<std::vector<std::vector<int>>>();
  return make_lattice(rows);
}

inline std::vector<int> map_images_from_json(const nlohmann::json& j) {
  return j.at("images").get<std::vector<int>>();
}

inline nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

inline FiniteSemigroup load_semigroup(const std::string& path) {
  return semigroup_from_json(load_json_file(path));
}

inline std::vector<Identity> identities_from_json(const nlohmann::json& j) {
  std::vector<Identity> ids;
  for (const auto& s : j.at("identities")) ids.push_back(parse_identity(s.get<std::string>()));
  return ids;
}

}  // namespace semikit
