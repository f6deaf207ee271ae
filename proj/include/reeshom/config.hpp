#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "reeshom/rees.hpp"

namespace reeshom {

struct GroupSpec {
  enum class Kind { Cyclic, Symmetric3, Table };
  Kind kind = Kind::Cyclic;
  std::size_t n = 1;                             // cyclic order
  std::vector<std::string> elements;             // table groups
  std::vector<std::vector<std::string>> table;   // rows of element names

  bool operator==(const GroupSpec&) const = default;
};

/// Declarative instance: group, index sizes, sandwich matrix entries by
/// element name (or 0-based index), plus run caps.
struct InstanceConfig {
  std::string name;
  GroupSpec group;
  std::size_t i_size = 1;
  std::size_t lambda_size = 1;
  std::vector<std::vector<std::string>> sandwich;  // [lambda][i], "o" = zero
  std::size_t max_degree = 3;
  std::uint64_t chain_cap = kDefaultChainCap;
  bool force = false;

  bool operator==(const InstanceConfig&) const = default;
};

// Parses the line-oriented text format, or JSON when the first non-blank
// character is '{'. Validates fully: the group table, sandwich entry names,
// and the sandwich row/column condition (by constructing the instance).
InstanceConfig parse_config(const std::string& text);

// Canonical text form; parse_config(emit_config(c)) == c.
std::string emit_config(const InstanceConfig& c);

GroupTable build_group(const GroupSpec& spec);
ReesSemigroup build_instance(const InstanceConfig& c, std::uint64_t seed = kDefaultSeed);

nlohmann::json config_to_json(const InstanceConfig& c);
InstanceConfig config_from_json(const nlohmann::json& j);

}  // namespace reeshom
