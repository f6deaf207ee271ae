#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "reeshom/config.hpp"

namespace reeshom {

enum class Command { Hh, Morita, Checks, All };

struct RunOptions {
  Command command = Command::All;
  std::optional<std::size_t> max_degree;  // overrides the config
  std::optional<std::pair<std::size_t, std::size_t>> idempotent;  // 0-based (i, lambda)
  bool force = false;
  bool oracle = false;
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 1;
};

/// Outcome of one CLI run: every asserted equality, the canonical JSON
/// report (deterministic: no timings, no thread count), and the human
/// rendering (which does carry timings).
struct RunReport {
  bool ok = true;
  nlohmann::json json;
  std::string human;
};

RunReport run(const InstanceConfig& cfg, const RunOptions& opt);

// Canonical serialization: sorted keys, two-space indent, counts above 2^53
// rendered as strings.
std::string dump_canonical(const nlohmann::json& j);

nlohmann::json json_count(std::uint64_t v);

}  // namespace reeshom
