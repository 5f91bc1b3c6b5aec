#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "qgm/algebra/perm_group.hpp"
#include "qgm/exact/scalar.hpp"

namespace qgm::app {

using json = nlohmann::json;

struct RunConfig {
  bool exact = true;
  double tol = kDefaultTolerance;
  std::optional<std::size_t> max_word_len;  // per-command default when unset
  std::size_t cap = kDefaultCap;
  std::uint64_t seed = 20160;
  std::string out;

  void validate() const;
  std::size_t word_len_or(std::size_t fallback) const { return max_word_len.value_or(fallback); }
  json to_json() const;
};

enum class Status { Pass, Fail, NoFamily, Error };
const char* status_name(Status s);

struct Report {
  std::string command;
  RunConfig config;
  Status status = Status::Pass;
  json witnesses = json::array();
  json result = json::object();
  double timing_ms = 0.0;
  std::string summary;

  /// A failing report always carries a witness; the summary is used if
  /// nothing more specific was recorded.
  void finalize();
  json to_json(bool with_timing = true) const;
  int exit_code() const;
};

Report error_report(const std::string& command, const RunConfig& cfg, const std::string& message);

/// Drops every "timing_ms" member, recursively.
json strip_timing(json j);

}  // namespace qgm::app
