#pragma once

#include <string>
#include <vector>

#include "qgm/app/report.hpp"

namespace qgm::app {

/// Inputs of the subcommands; each command reads the fields it needs.
struct CommandArgs {
  std::string group;
  std::string lambda;
  std::string split;
  std::string model;
  std::string reference;
  std::string source;
  std::string rep;
  std::string automorphism;
  std::string gens;
  std::vector<std::size_t> sizes;
  std::size_t k = 0;
};

const std::vector<std::string>& command_names();

/// Runs one subcommand. Library errors become status "error"; timing is
/// filled in here.
Report run_command(const std::string& name, const CommandArgs& args, const RunConfig& cfg);

}  // namespace qgm::app
