#pragma once

#include <string>

#include "settings.hpp"
#include "table.hpp"

namespace slowspin::cli {

struct CommandResult {
  Table table;
  int exit_code = 0;
};

CommandResult cmd_resonant_gp(const Settings& s);
CommandResult cmd_prebarrier_gp(const Settings& s);
CommandResult cmd_tunnel_gp(const Settings& s);
CommandResult cmd_trajectory(const Settings& s);
CommandResult cmd_units(const Settings& s);
CommandResult cmd_resonances(const Settings& s);
CommandResult cmd_sweep(const Settings& s);

}  // namespace slowspin::cli
