#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>

#include "commands.hpp"
#include "slowspin/cli.hpp"
#include "slowspin/errors.hpp"

namespace slowspin::cli {

namespace {

struct FlagSpec {
  const char* name;
  const char* help;
};

// Flags shared by every subcommand. All values are kept as text and
// evaluated later so numbers may be written as expressions (4*pi).
constexpr FlagSpec kFlags[] = {
    {"epsilon", "energy ratio V0/E"},
    {"kl", "dimensionless slab width k*L"},
    {"kminus-l", "kappa_- * L (alternative to --kl)"},
    {"theta", "input spin cone angle in [0, pi]"},
    {"phi", "relative phase of the input spin components"},
    {"n-plus", "resonance integer of the barrier channel"},
    {"n-minus", "resonance integer of the well channel"},
    {"q", "ratio n-/n+ (resonant-gp, units)"},
    {"grid", "start:stop:steps for the swept variable"},
    {"tol", "relative quadrature tolerance"},
    {"format", "csv | json | svg"},
    {"out", "output path (default stdout)"},
    {"preset", "fig2 | fig3 | fig4 | fig5"},
    {"mesh", "Pancharatnam oracle mesh"},
    {"samples", "trajectory sample count"},
    {"region", "i | ii | iii"},
    {"v", "speed in m/s (units)"},
    {"b0", "field in T (units)"},
    {"moment", "magnetic moment override in J/T (units)"},
    {"length", "slab width in m (resonances)"},
    {"kl-range", "lo:hi kL window (resonances)"},
    {"evaluator", "sweep evaluator"},
    {"over", "sweep variable: epsilon | kl | kminus-l | theta | phi"},
    {"xi", "winding number (highspeed sweep)"},
};

using Handler = CommandResult (*)(const Settings&);

struct Subcommand {
  const char* name;
  const char* help;
  Handler handler;
};

constexpr Subcommand kCommands[] = {
    {"resonant-gp", "cyclic GP per turn at simultaneous resonance", cmd_resonant_gp},
    {"prebarrier-gp", "per-cycle GP in front of the slab versus V0/E", cmd_prebarrier_gp},
    {"tunnel-gp", "tunneling-induced GP versus theta", cmd_tunnel_gp},
    {"trajectory", "Bloch-vector trajectory through a region", cmd_trajectory},
    {"units", "field, speed and q conversions", cmd_units},
    {"resonances", "simultaneous-resonance lattice points", cmd_resonances},
    {"sweep", "generic one-dimensional grid over an evaluator", cmd_sweep},
};

struct Bound {
  CLI::App* app = nullptr;
  Handler handler = nullptr;
  std::map<std::string, std::string> storage;
  std::map<std::string, CLI::Option*> options;
  bool include_trivial = false;
};

int write_result(const CommandResult& r, const Settings& s, std::ostream& out) {
  const Format fmt = parse_format(s.text("format").value_or("csv"));
  if (const auto path = s.text("out")) {
    std::ofstream file(*path, std::ios::binary | std::ios::trunc);
    if (!file) throw InvalidArgument("cannot open output file '" + *path + "'");
    write_table(r.table, fmt, file);
    if (!file) throw InvalidArgument("failed writing '" + *path + "'");
  } else {
    write_table(r.table, fmt, out);
  }
  return r.exit_code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spin-1/2 scattering through a magnetic slab and its geometric phases", "slowspin"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "flat key = value file; flags override it");

  std::vector<std::unique_ptr<Bound>> bound;
  for (const Subcommand& c : kCommands) {
    auto b = std::make_unique<Bound>();
    b->handler = c.handler;
    b->app = app.add_subcommand(c.name, c.help);
    for (const FlagSpec& f : kFlags) {
      b->options[f.name] = b->app->add_option(std::string("--") + f.name, b->storage[f.name], f.help);
    }
    b->app->add_flag("--include-trivial", b->include_trivial, "also list n+ = n- (zero field)");
    b->app->add_option("--config", config_path, "flat key = value file; flags override it");
    bound.push_back(std::move(b));
  }

  std::vector<std::string> argv_store{"slowspin"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInvalidArguments;
  }

  try {
    const Bound* active = nullptr;
    for (const auto& b : bound) {
      if (b->app->parsed()) active = b.get();
    }
    if (active == nullptr) throw InvalidArgument("no subcommand given");

    Settings settings;
    if (!config_path.empty()) {
      for (auto& [k, v] : read_config(config_path)) {
        if (k == "include-trivial") {
          settings.include_trivial = (v == "true" || v == "1" || v == "yes");
          continue;
        }
        if (active->options.count(k) == 0) throw InvalidArgument("unknown config key '" + k + "'");
        settings.values[k] = v;
      }
    }
    for (const auto& [name, opt] : active->options) {
      if (opt->count() > 0) settings.values[name] = active->storage.at(name);
    }
    if (active->include_trivial) settings.include_trivial = true;

    return write_result(active->handler(settings), settings, out);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidArguments;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kDomainError;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kNumericalFailure;
  }
}

}  // namespace slowspin::cli
