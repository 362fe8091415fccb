#include "cli_args.hpp"

#include <algorithm>
#include <array>
#include <string_view>

#include "CLI11.hpp"

namespace sagin_cli {

namespace {

constexpr std::array<std::string_view, 4> kFrameworkIds = {"cud", "egc-sagin", "leo-gbs",
                                                           "gbs-only"};

std::optional<std::string> canonical_framework(const std::string& name) {
  if (name == "egc") return std::string("egc-sagin");
  for (auto id : kFrameworkIds) {
    if (name == id) return std::string(id);
  }
  return std::nullopt;
}

struct Bindings {
  std::string config_path;
  std::vector<std::string> frameworks;
  std::vector<int> users;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::string out_dir = ".";
  bool plot = false;
  int workers = 1;
};

void add_experiment_options(CLI::App* sub, Bindings& b) {
  sub->add_option("--config", b.config_path, "Config file (key = value lines)")->required();
  sub->add_option("--frameworks", b.frameworks, "Comma-separated: cud,egc,leo-gbs,gbs-only")
      ->delimiter(',');
  sub->add_option("--users", b.users, "Comma-separated user counts")
      ->delimiter(',')
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--trials", b.trials, "Monte Carlo trials per count")
      ->check(CLI::PositiveNumber);
  sub->add_option("--seed", b.seed, "Base seed (overrides the config)");
  sub->add_option("--out", b.out_dir, "Output directory");
  sub->add_flag("--plot", b.plot, "Also write capacity and energy-efficiency SVG plots");
  sub->add_option("--workers", b.workers, "Worker threads")->check(CLI::PositiveNumber);
}

}  // namespace

const char* command_name(Command command) {
  switch (command) {
    case Command::kRun: return "run";
    case Command::kSweep: return "sweep";
    case Command::kValidate: return "validate";
  }
  return "run";
}

ParseOutcome parse_args(const std::vector<std::string>& argv) {
  CLI::App app{"Monte Carlo simulator for cooperative UAV relaying in a satellite-aerial-ground network",
               argv.empty() ? "sagin-cli" : argv.front()};
  app.require_subcommand(1, 1);

  Bindings run_b;
  Bindings sweep_b;
  std::string validate_config;

  CLI::App* run = app.add_subcommand("run", "Monte Carlo run at the config's user count");
  add_experiment_options(run, run_b);
  CLI::App* sweep = app.add_subcommand("sweep", "Monte Carlo sweep over --users counts");
  add_experiment_options(sweep, sweep_b);
  CLI::App* validate = app.add_subcommand("validate", "Check a config file and exit");
  validate->add_option("--config", validate_config, "Config file")->required();

  std::vector<std::string> args;
  if (argv.size() > 1) args.assign(argv.begin() + 1, argv.end());
  std::reverse(args.begin(), args.end());  // CLI11 consumes a reversed vector

  ParseOutcome out;
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out.exit_code = kExitOk;
    out.message = app.help();
    return out;
  } catch (const CLI::CallForAllHelp&) {
    out.exit_code = kExitOk;
    out.message = app.help("", CLI::AppFormatMode::All);
    return out;
  } catch (const CLI::ParseError& e) {
    out.exit_code = kExitUsage;
    out.message = std::string(e.what()) + "\n" + app.help();
    return out;
  }

  RunManifest m;
  if (validate->parsed()) {
    m.command = Command::kValidate;
    m.config_path = validate_config;
    out.manifest = m;
    return out;
  }

  const Bindings& b = run->parsed() ? run_b : sweep_b;
  m.command = run->parsed() ? Command::kRun : Command::kSweep;
  m.config_path = b.config_path;
  if (b.frameworks.empty()) {
    m.frameworks.assign(kFrameworkIds.begin(), kFrameworkIds.end());
  } else {
    for (const auto& f : b.frameworks) {
      const auto id = canonical_framework(f);
      if (!id) {
        out.exit_code = kExitUsage;
        out.message = "unknown framework '" + f + "' (expected cud, egc, leo-gbs, gbs-only)";
        return out;
      }
      if (std::find(m.frameworks.begin(), m.frameworks.end(), *id) == m.frameworks.end()) {
        m.frameworks.push_back(*id);
      }
    }
  }
  if (m.command == Command::kRun && b.users.size() > 1) {
    out.exit_code = kExitUsage;
    out.message = "run takes a single --users value; use sweep for several";
    return out;
  }
  m.user_counts = b.users;
  if (run->count("--trials") + sweep->count("--trials") > 0) m.trials = b.trials;
  if (run->count("--seed") + sweep->count("--seed") > 0) m.seed_override = b.seed;
  m.out_dir = b.out_dir;
  m.emit_plots = b.plot;
  m.workers = b.workers;
  out.manifest = m;
  return out;
}

std::vector<std::string> to_args(const RunManifest& m) {
  std::vector<std::string> a{command_name(m.command), "--config", m.config_path};
  if (m.command == Command::kValidate) return a;
  if (!m.frameworks.empty()) {
    std::string joined;
    for (const auto& f : m.frameworks) joined += (joined.empty() ? "" : ",") + f;
    a.insert(a.end(), {"--frameworks", joined});
  }
  if (!m.user_counts.empty()) {
    std::string joined;
    for (int c : m.user_counts) joined += (joined.empty() ? "" : ",") + std::to_string(c);
    a.insert(a.end(), {"--users", joined});
  }
  if (m.trials) a.insert(a.end(), {"--trials", std::to_string(*m.trials)});
  if (m.seed_override) a.insert(a.end(), {"--seed", std::to_string(*m.seed_override)});
  a.insert(a.end(), {"--out", m.out_dir});
  if (m.emit_plots) a.emplace_back("--plot");
  a.insert(a.end(), {"--workers", std::to_string(m.workers)});
  return a;
}

}  // namespace sagin_cli
