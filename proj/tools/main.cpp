// sagin-cli: front end over the shared library's C interface.
#include <cstdio>
#include <filesystem>
#include <string>
#include <system_error>
#include <vector>

#include "cli_args.hpp"
#include "sagin/sagin.h"

namespace {

using sagin_cli::kExitOk;
using sagin_cli::kExitRuntime;
using sagin_cli::kExitUsage;

int exit_code_for(sagin_status s) {
  switch (s) {
    case SAGIN_OK: return kExitOk;
    case SAGIN_ERR_CONFIG:
    case SAGIN_ERR_INVALID_ARGUMENT: return kExitUsage;
    default: return kExitRuntime;
  }
}

int report_error(const char* what, sagin_status s) {
  std::fprintf(stderr, "error: %s: %s\n", what, sagin_last_error());
  return exit_code_for(s);
}

struct ConfigHandle {
  sagin_config* p = nullptr;
  ~ConfigHandle() { sagin_config_destroy(p); }
};

struct SweepHandle {
  sagin_sweep* p = nullptr;
  ~SweepHandle() { sagin_sweep_destroy(p); }
};

// Prints every violation; returns their count.
size_t print_violations(const sagin_config* config) {
  size_t n = 0;
  if (sagin_config_validate(config, &n) != SAGIN_OK) return 0;
  for (size_t i = 0; i < n; ++i) {
    std::vector<char> buf(256);
    size_t len = buf.size();
    if (sagin_config_violation(config, i, buf.data(), &len) == SAGIN_ERR_BUFFER_TOO_SMALL) {
      buf.resize(len);
      sagin_config_violation(config, i, buf.data(), &len);
    }
    std::fprintf(stderr, "violation: %s\n", buf.data());
  }
  return n;
}

int run_experiment(const sagin_cli::RunManifest& m, const sagin_config* config) {
  std::error_code ec;
  std::filesystem::create_directories(m.out_dir, ec);
  if (ec) {
    std::fprintf(stderr, "error: cannot create output directory %s: %s\n", m.out_dir.c_str(),
                 ec.message().c_str());
    return kExitRuntime;
  }

  std::vector<sagin_framework> frameworks;
  for (const auto& name : m.frameworks) {
    sagin_framework f;
    if (sagin_framework_parse(name.c_str(), &f) != SAGIN_OK) {
      return report_error("framework", SAGIN_ERR_INVALID_ARGUMENT);
    }
    frameworks.push_back(f);
  }

  sagin_sweep_options opts;
  sagin_sweep_options_init(&opts);
  opts.user_counts = m.user_counts.empty() ? nullptr : m.user_counts.data();
  opts.n_user_counts = m.user_counts.size();
  opts.frameworks = frameworks.data();
  opts.n_frameworks = frameworks.size();
  opts.n_trials = m.trials.value_or(0);
  if (m.seed_override) {
    opts.use_config_seed = 0;
    opts.seed = *m.seed_override;
  }
  opts.n_workers = m.workers;

  SweepHandle sweep;
  if (const auto s = sagin_sweep_run(config, &opts, &sweep.p); s != SAGIN_OK) {
    return report_error("simulation", s);
  }

  const std::filesystem::path base =
      std::filesystem::path(m.out_dir) / sagin_cli::command_name(m.command);
  const std::string csv = base.string() + ".csv";
  if (const auto s = sagin_sweep_write_csv(sweep.p, csv.c_str()); s != SAGIN_OK) {
    return report_error("writing csv", s);
  }
  std::printf("wrote %s\n", csv.c_str());
  if (m.emit_plots) {
    if (const auto s = sagin_sweep_write_svg(sweep.p, base.string().c_str()); s != SAGIN_OK) {
      return report_error("writing plots", s);
    }
    std::printf("wrote %s_capacity.svg\nwrote %s_ee.svg\n", base.string().c_str(),
                base.string().c_str());
  }

  std::printf("%-6s %-10s %16s %12s %16s %12s\n", "users", "framework", "capacity_bps", "ci95",
              "ee_bps_per_w", "ci95");
  const size_t n = sagin_sweep_point_count(sweep.p);
  for (size_t i = 0; i < n; ++i) {
    int users = 0;
    sagin_framework f = SAGIN_FRAMEWORK_CUD;
    double cap = 0, cap_ci = 0, ee = 0, ee_ci = 0;
    sagin_sweep_point(sweep.p, i, &users, &f);
    sagin_sweep_estimate(sweep.p, i, SAGIN_METRIC_CAPACITY_BPS, &cap, &cap_ci);
    sagin_sweep_estimate(sweep.p, i, SAGIN_METRIC_EE_BPS_PER_W, &ee, &ee_ci);
    std::printf("%-6d %-10s %16.6e %12.4e %16.6e %12.4e\n", users, sagin_framework_name(f), cap,
                cap_ci, ee, ee_ci);
  }
  std::printf("trials per point: %llu\n",
              static_cast<unsigned long long>(sagin_sweep_trials(sweep.p)));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  const auto parsed = sagin_cli::parse_args(args);
  if (!parsed.manifest) {
    std::fputs(parsed.message.c_str(), parsed.exit_code == kExitOk ? stdout : stderr);
    return parsed.exit_code;
  }
  const auto& m = *parsed.manifest;

  ConfigHandle config;
  if (const auto s = sagin_config_load(m.config_path.c_str(), &config.p); s != SAGIN_OK) {
    std::fprintf(stderr, "error: config: %s\n", sagin_last_error());
    return kExitUsage;
  }
  if (print_violations(config.p) > 0) return kExitUsage;
  if (m.command == sagin_cli::Command::kValidate) {
    std::printf("%s: ok\n", m.config_path.c_str());
    return kExitOk;
  }
  return run_experiment(m, config.p);
}
