#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sagin_cli {

enum class Command { kRun, kSweep, kValidate };

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

struct RunManifest {
  Command command = Command::kRun;
  std::string config_path;
  std::vector<std::string> frameworks;  // canonical ids, nonempty for run/sweep
  std::vector<int> user_counts;         // empty: use the config's n_users
  std::optional<std::uint64_t> trials;
  std::optional<std::uint64_t> seed_override;
  std::string out_dir = ".";
  bool emit_plots = false;
  int workers = 1;

  bool operator==(const RunManifest&) const = default;
};

/// Either a manifest, or an exit code plus text for the user (usage errors,
/// or --help which exits 0).
struct ParseOutcome {
  std::optional<RunManifest> manifest;
  int exit_code = kExitOk;
  std::string message;
};

/// argv[0] is the program name.
ParseOutcome parse_args(const std::vector<std::string>& argv);

/// Command-line tokens (without program name) that parse back to `manifest`.
std::vector<std::string> to_args(const RunManifest& manifest);

const char* command_name(Command command);

}  // namespace sagin_cli
