#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace nesto::cli {

enum class Command { gamma, fvector, buildset, moves, poset, wiener, verify };
enum class Engine { incremental, oracle, both };
enum class Format { text, json, dot };

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int internal = 1;
inline constexpr int usage = 2;  // also malformed input files
inline constexpr int cap = 3;
inline constexpr int engine_mismatch = 4;
inline constexpr int verification = 5;
inline constexpr int domain = 6;
}  // namespace exit_code

inline constexpr int default_max_n = 8;
inline constexpr int hard_max_n = 10;  // without --override-cap

struct RunConfig {
  Command command = Command::gamma;
  Engine engine = Engine::incremental;
  int n = 0;                    // poset
  int max_n = default_max_n;    // verify: largest tree order
  std::string graph_path;       // "-" reads stdin
  std::string buildset_path;    // JSON, alternative to graph_path
  Format format = Format::text;
  bool override_cap = false;
  int jobs = 0;                 // 0: runtime default, 1: serial
  std::uint64_t seed = 20111017;
};

/// Executes one command. Reports go to `out`, diagnostics to `err`; the return
/// value is one of the exit codes above.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// The exit code table printed by --help.
std::string exit_code_help();

}  // namespace nesto::cli
