#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "origami/construction.hpp"
#include "origami/symmetry.hpp"

namespace origami::cli {

// Exit-code contract: shell pipelines can branch on these.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;
inline constexpr int kExitResourceGuard = 4;

/// Defaults layered as: built-in < config file (ORIGAMI_SYM_CONFIG) < flags.
struct CliConfig {
  Tolerance tol{};
  int depth = 2;
  int max_depth = 3;
  std::optional<std::size_t> cap;
  std::optional<Rect> bbox;
  std::optional<std::string> out;
};

// Comma-separated terms: `Api/B` | `Api` | `pi/B` | `0` | `rad:<float>`.
// Rational forms stay exact; `rad:` parses to a real angle.
std::vector<Angle> parse_angle_spec(const std::string& spec);

// Loads and validates the config file; empty path gives the defaults.
CliConfig load_config(const std::string& path);

PointGroup parse_group_name(const std::string& name);  // "C2xC2" | "C6" | "D10" ...

// Full command dispatch. args excludes the program name. Machine-readable
// payload goes to out, diagnostics to err; returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace origami::cli
