#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "antimagic/graph.hpp"
#include "antimagic/io.hpp"

namespace antimagic::cli {

enum ExitCode : int {
  kOk = 0,
  kNotAntimagic = 1,
  kInvalidInput = 2,
  kParseFailure = 3,
  kSizeRefused = 4,
};

/// Environment variable naming the directory `generate` writes into when no
/// --output is given.
inline constexpr const char* kOutputDirEnv = "ANTIMAGIC_OUTPUT_DIR";

struct RunConfig {
  std::string subcommand;
  std::optional<Family> family;
  Index m = 0;
  Index n = 0;
  std::string input;
  std::string output;
  OutputFormat format = OutputFormat::json;
  std::uint64_t seed = 1;
  std::uint64_t trials = 0;
  bool streaming = false;
  bool exhaustive = false;
  bool by_label = false;
  bool prune = false;
  unsigned workers = 1;
};

/// Runs the command line (without the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace antimagic::cli
