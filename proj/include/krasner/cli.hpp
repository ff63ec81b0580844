#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "krasner/dsl.hpp"

namespace krasner {

enum ExitCode : int {
  kExitOk = 0,
  kExitFalse = 1,
  kExitParse = 2,
  kExitAxiom = 3,
  kExitPrecondition = 4,
};

struct CommandOptions {
  /// check, ideals, radical, classify, localize, verify or explain.
  std::string command;
  /// Positional names: ideal, mulset and predicate, as the command needs.
  std::vector<std::string> args;
  /// Restricts check and ideals to one structure.
  std::optional<std::string> structure;
  std::vector<std::string> suite;
  std::size_t maxSize = 16;
  bool noDefaultCorpus = false;
  bool json = false;
};

/// Runs one command on a parsed document and returns its exit code.
/// Library errors are mapped to exit codes and reported on err.
int execute(const Document& doc, const CommandOptions& options,
            std::ostream& out, std::ostream& err);

/// Full command line: argument parsing, file loading, execute.
int runCli(const std::vector<std::string>& argv, std::ostream& out,
           std::ostream& err);

}  // namespace krasner
