#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace paley::cli {

enum ExitCode : int {
  kSuccess = 0,
  kBadArguments = 1,
  kBudgetExhausted = 2,
  kOracleMismatch = 3,
};

enum class Command { Field, Graph, Invariants, Spectrum, Classify, Scan };
enum class Emit { Json, Csv, Dot };

struct RunConfig {
  Command command = Command::Classify;
  std::uint32_t q = 0;
  std::uint32_t m = 0;
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  std::uint32_t q_max = 0;
  std::vector<std::uint32_t> m_set;
  Emit emit = Emit::Json;
  bool oracle = false;
  std::uint64_t budget = 100'000'000;
  std::uint32_t jobs = 1;
  std::string out;
};

/// Parses argv (without the program name) and runs the command; output goes
/// to `out` unless --out names a file.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace paley::cli
