#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace dqc::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationMismatch = 1,
  kUsageError = 2,
  kBudgetExceeded = 3,
};

enum class Format { Csv, Json };

struct RunConfig {
  std::string command;
  std::vector<std::uint64_t> primes;
  std::vector<unsigned> qubits;
  std::string norm_class = "unit";  // unit | zero | irreducible
  std::uint64_t budget = 0;
  unsigned threads = 1;
  Format format = Format::Csv;
  std::string out;  // empty = stdout
  std::uint64_t seed = 20240229;
};

/// Parses argv and runs one command. Data goes to `out` (or --out), human
/// summaries and errors to `err`. Returns an ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dqc::cli
