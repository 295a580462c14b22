#ifndef COXHOM_TESTS_RUN_CLI_HPP_
#define COXHOM_TESTS_RUN_CLI_HPP_

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace coxhom::testing {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

/// Runs the built CLI with `args` (already shell-quoted); stderr is discarded.
inline CliResult run_cli(std::string const& args) {
  std::string const cmd = std::string("'") + COXHOM_CLI + "' " + args + " 2>/dev/null";
  CliResult result;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    return result;
  }
  std::array<char, 4096> buffer{};
  std::size_t n = 0;
  while ((n = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.out.append(buffer.data(), n);
  }
  int const status = ::pclose(pipe);
  if (WIFEXITED(status)) {
    result.exit_code = WEXITSTATUS(status);
  }
  return result;
}

}  // namespace coxhom::testing

#endif  // COXHOM_TESTS_RUN_CLI_HPP_
