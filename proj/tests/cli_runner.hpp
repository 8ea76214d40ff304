#pragma once

// Shell out to the built CLI and capture stdout plus the exit code.

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>

#include <sys/wait.h>

struct CliResult {
  int exit_code = -1;
  std::string out;
};

inline CliResult run_shell(const std::string& command_line) {
  const std::string command = command_line + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed: " + command);
  CliResult result;
  std::array<char, 4096> buffer;
  size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.out.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

inline CliResult run_cli(const std::string& args) {
  return run_shell(std::string(CBSPACE_CLI_PATH) + " " + args);
}

inline std::string golden_path(const std::string& name) {
  return std::string(CBSPACE_GOLDEN_DIR) + "/" + name;
}
