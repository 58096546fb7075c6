#pragma once

// Runs the pdrank executable (path injected by CMake) and captures stdout.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#ifndef PDRANK_CLI_PATH
#error "PDRANK_CLI_PATH must be defined"
#endif

namespace cli {

struct Result {
  int exit_code = -1;
  std::string out;
};

inline Result run_with_env(const std::string& env, const std::string& args) {
  const std::string cmd = env + " \"" + PDRANK_CLI_PATH + "\" " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

inline Result run(const std::string& args) { return run_with_env("", args); }

// Writes `content` to a file under the temp directory and returns its path.
inline std::string scratch(const std::string& name, const std::string& content) {
  const auto dir = std::filesystem::temp_directory_path() / "pdrank-tests";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path, std::ios::binary) << content;
  return path.string();
}

}  // namespace cli
