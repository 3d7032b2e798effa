#pragma once

// Runs the installed CLI binary and captures exit code / stdout / stderr.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace cli {

inline std::string binary() {
#ifdef NOSET_CLI_PATH
  return NOSET_CLI_PATH;
#else
  const char* env = std::getenv("NOSET_CLI");
  return env ? env : "noset";
#endif
}

struct Run {
  int exit = -1;
  std::string out;
  std::string err;
};

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() /
             ("noset_test_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  return dir;
}

inline Run run(const std::string& args) {
  static int seq = 0;
  const auto dir = scratch_dir();
  const auto outf = dir / ("out" + std::to_string(seq));
  const auto errf = dir / ("err" + std::to_string(seq));
  ++seq;
  const std::string cmd = binary() + " " + args + " >" + outf.string() +
                          " 2>" + errf.string();
  const int rc = std::system(cmd.c_str());
  Run r;
  r.exit = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  r.out = slurp(outf);
  r.err = slurp(errf);
  std::filesystem::remove(outf);
  std::filesystem::remove(errf);
  return r;
}

}  // namespace cli
