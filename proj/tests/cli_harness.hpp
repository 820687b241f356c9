// Copyright 2026 The sidom Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef SIDOM_TESTS_CLI_HARNESS_HPP_
#define SIDOM_TESTS_CLI_HARNESS_HPP_

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace sidom::testing {

struct CliRun {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline std::string Slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline void Spit(const std::filesystem::path& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

inline std::string Quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  return out + "'";
}

// Scratch directory with the CLI run from inside it.
class CliSandbox {
 public:
  explicit CliSandbox(const std::string& tag)
      : dir_(std::filesystem::temp_directory_path() /
             ("sidom_" + tag + "_" + std::to_string(::getpid()))) {
    std::filesystem::remove_all(dir_);
    std::filesystem::create_directories(dir_);
  }
  ~CliSandbox() {
    std::error_code ec;
    std::filesystem::remove_all(dir_, ec);
  }
  CliSandbox(const CliSandbox&) = delete;
  CliSandbox& operator=(const CliSandbox&) = delete;

  std::filesystem::path path(const std::string& name) const { return dir_ / name; }
  void write(const std::string& name, const std::string& text) const {
    Spit(path(name), text);
  }
  std::string read(const std::string& name) const { return Slurp(path(name)); }

  CliRun run(const std::vector<std::string>& args) const {
    std::string command = "cd " + Quote(dir_.string()) + " && " +
                          Quote(SIDOM_CLI_PATH);
    for (const std::string& a : args) command += " " + Quote(a);
    command += " 2>" + Quote(path(".stderr").string());
    CliRun result;
    FILE* pipe = ::popen(command.c_str(), "r");
    if (!pipe) return result;
    char buffer[4096];
    std::size_t got;
    while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) {
      result.out.append(buffer, got);
    }
    const int status = ::pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.err = read(".stderr");
    return result;
  }

 private:
  std::filesystem::path dir_;
};

inline constexpr const char* kCycle4 = "n 4\n0 1\n1 2\n2 3\n3 0\n";
inline constexpr const char* kPath3 = "n 3\n0 1\n1 2\n";
inline constexpr const char* kK4 =
    "n 4\n0 1\n0 2\n0 3\n1 0\n1 2\n1 3\n2 0\n2 1\n2 3\n3 0\n3 1\n3 2\n";

struct GoldenScenario {
  const char* name;
  std::vector<std::string> args;
  int exit_code;
  const char* stdout_prefix;  // empty: not checked
};

// Input files expected by the scenarios below.
inline void WriteGoldenInputs(const CliSandbox& box) {
  box.write("c4.txt", kCycle4);
  box.write("path.txt", kPath3);
  box.write("k4.txt", kK4);
  box.write("broken.txt", "n 3\n0 1\n0 9\n");
  box.write("c4.bad", "0 2\n1 3\n");
  box.write("k4.singletons", "0\n1\n2\n3\n");
}

inline std::vector<GoldenScenario> GoldenScenarios() {
  return {
      {"compute on K4", {"compute", "--in", "k4.txt", "--what", "dsminus"}, 0,
       "4\n0\n1\n2\n3\n"},
      {"compute on a cycle",
       {"compute", "--in", "c4.txt", "--what", "dsminus"}, 0, "1\n0 1 2 3\n"},
      {"compute on a non-strong digraph",
       {"compute", "--in", "path.txt", "--what", "dsminus"}, 3, ""},
      {"compute on a missing file",
       {"compute", "--in", "missing.txt", "--what", "dsminus"}, 2, ""},
      {"compute on a malformed file",
       {"compute", "--in", "broken.txt", "--what", "kappa"}, 2, ""},
      {"verify a valid partition",
       {"verify", "--in", "k4.txt", "--partition", "k4.singletons"}, 0, ""},
      {"verify an invalid partition",
       {"verify", "--in", "c4.txt", "--partition", "c4.bad"}, 1, ""},
      {"generate outside the family range",
       {"generate", "--family", "order-value", "--p", "6", "--m", "4", "--out",
        "ov.txt"},
       3, ""},
      {"critical on a digraph that is not critical",
       {"critical", "--in", "c4.txt"}, 1, ""},
      {"laws on K4", {"laws", "--in", "k4.txt"}, 0, "digraph: order 4, 12 arcs\n"},
      {"transform without the second factor",
       {"transform", "--in", "k4.txt", "--op", "product", "--out", "p.txt"}, 2,
       ""},
      {"unknown subcommand", {"frobnicate"}, 2, ""},
  };
}

}  // namespace sidom::testing

#endif  // SIDOM_TESTS_CLI_HARNESS_HPP_
