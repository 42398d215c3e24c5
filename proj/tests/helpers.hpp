/*
 * Copyright (c) 2026, the belent authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "belief/errors.hpp"
#include "belief/frame.hpp"

namespace test_helpers {

/// Runs f, returns the Errc it threw (nullopt when nothing was thrown).
template <typename F>
std::optional<belief::Errc> thrown_code(F&& f) {
  try {
    f();
  } catch (const belief::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

/// Frame with labels e1..en.
inline belief::Frame frame_n(int n) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) labels.push_back("e" + std::to_string(i));
  return belief::Frame(std::move(labels));
}

struct CommandResult {
  int exit_code;
  std::string out;
  std::string err;
};

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline void spit(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

/// Runs a shell command, capturing stdout/stderr through temp files.
inline CommandResult run_command(const std::string& command) {
  static int counter = 0;
  const std::string tag = std::to_string(++counter);
  const std::string out_path = "cmd_" + tag + ".out";
  const std::string err_path = "cmd_" + tag + ".err";
  const int status =
      std::system((command + " > " + out_path + " 2> " + err_path).c_str());
  CommandResult result;
  result.exit_code = status == -1 ? -1 : WEXITSTATUS(status);
  result.out = slurp(out_path);
  result.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return result;
}

}  // namespace test_helpers
