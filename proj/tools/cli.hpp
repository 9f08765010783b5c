#pragma once

#include <string>
#include <vector>

namespace polecover::cli {

struct Outcome {
  int exit_code = 0;
  std::string out;
  std::string err;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitRefused = 3;

/// Runs one command; args exclude the program name.
Outcome run(const std::vector<std::string>& args);

}  // namespace polecover::cli
