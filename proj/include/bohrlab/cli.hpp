#pragma once

#include <iosfwd>

namespace bohrlab {

inline constexpr int kExitPass = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// bohr-lab <table|constants|bound|radius|verify|export> [flags]
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bohrlab
