#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace isodist::cli {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kVersion = "1.0.0";

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

struct Limits {
  std::uint32_t default_height = 64;
  std::uint32_t height_cap = 256;        // witness and omega searches
  std::uint32_t oracle_default = 8;
  std::uint32_t oracle_cap = 24;         // the oracle box grows like H^4 pairs
};

/// Caps from the environment: ISODIST_MAX_HEIGHT raises or lowers both caps.
Limits limits_from_env();

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Limits& limits = limits_from_env());

}  // namespace isodist::cli
