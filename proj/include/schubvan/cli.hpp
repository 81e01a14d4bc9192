#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace schubvan {

/// Version tag of structured output records.
inline constexpr const char* kDecisionSchema = "schubvan.decision/1";
inline constexpr const char* kReplaySchema = "schubvan.replay/1";
inline constexpr const char* kOracleSchema = "schubvan.oracle-check/1";

/// Environment variable consulted for the default seed.
inline constexpr const char* kSeedEnv = "SCHUBVAN_SEED";

/// Exit codes: 0 decision made, 1 witness/oracle disagreement, 2 bad input.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace schubvan
