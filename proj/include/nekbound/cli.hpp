#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nekbound::cli {

// Exit-code contract, fixed for scriptability:
//   0 success, 2 input/usage error, 3 unknown builtin, 4 soundness violation.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitUnknownBuiltin = 3;
inline constexpr int kExitSoundness = 4;

/// Run the nekbound command line. args is argv-style, args[0] being the
/// program name. All output goes to the supplied streams so tests can run
/// commands in process.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nekbound::cli
