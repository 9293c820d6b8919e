#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rigidity_forge::cli {

inline constexpr const char* kSchema = "rigidity-forge/1";

/// Exit codes: 0 on success (including false verdicts of plain queries),
/// 1 when a check-* assertion fails, 2 on usage or input errors.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. `args` excludes the program name. Graph input is read
/// from `in` when --input is "-" (the default), otherwise from the named file.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace rigidity_forge::cli
