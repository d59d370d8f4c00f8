#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace ccm::cli {

inline constexpr std::string_view kSchema = "ccm-report/1";

enum ExitCode : int { kSuccess = 0, kViolation = 1, kUsage = 2 };

/// Runs one command line (without the program name). The JSON report goes to
/// `out`, the human summary and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "fnv1a64:" followed by 16 hex digits.
std::string digest(std::string_view bytes);

}  // namespace ccm::cli
