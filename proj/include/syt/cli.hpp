#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace syt::cli {

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kUsageError = 2;

/// Environment variable overriding the census size cap.
inline constexpr const char* kCapVariable = "SYT_CENSUS_CAP";

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace syt::cli
