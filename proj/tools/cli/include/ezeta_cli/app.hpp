#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ezeta/error.hpp"

namespace ezeta::cli {

/// Process exit codes.
namespace exit_code {
inline constexpr int success = 0;
inline constexpr int usage = 2;
inline constexpr int condition_violated = 3;
inline constexpr int verification_failed = 4;
}  // namespace exit_code

/// Input-side failures map to usage; failed computations to verification.
int exit_code_for(ErrorKind kind) noexcept;

/// Runs `ezeta <args...>` (args exclude the program name) and returns the
/// exit code. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ezeta::cli
