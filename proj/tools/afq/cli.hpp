#pragma once

#include <exception>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace afq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;

/// Entry point shared by the executable and the in-process tests. args[0] is
/// the program name. Output goes to the resolved path (temp file + rename) or
/// to `out` when no path applies.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

/// Writes a one-line diagnostic for a failed verb and returns its exit code:
/// quadrature and degeneracy failures are numerical, other errors config.
int report_error(const std::exception& e, std::string_view verb,
                 std::ostream& err);

}  // namespace afq::cli
