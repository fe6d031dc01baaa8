#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace sobolab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitSpecError = 2;
inline constexpr int kExitNumericError = 3;

struct RunOptions {
    std::optional<std::filesystem::path> spec;
    std::optional<std::string> builtin; ///< a builtin name or "all"
    std::filesystem::path out = ".";
    std::optional<int> n_max;
    std::uint64_t seed = 0;
};

/// Runs a spec file or builtin(s), writes <out>/<name>.json plus CSV artifacts, and returns the
/// process exit code: 0 when verdicts were computed (including failing verdicts), 2 on a spec
/// error, 3 on a numeric error. Diagnostics go to `err`.
int run(const RunOptions& options, std::ostream& err);

} // namespace sobolab::cli
