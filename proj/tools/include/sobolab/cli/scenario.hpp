#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "sobolab/criteria.hpp"
#include "sobolab/measures.hpp"

namespace sobolab::cli {

enum class Command {
    moments,
    gram,
    opoly,
    zeros,
    multop,
    gamma,
    bpe,
    wirtinger,
    dominance,
    cond4,
    compare,
    eigenlimits,
    prop12,
};

std::string to_string(Command c);
Command command_from_string(std::string_view s);

/// Pair of measures defining a Sobolev pencil; a missing M1 means the zero matrix.
struct PencilSpec {
    Measure m0;
    std::optional<Measure> m1;

    SobolevPencil build() const;
};

/// One experiment, read from a JSON spec file.
///
///   {"name": str, "command": str,
///    "measure": <measure>,            moments, gamma, bpe, wirtinger, prop12
///    "pencil": {"M0": <measure>, "M1": <measure>|null},
///                                     gram, opoly, zeros, multop, dominance, cond4, compare
///    "other": {"M0": ..., "M1": ...}, compare
///    "n_max": int (<= 64), "points": [[re, im], ...], "C": real, "degree": int,
///    "center": [re, im]              wirtinger: test in the basis (z - center)^k
///    "fourier": [[k, re, im], ...]   eigenlimits
///    "circles": [{"center": [re, im], "radius": r, "fourier": [...]}, ...]   prop12}
///
/// Unknown keys are rejected.
struct Scenario {
    std::string name;
    Command command = Command::moments;
    std::optional<Measure> measure;
    std::optional<PencilSpec> pencil;
    std::optional<PencilSpec> other;
    std::optional<int> n_max;
    std::vector<cplx> points;
    std::optional<double> c;
    std::optional<int> degree;
    std::optional<cplx> center;
    std::optional<TrigWeight> weight;
    std::vector<WeightedCircleSpec> circles;
};

/// Throws InvalidArgument on schema violations (including missing command-specific parameters).
Scenario parse_scenario(const nlohmann::json& j);

struct Artifact {
    std::string suffix; ///< file name is <scenario name><suffix>
    std::string content;
};

struct RunResult {
    nlohmann::ordered_json report;
    std::vector<Artifact> artifacts;
};

/// Executes a parsed scenario. `n_max_override` replaces the scenario's n_max when set.
RunResult run_scenario(const Scenario& s, std::optional<int> n_max_override, std::uint64_t seed);

/// Names of the built-in scenarios in a fixed order.
const std::vector<std::string>& list_builtins();

/// Runs a built-in scenario by name; throws InvalidArgument for unknown names.
RunResult run_builtin(std::string_view name, int n_max, std::uint64_t seed);

inline constexpr int kDefaultNMax = 32;

} // namespace sobolab::cli
