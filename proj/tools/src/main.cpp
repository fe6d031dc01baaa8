#include <iostream>

#include <CLI11.hpp>

#include "sobolab/cli/runner.hpp"
#include "sobolab/cli/scenario.hpp"

int main(int argc, char** argv)
{
    CLI::App app{"sobolab: finite-section experiments for Sobolev orthogonal polynomials"};
    std::string spec;
    std::string builtin;
    std::string out = ".";
    int n_max = sobolab::cli::kDefaultNMax;
    std::uint64_t seed = 0;
    bool list = false;
    auto* spec_opt = app.add_option("--spec", spec, "scenario JSON file");
    auto* builtin_opt = app.add_option("--builtin", builtin, "builtin scenario name, or 'all'");
    app.add_option("--out", out, "output directory")->capture_default_str();
    auto* nmax_opt = app.add_option("--nmax", n_max, "largest section order (<= 64)")->capture_default_str();
    app.add_option("--seed", seed, "seed for random polynomial draws")->capture_default_str();
    app.add_flag("--list", list, "print the builtin scenario names");
    spec_opt->excludes(builtin_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : sobolab::cli::kExitSpecError;
    }

    if (list) {
        for (const auto& name : sobolab::cli::list_builtins()) {
            std::cout << name << '\n';
        }
        return 0;
    }

    sobolab::cli::RunOptions options;
    if (*spec_opt) {
        options.spec = spec;
    }
    if (*builtin_opt) {
        options.builtin = builtin;
    }
    options.out = out;
    if (*nmax_opt) {
        options.n_max = n_max;
    }
    options.seed = seed;
    return sobolab::cli::run(options, std::cerr);
}
