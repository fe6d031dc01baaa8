#include "sobolab/cli/runner.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "sobolab/cli/scenario.hpp"
#include "sobolab/errors.hpp"
#include "sobolab/report.hpp"

namespace sobolab::cli {

namespace {

void write_file(const std::filesystem::path& path, const std::string& content)
{
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw InvalidArgument("cannot open " + path.string() + " for writing");
    }
    f << content;
    if (!f) {
        throw InvalidArgument("failed writing " + path.string());
    }
}

void emit(const std::filesystem::path& out, const std::string& name, const RunResult& r)
{
    write_file(out / (name + ".json"), dump_fixed(r.report));
    for (const auto& a : r.artifacts) {
        write_file(out / (name + a.suffix), a.content);
    }
}

} // namespace

int run(const RunOptions& options, std::ostream& err)
{
    try {
        if (options.spec.has_value() == options.builtin.has_value()) {
            throw InvalidArgument("exactly one of --spec and --builtin is required");
        }
        std::error_code ec;
        std::filesystem::create_directories(options.out, ec);
        if (ec) {
            throw InvalidArgument("cannot create output directory " + options.out.string() + ": " + ec.message());
        }
        if (options.spec) {
            std::ifstream f(*options.spec);
            if (!f) {
                throw InvalidArgument("cannot read " + options.spec->string());
            }
            std::stringstream buf;
            buf << f.rdbuf();
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(buf.str());
            } catch (const nlohmann::json::exception& e) {
                throw InvalidArgument(std::string("malformed JSON: ") + e.what());
            }
            const auto scenario = parse_scenario(j);
            emit(options.out, scenario.name, run_scenario(scenario, options.n_max, options.seed));
            return kExitOk;
        }
        const int n_max = options.n_max.value_or(kDefaultNMax);
        if (*options.builtin == "all") {
            for (const auto& name : list_builtins()) {
                emit(options.out, name, run_builtin(name, n_max, options.seed));
            }
        } else {
            emit(options.out, *options.builtin, run_builtin(*options.builtin, n_max, options.seed));
        }
        return kExitOk;
    } catch (const NumericError& e) {
        err << "numeric error: " << e.what() << '\n';
        return kExitNumericError;
    } catch (const InvalidArgument& e) {
        err << "spec error: " << e.what() << '\n';
        return kExitSpecError;
    } catch (const nlohmann::json::exception& e) {
        err << "spec error: " << e.what() << '\n';
        return kExitSpecError;
    }
}

} // namespace sobolab::cli
