#ifndef TWISTFLOER_CLI_HPP
#define TWISTFLOER_CLI_HPP

#include <functional>
#include <optional>
#include <string>

#include "twistfloer/moduli.hpp"
#include "twistfloer/surface.hpp"

namespace twistfloer {

/// Everything a run needs; populated from an optional JSON config file
/// (path from --config or the TWISTFLOER_CONFIG environment variable)
/// and then overridden by command-line flags.
struct RunConfig {
    SurfaceSpec surface{2, 0};
    TwistCurveSpec curve = TwistCurveSpec::non_separating();
    int m = 2;
    int n = 3;
    std::optional<int> p;
    int bound_q = 10;
    CutoffProfile cutoff{};
    double ode_tolerance = 1e-9;
    std::string output_dir = ".";
    int parallelism = 1;

    void validate() const;  // throws ShapeError / InvalidCurveError
};

/// Parse a JSON config file into `cfg`; unknown keys are rejected.
void load_config_file(const std::string& path, RunConfig& cfg);

/// Handler for the check-all subcommand (the full self-check suite lives
/// in the verification library; the main binary wires it in here).
using CheckAllHandler = std::function<int(const RunConfig&)>;

/// Exit codes: 0 ok, 1 internal error, 2 invalid usage or config,
/// 3 unsupported topology, 4 numerical failure.
int run_cli(int argc, const char* const* argv, CheckAllHandler check_all = nullptr);

}  // namespace twistfloer

#endif
