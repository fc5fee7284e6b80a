// qssa: run SECP / SIR scenarios and write CSV/JSON results.
//
// Exit codes: 0 success, 2 configuration or usage error, 1 any other failure.

#include <cstdio>
#include <exception>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "qssa/cli/commands.hpp"
#include "qssa/cli/config.hpp"
#include "qssa/errors.hpp"

namespace {

using namespace qssa;
using namespace qssa::cli;

struct Args {
    std::string config;
    std::string preset;
    std::string out;
    bool force = false;
    std::string regime;
    std::string approach = "free";
    std::string variant = "printed";
};

ScenarioConfig load(const Args& a) {
    if (a.config.empty() && a.preset.empty()) throw ConfigError("give --config and/or --preset");
    KeyValues kv;
    if (!a.preset.empty()) kv = load_key_values(find_preset(a.preset));
    if (!a.config.empty()) kv = merge(std::move(kv), load_key_values(a.config));
    return build_config(kv);
}

CommandOptions options(const Args& a, const ScenarioConfig& cfg) {
    CommandOptions opt;
    opt.out_dir = std::filesystem::path(a.out.empty() ? cfg.output_dir : a.out);
    opt.force = a.force;
    if (a.regime == "sqssa") {
        opt.regime = CurveRegime::Standard;
    } else if (a.regime == "rqssa") {
        opt.regime = CurveRegime::Reverse;
    }
    opt.approach = a.approach == "total" ? Approach::Total : Approach::Free;
    opt.variant = a.variant == "consistent" ? TotalVariant::InnerConsistent
                                            : TotalVariant::AsPrinted;
    return opt;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quasi-steady-state approximations of the single-enzyme, single-substrate reaction"};
    app.require_subcommand(1);
    Args args;

    using Command = Written (*)(const ScenarioConfig&, const CommandOptions&);
    const std::map<std::string, std::pair<Command, std::string>> commands = {
        {"simulate", {cmd_simulate, "Integrate the full system; write trajectory.csv and meta.json"}},
        {"approx", {cmd_approx, "Evaluate inner/outer/uniform approximations; write approx.csv"}},
        {"compare", {cmd_compare, "Compare every approximation with the oracle; write errors.json"}},
        {"scale", {cmd_scale, "Nondimensionalize the SC or SIR system; write scaling.json"}},
        {"stability", {cmd_stability, "Stability of the origin and Dulac samples; write stability.json"}},
    };
    for (const auto& [name, entry] : commands) {
        CLI::App* sub = app.add_subcommand(name, entry.second);
        sub->add_option("--config", args.config, "key=value configuration file");
        sub->add_option("--preset", args.preset, "preset name; --config entries override it");
        sub->add_option("--out", args.out, "output directory (default: output.dir or .)");
        sub->add_flag("--force", args.force, "evaluate approximations outside their regime");
        if (name == "approx" || name == "compare") {
            sub->add_option("--approach", args.approach, "free or total")
                ->check(CLI::IsMember({"free", "total"}));
            sub->add_option("--variant", args.variant,
                            "total-approach layer coefficient: printed or consistent")
                ->check(CLI::IsMember({"printed", "consistent"}));
        }
        if (name == "approx") {
            sub->add_option("--regime", args.regime, "sqssa or rqssa (default: classified)")
                ->check(CLI::IsMember({"sqssa", "rqssa"}));
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    try {
        const ScenarioConfig cfg = load(args);
        const Written files = commands.at(name).first(cfg, options(args, cfg));
        for (const auto& f : files) std::printf("%s\n", f.string().c_str());
        return 0;
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "qssa %s: configuration error: %s\n", name.c_str(), e.what());
        return 2;
    } catch (const StiffnessError& e) {
        std::fprintf(stderr, "qssa %s: integrator failed: %s\n", name.c_str(), e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "qssa %s: %s\n", name.c_str(), e.what());
        return 1;
    }
}
