#ifndef QSSA_CLI_CONFIG_HPP
#define QSSA_CLI_CONFIG_HPP

/**
 * @file config.hpp
 * @brief Scenario configuration: flat `key=value` text, one entry per line.
 *
 *     # Segel (1988)
 *     rates.k1=4e6
 *     init.s0=1e-5
 *     time.t_end=5*t2
 *
 * `#` starts a comment. Unknown keys are rejected.
 */

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qssa/kinetics.hpp"

namespace qssa::cli {

using KeyValues = std::map<std::string, std::string, std::less<>>;

/// @throws ConfigError on a malformed line or a duplicate key.
KeyValues parse_key_values(std::string_view text, std::string_view source = "<config>");

/// Entries of `overrides` replace those of `base`.
KeyValues merge(KeyValues base, const KeyValues& overrides);

enum class Model { Secp, Sir };
enum class GridKind { Log, Linear };

/// An end time given either absolutely or as a multiple of a named time scale.
struct TimeSpec {
    double multiplier = 5.0;
    std::string scale = "t2";  ///< empty for an absolute time

    /// @throws ConfigError if the named scale is undefined for these constants.
    double resolve(const DerivedConstants& dc, RegimeThresholds thresholds) const;
};

/// @throws ConfigError on anything but `<number>`, `<name>` or `<number>*<name>`.
TimeSpec parse_time_spec(std::string_view text);

struct GridSpec {
    GridKind kind = GridKind::Log;
    std::size_t count = 2000;
};

struct SirParameters {
    double beta;
    double gamma;
    double n0;
};

struct ScenarioConfig {
    Model model = Model::Secp;
    std::optional<RateConstants> rates;
    std::optional<InitialState> init;
    std::optional<SirParameters> sir;
    TimeSpec t_end;
    double rel_tol = 1e-10;
    std::optional<double> abs_tol;
    RegimeThresholds thresholds;
    GridSpec grid;
    std::string output_dir = ".";
};

/// @throws ConfigError for unknown keys, missing required keys or invalid values.
ScenarioConfig build_config(const KeyValues& kv);

/// Looks for `<name>.cfg` in $QSSA_PRESETS_DIR, the installed preset directory and ./presets.
/// @throws ConfigError if no preset of that name exists.
std::filesystem::path find_preset(std::string_view name);

/// @throws ConfigError if the file cannot be read.
KeyValues load_key_values(const std::filesystem::path& path);

/// Named time scale: t1_s, t2_s, t1_r, t2_r, or t1/t2 of the classified regime.
/// @throws ConfigError if undefined.
double named_time_scale(std::string_view name, const DerivedConstants& dc,
                        RegimeThresholds thresholds);

/**
 * @brief Sample times for outputs.
 *
 * Log grids are t = 0 followed by `count` log-spaced points from fast/100 to
 * t_end, where fast is the regime's t1. Linear grids are `count` points on [0, t_end].
 */
std::vector<double> build_grid(const GridSpec& grid, double t_end, double fast_scale);

}  // namespace qssa::cli

#endif  // QSSA_CLI_CONFIG_HPP
