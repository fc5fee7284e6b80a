#ifndef QSSA_CLI_COMMANDS_HPP
#define QSSA_CLI_COMMANDS_HPP

/**
 * @file commands.hpp
 * @brief The five scenario commands behind the `qssa` executable.
 *
 * Each command writes its files into `out_dir` (created if missing) and
 * returns the paths written. Failures are reported by exception; nothing is
 * written after the first error.
 */

#include <filesystem>
#include <optional>
#include <vector>

#include "qssa/approx.hpp"
#include "qssa/cli/config.hpp"
#include "qssa/cli/output.hpp"

namespace qssa::cli {

struct CommandOptions {
    std::filesystem::path out_dir = ".";
    bool force = false;
    std::optional<CurveRegime> regime;  ///< Standard or Reverse; empty uses the classified regime
    Approach approach = Approach::Free;
    TotalVariant variant = TotalVariant::AsPrinted;
};

using Written = std::vector<std::filesystem::path>;

/// trajectory.csv (`t,S,E,C,P`) and meta.json.
Written cmd_simulate(const ScenarioConfig& cfg, const CommandOptions& opt);

/// approx.csv with inner, outer and uniform columns.
/// @throws NotApplicableError when the classified regime does not match and `force` is unset.
Written cmd_approx(const ScenarioConfig& cfg, const CommandOptions& opt);

/// errors.json: normalized error norms of every approximation against the full-system oracle.
Written cmd_compare(const ScenarioConfig& cfg, const CommandOptions& opt);

/// scaling.json for the SC system or the SIR model.
Written cmd_scale(const ScenarioConfig& cfg, const CommandOptions& opt);

/// stability.json: Jacobian and eigenvalues at the origin, Dulac samples on a 10x10 interior grid.
Written cmd_stability(const ScenarioConfig& cfg, const CommandOptions& opt);

/// Flat derived constants plus t1, t2 and the regime, as written to meta.json.
Json derived_json(const DerivedConstants& dc, RegimeThresholds thresholds);

}  // namespace qssa::cli

#endif  // QSSA_CLI_COMMANDS_HPP
