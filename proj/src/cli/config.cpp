#include "qssa/cli/config.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "qssa/errors.hpp"

#ifndef QSSA_DEFAULT_PRESETS_DIR
#define QSSA_DEFAULT_PRESETS_DIR "presets"
#endif

namespace qssa::cli {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_number(std::string_view text, std::string_view key) {
    text = trim(text);
    double value = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
        throw ConfigError("invalid number for '" + std::string(key) + "': '" + std::string(text) +
                          "'");
    }
    return value;
}

constexpr std::array kKnownKeys = {
    "model",         "rates.k1",      "rates.k_minus1", "rates.k2",    "init.s0",
    "init.e0",       "init.c0",       "init.p0",        "time.t_end",  "solver.rel_tol",
    "solver.abs_tol", "regime.eps_lo", "regime.eps_hi",  "grid.kind",   "grid.count",
    "output.dir",    "sir.beta",      "sir.gamma",      "sir.n0",      "name",
};

}  // namespace

KeyValues parse_key_values(std::string_view text, std::string_view source) {
    KeyValues kv;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        const std::string where = std::string(source) + ":" + std::to_string(line_no);
        if (eq == std::string_view::npos) {
            throw ConfigError(where + ": expected key=value");
        }
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        if (key.empty()) throw ConfigError(where + ": empty key");
        if (!kv.emplace(key, value).second) {
            throw ConfigError(where + ": duplicate key '" + key + "'");
        }
    }
    return kv;
}

KeyValues merge(KeyValues base, const KeyValues& overrides) {
    for (const auto& [k, v] : overrides) base.insert_or_assign(k, v);
    return base;
}

TimeSpec parse_time_spec(std::string_view text) {
    text = trim(text);
    if (text.empty()) throw ConfigError("time.t_end: empty value");
    auto valid_name = [](std::string_view name) {
        return name == "t1" || name == "t2" || name == "t1_s" || name == "t2_s" ||
               name == "t1_r" || name == "t2_r";
    };
    const auto star = text.find('*');
    if (star != std::string_view::npos) {
        const std::string_view name = trim(text.substr(star + 1));
        if (!valid_name(name)) {
            throw ConfigError("time.t_end: unknown time scale '" + std::string(name) + "'");
        }
        return {parse_number(text.substr(0, star), "time.t_end"), std::string(name)};
    }
    if (valid_name(text)) return {1.0, std::string(text)};
    return {parse_number(text, "time.t_end"), ""};
}

double named_time_scale(std::string_view name, const DerivedConstants& dc,
                        RegimeThresholds thresholds) {
    auto require = [&](const std::optional<double>& v) {
        if (!v) throw ConfigError("time scale '" + std::string(name) + "' undefined when a2 = 0");
        return *v;
    };
    if (name == "t1_s") return dc.t1_s;
    if (name == "t2_s") return require(dc.t2_s);
    if (name == "t1_r") return require(dc.t1_r);
    if (name == "t2_r") return dc.t2_r;
    if (name == "t1" || name == "t2") {
        try {
            const TimeScales ts = regime_time_scales(dc, classify_regime(dc, thresholds).kind);
            return name == "t1" ? ts.fast : ts.slow;
        } catch (const NotApplicableError& e) {
            throw ConfigError("time scale '" + std::string(name) + "' undefined: " + e.what());
        }
    }
    throw ConfigError("unknown time scale '" + std::string(name) + "'");
}

double TimeSpec::resolve(const DerivedConstants& dc, RegimeThresholds thresholds) const {
    const double value = scale.empty() ? multiplier
                                       : multiplier * named_time_scale(scale, dc, thresholds);
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw ConfigError("time.t_end must resolve to a positive time");
    }
    return value;
}

ScenarioConfig build_config(const KeyValues& kv) {
    for (const auto& [key, value] : kv) {
        if (std::find(kKnownKeys.begin(), kKnownKeys.end(), key) == kKnownKeys.end()) {
            throw ConfigError("unknown configuration key '" + key + "'");
        }
    }
    auto get = [&kv](std::string_view key) -> std::optional<std::string> {
        const auto it = kv.find(key);
        if (it == kv.end()) return std::nullopt;
        return it->second;
    };
    auto number = [&](std::string_view key) -> std::optional<double> {
        const auto v = get(key);
        if (!v) return std::nullopt;
        return parse_number(*v, key);
    };
    auto required = [&](std::string_view key) {
        const auto v = number(key);
        if (!v) throw ConfigError("missing required key '" + std::string(key) + "'");
        return *v;
    };

    ScenarioConfig cfg;
    if (const auto m = get("model")) {
        if (*m == "secp") {
            cfg.model = Model::Secp;
        } else if (*m == "sir") {
            cfg.model = Model::Sir;
        } else {
            throw ConfigError("model must be 'secp' or 'sir', got '" + *m + "'");
        }
    }

    try {
        if (cfg.model == Model::Secp) {
            cfg.rates.emplace(required("rates.k1"), required("rates.k_minus1"),
                              required("rates.k2"));
            cfg.init.emplace(required("init.s0"), required("init.e0"),
                             number("init.c0").value_or(0.0), number("init.p0").value_or(0.0));
        } else {
            const SirParameters sir{required("sir.beta"), required("sir.gamma"),
                                    required("sir.n0")};
            if (!(sir.beta > 0.0) || !(sir.gamma > 0.0) || !(sir.n0 > 0.0)) {
                throw ConfigError("sir.beta, sir.gamma and sir.n0 must be positive");
            }
            cfg.sir = sir;
        }
    } catch (const ConfigError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }

    if (const auto t = get("time.t_end")) cfg.t_end = parse_time_spec(*t);
    if (const auto v = number("solver.rel_tol")) cfg.rel_tol = *v;
    cfg.abs_tol = number("solver.abs_tol");
    if (!(cfg.rel_tol > 0.0) || (cfg.abs_tol && !(*cfg.abs_tol > 0.0))) {
        throw ConfigError("solver tolerances must be positive");
    }
    if (const auto v = number("regime.eps_lo")) cfg.thresholds.eps_lo = *v;
    if (const auto v = number("regime.eps_hi")) cfg.thresholds.eps_hi = *v;
    if (!(cfg.thresholds.eps_lo > 0.0 && cfg.thresholds.eps_lo < cfg.thresholds.eps_hi)) {
        throw ConfigError("regime thresholds must satisfy 0 < eps_lo < eps_hi");
    }
    if (const auto g = get("grid.kind")) {
        if (*g == "log") {
            cfg.grid.kind = GridKind::Log;
        } else if (*g == "linear") {
            cfg.grid.kind = GridKind::Linear;
        } else {
            throw ConfigError("grid.kind must be 'log' or 'linear'");
        }
    }
    if (const auto c = number("grid.count")) {
        if (*c < 2.0 || *c != std::floor(*c) || *c > 1e8) {
            throw ConfigError("grid.count must be an integer >= 2");
        }
        cfg.grid.count = static_cast<std::size_t>(*c);
    }
    if (const auto d = get("output.dir")) cfg.output_dir = *d;
    return cfg;
}

KeyValues load_key_values(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read configuration file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_key_values(buf.str(), path.string());
}

std::filesystem::path find_preset(std::string_view name) {
    std::vector<std::filesystem::path> dirs;
    if (const char* env = std::getenv("QSSA_PRESETS_DIR"); env && *env) dirs.emplace_back(env);
    dirs.emplace_back(QSSA_DEFAULT_PRESETS_DIR);
    dirs.emplace_back("presets");
    for (const auto& dir : dirs) {
        const auto candidate = dir / (std::string(name) + ".cfg");
        if (std::filesystem::is_regular_file(candidate)) return candidate;
    }
    throw ConfigError("preset '" + std::string(name) + "' not found");
}

std::vector<double> build_grid(const GridSpec& grid, double t_end, double fast_scale) {
    std::vector<double> t;
    if (grid.kind == GridKind::Linear) {
        const std::size_t n = std::max<std::size_t>(grid.count, 2);
        t.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            t.push_back(t_end * static_cast<double>(i) / static_cast<double>(n - 1));
        }
        t.back() = t_end;
        return t;
    }
    double start = fast_scale / 100.0;
    if (!(start > 0.0) || start >= t_end) start = t_end * 1e-6;
    const std::size_t n = std::max<std::size_t>(grid.count, 2);
    const double log_start = std::log(start);
    const double log_span = std::log(t_end) - log_start;
    t.reserve(n + 1);
    t.push_back(0.0);
    for (std::size_t i = 0; i < n; ++i) {
        t.push_back(std::exp(log_start + log_span * static_cast<double>(i) /
                                             static_cast<double>(n - 1)));
    }
    t.back() = t_end;
    return t;
}

}  // namespace qssa::cli
