#include "qssa/cli/commands.hpp"

#include <cmath>
#include <string>

#include "qssa/errors.hpp"
#include "qssa/kernels.hpp"
#include "qssa/ode.hpp"
#include "qssa/scaling.hpp"
#include "qssa/stability.hpp"

namespace qssa::cli {

namespace {

struct Scenario {
    RateConstants rates;
    InitialState init;
    DerivedConstants dc;
    std::optional<Regime> regime;
    double t_end;
    std::vector<double> grid;
};

Scenario prepare(const ScenarioConfig& cfg) {
    if (cfg.model != Model::Secp || !cfg.rates || !cfg.init) {
        throw ConfigError("this command needs model=secp with rates and initial concentrations");
    }
    const DerivedConstants dc = derive_constants(*cfg.rates, *cfg.init);
    std::optional<Regime> regime;
    try {
        regime = classify_regime(dc, cfg.thresholds);
    } catch (const NotApplicableError&) {
    }
    const double t_end = cfg.t_end.resolve(dc, cfg.thresholds);
    const double fast = regime ? regime_time_scales(dc, regime->kind).fast : dc.t1_s;
    return {*cfg.rates, *cfg.init, dc, regime, t_end, build_grid(cfg.grid, t_end, fast)};
}

Trajectory run_oracle(const ScenarioConfig& cfg, const Scenario& scn) {
    IntegrateOptions io;
    io.rel_tol = cfg.rel_tol;
    io.abs_tol = cfg.abs_tol;
    io.output_times.assign(scn.grid.begin() + 1, scn.grid.end());
    return integrate(SystemKind::Full, scn.rates, scn.init, scn.t_end, io);
}

Json optional_number(const std::optional<double>& v) {
    return v ? Json(*v) : Json(nullptr);
}

Json stats_json(const Trajectory& traj) {
    Json j = Json::object();
    j["accepted_steps"] = traj.stats.accepted_steps;
    j["rejected_steps"] = traj.stats.rejected_steps;
    j["max_conservation_residual"] = traj.max_conservation_residual;
    return j;
}

std::pair<std::vector<double>, std::vector<double>> evaluate(const ApproxCurve& curve,
                                                             const std::vector<double>& t) {
    std::vector<double> first(t.size());
    std::vector<double> c(t.size());
    kernels::evaluate_curve(curve, t, first, c);
    return {std::move(first), std::move(c)};
}

bool regime_matches(CurveRegime requested, RegimeKind kind) {
    return (requested == CurveRegime::Standard && kind == RegimeKind::StandardQSSA) ||
           (requested == CurveRegime::Reverse && kind == RegimeKind::ReverseQSSA);
}

// Norms of one layer restricted to the samples with lo <= t <= hi.
Json layer_norms(const ApproxCurve& curve, const std::vector<double>& t,
                 const std::vector<double>& ref_first, const std::vector<double>& ref_c,
                 double lo, double hi, double norm, std::string_view first_name) {
    std::vector<double> tt;
    std::vector<double> rf;
    std::vector<double> rc;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] >= lo && t[i] <= hi) {
            tt.push_back(t[i]);
            rf.push_back(ref_first[i]);
            rc.push_back(ref_c[i]);
        }
    }
    Json j = Json::object();
    j["t_from"] = lo;
    j["t_to"] = hi;
    j["samples"] = tt.size();
    const auto [af, ac] = evaluate(curve, tt);
    const auto nf = kernels::error_norms(tt, af, rf, norm);
    const auto nc = kernels::error_norms(tt, ac, rc, norm);
    j[std::string(first_name)] = {{"sup", nf.sup}, {"l2", nf.rms}};
    j["C"] = {{"sup", nc.sup}, {"l2", nc.rms}};
    return j;
}

}  // namespace

Json derived_json(const DerivedConstants& dc, RegimeThresholds thresholds) {
    Json j = Json::object();
    j["k_dis"] = dc.k_dis;
    j["k_vsc"] = dc.k_vsc;
    j["k_m"] = dc.k_m;
    j["a1"] = dc.a1;
    j["a2"] = dc.a2;
    j["a3"] = dc.a3;
    j["a4"] = dc.a4;
    j["epsilon"] = dc.epsilon;
    j["sigma"] = dc.sigma;
    j["rho"] = dc.rho;
    j["eta"] = optional_number(dc.eta);
    j["t1_s"] = dc.t1_s;
    j["t2_s"] = optional_number(dc.t2_s);
    j["t1_r"] = optional_number(dc.t1_r);
    j["t2_r"] = dc.t2_r;
    try {
        const Regime r = classify_regime(dc, thresholds);
        const TimeScales ts = regime_time_scales(dc, r.kind);
        j["t1"] = ts.fast;
        j["t2"] = ts.slow;
        j["regime"] = std::string(to_string(r.kind));
    } catch (const NotApplicableError&) {
        j["t1"] = nullptr;
        j["t2"] = nullptr;
        j["regime"] = nullptr;
    }
    return j;
}

Written cmd_simulate(const ScenarioConfig& cfg, const CommandOptions& opt) {
    const Scenario scn = prepare(cfg);
    const Trajectory traj = run_oracle(cfg, scn);

    std::vector<std::vector<double>> cols(5, std::vector<double>(traj.size()));
    for (std::size_t i = 0; i < traj.size(); ++i) {
        cols[0][i] = traj.t[i];
        cols[1][i] = traj.x[i].s;
        cols[2][i] = traj.x[i].e;
        cols[3][i] = traj.x[i].c;
        cols[4][i] = traj.x[i].p;
    }
    Json meta = derived_json(scn.dc, cfg.thresholds);
    meta["t_end"] = scn.t_end;
    meta["samples"] = traj.size();
    meta["rel_tol"] = cfg.rel_tol;
    meta["integrator"] = stats_json(traj);

    const auto csv = opt.out_dir / "trajectory.csv";
    const auto json = opt.out_dir / "meta.json";
    write_csv(csv, {"t", "S", "E", "C", "P"}, cols);
    write_json(json, meta);
    return {csv, json};
}

Written cmd_approx(const ScenarioConfig& cfg, const CommandOptions& opt) {
    const Scenario scn = prepare(cfg);
    if (!scn.regime) {
        throw NotApplicableError("approximations need a1 > 0 and a2 > 0");
    }
    const RegimeKind kind = scn.regime->kind;
    CurveRegime chosen;
    if (opt.regime) {
        chosen = *opt.regime;
        if (!regime_matches(chosen, kind) && !opt.force) {
            throw NotApplicableError("requested " + std::string(to_string(chosen)) +
                                     " but the scenario is classified " +
                                     std::string(to_string(kind)) + "; pass --force to override");
        }
    } else if (kind == RegimeKind::Intermediate) {
        if (!opt.force) {
            throw NotApplicableError("scenario is in the intermediate regime (epsilon = " +
                                     format_double(scn.dc.epsilon) +
                                     "); pass --regime and --force to evaluate anyway");
        }
        chosen = scn.dc.epsilon <= 1.0 ? CurveRegime::Standard : CurveRegime::Reverse;
    } else {
        chosen = kind == RegimeKind::StandardQSSA ? CurveRegime::Standard : CurveRegime::Reverse;
    }

    const ApproxSet set = ApproxSet::make(chosen, opt.approach, opt.variant, scn.rates, scn.init);
    const auto& t = scn.grid;
    const auto [in_f, in_c] = evaluate(set.inner, t);
    const auto [out_f, out_c] = evaluate(set.outer, t);
    const auto [un_f, un_c] = evaluate(set.uniform, t);

    const std::string x = opt.approach == Approach::Total ? "T" : "S";
    const auto csv = opt.out_dir / "approx.csv";
    write_csv(csv, {"t", x + "_in", "C_in", x + "_out", "C_out", x + "_un", "C_un"},
              {t, in_f, in_c, out_f, out_c, un_f, un_c});
    return {csv};
}

Written cmd_compare(const ScenarioConfig& cfg, const CommandOptions& opt) {
    const Scenario scn = prepare(cfg);
    const Trajectory traj = run_oracle(cfg, scn);
    const DerivedConstants& dc = scn.dc;

    std::vector<double> ref_s(traj.size());
    std::vector<double> ref_t(traj.size());
    std::vector<double> ref_c(traj.size());
    for (std::size_t i = 0; i < traj.size(); ++i) {
        ref_s[i] = traj.x[i].s;
        ref_c[i] = traj.x[i].c;
        ref_t[i] = traj.x[i].s + traj.x[i].c;
    }

    Json report = Json::object();
    report["regime"] = scn.regime ? Json(std::string(to_string(scn.regime->kind))) : Json(nullptr);
    report["epsilon"] = dc.epsilon;
    report["t_end"] = scn.t_end;
    report["norm"] = dc.a1;
    report["samples"] = traj.size();
    report["oracle"] = stats_json(traj);
    Json list = Json::array();

    if (dc.a1 > 0.0 && dc.a2 > 0.0) {
        const RegimeKind kind = scn.regime->kind;
        const double t1_r = *dc.t1_r;
        for (Approach approach : {Approach::Free, Approach::Total}) {
            const ApproxSet s = approach == Approach::Free
                                    ? sqssa_free(scn.rates, scn.init)
                                    : sqssa_total(scn.rates, scn.init, opt.variant);
            const ApproxSet r = approach == Approach::Free ? rqssa_free(scn.rates, scn.init)
                                                           : rqssa_total(scn.rates, scn.init);
            const auto& ref_first = approach == Approach::Free ? ref_s : ref_t;
            const std::string_view first_name = approach == Approach::Free ? "S" : "T";

            for (const auto& [set, t1] : {std::pair{&s, dc.t1_s}, std::pair{&r, t1_r}}) {
                const CurveRegime cr = set->uniform.regime();
                Json entry = Json::object();
                entry["name"] = std::string(to_string(cr)) + "_" + std::string(to_string(approach));
                entry["regime"] = std::string(to_string(cr));
                entry["approach"] = std::string(to_string(approach));
                entry["applicable"] = regime_matches(cr, kind);
                entry["t1"] = t1;
                const double split = std::min(5.0 * t1, scn.t_end);
                Json layers = Json::object();
                layers["inner"] = layer_norms(set->inner, traj.t, ref_first, ref_c, 0.0, split,
                                              dc.a1, first_name);
                layers["outer"] = layer_norms(set->outer, traj.t, ref_first, ref_c, split,
                                              scn.t_end, dc.a1, first_name);
                layers["uniform"] = layer_norms(set->uniform, traj.t, ref_first, ref_c, 0.0,
                                                scn.t_end, dc.a1, first_name);
                entry["layers"] = std::move(layers);
                list.push_back(std::move(entry));
            }

            const ApproxCurve b = blend(dc.epsilon, s.uniform, r.uniform);
            Json entry = Json::object();
            entry["name"] = "blend_" + std::string(to_string(approach));
            entry["regime"] = "blend";
            entry["approach"] = std::string(to_string(approach));
            entry["applicable"] = kind == RegimeKind::Intermediate;
            entry["weight"] = b.blend_weight();
            Json layers = Json::object();
            layers["uniform"] =
                layer_norms(b, traj.t, ref_first, ref_c, 0.0, scn.t_end, dc.a1, first_name);
            entry["layers"] = std::move(layers);
            list.push_back(std::move(entry));
        }
    }
    report["approximations"] = std::move(list);

    const auto json = opt.out_dir / "errors.json";
    write_json(json, report);
    return {json};
}

namespace {

Json scaled_equation_json(const ScaledEquation& eq) {
    Json terms = Json::array();
    for (const auto& m : eq.terms) {
        terms.push_back({{"s_exponent", m.s_exponent}, {"c_exponent", m.c_exponent},
                         {"weight", m.weight}});
    }
    return {{"prefactor", eq.prefactor}, {"terms", std::move(terms)}};
}

Json report_json(const ScalingReport& rep) {
    Json j = Json::object();
    j["names"] = rep.names;
    j["variable_scales"] = rep.variable_scales;
    j["time_scales"] = rep.time_scales;
    j["separation_ratios"] = rep.separation_ratios;
    j["gathering_declared"] = rep.gathering_declared;
    Json groups = Json::object();
    for (const auto& [name, value] : rep.named_groups) groups[name] = value;
    j["named_groups"] = std::move(groups);

    Json eqs = Json::array();
    for (std::size_t i = 0; i < rep.scaled_equations.size(); ++i) {
        Json terms = Json::array();
        for (const Term& term : rep.scaled_equations[i]) {
            terms.push_back({{"exponents", term.exponents}, {"coefficient", term.coefficient}});
        }
        eqs.push_back({{"variable", rep.names[i]}, {"terms", std::move(terms)}});
    }
    j["scaled_equations"] = std::move(eqs);

    Json cands = Json::array();
    for (const auto& c : rep.candidates) {
        cands.push_back(
            {{"time_scale", c.time_scale}, {"coefficients", c.coefficients}, {"groups", c.groups}});
    }
    j["candidates"] = std::move(cands);
    return j;
}

}  // namespace

Written cmd_scale(const ScenarioConfig& cfg, const CommandOptions& opt) {
    Json out = Json::object();
    if (cfg.model == Model::Sir) {
        if (!cfg.sir) throw ConfigError("model=sir needs sir.beta, sir.gamma and sir.n0");
        out["model"] = "sir";
        out["r0"] = cfg.sir->beta * cfg.sir->n0 / cfg.sir->gamma;
        out.update(report_json(scale_system(sir_bounded_system(cfg.sir->beta, cfg.sir->gamma,
                                                               cfg.sir->n0))));
    } else {
        if (!cfg.rates || !cfg.init) throw ConfigError("model=secp needs rates and init");
        const DerivedConstants dc = derive_constants(*cfg.rates, *cfg.init);
        const Regime regime = classify_regime(dc, cfg.thresholds);
        out["model"] = "secp";
        out["regime"] = std::string(to_string(regime.kind));
        out["epsilon"] = dc.epsilon;
        out.update(report_json(scale_system(sc_bounded_system(*cfg.rates, dc, regime.kind))));
        Json forms = Json::object();
        if (regime.kind != RegimeKind::Intermediate) {
            for (ScaleChoice choice : {ScaleChoice::T1, ScaleChoice::T2}) {
                const ScaledScSystem sys = scaled_sc_coefficients(dc, regime.kind, choice);
                forms[choice == ScaleChoice::T1 ? "t1" : "t2"] = {
                    {"time_scale", sys.time_scale},
                    {"s_scale", sys.s_scale},
                    {"c_scale", sys.c_scale},
                    {"dS", scaled_equation_json(sys.ds)},
                    {"dC", scaled_equation_json(sys.dc)},
                };
            }
        }
        out["grouped_forms"] = std::move(forms);
    }
    const auto json = opt.out_dir / "scaling.json";
    write_json(json, out);
    return {json};
}

Written cmd_stability(const ScenarioConfig& cfg, const CommandOptions& opt) {
    if (cfg.model != Model::Secp || !cfg.rates || !cfg.init) {
        throw ConfigError("stability needs model=secp with rates and initial concentrations");
    }
    const RateConstants& k = *cfg.rates;
    const DerivedConstants dc = derive_constants(k, *cfg.init);
    const EigenPair ev = eigenvalues_at_origin(k, dc.a2);
    if (!(dc.a1 > 0.0) || !(dc.a4 > 0.0)) {
        throw NotApplicableError("Dulac samples need an interior region (a1 > 0, a2 > 0)");
    }

    constexpr int kGrid = 10;
    Json points = Json::array();
    bool all_negative = true;
    for (int i = 1; i <= kGrid; ++i) {
        for (int j = 1; j <= kGrid; ++j) {
            const ReducedState x{dc.a1 * i / (kGrid + 1), dc.a4 * j / (kGrid + 1)};
            const double div = dulac_divergence(x, k, dc.a2);
            all_negative = all_negative && div < 0.0;
            points.push_back({{"s", x.s}, {"c", x.c}, {"divergence", div}});
        }
    }
    const FullState ss = full_steady_state(dc, *cfg.init);

    Json out = Json::object();
    out["a2"] = dc.a2;
    out["jacobian_origin"] = jacobian({0.0, 0.0}, k, dc.a2);
    out["discriminant"] = origin_discriminant(k, dc.a2);
    out["eigenvalues"] = {{"lambda_plus", ev.lambda_plus}, {"lambda_minus", ev.lambda_minus}};
    out["both_negative"] = ev.lambda_plus < 0.0 && ev.lambda_minus < 0.0;
    out["steady_state"] = {{"S", ss.s}, {"E", ss.e}, {"C", ss.c}, {"P", ss.p}};
    out["dulac"] = {{"all_negative", all_negative}, {"points", std::move(points)}};

    const auto json = opt.out_dir / "stability.json";
    write_json(json, out);
    return {json};
}

}  // namespace qssa::cli
