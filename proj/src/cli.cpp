#include "twistfloer/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "twistfloer/indexcalc.hpp"
#include "twistfloer/serialize.hpp"
#include "twistfloer/structmaps.hpp"

namespace twistfloer {

void RunConfig::validate() const {
    if (surface.genus < 0 || surface.boundary_count < 0)
        throw ShapeError("genus and boundary count must be nonnegative");
    if (m < 1 || n < 1 || (p && *p < 1)) throw ShapeError("twist powers must be at least 1");
    if (bound_q < 1) throw ShapeError("enumeration bound must be at least 1");
    if (ode_tolerance <= 0) throw ShapeError("ODE tolerance must be positive");
    if (cutoff.width <= 0 || cutoff.wall <= 0) throw ShapeError("cutoff data must be positive");
    if (parallelism < 1) throw ShapeError("parallelism must be at least 1");
    if (curve.is_separating()) {
        const auto& sp = curve.split;
        if (sp.g1 + sp.g2 != surface.genus || sp.b1 + sp.b2 != surface.boundary_count)
            throw InvalidCurveError("separating split does not add up to the surface data");
    }
}

void load_config_file(const std::string& path, RunConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw ShapeError("cannot open config file: " + path);
    json j = json::parse(in);
    for (const auto& [key, value] : j.items()) {
        if (key == "surface") {
            cfg.surface.genus = value.at("genus").get<int>();
            cfg.surface.boundary_count = value.at("boundary").get<int>();
        } else if (key == "curve") {
            std::string kind = value.at("kind").get<std::string>();
            if (kind == "nonseparating") {
                cfg.curve = TwistCurveSpec::non_separating();
            } else if (kind == "separating") {
                auto sp = value.at("split");
                cfg.curve = TwistCurveSpec::separating(sp.at(0).get<int>(), sp.at(1).get<int>(),
                                                       sp.at(2).get<int>(), sp.at(3).get<int>());
            } else {
                throw ShapeError("curve kind must be nonseparating or separating");
            }
        } else if (key == "powers") {
            cfg.m = value.at("m").get<int>();
            cfg.n = value.at("n").get<int>();
            if (value.contains("p")) cfg.p = value.at("p").get<int>();
        } else if (key == "bound_q") {
            cfg.bound_q = value.get<int>();
        } else if (key == "ode") {
            if (value.contains("wall")) cfg.cutoff.wall = value.at("wall").get<double>();
            if (value.contains("width")) cfg.cutoff.width = value.at("width").get<double>();
            if (value.contains("tolerance")) cfg.ode_tolerance = value.at("tolerance").get<double>();
        } else if (key == "output_dir") {
            cfg.output_dir = value.get<std::string>();
        } else if (key == "parallelism") {
            cfg.parallelism = value.get<int>();
        } else {
            throw ShapeError("unknown config key: " + key);
        }
    }
}

namespace {

void write_file(const std::string& dir, const std::string& name, const std::string& body) {
    std::string path = dir + "/" + name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ShapeError("cannot write " + path);
    out << body;
}

void emit(const RunConfig& cfg, const std::string& name, const json& j) {
    std::string body = j.dump(2);
    body += "\n";
    write_file(cfg.output_dir, name, body);
    std::cout << body;
}

json config_echo(const RunConfig& cfg) {
    json j;
    j["surface"] = {{"genus", cfg.surface.genus}, {"boundary", cfg.surface.boundary_count}};
    if (cfg.curve.is_separating()) {
        j["curve"] = {{"kind", "separating"},
                      {"split", {cfg.curve.split.g1, cfg.curve.split.b1, cfg.curve.split.g2,
                                 cfg.curve.split.b2}}};
    } else {
        j["curve"] = {{"kind", "nonseparating"}};
    }
    j["powers"] = {{"m", cfg.m}, {"n", cfg.n}};
    if (cfg.p) j["powers"]["p"] = *cfg.p;
    return j;
}

int cmd_homology(const RunConfig& cfg) {
    ComplementSurface cs = complement(cfg.surface, cfg.curve);
    GradedF2Space h = homology(cs);
    json j;
    j["schema_version"] = 1;
    j["config"] = config_echo(cfg);
    j["complement"] = to_json(cs);
    j["dims"] = {{"h0", h.dim_in_degree(0)}, {"h1", h.dim_in_degree(1)}, {"h2", h.dim_in_degree(2)}};
    j["basis"] = to_json(h)["basis"];
    emit(cfg, "homology.json", j);
    return 0;
}

int cmd_hf(const RunConfig& cfg) {
    FloerSpace fs = hf_space(cfg.surface, cfg.curve, cfg.m);
    json j;
    j["schema_version"] = 1;
    j["config"] = config_echo(cfg);
    j["hf"] = to_json(fs);
    emit(cfg, "hf.json", j);
    return 0;
}

int cmd_product(const RunConfig& cfg) {
    F2LinearMap prod = product_map(cfg.surface, cfg.curve, cfg.m, cfg.n);
    json j;
    j["schema_version"] = 1;
    j["config"] = config_echo(cfg);
    j["map"] = to_json(prod);

    json checks = json::array();
    // twist generators are annihilated: the matrix is zero on every row
    // and column indexed by a twist label
    bool annihilated = true;
    const F2Matrix& m = prod.matrix();
    for (int col = 0; col < m.cols(); ++col) {
        if (!prod.source().at(col).label.involves_twist()) continue;
        for (int row = 0; row < m.rows(); ++row) annihilated &= !m.get(row, col);
    }
    for (int row = 0; row < m.rows(); ++row) {
        if (!prod.target().at(row).label.involves_twist()) continue;
        for (int col = 0; col < m.cols(); ++col) annihilated &= !m.get(row, col);
    }
    checks.push_back({{"name", "twist_generators_annihilated"}, {"pass", annihilated}});
    if (cfg.p) {
        StructureMapReport assoc =
            check_associativity(cfg.surface, cfg.curve, cfg.m, cfg.n, *cfg.p);
        for (const auto& c : assoc.checks)
            checks.push_back({{"name", c.name}, {"pass", c.pass}});
    }
    j["checks"] = std::move(checks);
    emit(cfg, "product.json", j);
    return 0;
}

int cmd_coproduct(const RunConfig& cfg) {
    F2LinearMap co = coproduct_map(cfg.surface, cfg.curve, cfg.m, cfg.n);
    json j;
    j["schema_version"] = 1;
    j["config"] = config_echo(cfg);
    j["map"] = to_json(co);

    json checks = json::array();
    StructureMapReport cocomm = check_cocommutativity(cfg.surface, cfg.curve, cfg.m, cfg.n);
    for (const auto& c : cocomm.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}});
    StructureMapReport boundary =
        check_boundary_consistency(cfg.surface, cfg.curve, cfg.m, cfg.n);
    for (const auto& c : boundary.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}});
    if (cfg.p) {
        StructureMapReport coassoc =
            check_coassociativity(cfg.surface, cfg.curve, cfg.m, cfg.n, *cfg.p);
        for (const auto& c : coassoc.checks)
            checks.push_back({{"name", c.name}, {"pass", c.pass}});
    }
    j["checks"] = std::move(checks);
    emit(cfg, "coproduct.json", j);
    return 0;
}

int cmd_verify_nocrossing(const RunConfig& cfg, bool with_control) {
    json j;
    j["schema_version"] = 1;
    j["config"] = config_echo(cfg);
    json runs = json::array();
    bool all_empty = true;
    for (CrossingMode mode : {CrossingMode::product, CrossingMode::coproduct}) {
        CrossingScenario sc;
        sc.mode = mode;
        sc.m = cfg.m;
        sc.n = cfg.n;
        sc.bound_q = cfg.bound_q;
        sc.parallelism = cfg.parallelism;
        CrossingReport rep = enumerate_crossing_configs(sc);
        all_empty &= rep.feasible_empty();
        runs.push_back(to_json(rep));
    }
    if (with_control) {
        CrossingScenario control;
        control.mode = CrossingMode::product;
        control.m = cfg.m;
        control.n = cfg.n;
        control.bound_q = cfg.bound_q;
        control.relax_strict = true;
        control.parallelism = cfg.parallelism;
        CrossingReport rep = enumerate_crossing_configs(control);
        json ctl = to_json(rep);
        ctl["control_nonempty"] = !rep.feasible_empty();
        runs.push_back(std::move(ctl));
    }
    j["runs"] = std::move(runs);
    j["feasible_empty"] = all_empty;
    emit(cfg, "nocrossing_certificate.json", j);
    return 0;
}

int cmd_index(const RunConfig& cfg) {
    json j;
    j["schema_version"] = 1;
    j["config"] = config_echo(cfg);
    j["cz_table"] = {{"morse_min", cz(OrbitKind::morse_min)},
                     {"morse_saddle", cz(OrbitKind::morse_saddle)},
                     {"morse_max", cz(OrbitKind::morse_max)},
                     {"elliptic", cz(OrbitKind::elliptic)},
                     {"hyperbolic", cz(OrbitKind::hyperbolic)}};
    MonotonicityVerdict mono = check_monotonicity(cfg.surface, cfg.curve);
    j["monotonicity"] = {{"satisfied", mono.satisfied},
                         {"failing_requirement", mono.failing_requirement},
                         {"iterate_weakly_monotone", mono.iterate_weakly_monotone}};

    SectionTopology topo;
    if (cfg.curve.is_separating()) {
        topo = SectionTopology::separating_with_boundary(cfg.curve.split.g1,
                                                         cfg.curve.split.b1 > 0,
                                                         cfg.curve.split.g2,
                                                         cfg.curve.split.b2 > 0);
    } else if (cfg.surface.boundary_count > 0) {
        topo = SectionTopology::non_separating_with_boundary(cfg.surface.genus);
    } else {
        topo = SectionTopology::closed_non_separating(cfg.surface.genus);
    }
    ForcedWrappingVerdict fw = force_zero_wrapping(topo, 0);
    j["wrapping_at_index_zero"] = {{"forced_zero", fw.forced_zero},
                                   {"max_eta", fw.max_eta},
                                   {"witness", fw.witness}};

    // the rigid twist-region section: one hyperbolic input, two elliptic
    // outputs, no vertical twisting
    SectionIndexData twist_section;
    twist_section.positive_ends = {OrbitKind::hyperbolic};
    twist_section.negative_ends = {OrbitKind::elliptic, OrbitKind::elliptic};
    twist_section.topology = SectionTopology::closed_non_separating(2);
    twist_section.wrapping = Wrapping::single(0);
    j["twist_section_index"] = fredholm_index(twist_section);
    emit(cfg, "index.json", j);
    return 0;
}

int cmd_ode(const RunConfig& cfg, int k_inf) {
    if (k_inf < 0 || k_inf > cfg.m + cfg.n) throw ShapeError("end slice out of range");
    const CutoffProfile& cp = cfg.cutoff;
    double c_inf = shoot_c_infinity(cfg.m, cfg.n, k_inf, cp, cfg.ode_tolerance);
    double c_bis = shoot_c_infinity_bisection(cfg.m, cfg.n, k_inf, cp);

    OdeProblem pos{cfg.m + cfg.n, k_inf, EndSign::positive, cp, cfg.ode_tolerance};
    Trajectory tp = solve_end_ode(pos, c_inf, cp.wall, cp.wall + 30.0, 600);
    write_file(cfg.output_dir, "ode_positive.csv", csv_trajectory(tp));

    json j;
    j["schema_version"] = 1;
    j["config"] = config_echo(cfg);
    j["k"] = k_inf;
    j["c_infinity"] = c_inf;
    j["c_infinity_bisection"] = c_bis;
    j["positive_end"] = {{"stationary_value", double(k_inf) / (cfg.m + cfg.n)},
                         {"value_at_far_end", tp.x.back()},
                         {"max_residual", tp.max_residual},
                         {"csv", "ode_positive.csv"}};

    json negs = json::array();
    for (int k1 = std::max(0, k_inf - cfg.n); k1 <= std::min(cfg.m, k_inf); ++k1) {
        int k2 = k_inf - k1;
        OdeProblem n1{cfg.m, k1, EndSign::negative, cp, cfg.ode_tolerance};
        OdeProblem n2{cfg.n, k2, EndSign::negative, cp, cfg.ode_tolerance};
        Trajectory t1 = solve_end_ode(n1, c_inf + 1.0, -cp.wall - 30.0, -cp.wall, 600);
        Trajectory t2 = solve_end_ode(n2, c_inf + 1.0, -cp.wall - 30.0, -cp.wall, 600);
        std::string f1 = "ode_negative_first_k" + std::to_string(k1) + ".csv";
        std::string f2 = "ode_negative_second_k" + std::to_string(k2) + ".csv";
        write_file(cfg.output_dir, f1, csv_trajectory(t1));
        write_file(cfg.output_dir, f2, csv_trajectory(t2));
        negs.push_back({{"k1", k1},
                        {"k2", k2},
                        {"first_limit", t1.x.front()},
                        {"second_limit", t2.x.front()},
                        {"max_residual", std::max(t1.max_residual, t2.max_residual)},
                        {"csv_first", f1},
                        {"csv_second", f2}});
    }
    j["negative_ends"] = std::move(negs);
    emit(cfg, "ode.json", j);
    return 0;
}

int cmd_cascades(const RunConfig& cfg) {
    json j;
    j["schema_version"] = 1;
    j["config"] = config_echo(cfg);
    json table = json::array();
    for (int k_inf = 1; k_inf <= cfg.m + cfg.n - 1; ++k_inf) {
        json splits = json::array();
        for (int k1 = std::max(0, k_inf - cfg.n); k1 <= std::min(cfg.m, k_inf); ++k1) {
            int k2 = k_inf - k1;
            int fixed_inf = count_cascades(CascadeSpec(cfg.m, cfg.n, k_inf, k1, k2,
                                                       FixedEnd::infinity_end));
            int fixed_first =
                count_cascades(CascadeSpec(cfg.m, cfg.n, k_inf, k1, k2, FixedEnd::first));
            int fixed_second =
                count_cascades(CascadeSpec(cfg.m, cfg.n, k_inf, k1, k2, FixedEnd::second));
            splits.push_back({{"k1", k1},
                              {"k2", k2},
                              {"fixed_combined", fixed_inf},
                              {"fixed_first", fixed_first},
                              {"fixed_second", fixed_second}});
        }
        table.push_back({{"k", k_inf}, {"splits", std::move(splits)}});
    }
    j["cascades"] = std::move(table);

    // cross-check against the interior twist block of the coproduct
    F2LinearMap from_cascades = coproduct_from_cascades(cfg.m, cfg.n);
    F2LinearMap co = coproduct_map(cfg.surface, cfg.curve, cfg.m, cfg.n);
    bool match = true;
    const GradedF2Space& src = from_cascades.source();
    const GradedF2Space& tgt = from_cascades.target();
    for (int col = 0; col < src.dim(); ++col) {
        int big_col = co.source().index_of(src.at(col).label);
        for (int row = 0; row < tgt.dim(); ++row) {
            int big_row = co.target().index_of(tgt.at(row).label);
            match &= from_cascades.matrix().get(row, col) == co.matrix().get(big_row, big_col);
        }
    }
    j["matches_coproduct_twist_block"] = match;
    j["twist_block"] = to_json(from_cascades);
    emit(cfg, "cascades.json", j);
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, CheckAllHandler check_all) {
    CLI::App app{"fixed point Floer homology of iterated Dehn twists: structure maps, "
                 "crossing certificates, twist-region numerics"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string config_path;
    if (const char* env = std::getenv("TWISTFLOER_CONFIG")) config_path = env;

    app.add_option("--config", config_path, "JSON config file");
    auto* genus = app.add_option("--genus", cfg.surface.genus, "genus of the surface");
    auto* boundary =
        app.add_option("--boundary", cfg.surface.boundary_count, "boundary components");
    std::string curve_kind;
    auto* curve = app.add_option("--curve", curve_kind, "nonsep | sep");
    std::vector<int> split;
    auto* split_opt =
        app.add_option("--split", split, "g1 b1 g2 b2 of a separating curve")->expected(4);
    auto* mopt = app.add_option("-m,--m", cfg.m, "first twist power");
    auto* nopt = app.add_option("-n,--n", cfg.n, "second twist power");
    int p_value = 0;
    auto* popt = app.add_option("-p,--p", p_value, "third twist power (identity checks)");
    auto* bound = app.add_option("--bound", cfg.bound_q, "crossing-search bound on |q|");
    auto* tol = app.add_option("--tol", cfg.ode_tolerance, "ODE residual tolerance");
    auto* wall = app.add_option("--wall", cfg.cutoff.wall, "cutoff wall coordinate");
    auto* width = app.add_option("--width", cfg.cutoff.width, "cutoff transition width");
    auto* out = app.add_option("--out", cfg.output_dir, "output directory");
    auto* jobs = app.add_option("--jobs", cfg.parallelism, "parallel enumeration degree");

    app.add_subcommand("homology", "complement of the twist curve and its graded basis");
    app.add_subcommand("hf", "fixed point homology of the m-th iterate");
    app.add_subcommand("product", "product matrix and identity report");
    app.add_subcommand("coproduct", "coproduct matrix and identity report");
    auto* vnc = app.add_subcommand("verify-nocrossing",
                                   "crossing-section feasibility certificates");
    bool with_control = false;
    vnc->add_flag("--with-control", with_control,
                  "also run the relaxed-inequality control search");
    app.add_subcommand("index", "orbit indices, monotonicity and wrapping verdicts");
    auto* ode = app.add_subcommand("ode", "twist-region end trajectories");
    int k_inf = -1;
    ode->add_option("-k,--k", k_inf, "end slice of the combined-power end");
    app.add_subcommand("cascades", "cascade counts and coproduct cross-check");
    app.add_subcommand("check-all", "run the full self-check suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        // config file first, then flag overrides
        RunConfig file_cfg;
        if (!config_path.empty()) load_config_file(config_path, file_cfg);
        auto keep = [&](const CLI::Option* o) { return o->count() > 0; };
        if (!keep(genus)) cfg.surface.genus = file_cfg.surface.genus;
        if (!keep(boundary)) cfg.surface.boundary_count = file_cfg.surface.boundary_count;
        if (!keep(mopt)) cfg.m = file_cfg.m;
        if (!keep(nopt)) cfg.n = file_cfg.n;
        if (!keep(bound)) cfg.bound_q = file_cfg.bound_q;
        if (!keep(tol)) cfg.ode_tolerance = file_cfg.ode_tolerance;
        if (!keep(wall)) cfg.cutoff.wall = file_cfg.cutoff.wall;
        if (!keep(width)) cfg.cutoff.width = file_cfg.cutoff.width;
        if (!keep(out)) cfg.output_dir = file_cfg.output_dir;
        if (!keep(jobs)) cfg.parallelism = file_cfg.parallelism;
        if (keep(popt))
            cfg.p = p_value;
        else
            cfg.p = file_cfg.p;
        if (keep(curve)) {
            if (curve_kind == "nonsep") {
                cfg.curve = TwistCurveSpec::non_separating();
            } else if (curve_kind == "sep") {
                if (!keep(split_opt)) throw ShapeError("--curve sep requires --split");
                cfg.curve = TwistCurveSpec::separating(split[0], split[1], split[2], split[3]);
            } else {
                throw ShapeError("--curve must be nonsep or sep");
            }
        } else {
            cfg.curve = file_cfg.curve;
        }
        cfg.validate();

        if (app.got_subcommand("homology")) return cmd_homology(cfg);
        if (app.got_subcommand("hf")) return cmd_hf(cfg);
        if (app.got_subcommand("product")) return cmd_product(cfg);
        if (app.got_subcommand("coproduct")) return cmd_coproduct(cfg);
        if (app.got_subcommand("verify-nocrossing")) return cmd_verify_nocrossing(cfg, with_control);
        if (app.got_subcommand("index")) return cmd_index(cfg);
        if (app.got_subcommand("ode")) return cmd_ode(cfg, k_inf < 0 ? cfg.m + cfg.n - 1 : k_inf);
        if (app.got_subcommand("cascades")) return cmd_cascades(cfg);
        if (app.got_subcommand("check-all")) {
            if (!check_all) throw ShapeError("self-check suite not linked into this binary");
            return check_all(cfg);
        }
        return 2;
    } catch (const UnsupportedTopologyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const NumericError& e) {
        std::cerr << "error: " << e.what() << " (achieved " << e.achieved << ")\n";
        return 4;
    } catch (const ShapeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidCurveError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace twistfloer
