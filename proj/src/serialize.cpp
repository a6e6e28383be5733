#include "twistfloer/serialize.hpp"

#include <cstdio>

namespace twistfloer {

json to_json(const BasisLabel& label) {
    json j;
    if (label.is_morse()) {
        const auto& m = label.as_morse();
        j["origin"] = "morse";
        j["component"] = m.component;
        switch (m.kind) {
            case BasisLabel::MorseKind::a: j["kind"] = "a"; break;
            case BasisLabel::MorseKind::b: j["kind"] = "b"; break;
            case BasisLabel::MorseKind::d: j["kind"] = "d"; break;
            case BasisLabel::MorseKind::pt: j["kind"] = "pt"; break;
        }
        if (m.kind != BasisLabel::MorseKind::pt) j["index"] = m.index;
    } else if (label.is_twist()) {
        const auto& t = label.as_twist();
        j["origin"] = "twist";
        j["kind"] = t.kind == BasisLabel::TwistKind::elliptic ? "e" : "h";
        j["slice"] = t.slice;
        j["power"] = t.power;
    } else {
        j["origin"] = "tensor";
        json fs = json::array();
        for (const auto& f : label.factors()) fs.push_back(to_json(f));
        j["factors"] = std::move(fs);
    }
    return j;
}

json to_json(const GradedF2Space& space) {
    json basis = json::array();
    for (const auto& bv : space.basis()) {
        json e;
        e["label"] = to_json(bv.label);
        e["degree"] = bv.degree;
        basis.push_back(std::move(e));
    }
    json j;
    j["dim"] = space.dim();
    j["basis"] = std::move(basis);
    return j;
}

json to_json(const F2Matrix& matrix) {
    json rows = json::array();
    for (int r = 0; r < matrix.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < matrix.cols(); ++c) row.push_back(matrix.get(r, c) ? 1 : 0);
        rows.push_back(std::move(row));
    }
    json j;
    j["rows"] = matrix.rows();
    j["cols"] = matrix.cols();
    j["entries"] = std::move(rows);
    return j;
}

json to_json(const F2LinearMap& map) {
    json j;
    j["degree_shift"] = map.degree_shift();
    j["source"] = to_json(map.source());
    j["target"] = to_json(map.target());
    j["matrix"] = to_json(map.matrix());
    return j;
}

json to_json(const ComplementSurface& cs) {
    json comps = json::array();
    for (const auto& c : cs.components) {
        json e;
        e["genus"] = c.genus;
        e["boundary_count"] = c.boundary_count;
        e["l_circle"] = c.l_circle;
        e["r_circle"] = c.r_circle;
        comps.push_back(std::move(e));
    }
    json j;
    j["components"] = std::move(comps);
    j["euler_characteristic"] = cs.euler_characteristic();
    return j;
}

json to_json(const FloerSpace& fs) {
    json j;
    j["power"] = fs.power;
    j["morse_dim"] = fs.morse_dim;
    j["twist_dim"] = fs.space.dim() - fs.morse_dim;
    j["space"] = to_json(fs.space);
    return j;
}

json to_json(const StructureMapReport& report) {
    json checks = json::array();
    for (const auto& c : report.checks) {
        json e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        if (!c.pass) e["counterexample"] = c.counterexample;
        checks.push_back(std::move(e));
    }
    json j;
    j["map"] = to_json(report.map);
    j["checks"] = std::move(checks);
    return j;
}

json to_json(const H1ClassXD& c) { return json::array({c.p, c.q1, c.q2}); }

json to_json(const CrossingConfig& config) {
    json j;
    j["wall"] = config.wall;
    json met = json::array();
    for (bool b : config.crossed) met.push_back(b);
    j["slices_met"] = std::move(met);
    json cls = json::array();
    for (const auto& c : config.slice_class) cls.push_back(to_json(c));
    j["slice_classes"] = std::move(cls);
    json ends;
    ends["first"] = config.end_first;
    ends["second"] = config.end_second;
    ends["combined"] = config.end_infinity;
    j["ends"] = std::move(ends);
    return j;
}

json to_json(const CrossingReport& report) {
    static const char* mode_names[] = {"product", "coproduct", "cylinder"};
    json j;
    json sc;
    sc["mode"] = mode_names[static_cast<int>(report.scenario.mode)];
    sc["m"] = report.scenario.m;
    sc["n"] = report.scenario.n;
    sc["bound_q"] = report.scenario.bound_q;
    sc["relaxed"] = report.scenario.relax_strict;
    j["scenario"] = std::move(sc);
    j["configs_checked"] = report.configs_checked;
    j["feasible_empty"] = report.feasible_empty();
    json surv = json::array();
    for (const auto& [branch, cfg] : report.surviving) {
        json e;
        e["branch"] = branch;
        e["config"] = to_json(cfg);
        e["failing_constraint"] = nullptr;
        surv.push_back(std::move(e));
    }
    j["surviving"] = std::move(surv);
    json refs = json::array();
    for (const auto& r : report.refutations) {
        json e;
        e["branch"] = r.branch;
        e["failing_constraint"] = r.constraint;
        e["count"] = r.count;
        e["config"] = to_json(r.example);
        refs.push_back(std::move(e));
    }
    j["refutations"] = std::move(refs);
    return j;
}

std::string csv_trajectory(const Trajectory& t) {
    std::string out = "s,x\n";
    char buf[64];
    for (std::size_t i = 0; i < t.s.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.15e,%.15e\n", t.s[i], t.x[i]);
        out += buf;
    }
    return out;
}

}  // namespace twistfloer
